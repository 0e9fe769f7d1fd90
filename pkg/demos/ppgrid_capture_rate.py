"""
How often does undirected play capture a prey?
==============================================

A prey steps away whenever it sees a predator, and it can step to any free
neighbouring cell. A predator standing on a prey at the start of a step is
therefore only possible when every free neighbour of that cell is blocked,
which on a 7x7 grid with three predators means a corner with all three
predators around it.

This script plays uniformly random available actions (what epsilon-greedy
exploration does early on) and counts how many steps ever make the capture
action available, and how many captures happen.
"""

import numpy as np

from unsr.envs import CAPTURE, PredatorPrey

env = PredatorPrey()
rng = np.random.default_rng(0)
episodes, steps, available, captures = 2000, 0, 0, 0
for seed in range(episodes):
    env.reset(seed)
    while True:
        avail = env.avail_mask()
        available += int(avail[:, CAPTURE].sum())
        res = env.step([int(rng.choice(np.flatnonzero(m))) for m in avail])
        steps += 1
        captures += res.info["captured"]
        if res.terminated or res.truncated:
            break
print(f"{episodes} random episodes, {steps} steps")
print(f"agent-steps with capture available: {available}")
print(f"captures: {captures}")
