"""
Record the outcome of the five-seed pp-grid runs
================================================

Reads ``runs/pp-grid/<mixer>_seed<k>/metrics.csv`` for every finished run
and stores the final greedy test return (32 evaluation episodes) next to
the value-iteration optimum in ``src/unsr/data/ppgrid_results.json``. The
acceptance suite reads that file instead of retraining for five hours.

Run after ``sh demos/ppgrid_seeds.sh``.
"""

import json
import re
from pathlib import Path

import numpy as np

from unsr.harness.metrics import read_metrics

root = Path(__file__).resolve().parents[1]
data_dir = root / "src" / "unsr" / "data"
optimum = json.loads((data_dir / "expected_values.json").read_text())["pp-grid"]["optimal_return"]

runs: dict[str, dict[str, dict]] = {}
for metrics in sorted((root / "runs" / "pp-grid").glob("*_seed*/metrics.csv")):
    match = re.fullmatch(r"(\w+)_seed(\d+)", metrics.parent.name)
    rows = read_metrics(metrics)
    if not match or not rows or rows[-1]["step"] < 200_000:
        print(f"skipping unfinished run {metrics.parent}")
        continue
    mixer, seed = match.groups()
    final = rows[-1]
    runs.setdefault(mixer, {})[seed] = {
        "final_step": final["step"],
        "final_test_return": final["test_return_mean"],
        "final_success_rate": final["test_success_rate"],
        "last5_test_return": float(np.mean([r["test_return_mean"] for r in rows[-5:]])),
        "best_test_return": max(r["test_return_mean"] for r in rows),
    }

for mixer, seeds in runs.items():
    finals = [v["final_test_return"] for v in seeds.values()]
    print(f"{mixer:5s} seeds {sorted(seeds)}  final returns {np.round(finals, 3).tolist()}  "
          f"mean {np.mean(finals):.3f}  (optimum {optimum:.3f}, 0.6x = {0.6 * optimum:.3f})")

out = data_dir / "ppgrid_results.json"
out.write_text(json.dumps({"optimal_return": optimum, "t_max": 200_000, "runs": runs}, indent=2) + "\n")
print(f"wrote {out}")
