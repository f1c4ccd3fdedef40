"""Seeded trials of the random split; how does Delta(H)/k move as k grows?"""

from cliqueimmersion.experiments import median_ratios, run_trials, trials_to_csv

rows = run_trials({"kind": "near-regular"}, [50, 100, 200], trials_per_k=3, master_seed=2024, jobs=3)
print(trials_to_csv(rows), end="")

for k, stats in median_ratios(rows).items():
    print(f"k={k:4d}  median Delta/k = {stats['median_ratio_delta']:.3f}")

# the large-k limit is 9/16 = 0.5625; small k overshoots it by a few percent
