"""The degree-bound maximisation: closed-form case values against a dense grid."""

from cliqueimmersion.experiments import claim3_analytic, maximize_claim3

for delta in (1.05, 1.125, 1.25):
    res = maximize_claim3(delta, resolution=0.005)
    cases = ", ".join(f"{name}={c['value']:.4f}" for name, c in sorted(res.cases.items()))
    print(f"delta={delta}: max {res.value:.6f} (case {res.case}) grid {res.grid_value:.6f}  [{cases}]")

for name, case in sorted(claim3_analytic(9 / 8).items()):
    print(f"case {name} at delta=9/8:", case)
