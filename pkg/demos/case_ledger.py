"""Which case of the crossing-number argument applies, and how much slack is left?"""

from cliqueimmersion.bounds import albertson_case_report, hill_number

print("H(k) for k = 5..12:", [hill_number(k) for k in range(5, 13)])

K = 2 ** 20
examples = {
    "small parts": (1100, 1140, [(50, 10)] + [(1, 1)] * 1090),
    "one heavy part": (10 ** 4, 15000, [(5008, 8)] + [(1, 1)] * 9992),
    "many light parts": (K, K + 99800, [(100000, 200)] + [(1, 1)] * (K - 200)),
}
for name, (k, n, parts) in examples.items():
    rep = albertson_case_report(k, n, parts)
    print(f"\n== {name}: case {rep.case}")
    print(rep.to_text())
