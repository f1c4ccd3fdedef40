"""Crossing-number bounds and the case analysis behind cr(G) >= cr(K_k) + c k^3 (n - k).

Everything is evaluated in exact rational arithmetic; floats appear only in
:meth:`to_dict` output.  Bounds that hold only for sufficiently large
arguments carry ``asymptotic=True``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

DELTA = Fraction(1, 11)
DELTA_PRIME = Fraction(1, 2 ** 12)
C = Fraction(1, 2 ** 60)
K_LARGE = 2 ** 70
CROSSING_LEMMA_RATIO = Fraction(695, 100)
CROSSING_LEMMA_CONST = Fraction(2748, 100)
BIPARTITE_CONST = Fraction(9118, 10000)


class BoundError(ValueError):
    pass


def hill_number(k: int) -> int:
    """(1/4) floor(k/2) floor((k-1)/2) floor((k-2)/2) floor((k-3)/2)."""
    if k < 0:
        raise BoundError("k must be non-negative")
    p = (k // 2) * ((k - 1) // 2) * ((k - 2) // 2) * ((k - 3) // 2)
    q, r = divmod(p, 4)
    assert r == 0
    return q


def hill_ratio_nondecreasing(k_max: int, k_min: int = 5) -> bool:
    """H(k)/C(k,4) <= H(k+1)/C(k+1,4) for all k_min <= k < k_max, by cross-multiplication."""
    prev_h, prev_c = hill_number(k_min), comb(k_min, 4)
    for k in range(k_min + 1, k_max + 1):
        h, c = hill_number(k), comb(k, 4)
        if prev_h * c > h * prev_c:
            return False
        prev_h, prev_c = h, c
    return True


@dataclass(frozen=True)
class Bound:
    kind: str
    value: Fraction
    asymptotic: bool = False
    note: str = ""
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "value": float(self.value), "exact": str(self.value),
               "asymptotic": self.asymptotic}
        if self.note:
            out["note"] = self.note
        out.update({k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.extra.items()})
        return out


def _nonneg(**vals) -> None:
    for name, v in vals.items():
        if v < 0:
            raise BoundError(f"{name} must be non-negative, got {v}")


def lower_bounds(kind: str, **p) -> Bound:
    """``complete`` (k), ``bipartite`` (a, b) or ``crossing-lemma`` (n, m)."""
    if kind == "complete":
        k = p["k"]
        _nonneg(k=k)
        return Bound(kind, Fraction(k ** 4, 65), True, "cr(K_k) > k^4/65 for sufficiently large k")
    if kind == "bipartite":
        a, b = p["a"], p["b"]
        _nonneg(a=a, b=b)
        return Bound(kind, BIPARTITE_CONST * a * a * b * b / 16, True,
                     "cr(K_{a,b}) > 0.9118 a^2 b^2 / 16 for sufficiently large a, b")
    if kind == "crossing-lemma":
        n, m = p["n"], p["m"]
        _nonneg(n=n, m=m)
        if n == 0 or m < CROSSING_LEMMA_RATIO * n:
            raise BoundError(f"crossing lemma needs m >= 6.95 n (m={m}, n={n})")
        return Bound(kind, Fraction(m ** 3) / (CROSSING_LEMMA_CONST * n * n))
    raise BoundError(f"unknown lower bound {kind!r}")


def auxiliary_bounds(kind: str, **p) -> Bound:
    """``add-edge`` (cr, m), ``sampled-edges`` (n, m, a) or ``immersion-overhead`` (n, k)."""
    if kind == "add-edge":
        cr, m = p["cr"], p["m"]
        _nonneg(cr=cr, m=m)
        return Bound(kind, Fraction(cr) + m, note="cr(G + xy) <= cr(G) + m")
    if kind == "sampled-edges":
        n, m, a = p["n"], p["m"], p["a"]
        _nonneg(n=n, m=m, a=a)
        if not 1 <= a <= n or n < 2:
            raise BoundError(f"need 1 <= a <= n and n >= 2 (n={n}, a={a})")
        if m > comb(n, 2):
            raise BoundError(f"m={m} exceeds C(n, 2)")
        return Bound(kind, Fraction(m * comb(a, 2), comb(n, 2)),
                     note="some induced subgraph on a vertices has at least this many edges")
    if kind == "immersion-overhead":
        n, k = p["n"], p["k"]
        _nonneg(n=n, k=k)
        if n < k:
            raise BoundError(f"need n >= k (n={n}, k={k})")
        v = Fraction((n - k) * n * n, 8) + Fraction(k * (n - k) * n, 4)
        cap = Fraction(k ** 3, 2)
        return Bound(kind, v, note="crossings charged to paths of length 2 and 4",
                     extra={"at_most_k3_over_2": v <= cap, "k3_over_2": cap,
                            "n_below_1.64k": Fraction(n) < Fraction(164, 100) * k})
    raise BoundError(f"unknown auxiliary bound {kind!r}")


# -- case analysis -------------------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    """``lhs >= rhs`` (``strict``: ``lhs > rhs``); ``slack = lhs - rhs``."""

    name: str
    lhs: Fraction
    rhs: Fraction
    strict: bool = False

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.slack > 0 if self.strict else self.slack >= 0

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": float(self.lhs), "rhs": float(self.rhs),
                "slack": float(self.slack), "slack_exact": str(self.slack),
                "strict": self.strict, "holds": self.holds}


@dataclass
class CaseReport:
    k: int
    n: int
    parts: list[tuple[int, int]]
    case: str
    part: int | None = None
    quantities: dict[str, Fraction | int | bool] = field(default_factory=dict)
    inequalities: list[Inequality] = field(default_factory=list)
    flags: dict[str, bool] = field(default_factory=dict)
    delta: Fraction = DELTA
    delta_prime: Fraction = DELTA_PRIME
    c: Fraction = C

    @property
    def all_hold(self) -> bool:
        return all(q.holds for q in self.inequalities)

    def to_dict(self) -> dict:
        def show(v):
            return {"value": float(v), "exact": str(v)} if isinstance(v, Fraction) else v

        return {
            "k": self.k, "n": self.n, "parts": [list(p) for p in self.parts],
            "constants": {"delta": str(self.delta), "delta_prime": str(self.delta_prime),
                          "c": str(self.c)},
            "case": self.case, "part": self.part,
            "quantities": {k: show(v) for k, v in self.quantities.items()},
            "inequalities": [q.to_dict() for q in self.inequalities],
            "flags": self.flags,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"k={self.k} n={self.n} parts={len(self.parts)} case={self.case}"
                 + (f" part={self.part}" if self.part is not None else "")]
        for name, v in self.quantities.items():
            lines.append(f"  {name} = {float(v) if isinstance(v, Fraction) else v}")
        for q in self.inequalities:
            mark = "ok " if q.holds else "NO "
            lines.append(f"  {mark}{q.name}: slack {float(q.slack):.6g}")
        for name, v in self.flags.items():
            lines.append(f"  flag {name}: {v}")
        return "\n".join(lines)


def _parse_parts(decomposition) -> list[tuple[int, int]]:
    if hasattr(decomposition, "parts"):
        return [(p.n, p.k) for p in decomposition.parts]
    return [(int(item["n"]), int(item["k"])) if isinstance(item, dict)
            else (int(item[0]), int(item[1])) for item in decomposition]


def case_predicates(k: int, n: int, parts: list[tuple[int, int]]) -> dict[str, list[int]]:
    """Indices of the parts witnessing each case."""
    # integer cross-multiplication: n_i > delta k and k_i >= delta' k
    dn, dd = DELTA.numerator * k, DELTA.denominator
    pn, pd = DELTA_PRIME.numerator * k, DELTA_PRIME.denominator
    out: dict[str, list[int]] = {"1": [], "2": [], "3": [], "singletons": []}
    for i, (ni, ki) in enumerate(parts):
        if ni == 1:
            out["singletons"].append(i)
        big_n, big_k = ni * dd > dn, ki * pd >= pn
        if ni > 1 and not big_n:
            out["1"].append(i)
        if big_k:
            out["2"].append(i)
        if ni > 1 and big_n and not big_k:
            out["3"].append(i)
    return out


def albertson_case_report(k: int, n: int, decomposition) -> CaseReport:
    parts = _parse_parts(decomposition)
    if not parts:
        raise BoundError("decomposition has no parts")
    if any(ni < 1 or ki < 1 or ki > ni for ni, ki in parts):
        raise BoundError("every part needs 1 <= k_i <= n_i")
    if sum(ni for ni, _ in parts) != n or sum(ki for _, ki in parts) != k:
        raise BoundError(f"part sizes sum to ({sum(p[0] for p in parts)}, "
                         f"{sum(p[1] for p in parts)}), expected (n, k) = ({n}, {k})")

    flags = {
        "k_above_2^70": k > K_LARGE,
        "n_below_1.64k": Fraction(n) < Fraction(164, 100) * k,
        "parts_satisfy_n_i>=2k_i-1": all(ni == 1 or ni >= 2 * ki - 1 for ni, ki in parts),
        "asymptotic_constants": True,
    }
    rep = CaseReport(k, n, parts, "none", flags=flags)
    hk = hill_number(k)
    rep.quantities["H(k)"] = hk
    rep.quantities["k^4/64"] = Fraction(k ** 4, 64)
    if n == k:
        rep.case = "base"
        return rep

    pred = case_predicates(k, n, parts)
    if pred["1"]:
        i = pred["1"][0]
        rep.case, rep.part = "1", i
        _case1(rep, i)
    elif pred["2"]:
        # prefer a part that carries edges inside W_i
        i = max(pred["2"], key=lambda j: (parts[j][0] > 1, parts[j][1], -j))
        rep.case, rep.part = "2", i
        _case2(rep, i)
    elif len(pred["3"]) + len(pred["singletons"]) == len(parts):
        rep.case = "3"
        _case3(rep, pred["singletons"])
    return rep


def _case1(rep: CaseReport, i: int) -> None:
    k, n = rep.k, rep.n
    ni, ki = rep.parts[i]
    kp = k + ni - ki
    added = Fraction(n * n * ni * (ni - ki), 4)
    allowed = (Fraction(4, 65) - C) * k ** 3 * (kp - k)
    q = rep.quantities
    q.update({"k'": kp, "missing_pairs_max": Fraction(ni * (ni - ki), 2),
              "added_edge_cost": added, "(4/65-c)k^3(k'-k)": allowed})
    rep.inequalities += [
        Inequality("added_edge_cost <= (4/65-c)k^3(k'-k)", allowed, added),
        Inequality("cr(K_k') - cr(K_k) >= (4/65)k^3(k'-k) [with H(k)]",
                   Fraction(4 * hill_number(k) * (kp - k), k), Fraction(4, 65) * k ** 3 * (kp - k)),
        Inequality("ck^3(k'-k) + c(n-k')k'^3 >= ck^3(n-k)",
                   C * k ** 3 * (kp - k) + C * (n - kp) * kp ** 3, C * k ** 3 * (n - k)),
    ]


def _case2(rep: CaseReport, i: int) -> None:
    k, n = rep.k, rep.n
    ni, ki = rep.parts[i]
    r = ni - ki
    m_i = Fraction((ki - 1) * r * (r - 1), 2 * (ni - 1)) if ni > 1 and r >= 2 else Fraction(0)
    term = Fraction(ki ** 3 * r, 2 ** 11)
    q = rep.quantities
    q.update({"m_i": m_i, "2^-11 k_i^3 (n_i-k_i)": term, "k^3/2": Fraction(k ** 3, 2)})
    rep.inequalities.append(Inequality("m_i >= 6.95 (n_i-k_i)", m_i, CROSSING_LEMMA_RATIO * r))
    if r > 0:
        cl = m_i ** 3 / (CROSSING_LEMMA_CONST * r * r)
        q["m_i^3/(27.48 (n_i-k_i)^2)"] = cl
        rep.inequalities.append(Inequality("cr(G[W_i]) bound >= 2^-11 k_i^3 (n_i-k_i)", cl, term))
    rep.inequalities.append(Inequality("2^-11 k_i^3 (n_i-k_i) - k^3/2 >= c(n-k)k^3",
                                       term - Fraction(k ** 3, 2), C * (n - k) * k ** 3))


def _case3(rep: CaseReport, singletons: list[int]) -> None:
    k, n = rep.k, rep.n
    a = len(singletons)
    b = n - a
    big = len(rep.parts) - a
    clique_factor = 1 - 28 * DELTA_PRIME
    bip = BIPARTITE_CONST * a * a * b * b / 16
    target = Fraction(k ** 4, 2 ** 13)
    q = rep.quantities
    q.update({"|A|": a, "|B|": b, "non_singleton_parts": big,
              "bipartite_term": bip, "(1-28d')H(k)": clique_factor * hill_number(k),
              "(1-28d')k^4/64": clique_factor * Fraction(k ** 4, 64), "2^-13 k^4": target})
    rep.inequalities += [
        Inequality("non-singleton parts <= 7", Fraction(7), Fraction(big)),
        Inequality("|A| > (1-7d')k", Fraction(a), (1 - 7 * DELTA_PRIME) * k, strict=True),
        Inequality("|B| > dk", Fraction(b), DELTA * k, strict=True),
        Inequality("bipartite - 28d' H(k) >= 2^-13 k^4",
                   bip - 28 * DELTA_PRIME * hill_number(k), target),
        Inequality("bipartite - 28d' k^4/64 >= 2^-13 k^4",
                   bip - 28 * DELTA_PRIME * Fraction(k ** 4, 64), target),
        Inequality("2^-13 k^4 > c(n-k)k^3", target, C * (n - k) * k ** 3, strict=True),
    ]
