"""Depth and Stanley depth along symbolic powers: sequences, stability
analysis with the square bound on the stabilization index, inequality
verifiers, and the matroid report."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complexes import complex_of_ideal
from .depth import depth
from .monomial import MonomialIdeal, check_exponents, pow_exp
from .sdepth import DEFAULT_NODE_BUDGET, INFINITY, sdepth, split_by_variable

QUANTITIES = ("depth", "sdepth_ideal", "sdepth_quotient")


@dataclass(frozen=True)
class SequenceReport:
    ideal: MonomialIdeal
    quantity: str
    kmax: int
    values: tuple  # values[i] is the value at symbolic power i+1
    char: int
    engine: str

    def to_dict(self):
        return {
            "quantity": self.quantity,
            "kmax": self.kmax,
            "values": ["infinity" if v == INFINITY else v for v in self.values],
            "char": self.char,
            "engine": self.engine,
        }


@dataclass(frozen=True)
class StabilityReport:
    quantity: str
    kmax: int
    values: tuple
    window_min: int
    first_attainment: int
    square_bound: int
    tail_guarantee: str
    certified: bool
    certification_rule: str
    ell_s_estimate: int = None
    bight_bound: float = None
    char: int = 0

    def to_dict(self):
        out = {
            "quantity": self.quantity,
            "kmax": self.kmax,
            "values": list(self.values),
            "window_min": self.window_min,
            "first_attainment": self.first_attainment,
            "square_bound": self.square_bound,
            "tail_guarantee": self.tail_guarantee,
            "certified": self.certified,
            "certification_rule": self.certification_rule,
            "char": self.char,
        }
        if self.ell_s_estimate is not None:
            out["ell_s_estimate"] = self.ell_s_estimate
        if self.bight_bound is not None:
            out["bight_bound"] = self.bight_bound
        return out


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    comparisons: tuple  # per-instance dicts
    counterexample: dict = None

    def to_dict(self):
        out = {
            "check": self.name,
            "result": "PASS" if self.passed else "FAIL",
            "comparisons": list(self.comparisons),
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class MatroidReport:
    n: int
    dim: int
    ell_s: int
    rows: tuple
    all_claims_hold: bool
    degenerate: bool = False
    char: int = 0

    def to_dict(self):
        return {
            "n": self.n,
            "dim": self.dim,
            "ell_s": self.ell_s,
            "rows": list(self.rows),
            "all_claims_hold": self.all_claims_hold,
            "degenerate": self.degenerate,
            "char": self.char,
        }


def _value_at(ideal, k, quantity, engine, char, node_budget):
    power = ideal.symbolic_power(k)
    if quantity == "depth":
        return depth(power, engine, char).depth
    kind = "ideal" if quantity == "sdepth_ideal" else "quotient"
    return sdepth(power, kind, node_budget).value


def sequence(ideal, quantity, kmax, engine="cross_check", char=0,
             node_budget=DEFAULT_NODE_BUDGET):
    """Values of the chosen quantity on I^(1), ..., I^(kmax)."""
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}")
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    values = tuple(
        _value_at(ideal, k, quantity, engine, char, node_budget)
        for k in range(1, kmax + 1)
    )
    return SequenceReport(ideal, quantity, kmax, values, char, engine)


def analyze_stability(ideal, quantity, kmax, engine="cross_check", char=0,
                      node_budget=DEFAULT_NODE_BUDGET):
    """Window minimum, first attainment index, the square stabilization
    bound, and whether the window minimum is certified to be the limit."""
    report = sequence(ideal, quantity, kmax, engine, char, node_budget)
    values = report.values
    m = min(values)
    t = values.index(m) + 1
    bound = max(1, t * t - t)
    certified, rule = _certify(ideal, quantity, m)
    tail = (
        f"values[k] == {m} for all k >= {bound}" if certified
        else f"values[k] <= {m} for all k >= {bound}"
    )
    ell_s = None
    bight_bound = None
    if quantity == "depth":
        if certified:
            ell_s = ideal.n - m
        n = ideal.n
        bight_bound = n * (n + 1) * ideal.bight() ** (n / 2)
    return StabilityReport(
        quantity=quantity,
        kmax=kmax,
        values=values,
        window_min=m,
        first_attainment=t,
        square_bound=bound,
        tail_guarantee=tail,
        certified=certified,
        certification_rule=rule if certified else "upper bound for the limit",
        ell_s_estimate=ell_s,
        bight_bound=bight_bound,
        char=char,
    )


def _certify(ideal, quantity, window_min):
    """Rules under which a window minimum is provably the limit."""
    if window_min == 0:
        return True, "floor"
    if len(ideal.gens) == 1 and quantity in ("depth", "sdepth_ideal"):
        # symbolic powers of a principal ideal are its ordinary powers;
        # depth is constant and a principal ideal is one Stanley space
        return True, "principal"
    if quantity in ("depth", "sdepth_quotient") and ideal.is_squarefree:
        delta = complex_of_ideal(ideal)
        if not delta.is_void and delta.is_matroid()[0]:
            return True, "matroid"
    return False, None


def _admissible_j(m, k):
    return [j for j in range(m - k, m + 1) if k * m + j >= 1]


def verify_depth_comparison(ideal, m, k, engine="takayama", char=0):
    """depth(S/I^(m)) >= depth(S/I^(km+j)) for all admissible j."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    lhs = depth(ideal.symbolic_power(m), engine, char).depth
    comparisons = []
    counterexample = None
    for j in _admissible_j(m, k):
        rhs = depth(ideal.symbolic_power(k * m + j), engine, char).depth
        ok = lhs >= rhs
        row = {"m": m, "k": k, "j": j, "lhs": lhs, "rhs": rhs, "ok": ok}
        comparisons.append(row)
        if not ok and counterexample is None:
            counterexample = dict(row, ideal=[list(g) for g in ideal.gens])
    return CheckResult("depsym", counterexample is None, tuple(comparisons),
                       counterexample)


def verify_sdepth_comparison(ideal, m, k, char=0,
                             node_budget=DEFAULT_NODE_BUDGET):
    """sdepth(I^(m)) >= sdepth(I^(km+j)) and the quotient analogue."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    comparisons = []
    counterexample = None
    for kind in ("ideal", "quotient"):
        lhs = sdepth(ideal.symbolic_power(m), kind, node_budget).value
        for j in _admissible_j(m, k):
            rhs = sdepth(ideal.symbolic_power(k * m + j), kind, node_budget).value
            ok = lhs >= rhs
            row = {"kind": kind, "m": m, "k": k, "j": j,
                   "lhs": "infinity" if lhs == INFINITY else lhs,
                   "rhs": "infinity" if rhs == INFINITY else rhs, "ok": ok}
            comparisons.append(row)
            if not ok and counterexample is None:
                counterexample = dict(row, ideal=[list(g) for g in ideal.gens])
    return CheckResult("sdepsym", counterexample is None, tuple(comparisons),
                       counterexample)


def verify_power_membership(ideal, m, k, samples=100, seed=0, max_degree=None):
    """u in I^(m) iff u^(k+1) in I^(km+j), sampled over random monomials."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    if max_degree is None:
        max_degree = m + k
    rng = random.Random(seed)
    comparisons = []
    counterexample = None
    for _ in range(samples):
        u = tuple(rng.randint(0, max_degree) for _ in range(ideal.n))
        lhs = ideal.symbolic_contains(m, u)
        for j in _admissible_j(m, k):
            rhs = ideal.symbolic_contains(k * m + j, pow_exp(u, k + 1))
            ok = lhs == rhs
            if not ok and counterexample is None:
                counterexample = {
                    "u": list(u), "m": m, "k": k, "j": j,
                    "lhs": lhs, "rhs": rhs,
                    "ideal": [list(g) for g in ideal.gens],
                }
            comparisons.append({"u": list(u), "j": j, "ok": ok})
    return CheckResult("power-lemma", counterexample is None,
                       tuple(comparisons), counterexample)


def verify_colon_identity(ideal, kmax):
    """(I^(k) : x_1...x_n) is the unit ideal for k <= height and equals
    I^(k-height) beyond; needs an unmixed ideal."""
    if not ideal.is_unmixed():
        raise ValueError("the colon identity requires an unmixed ideal")
    h = ideal.height()
    all_vars = (1,) * ideal.n
    comparisons = []
    counterexample = None
    for k in range(1, kmax + 1):
        actual = ideal.symbolic_power(k).colon(all_vars)
        if k <= h:
            expected = MonomialIdeal.from_generators([(0,) * ideal.n], ideal.n)
        else:
            expected = ideal.symbolic_power(k - h)
        ok = actual == expected
        comparisons.append({"k": k, "height": h, "ok": ok})
        if not ok and counterexample is None:
            counterexample = {
                "k": k, "height": h,
                "actual": [list(g) for g in actual.gens],
                "expected": [list(g) for g in expected.gens],
                "ideal": [list(g) for g in ideal.gens],
            }
    return CheckResult("colon-lemma", counterexample is None,
                       tuple(comparisons), counterexample)


def verify_splitting_bound(ideal, variable=0, node_budget=DEFAULT_NODE_BUDGET):
    """sdepth(I) >= min(sdepth of I with the variable removed, computed in
    the smaller ring, sdepth of (I : x_variable))."""
    if ideal.is_zero:
        raise ValueError("cannot split the zero ideal")
    restriction, colon_part = split_by_variable(ideal, variable)
    lhs = sdepth(ideal, "ideal", node_budget).value
    restr_val = sdepth(restriction, "ideal", node_budget).value
    colon_val = sdepth(colon_part, "ideal", node_budget).value
    rhs = min(restr_val, colon_val)
    ok = lhs >= rhs
    row = {
        "variable": variable + 1,
        "lhs": "infinity" if lhs == INFINITY else lhs,
        "restriction": "infinity" if restr_val == INFINITY else restr_val,
        "colon": "infinity" if colon_val == INFINITY else colon_val,
        "ok": ok,
    }
    counterexample = None if ok else dict(
        row, ideal=[list(g) for g in ideal.gens]
    )
    return CheckResult("splitting-bound", ok, (row,), counterexample)


def matroid_report(delta, kmax, char=0, node_budget=DEFAULT_NODE_BUDGET):
    """Per-power depth/sdepth rows for the Stanley-Reisner ideal of a
    matroid, with the Cohen-Macaulay and sdepth claims checked on each."""
    is_mat, witness = delta.is_matroid()
    if not is_mat:
        raise ValueError(
            f"not a matroid; exchange fails for faces "
            f"{[v + 1 for v in witness[0]]} and {[v + 1 for v in witness[1]]}"
        )
    n = delta.n
    d = delta.dim()
    ideal = delta.stanley_reisner_ideal()
    if ideal.is_zero:
        rows = tuple(
            {"k": k, "depth": n, "dim": n, "cohen_macaulay": True,
             "sdepth_quotient": n, "sdepth_ideal": "infinity",
             "claims_hold": True}
            for k in range(1, kmax + 1)
        )
        return MatroidReport(n, d, n - d - 1, rows, True, degenerate=True,
                             char=char)
    rows = []
    all_hold = True
    for k in range(1, kmax + 1):
        power = ideal.symbolic_power(k)
        dep = depth(power, "cross_check", char).depth
        dim = n - ideal.height()
        sq = sdepth(power, "quotient", node_budget).value
        si = sdepth(power, "ideal", node_budget).value
        claims = (dep == d + 1) and (dep == dim) and (sq == dep) and (si >= d + 2)
        all_hold = all_hold and claims
        rows.append({
            "k": k, "depth": dep, "dim": dim, "cohen_macaulay": dep == dim,
            "sdepth_quotient": sq,
            "sdepth_ideal": "infinity" if si == INFINITY else si,
            "claims_hold": claims,
        })
    return MatroidReport(n, d, n - d - 1, tuple(rows), all_hold, char=char)
