"""Registry of checkable claims and the routines that decide them exactly."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .core import (
    DQ,
    P,
    P_D,
    Q,
    Bias,
    ClassSpec,
    Partition,
    avoiding,
    enumerate_partitions,
)
from .counting import BiasCount, count_by_enumeration, count_table
from .maps import audit_family, thm1_classify
from .maps import thm2, thm4

METHODS = ("enum", "dp", "both")


class InconsistentCounts(RuntimeError):
    """Enumeration and DP disagree; no verdict can be trusted."""


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    applies: Callable[[int], bool] = lambda n: True


@dataclass(frozen=True)
class VerdictRecord:
    claim: str
    n: int
    holds: bool
    lhs: int
    rhs: int
    in_scope: bool = True
    skipped: bool = False
    note: str = ""
    counterexample: object = None
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def margin(self) -> int:
        return self.lhs - self.rhs

    def row(self) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
        }


def _skip(claim: str, n: int, why: str) -> VerdictRecord:
    return VerdictRecord(claim, n, True, 0, 0, in_scope=False, skipped=True, note=why)


# --- parity bias claims ----------------------------------------------------

_GT = (">", lambda a, b: a > b)
_LT = ("<", lambda a, b: a < b)
_EQ = ("=", lambda a, b: a == b)


@dataclass(frozen=True)
class BiasClaim:
    claim: Claim
    spec: ClassSpec
    relation: tuple = _GT
    exceptional: dict = field(default_factory=dict)  # n -> relation holding there instead


BIAS_CLAIMS = {
    "T1": BiasClaim(Claim("T1", "p_o(n) > p_e(n) for n != 2, equality at 2", lambda n: n >= 1), P,
                    exceptional={2: _EQ}),
    "T2": BiasClaim(Claim("T2", "d_o(n) > d_e(n) for n > 19", lambda n: n > 19), P_D),
    "T3": BiasClaim(Claim("T3", "q_o(n) < q_e(n) for n > 7", lambda n: n > 7), Q, _LT),
    "T4": BiasClaim(Claim("T4", "p_o(n) > p_e(n) without parts 2, n >= 1", lambda n: n >= 1), avoiding(2)),
    "T5": BiasClaim(Claim("T5", "p_o(n) > p_e(n) without parts 1, 2, n > 8", lambda n: n > 8), avoiding(1, 2)),
}


def bias_counts(
    spec: ClassSpec, ns: list[int], method: str = "dp", cache_dir=None, mapper=map
) -> dict[int, BiasCount]:
    """Counts for every n in ``ns``; with method 'both' the two routes must agree.

    ``mapper`` runs the per-n enumerations (a pool's ordered map works).
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    out: dict[int, BiasCount] = {}
    if not ns:
        return out
    table = count_table(max(ns), spec, cache_dir) if method in ("dp", "both") else None
    enumerated = {}
    if method in ("enum", "both"):
        enumerated = dict(zip(ns, mapper(count_by_enumeration, ns, [spec] * len(ns))))
    for n in ns:
        if method == "enum":
            out[n] = enumerated[n]
            continue
        row = table[n]
        if method == "both":
            other = enumerated[n]
            if (other.odd_heavy, other.even_heavy, other.balanced) != (
                row.odd_heavy, row.even_heavy, row.balanced
            ):
                raise InconsistentCounts(
                    f"{spec.key()} n={n}: enumeration {other} but dp {row}"
                )
        out[n] = row
    return out


def verify_bias(
    claim_id: str, n_range: Iterable[int], method: str = "dp", cache_dir=None, mapper=map
) -> list[VerdictRecord]:
    try:
        bc = BIAS_CLAIMS[claim_id]
    except KeyError:
        raise ValueError(f"unknown bias claim {claim_id!r}") from None
    ns = sorted(set(n_range))
    counts = bias_counts(bc.spec, ns, method, cache_dir, mapper)
    records = []
    for n in ns:
        c = counts[n]
        sym, rel = bc.exceptional.get(n, bc.relation)
        holds = rel(c.odd_heavy, c.even_heavy)
        records.append(
            VerdictRecord(
                claim_id, n, holds, c.odd_heavy, c.even_heavy,
                in_scope=bc.claim.applies(n),
                note=f"odd {sym} even",
            )
        )
    return records


def violation_set(records: Iterable[VerdictRecord]) -> list[int]:
    return [r.n for r in records if not r.holds]


# --- lemmas ----------------------------------------------------------------

def _fsum(lo: int, hi: int, term: Callable[[int], int]) -> int:
    return sum(term(k) for k in range(lo, hi + 1))


def lemma_sides(claim_id: str, n: int) -> tuple[int, int]:
    if claim_id == "L1":
        if n % 2 or n < 14:
            raise ValueError(f"L1 needs even n >= 14, got {n}")
        lhs = _fsum(1, (n - 6) // 2, lambda k: (n - 2 * k - 2) // 4)
        rhs = (1 + _fsum(1, (n - 2) // 6, lambda k: (n - 6 * k + 2) // 4)
               + _fsum(1, (n - 6) // 6, lambda k: (n - 6 * k - 2) // 4))
    elif claim_id == "L2":
        if n % 2 == 0 or n < 9:
            raise ValueError(f"L2 needs odd n >= 9, got {n}")
        lhs = _fsum(1, (n - 5) // 2, lambda k: (n - 2 * k - 1) // 4)
        rhs = (1 + _fsum(1, (n - 5) // 6, lambda k: (n - 6 * k - 1) // 4)
               + _fsum(1, (n - 9) // 6, lambda k: (n - 6 * k - 5) // 4))
    else:
        raise ValueError(f"unknown lemma {claim_id!r}")
    return lhs, rhs


def verify_lemma(claim_id: str, n: int) -> VerdictRecord:
    lhs, rhs = lemma_sides(claim_id, n)
    return VerdictRecord(claim_id, n, lhs > rhs, lhs, rhs)


def verify_lemma_bound(m: int) -> VerdictRecord:
    """The three comparisons behind the large-m argument, scaled by 12 to stay integral.

    lhs/rhs of the record are 12 times the two quadratics; ``detail`` holds
    the chain checks.
    """
    if m < 7:
        raise ValueError(f"bound needs m >= 7, got {m}")
    left_sum = _fsum(1, m - 3, lambda k: (m - k - 1) // 2)
    right_expr = (1 + _fsum(1, (m - 1) // 3, lambda k: (m - 3 * k + 1) // 2)
                  + _fsum(1, (m - 3) // 3, lambda k: (m - 3 * k - 1) // 2))
    q_low = 3 * (m * m - 7 * m + 12)   # 12 * (m^2-7m+12)/4
    q_high = 2 * (m * m + 3 * m - 3)   # 12 * (m^2+3m-3)/6
    detail = {
        "lower_chain": 12 * left_sum > q_low,
        "upper_chain": 12 * right_expr < q_high,
        "quadratic": q_low > q_high,
        "left_sum": left_sum,
        "right_expr": right_expr,
    }
    holds = detail["lower_chain"] and detail["upper_chain"] and detail["quadratic"]
    return VerdictRecord("LB", m, holds, q_low, q_high, in_scope=m >= 26, detail=detail)


# --- closed-form cardinalities ----------------------------------------------

def _two_part(n: int, pred) -> list[tuple[int, int]]:
    return [(n - b, b) for b in range(1, n // 2 + 1) if pred(n - b, b)]


def _p_bar_o(n: int) -> int:
    """Odd-heavy partitions with exactly two even parts and every odd part equal to 1."""
    return sum(
        1
        for lam in enumerate_partitions(n, P.with_bias(Bias.ODD_HEAVY))
        if len(lam.evens) == 2 and all(o == 1 for o in lam.odds)
    )


def eq2(n: int) -> int:
    return _fsum(1, (n - 6) // 2, lambda k: (n - 2 * k - 2) // 4)


def eq4(n: int) -> int:
    return _fsum(1, (n - 5) // 2, lambda k: (n - 2 * k - 1) // 4)


def eq5(n: int) -> int:
    return (1 + _fsum(1, (n - 2) // 6, lambda k: (n - 6 * k + 2) // 4)
            + _fsum(1, (n - 6) // 6, lambda k: (n - 6 * k - 2) // 4))


def eq8(n: int) -> int:
    return (1 + _fsum(1, (n - 5) // 6, lambda k: (n - 6 * k - 1) // 4)
            + _fsum(1, (n - 9) // 6, lambda k: (n - 6 * k - 5) // 4))


def thm1_residual_size(n: int) -> int:
    return sum(1 for lam in enumerate_partitions(n, P.with_bias(Bias.EVEN_HEAVY))
               if thm1_classify(lam).residual)


def do2_formula(n: int) -> int:
    return n // 12 + (1 if n % 12 == 9 else 0)


def _unclaimed_distinct_odd(n: int) -> list[Partition]:
    """Members of D_o(n) that no explicit map hits at n."""
    report = audit_family(n, "T2", keep_outcomes=True)
    images = {out.image for out in report.outcomes}
    return [mu for mu in enumerate_partitions(n, P_D.with_bias(Bias.ODD_HEAVY)) if mu not in images]


def _in_do2(mu: Partition) -> bool:
    odds = mu.odds
    return len(odds) == 3 and odds[0] - odds[1] == 2


def _in_do3(mu: Partition) -> bool:
    odds, evens = mu.odds, mu.evens
    return (
        len(odds) - len(evens) == 1
        and mu.largest % 2 == 0
        and odds and evens
        and evens[0] - odds[0] in (1, 3)
    )


def rho5_comparison_sizes(n: int) -> tuple[int, int]:
    """Sizes of the (o1, o2, 3, 4, 4), o1 >= 5 and (o1, o2, 3, 6, 4), o1 >= 7 families."""
    def count(rest: int, lo: int) -> int:
        return sum(1 for o2 in range(1, rest // 2 + 1, 2) if (rest - o2) % 2 and rest - o2 >= lo)
    return count(n - 11, 5), count(n - 13, 7)


def rho5_residual_size(n: int) -> int:
    spec = avoiding(2, bias=Bias.EVEN_HEAVY)
    return sum(1 for lam in enumerate_partitions(n, spec) if thm4.thm4_classify(lam).residual)


def verify_cardinality(n: int) -> list[VerdictRecord]:
    if n < 1:
        raise ValueError("n must be positive")
    odd = n % 2 == 1
    out: list[VerdictRecord] = []

    if not odd:
        pairs = _two_part(n, lambda a, b: a % 2 == 0 and b % 2 == 0)
        out.append(VerdictRecord("CARD1", n, len(pairs) == n // 4, len(pairs), n // 4))
        out.append(_skip("CARD2", n, "n even"))
    else:
        pairs = _two_part(n, lambda a, b: a % 2 == 0 and b % 2 == 1 and b >= 3)
        out.append(_skip("CARD1", n, "n odd"))
        if n >= 3:
            out.append(VerdictRecord("CARD2", n, len(pairs) == (n - 3) // 4, len(pairs), (n - 3) // 4))
        else:
            out.append(_skip("CARD2", n, "needs n >= 3"))

    size = _p_bar_o(n)
    if odd:
        out.append(_skip("C1/eq2", n, "n odd"))
        out.append(VerdictRecord("C2/eq4", n, size == eq4(n), size, eq4(n)))
    else:
        out.append(VerdictRecord("C1/eq2", n, size == eq2(n), size, eq2(n)))
        out.append(_skip("C2/eq4", n, "n even"))

    resid = thm1_residual_size(n)
    if odd:
        out.append(_skip("C3/eq5", n, "n odd"))
        out.append(VerdictRecord("C4/eq8", n, resid == eq8(n), resid, eq8(n)))
    else:
        out.append(VerdictRecord("C3/eq5", n, resid == eq5(n), resid, eq5(n)))
        out.append(_skip("C4/eq8", n, "n even"))

    if odd and n > 19:
        h3 = sum(1 for lam in enumerate_partitions(n, P_D.with_bias(Bias.EVEN_HEAVY))
                 if thm2.thm2_classify(lam).label == thm2.H_T3)
        out.append(VerdictRecord("H3COUNT", n, h3 == (n - 3) // 4, h3, (n - 3) // 4))
        free = _unclaimed_distinct_odd(n)
        do2 = sum(1 for mu in free if _in_do2(mu))
        out.append(VerdictRecord("DO2COUNT", n, do2 >= do2_formula(n), do2, do2_formula(n),
                                 note="lower bound"))
        do3 = sum(1 for mu in free if _in_do3(mu))
        # do3 > 9(n-25)/10, compared as 10*do3 > 9(n-25)
        out.append(VerdictRecord("DO3BOUND", n, 10 * do3 > 9 * (n - 25), 10 * do3, 9 * (n - 25),
                                 note="scaled by 10"))
    else:
        for cid in ("H3COUNT", "DO2COUNT", "DO3BOUND"):
            out.append(_skip(cid, n, "needs odd n > 19"))

    if odd and n > 23:
        a_size, b_size = rho5_comparison_sizes(n)
        fa, fb = (n - 9) // 4 - 1, (n - 11) // 4 - 1
        target = (n - 3) // 4 - 1
        resid5 = rho5_residual_size(n)
        holds = fa + fb > target and a_size + b_size >= fa + fb and resid5 == target
        out.append(VerdictRecord(
            "RHO5COUNT", n, holds, a_size + b_size, resid5,
            detail={"formula_lhs": fa + fb, "formula_rhs": target, "sizes": (a_size, b_size)},
        ))
    else:
        out.append(_skip("RHO5COUNT", n, "needs odd n > 23"))
    return out


# --- open problems ---------------------------------------------------------

def explore_problem1(
    m_range: Iterable[int], method: str = "dp", cache_dir=None, mapper=map
) -> list[VerdictRecord]:
    ms = sorted(set(m_range))
    ns = sorted({2 * m for m in ms} | {2 * m + 1 for m in ms})
    counts = bias_counts(DQ, ns, method, cache_dir, mapper)
    out = []
    for m in ms:
        ev, od = counts[2 * m], counts[2 * m + 1]
        out.append(VerdictRecord("PROB1/even", 2 * m, ev.odd_heavy > ev.even_heavy,
                                 ev.odd_heavy, ev.even_heavy, in_scope=m > 6))
        out.append(VerdictRecord("PROB1/odd", 2 * m + 1, od.odd_heavy < od.even_heavy,
                                 od.odd_heavy, od.even_heavy, in_scope=m > 6 or m in (4, 5)))
    return out


@dataclass(frozen=True)
class ThresholdResult:
    k: int
    with_one: bool
    horizon: int
    candidate: int
    tail_holds: bool
    trail: tuple
    label: str = "candidate, horizon-limited"


def explore_threshold(k: int, with_one: bool = False, horizon: int = 300, cache_dir=None) -> ThresholdResult:
    """Largest n <= horizon where the expected strict inequality fails.

    Without 1 forbidden the expectation is odd > even; with {1, k} it is even > odd.
    """
    if k <= 2:
        raise ValueError("k must exceed 2 (k = 2 is already settled)")
    if horizon < 50:
        raise ValueError("horizon must be at least 50")
    spec = avoiding(1, k) if with_one else avoiding(k)
    table = count_table(horizon, spec, cache_dir)
    claim = f"PROB2({'1,' if with_one else ''}{k})"
    trail = []
    for n in range(1, horizon + 1):
        c = table[n]
        lhs, rhs = (c.even_heavy, c.odd_heavy) if with_one else (c.odd_heavy, c.even_heavy)
        trail.append(VerdictRecord(claim, n, lhs > rhs, lhs, rhs, in_scope=False))
    bad = [r.n for r in trail if not r.holds]
    candidate = bad[-1] if bad else 0
    tail = all(r.holds for r in trail if r.n > candidate)
    return ThresholdResult(k, with_one, horizon, candidate, tail, tuple(trail))
