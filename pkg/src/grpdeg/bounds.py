"""Executable checks of the degree bounds on concrete configurations.

Each ``check_*`` evaluates its hypotheses with structural probes, computes
both sides exactly and returns a ``BoundReport``. Inequalities are always
reported with ``lhs <= rhs`` as the claim; for chains ``a <= b <= c`` the ends
go in ``lhs``/``rhs`` and the full chain in ``witness``.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import BudgetExceeded, ChainViolation, NotNormal
from .group import (
    FiniteGroup,
    Subgroup,
    center,
    intersection,
    is_normal,
    n_fold_commutator_subgroup,
    nilpotency_class,
    normal_closure,
    quotient,
    restrict,
    structure_probe,
    upper_central_series,
)
from .measure import degree, relative_degree_dp, whole_of
from .subgroups import all_subgroups, normal_subgroups

HALF = Fraction(1, 2)


class TheoremId(enum.Enum):
    T2_4i = "T2_4i"
    T2_4ii = "T2_4ii"
    L2_5 = "L2_5"
    T2_6 = "T2_6"
    T2_7i = "T2_7i"
    T2_7ii = "T2_7ii"
    C2_8i = "C2_8i"
    C2_8ii = "C2_8ii"
    C2_8iii = "C2_8iii"
    C2_9 = "C2_9"
    L2_10 = "L2_10"
    T2_11 = "T2_11"
    T3_1 = "T3_1"
    T3_2 = "T3_2"
    C3_3 = "C3_3"
    T3_4 = "T3_4"
    T3_5 = "T3_5"
    C3_6 = "C3_6"
    C4_1 = "C4_1"
    C4_2 = "C4_2"
    T4_3i = "T4_3i"
    T4_3ii = "T4_3ii"
    T4_3iii = "T4_3iii"
    MONOTONE_N = "MONOTONE_N"


_THEOREM_ORDER = {t: i for i, t in enumerate(TheoremId)}


class Verdict(enum.Enum):
    HOLDS = "Holds"
    HOLDS_WITH_EQUALITY = "HoldsWithEquality"
    VACUOUS = "VacuousHypothesisFailed"
    VIOLATED = "VIOLATED"
    # budget refusals from run_suite; never produced by a checker
    SKIPPED = "Skipped"


@dataclass(frozen=True)
class BoundReport:
    theorem_id: TheoremId
    configuration: dict
    hypotheses: dict
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    verdict: Verdict
    witness: Optional[dict] = field(default=None)

    @property
    def hypotheses_met(self) -> bool:
        return all(self.hypotheses.values())

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id.value,
            "configuration": self.configuration,
            "hypotheses_met": self.hypotheses_met,
            "hypotheses": self.hypotheses,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "verdict": self.verdict.value,
            "witness": _jsonable(self.witness),
        }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


# cached structural helpers -------------------------------------------------


@lru_cache(maxsize=4096)
def _center(G: FiniteGroup) -> Subgroup:
    return center(G)


@lru_cache(maxsize=4096)
def _series(G: FiniteGroup) -> tuple[Subgroup, ...]:
    return tuple(upper_central_series(G))


@lru_cache(maxsize=4096)
def _nil_class(G: FiniteGroup) -> Optional[int]:
    return nilpotency_class(G)


def _class_at_most(G: FiniteGroup, c: int) -> bool:
    k = _nil_class(G)
    return k is not None and k <= c


def _z_n(G: FiniteGroup, n: int) -> Subgroup:
    s = _series(G)
    return s[min(n, len(s) - 1)]


@lru_cache(maxsize=1 << 14)
def _quotient(G: FiniteGroup, N: Subgroup):
    return quotient(G, N)


@lru_cache(maxsize=1 << 14)
def _h_mod_k(H: Subgroup):
    """(H/K, K) with K = H meet Z(G), H/K as a group in its own right."""
    K = intersection(H, _center(H.parent))
    return _quotient(H.as_group, restrict(K, H)).group, K


@lru_cache(maxsize=1 << 15)
def _nfold(H: Subgroup, n: int, budget: Optional[int]) -> Subgroup:
    return n_fold_commutator_subgroup(H, H.parent, n, budget)


@lru_cache(maxsize=1 << 15)
def _nfold_normal(H: Subgroup, n: int, budget: Optional[int]) -> Subgroup:
    return normal_closure(H.parent, _nfold(H, n, budget))


def _d(H: Subgroup, n: int) -> Fraction:
    return relative_degree_dp(H, H.parent, n).value


def _dg(G: FiniteGroup, n: int) -> Fraction:
    return degree(G, n).value


def _d_quotient(H: Subgroup, N: Subgroup, n: int) -> Fraction:
    Q = _quotient(H.parent, N)
    return _d(Q.image(H), n)


def _config(G: FiniteGroup, **parts) -> dict:
    out = {"group": G.name}
    for k, v in parts.items():
        if isinstance(v, Subgroup):
            out[k] = list(v.members)
        elif v is not None:
            out[k] = v
    return out


# verdict helpers -----------------------------------------------------------


def _vacuous(tid, config, hyps, witness=None) -> BoundReport:
    return BoundReport(tid, config, hyps, None, None, Verdict.VACUOUS, witness)


def _inequality(
    tid,
    config,
    hyps: dict,
    lhs: Callable[[], Fraction],
    rhs: Callable[[], Fraction],
    equality_claimed: bool = False,
    witness=None,
) -> BoundReport:
    if not all(hyps.values()):
        return _vacuous(tid, config, hyps, witness)
    a, b = lhs(), rhs()
    if a > b or (equality_claimed and a != b):
        verdict = Verdict.VIOLATED
    elif a == b:
        verdict = Verdict.HOLDS_WITH_EQUALITY
    else:
        verdict = Verdict.HOLDS
    return BoundReport(tid, config, hyps, a, b, verdict, witness)


def _chain(tid, config, hyps, names: Sequence[str], values: Sequence[Fraction]) -> BoundReport:
    witness = dict(zip(names, values))
    if any(x > y for x, y in zip(values, values[1:])):
        verdict = Verdict.VIOLATED
    elif values[0] == values[-1]:
        verdict = Verdict.HOLDS_WITH_EQUALITY
    else:
        verdict = Verdict.HOLDS
    return BoundReport(tid, config, hyps, values[0], values[-1], verdict, witness)


def _require_normal(G: FiniteGroup, N: Subgroup, H: Optional[Subgroup] = None) -> None:
    if not is_normal(G, N):
        raise NotNormal(f"N of order {N.order} is not normal in {G.name}")
    if H is not None and not N.issubset(H):
        raise ChainViolation("N must be contained in H")


# checkers ------------------------------------------------------------------


def check_T2_4(H: Subgroup, G: FiniteGroup) -> BoundReport:
    d = _d(H, 1)
    config = _config(G, H=H)
    if d == Fraction(3, 4):
        tid, hyps = TheoremId.T2_4i, {"d(H,G) = 3/4": True}
    elif d == Fraction(5, 8) and not H.is_abelian:
        tid, hyps = TheoremId.T2_4ii, {"d(H,G) = 5/8": True, "H nonabelian": True}
    elif H.is_abelian:
        return _vacuous(TheoremId.T2_4i, config, {"d(H,G) = 3/4": False}, {"d(H,G)": d})
    else:
        hyps = {"d(H,G) = 5/8": False, "H nonabelian": True}
        return _vacuous(TheoremId.T2_4ii, config, hyps, {"d(H,G)": d})
    X, K = _h_mod_k(H)
    probe = structure_probe(X)
    if tid is TheoremId.T2_4i:
        ok = probe.is_cyclic_of_order_2
    else:
        ok = probe.is_elementary_abelian_rank_2
    witness = {
        "d(H,G)": d,
        "K": list(K.members),
        "H/K order": probe.order,
        "H/K exponent": probe.exponent,
        "H/K cyclic": probe.is_cyclic,
        "H/K order census": probe.element_order_census,
    }
    verdict = Verdict.HOLDS if ok else Verdict.VIOLATED
    return BoundReport(tid, config, hyps, None, None, verdict, witness)


def check_L2_5(H: Subgroup, G: FiniteGroup) -> BoundReport:
    """|C_G(x)|/|G| <= |C_H(x)|/|H| for every x in G.

    lhs and rhs are the two sides summed over x; they agree exactly when
    every pointwise inequality is tight.
    """
    cg = G.centralizer_sizes
    ch = G.commuting[:, H.array].sum(axis=1).astype(np.int64)
    slack = ch * G.order - cg * H.order
    lhs = Fraction(int(cg.sum()), G.order)
    rhs = Fraction(int(ch.sum()), H.order)
    worst = int(np.argmin(slack))
    witness = {
        "points": G.order,
        "tight_points": int(np.count_nonzero(slack == 0)),
        "worst_x": worst,
        "worst_lhs": Fraction(int(cg[worst]), G.order),
        "worst_rhs": Fraction(int(ch[worst]), H.order),
    }
    if slack.min() < 0:
        verdict = Verdict.VIOLATED
    elif lhs == rhs:
        verdict = Verdict.HOLDS_WITH_EQUALITY
    else:
        verdict = Verdict.HOLDS
    return BoundReport(TheoremId.L2_5, _config(G, H=H), {}, lhs, rhs, verdict, witness)


def check_T2_6(H: Subgroup, G: FiniteGroup) -> BoundReport:
    values = [_dg(G, 1), _d(H, 1), _dg(H.as_group, 1)]
    return _chain(TheoremId.T2_6, _config(G, H=H), {}, ["d(G)", "d(H,G)", "d(H)"], values)


def check_T2_7(G: FiniteGroup, H: Optional[Subgroup] = None) -> BoundReport:
    Z = _center(G)
    if H is None:
        return _inequality(
            TheoremId.T2_7i,
            _config(G),
            {},
            lambda: _dg(G, 1),
            lambda: HALF + HALF * Fraction(Z.order, G.order),
        )
    K = intersection(H, Z)
    return _inequality(
        TheoremId.T2_7ii,
        _config(G, H=H),
        {},
        lambda: _d(H, 1),
        lambda: HALF + HALF * Fraction(K.order, H.order),
        witness={"K": list(K.members)},
    )


def check_C2_8(H: Subgroup, G: FiniteGroup) -> BoundReport:
    Z = _center(G)
    central = H.issubset(Z)
    hyps = {"G nonabelian": not G.is_abelian}
    config = _config(G, H=H)
    if central:
        hyps["H <= Z(G)"] = True
        return _inequality(
            TheoremId.C2_8i, config, hyps, lambda: _d(H, 1), lambda: Fraction(1),
            equality_claimed=True,
        )
    hyps["H not <= Z(G)"] = True
    if H.is_abelian:
        hyps["H abelian"] = True
        return _inequality(TheoremId.C2_8ii, config, hyps, lambda: _d(H, 1), lambda: Fraction(3, 4))
    hyps["H nonabelian"] = True
    return _inequality(TheoremId.C2_8iii, config, hyps, lambda: _d(H, 1), lambda: Fraction(5, 8))


def check_C2_9(A: Subgroup, B: Subgroup, G: FiniteGroup) -> BoundReport:
    if A.parent is not G or B.parent is not G or not A.issubset(B):
        raise ChainViolation("need A <= B <= G")
    d_ab = _d(restrict(A, B), 1)
    values = [_d(B, 1), _d(A, 1), d_ab]
    return _chain(
        TheoremId.C2_9, _config(G, A=A, B=B), {}, ["d(B,G)", "d(A,G)", "d(A,B)"], values
    )


def _intersection_flags(H: Subgroup, N: Subgroup, n: int, budget) -> dict:
    gen = _nfold(H, n, budget)
    ncl = _nfold_normal(H, n, budget)
    return {
        "generated_order": gen.order,
        "normal_closure_order": ncl.order,
        "N_meet_generated_trivial": intersection(N, gen).is_trivial,
        "N_meet_normal_closure_trivial": intersection(N, ncl).is_trivial,
    }


def check_L2_10(H: Subgroup, N: Subgroup, G: FiniteGroup, budget=None) -> BoundReport:
    """C_H(x)N/N <= C_{H/N}(xN) for all x; equality when N meets [H,G] trivially.

    lhs and rhs are the two subgroup orders summed over x.
    """
    _require_normal(G, N, H)
    Q = _quotient(G, N)
    proj = Q.projection
    h = H.array
    comm = G.comm_table
    flags = _intersection_flags(H, N, 1, budget)
    claim = flags["N_meet_generated_trivial"]
    lhs_total = rhs_total = 0
    contained = True
    tight = 0
    for x in range(G.order):
        left = np.unique(proj[h[G.commuting[h, x]]])
        right = np.unique(proj[h[proj[comm[h, x]] == 0]])
        contained &= bool(np.isin(left, right).all())
        lhs_total += left.size
        rhs_total += right.size
        tight += left.size == right.size
    witness = dict(flags, points=G.order, tight_points=tight)
    lhs, rhs = Fraction(lhs_total), Fraction(rhs_total)
    if not contained or (claim and lhs != rhs):
        verdict = Verdict.VIOLATED
    elif lhs == rhs:
        verdict = Verdict.HOLDS_WITH_EQUALITY
    else:
        verdict = Verdict.HOLDS
    return BoundReport(TheoremId.L2_10, _config(G, H=H, N=N), {}, lhs, rhs, verdict, witness)


def check_T2_11(H: Subgroup, N: Subgroup, G: FiniteGroup, budget=None) -> BoundReport:
    _require_normal(G, N, H)
    flags = _intersection_flags(H, N, 1, budget)
    return _inequality(
        TheoremId.T2_11,
        _config(G, H=H, N=N),
        {},
        lambda: _d(H, 1),
        lambda: _d_quotient(H, N, 1) * _dg(N.as_group, 1),
        equality_claimed=flags["N_meet_generated_trivial"],
        witness=flags,
    )


def check_T3_1(H: Subgroup, G: FiniteGroup, n: int) -> BoundReport:
    return _inequality(
        TheoremId.T3_1, _config(G, H=H, n=n), {}, lambda: _d(H, n), lambda: _dg(H.as_group, n)
    )


def check_T3_2(H: Subgroup, G: FiniteGroup, n: int) -> BoundReport:
    """d^(n+1)(H,G) <= (1 + d^(n)(H/K)) / 2 with K = H meet Z(G)."""
    return _inequality(
        TheoremId.T3_2,
        _config(G, H=H, n=n),
        {},
        lambda: _d(H, n + 1),
        lambda: HALF * (1 + _dg(_h_mod_k(H)[0], n)),
    )


def check_C3_3(G: FiniteGroup, n: int) -> BoundReport:
    return _inequality(
        TheoremId.C3_3,
        _config(G, n=n),
        {},
        lambda: _dg(G, n + 1),
        lambda: HALF * (1 + _dg(_quotient(G, _center(G)).group, n)),
    )


def check_T3_4(G: FiniteGroup, n: int) -> BoundReport:
    """d^(n+1)(G) <= (2^n - 1 + d(G/Z_n(G))) / 2^n."""
    Zn = _z_n(G, n)
    return _inequality(
        TheoremId.T3_4,
        _config(G, n=n),
        {},
        lambda: _dg(G, n + 1),
        lambda: (2**n - 1 + _dg(_quotient(G, Zn).group, 1)) / Fraction(2**n),
        witness={"Z_n order": Zn.order},
    )


def check_C4_1(G: FiniteGroup, n: int) -> BoundReport:
    hyps = {f"G not nilpotent of class <= {n}": not _class_at_most(G, n)}
    return _inequality(
        TheoremId.C4_1,
        _config(G, n=n),
        hyps,
        lambda: _dg(G, n),
        lambda: Fraction(2 ** (n + 2) - 3, 2 ** (n + 2)),
    )


def check_C4_2(G: FiniteGroup, n: int) -> BoundReport:
    hyps = {"G nontrivial": G.order > 1, "Z(G) trivial": _center(G).is_trivial}
    return _inequality(
        TheoremId.C4_2,
        _config(G, n=n),
        hyps,
        lambda: _dg(G, n),
        lambda: Fraction(2**n - 1, 2**n),
    )


def check_T3_5(H: Subgroup, N: Subgroup, G: FiniteGroup, n: int, budget=None) -> BoundReport:
    """d^(n)(H,G) <= d^(n)(H/N, G/N), with equality when N meets [_n H, G] trivially.

    The equality claim uses the subgroup generated by the commutators; the
    witness also records what the normal-closure reading would conclude.
    """
    _require_normal(G, N, H)
    flags = _intersection_flags(H, N, n, budget)
    report = _inequality(
        TheoremId.T3_5,
        _config(G, H=H, N=N, n=n),
        {},
        lambda: _d(H, n),
        lambda: _d_quotient(H, N, n),
        equality_claimed=flags["N_meet_generated_trivial"],
        witness=flags,
    )
    alt_claim = flags["N_meet_normal_closure_trivial"]
    lhs, rhs = report.lhs, report.rhs
    if lhs > rhs or (alt_claim and lhs != rhs):
        alt = Verdict.VIOLATED
    elif lhs == rhs:
        alt = Verdict.HOLDS_WITH_EQUALITY
    else:
        alt = Verdict.HOLDS
    report.witness["verdict_normal_closure_reading"] = alt.value
    return report


def check_C3_6(G: FiniteGroup, N: Subgroup, n: int) -> BoundReport:
    _require_normal(G, N)
    return _inequality(
        TheoremId.C3_6,
        _config(G, N=N, n=n),
        {},
        lambda: _dg(G, n),
        lambda: _dg(_quotient(G, N).group, n),
    )


def check_T4_3(H: Subgroup, G: FiniteGroup, n: int) -> BoundReport:
    """Three disjoint branches on a proper H in a nonabelian G.

    Branch (iii) takes its hypothesis as "H/K is not nilpotent of class at
    most max(1, n-1)": the bound comes from applying the non-nilpotent
    degree bound to H/K at level n-1, which needs that level to be >= 1.
    """
    config = _config(G, H=H, n=n)
    base = {"H proper": not H.is_whole, "G nonabelian": not G.is_abelian}
    X, K = _h_mod_k(H)
    one = Fraction(1)
    if H.issubset(_z_n(G, n)):
        hyps = dict(base, **{f"H <= Z_{n}(G)": True})
        return _inequality(TheoremId.T4_3i, config, hyps, lambda: _d(H, n), lambda: one, True)
    if _class_at_most(X, n - 1):
        hyps = dict(base, **{f"H not <= Z_{n}(G)": True, f"H/K nilpotent of class <= {n - 1}": True})
        return _inequality(TheoremId.T4_3ii, config, hyps, lambda: _d(H, n), lambda: one, True)
    level = max(1, n - 1)
    hyps = dict(
        base,
        **{
            "H not <= Z(G)": not H.issubset(_center(G)),
            f"H/K not nilpotent of class <= {level}": not _class_at_most(X, level),
        },
    )
    return _inequality(
        TheoremId.T4_3iii,
        config,
        hyps,
        lambda: _d(H, n),
        lambda: Fraction(2 ** (n + 2) - 3, 2 ** (n + 2)),
        witness={"reading": "H/K not nilpotent of class <= max(1, n-1)"},
    )


def check_monotone(H: Subgroup, G: FiniteGroup, n: int) -> BoundReport:
    return _inequality(
        TheoremId.MONOTONE_N, _config(G, H=H, n=n), {}, lambda: _d(H, n), lambda: _d(H, n + 1)
    )


# suite ---------------------------------------------------------------------


def _skipped(tid, config, exc) -> BoundReport:
    return BoundReport(tid, config, {}, None, None, Verdict.SKIPPED, {"reason": str(exc)})


def _guarded(reports, tid, config, fn):
    try:
        reports.append(fn())
    except BudgetExceeded as exc:
        reports.append(_skipped(tid, config, exc))


def _sort_key(r: BoundReport, everything: list):
    c = r.configuration
    primary = c.get("H", c.get("B", everything))
    secondary = c.get("N", c.get("A", []))
    return (primary, _THEOREM_ORDER[r.theorem_id], secondary, c.get("n", 0))


def group_reports(G: FiniteGroup, n_max: int, budget: Optional[int] = None) -> list[BoundReport]:
    """Every applicable check on one group, in deterministic order."""
    subs = all_subgroups(G)
    normals = normal_subgroups(G)
    ns = range(1, n_max + 1)
    out: list[BoundReport] = [check_T2_7(G)]
    for n in ns:
        out += [check_C3_3(G, n), check_T3_4(G, n), check_C4_1(G, n), check_C4_2(G, n)]
        out += [check_C3_6(G, N, n) for N in normals]
    for H in subs:
        out += [check_T2_4(H, G), check_L2_5(H, G), check_T2_6(H, G), check_T2_7(G, H)]
        out.append(check_C2_8(H, G))
        for n in ns:
            out += [check_T3_1(H, G, n), check_T3_2(H, G, n), check_T4_3(H, G, n)]
            out.append(check_monotone(H, G, n))
        for N in normals:
            if not N.issubset(H):
                continue
            _guarded(out, TheoremId.L2_10, _config(G, H=H, N=N),
                     lambda: check_L2_10(H, N, G, budget))
            _guarded(out, TheoremId.T2_11, _config(G, H=H, N=N),
                     lambda: check_T2_11(H, N, G, budget))
            for n in ns:
                _guarded(out, TheoremId.T3_5, _config(G, H=H, N=N, n=n),
                         lambda: check_T3_5(H, N, G, n, budget))
        for A in subs:
            if A.order <= H.order and A.issubset(H):
                out.append(check_C2_9(A, H, G))
    everything = list(range(G.order))
    out.sort(key=lambda r: _sort_key(r, everything))
    return out


def run_suite(
    corpus: Sequence, n_max: int, budget: Optional[int] = None, threads: int = 1
) -> list[BoundReport]:
    """Run every checker over every group in ``corpus`` (groups or spec strings)."""
    from .spec import resolve

    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    groups = [g if isinstance(g, FiniteGroup) else resolve(g) for g in corpus]
    if threads <= 1:
        parts = [group_reports(G, n_max, budget) for G in groups]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda G: group_reports(G, n_max, budget), groups))
    return [r for part in parts for r in part]


def summarize(reports: Sequence[BoundReport]) -> dict:
    counts = {"holds": 0, "equalities": 0, "vacuous": 0, "violated": 0, "skipped": 0}
    key = {
        Verdict.HOLDS: "holds",
        Verdict.HOLDS_WITH_EQUALITY: "equalities",
        Verdict.VACUOUS: "vacuous",
        Verdict.VIOLATED: "violated",
        Verdict.SKIPPED: "skipped",
    }
    for r in reports:
        counts[key[r.verdict]] += 1
    return counts
