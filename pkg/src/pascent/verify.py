"""Machine verification suites: oracle comparisons and identity residuals.

Every closed-form evaluator is compared coefficientwise against the
exhaustive enumeration oracle, and every algebraic identity is checked as a
zero residual of exact series arithmetic.  Comparisons are exact equality
of canonical forms; there are no tolerances anywhere.  Suites are pure
functions of their parameters, so reports are deterministic.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from . import gf, patterns
from .core import count_by_length, enumerate_sequences, oracle_table
from .patterns import Pattern
from .series import MultiPoly, TSeries, scalar_coefficients


class BudgetExceededError(RuntimeError):
    """Raised instead of silently truncating an infeasible enumeration."""


# hard ceiling on the number of sequences any one suite may enumerate
_MAX_NODES = 60_000_000

ORACLE_GF_NAMES = ("G", "G1_full", "G1_u", "A", "R", "H", "maxk")
IDENTITY_NAMES = (
    "kernel_G",
    "kernel_H",
    "rel16",
    "psi",
    "jelinek",
    "H_gives_A",
    "primitive_substitution",
    "delta_gamma_calculus",
    "cancellation",
    "maxk_boundary",
    "fishburn_p1",
)
PATTERN_SUITE_NAMES = (
    "patterns_01",
    "patterns_10",
    "patterns_00",
    "patterns_012",
    "vincular_212",
    "bijection_10_012",
    "embed_roundtrip",
)


@dataclass
class CheckReport:
    """Outcome of one verification suite run."""

    suite: str
    parameters: dict
    status: str
    first_discrepancy: dict | None = field(default=None)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        obj = {
            "suite": self.suite,
            "parameters": self.parameters,
            "status": self.status,
            "first_discrepancy": self.first_discrepancy,
        }
        return json.dumps(obj)


def _series_discrepancy(expected: TSeries, actual: TSeries) -> dict | None:
    n_max = min(expected.order, actual.order)
    for n in range(n_max + 1):
        pe = expected.coeffs[n]
        pa = actual.coeffs[n]
        if pe == pa:
            continue
        exps = sorted(set(pe.terms()) | set(pa.terms()))
        for exp in exps:
            ce = pe.terms().get(exp, 0)
            ca = pa.terms().get(exp, 0)
            if ce != ca:
                return {
                    "t_order": n,
                    "monomial": list(exp),
                    "expected": str(ce),
                    "actual": str(ca),
                }
    return None


def _count_discrepancy(expected: list[int], actual: list[int], offset: int = 0) -> dict | None:
    for i, (e, a) in enumerate(zip(expected, actual)):
        if e != a:
            return {
                "t_order": offset + i,
                "monomial": [0, 0, 0, 0],
                "expected": str(e),
                "actual": str(a),
            }
    return None


def _report(suite: str, parameters: dict, discrepancy: dict | None) -> CheckReport:
    status = "pass" if discrepancy is None else "fail"
    return CheckReport(suite=suite, parameters=parameters, status=status,
                       first_discrepancy=discrepancy)


def _enumeration_nodes(p: int, n_max: int) -> int:
    counts = scalar_coefficients(gf.eval_A(p, n_max).specialize({"z": 1}))
    return sum(counts)


def _guard_budget(p: int, n_max: int) -> None:
    if _enumeration_nodes(p, n_max) > _MAX_NODES:
        raise BudgetExceededError(
            f"enumerating p={p} sequences up to length {n_max} exceeds the node budget"
        )


@lru_cache(maxsize=8)
def _bundle(p: int, n_max: int) -> TSeries:
    """Full five-statistic oracle table, cached per (p, n_max)."""
    _guard_budget(p, n_max)
    return oracle_table(p, n_max)


def _counts_series(counts: list[int]) -> TSeries:
    return TSeries([MultiPoly.const(c) for c in counts])


def check_oracle_vs(gf_name: str, p: int, n_max: int, k: int = 2) -> CheckReport:
    """Compare one closed-form evaluator against the enumeration oracle."""
    if gf_name not in ORACLE_GF_NAMES:
        raise ValueError(f"unknown generating function {gf_name!r}")
    if p < 1:
        raise ValueError("p must be a positive integer")
    params: dict = {"p": p, "N": n_max}
    if gf_name == "maxk":
        params["k"] = k
    if gf_name in ("G1_u", "H"):
        params["D"] = n_max

    if gf_name == "R":
        _guard_budget(p, n_max)
        expected = gf.eval_R(p, n_max)
        actual = _counts_series(count_by_length(p, n_max, primitive_only=True))
    elif gf_name == "maxk":
        _guard_budget(p, n_max)
        expected = gf.eval_maxk(p, k, n_max)
        actual = _counts_series(count_by_length(p, n_max, max_repeat=k))
    else:
        table = _bundle(p, n_max)
        if gf_name == "G":
            expected = gf.eval_G(p, n_max)
            actual = table
        elif gf_name == "G1_full":
            expected = gf.eval_G1_full(p, n_max)
            actual = table.coefficient_of_var("x", 1)
        elif gf_name == "G1_u":
            expected = gf.eval_G1_u(p, n_max)
            actual = table.coefficient_of_var("x", 1).specialize({"v": 1})
        elif gf_name == "A":
            expected = gf.eval_A(p, n_max)
            actual = table.specialize({"u": 1, "v": 1, "x": 1})
        else:  # H
            expected = gf.eval_H(p, n_max)
            actual = table.specialize({"v": 1, "x": 1}) - 1
    return _report(f"oracle_{gf_name}", params, _series_discrepancy(expected, actual))


def _check_kernel_G(p: int, n_max: int) -> dict | None:
    table = _bundle(p, n_max)
    lhs_factor = (
        TSeries.from_poly(n_max, MultiPoly.variable("v") - 1)
        - TSeries.from_poly(
            n_max, MultiPoly.variable("v") * (MultiPoly.const(1) - MultiPoly.variable("u")), 1
        )
    )
    u = MultiPoly.variable("u")
    v = MultiPoly.variable("v")
    z = MultiPoly.variable("z")
    for r in range(1, min(3, n_max) + 1):
        g_r = table.coefficient_of_var("x", r)
        g_r_v1 = g_r.specialize({"v": 1})
        rhs = (
            TSeries.from_poly(n_max, u * v * (v**p - 1) * z**r, r + 1)
            + TSeries.from_poly(n_max, (v - 1) * z - v, 1) * g_r_v1
            + TSeries.from_poly(n_max, u * v ** (p + 1), 1) * g_r_v1.subst_u_to_uv()
        )
        disc = _series_discrepancy(lhs_factor * g_r, rhs)
        if disc is not None:
            disc["r"] = r
            return disc
    return None


def _check_kernel_H(p: int, n_max: int) -> dict | None:
    table = _bundle(p, n_max)
    h = table.specialize({"x": 1}) - 1
    h_v1 = h.specialize({"v": 1})
    u = MultiPoly.variable("u")
    v = MultiPoly.variable("v")
    z = MultiPoly.variable("z")
    lhs_factor = TSeries.from_poly(n_max, v - 1) + TSeries.from_poly(n_max, v * (u - 1), 1)
    rhs = (
        TSeries.from_poly(n_max, (v - 1) * z, 1)
        + TSeries.from_poly(n_max, (v - 1) * z - v, 1) * h_v1
        + TSeries.from_poly(n_max, u * v ** (p + 1), 1) * h_v1.subst_u_to_uv()
    )
    return _series_discrepancy(lhs_factor * h, rhs)


def _check_rel16(p: int, n_max: int) -> dict | None:
    table = _bundle(p, n_max)
    slice_1 = table.coefficient_of_var("x", 1)
    z = MultiPoly.variable("z")
    for r in range(2, min(3, n_max) + 1):
        expected = slice_1.shift(r - 1) * z ** (r - 1)
        actual = table.coefficient_of_var("x", r)
        disc = _series_discrepancy(expected, actual)
        if disc is not None:
            disc["r"] = r
            return disc
    return None


def _check_psi(n_max: int, m_max: int = 6) -> dict | None:
    for m in range(m_max + 1):
        lhs, rhs = gf.psi(m, n_max)
        disc = _series_discrepancy(rhs, lhs)
        if disc is not None:
            disc["m"] = m
            return disc
    return None


def _check_delta_gamma(n_max: int, s_max: int = 6, k_max: int = 6) -> dict | None:
    u_poly = MultiPoly.variable("u")
    u_series = TSeries.from_poly(n_max, u_poly)
    u_minus_1 = TSeries.from_poly(n_max, u_poly - 1)
    for k in range(1, k_max + 1):
        d_k = gf.delta(k, n_max)
        repl = u_series * d_k.invert()
        onemt_k = gf.one_minus_t(n_max) ** k
        checks = [(u_minus_1.subst_u(repl) * d_k, onemt_k * u_minus_1)]
        for s in range(1, s_max + 1):
            checks.append((gf.delta(s, n_max).subst_u(repl) * d_k, gf.delta(s + k, n_max)))
            checks.append((gf.gamma(s, n_max).subst_u(repl) * d_k, gf.gamma(s + k, n_max)))
            u_over_ds = u_series * gf.delta(s, n_max).invert()
            checks.append((u_over_ds.subst_u(repl), u_series * gf.delta(s + k, n_max).invert()))
        for actual, expected in checks:
            disc = _series_discrepancy(expected, actual)
            if disc is not None:
                disc["k"] = k
                return disc
        if gf.delta_bar(k, n_max) != gf.delta(k, n_max).subst_u_to_uv():
            return {"t_order": 0, "monomial": [0, 0, 0, 0], "k": k,
                    "expected": "delta_bar = delta|u->uv", "actual": "mismatch"}
        if gf.gamma_bar(k, n_max) != gf.gamma(k, n_max).subst_u_to_uv():
            return {"t_order": 0, "monomial": [0, 0, 0, 0], "k": k,
                    "expected": "gamma_bar = gamma|u->uv", "actual": "mismatch"}
    return None


def _check_cancellation(p: int, n_max: int) -> dict | None:
    for name, series in (("G1_u", gf.eval_G1_u(p, n_max)), ("H", gf.eval_H(p, n_max))):
        for (n, eu, ev, ez, ex), c in sorted(series.terms().items()):
            if eu >= n and c:
                return {
                    "t_order": n,
                    "monomial": [eu, ev, ez, ex],
                    "expected": "0",
                    "actual": f"{c} (in {name})",
                }
    return None


_P_FREE_IDENTITIES = ("psi", "delta_gamma_calculus", "fishburn_p1")


def check_identity(name: str, p: int | None, n_max: int) -> CheckReport:
    """Verify one algebraic identity as a zero residual through t^n_max."""
    if name not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity {name!r}")
    if name not in _P_FREE_IDENTITIES and (p is None or p < 1):
        raise ValueError(f"identity {name!r} needs a positive p")
    params: dict = {"p": p, "N": n_max}
    if name == "kernel_G":
        disc = _check_kernel_G(p, n_max)
    elif name == "kernel_H":
        disc = _check_kernel_H(p, n_max)
    elif name == "rel16":
        disc = _check_rel16(p, n_max)
    elif name == "psi":
        params = {"p": None, "N": n_max, "D": n_max, "m_max": 6}
        disc = _check_psi(n_max)
    elif name == "jelinek":
        if p != 1:
            raise ValueError("the zeros product identity is only available for p = 1")
        disc = _series_discrepancy(gf.eval_A1_product_form(n_max), gf.eval_A(1, n_max))
    elif name == "H_gives_A":
        disc = _series_discrepancy(
            gf.eval_A(p, n_max), 1 + gf.eval_H(p, n_max).specialize({"u": 1})
        )
    elif name == "primitive_substitution":
        t_over_1mt = TSeries.from_poly(n_max, MultiPoly.const(1), 1) * gf.one_minus_t(n_max).invert()
        disc = _series_discrepancy(
            gf.eval_A(p, n_max).specialize({"z": 1}),
            gf.eval_R(p, n_max).compose_t(t_over_1mt),
        )
    elif name == "delta_gamma_calculus":
        params = {"p": None, "N": n_max, "s_max": 6, "k_max": 6}
        disc = _check_delta_gamma(n_max)
    elif name == "cancellation":
        params["D"] = n_max
        disc = _check_cancellation(p, n_max)
    elif name == "maxk_boundary":
        disc = _series_discrepancy(gf.eval_R(p, n_max), gf.eval_maxk(p, 1, n_max))
        if disc is None and n_max >= 1:
            disc = _series_discrepancy(
                gf.eval_A(p, n_max).specialize({"z": 1}), gf.eval_maxk(p, n_max, n_max)
            )
    else:  # fishburn_p1
        params = {"p": 1, "N": n_max}
        disc = _series_discrepancy(gf.eval_A(1, n_max).specialize({"z": 1}), gf.eval_P(n_max))
    return _report(name, params, disc)


def _pattern_sources(p: int, pat: Pattern, n_max: int, primitive_only: bool):
    """Brute counts for n = 0..n_max plus closed/gf columns where supported."""
    brute = patterns.avoider_counts(p, pat, n_max, primitive_only)
    columns = [("brute", brute)]
    try:
        closed = [patterns.closed_count(p, pat, n, primitive_only) for n in range(n_max + 1)]
        columns.append(("closed", closed))
    except patterns.NoClosedFormError:
        pass
    try:
        series = patterns.gf_avoiders(p, pat, n_max, primitive_only)
        columns.append(("gf", scalar_coefficients(series)))
    except patterns.NoClosedFormError:
        pass
    return columns


def _check_pattern_family(p: int, pattern_text: str, n_max: int) -> dict | None:
    pat = Pattern.parse(pattern_text)
    for primitive_only in (False, True):
        columns = _pattern_sources(p, pat, n_max, primitive_only)
        name0, base = columns[0]
        for name, col in columns[1:]:
            disc = _count_discrepancy(base, col)
            if disc is not None:
                disc["expected"] = f"{disc['expected']} ({name0})"
                disc["actual"] = f"{disc['actual']} ({name})"
                return disc
    if pattern_text == "10":
        # refinement: avoiders arise from primitive avoiders by repeating letters
        brute = patterns.avoider_counts(p, pat, n_max)
        for n in range(1, n_max + 1):
            total = sum(
                comb(n - 1, s - 1) * patterns.closed_count(p, pat, s, primitive_only=True)
                for s in range(1, n + 1)
            )
            if total != brute[n]:
                return {
                    "t_order": n,
                    "monomial": [0, 0, 0, 0],
                    "expected": str(brute[n]),
                    "actual": f"{total} (repetition refinement)",
                }
    return None


def _check_vincular(n_max: int) -> dict | None:
    pat = Pattern.parse("00")
    expected = [patterns.count_avoiders(3, pat, n) for n in range(1, n_max + 1)]
    actual = [patterns.count_vincular_212_ternary(n) for n in range(1, n_max + 1)]
    return _count_discrepancy(expected, actual, offset=1)


def _check_bijection(n_max: int) -> dict | None:
    pat10 = Pattern.parse("10")
    pat012 = Pattern.parse("012")
    for n in range(n_max + 1):
        source = list(patterns.iter_avoiders(2, pat10, n))
        target = {seq.letters for seq in patterns.iter_avoiders(2, pat012, n)}
        images = set()
        for seq in source:
            image = patterns.bijection_10_to_012(seq)
            if patterns.bijection_012_to_10(image).letters != seq.letters:
                return {"t_order": n, "monomial": [0, 0, 0, 0],
                        "expected": str(seq.letters), "actual": "round trip failed"}
            images.add(image.letters)
        if images != target:
            return {"t_order": n, "monomial": [0, 0, 0, 0],
                    "expected": f"{len(target)} images", "actual": f"{len(images)} images"}
        size = len(source)
        closed = (n + 1) * 2 ** (n - 2) if n >= 2 else 1
        if size != closed:
            return {"t_order": n, "monomial": [0, 0, 0, 0],
                    "expected": str(closed), "actual": str(size)}
    return None


def _check_embed(p: int, n_max: int) -> dict | None:
    _guard_budget(p, n_max)
    for n in range(n_max + 1):
        forward = 0
        for seq in enumerate_sequences(p, n):
            image = patterns.embed(seq)   # constructor re-validates as 1-ascent
            if patterns.project(image, p).letters != seq.letters:
                return {"t_order": n, "monomial": [0, 0, 0, 0],
                        "expected": str(seq.letters), "actual": "round trip failed"}
            forward += 1
        if n >= 1:
            # walk 1-ascent extensions of the forced prefix: each must project back
            prefix = (0, 1) * (p - 1) + (0,)
            backward = 0
            for seq in enumerate_sequences(1, n + 2 * p - 2, prefix=prefix):
                patterns.project(seq, p)   # raises if not a valid preimage
                backward += 1
            if backward != forward:
                return {"t_order": n, "monomial": [0, 0, 0, 0],
                        "expected": str(forward), "actual": str(backward)}
    return None


def check_pattern(name: str, p: int | None, n_max: int) -> CheckReport:
    """Run one pattern-module suite (closed forms, bijections, cross-checks)."""
    if name not in PATTERN_SUITE_NAMES:
        raise ValueError(f"unknown pattern suite {name!r}")
    if name.startswith("patterns_") or name == "embed_roundtrip":
        if p is None or p < 1:
            raise ValueError(f"pattern suite {name!r} needs a positive p")
    params: dict = {"p": p, "N": n_max}
    if name == "patterns_01":
        disc = _check_pattern_family(p, "01", n_max)
    elif name == "patterns_10":
        disc = _check_pattern_family(p, "10", n_max)
    elif name == "patterns_00":
        disc = _check_pattern_family(p, "00", n_max)
    elif name == "patterns_012":
        disc = _check_pattern_family(p, "012", n_max)
    elif name == "vincular_212":
        params = {"p": 3, "N": n_max}
        disc = _check_vincular(n_max)
    elif name == "bijection_10_012":
        params = {"p": 2, "N": n_max}
        disc = _check_bijection(n_max)
    else:  # embed_roundtrip
        disc = _check_embed(p, n_max)
    return _report(name, params, disc)


# Which suites exercise which public evaluators and closed forms.  run_all
# refuses to start if anything in the required list is left uncovered.
SUITE_COVERAGE = {
    "oracle_G": ("eval_G", "oracle_table"),
    "oracle_G1_full": ("eval_G1_full",),
    "oracle_G1_u": ("eval_G1_u",),
    "oracle_A": ("eval_A",),
    "oracle_R": ("eval_R",),
    "oracle_H": ("eval_H",),
    "oracle_maxk": ("eval_maxk",),
    "kernel_G": ("oracle_table",),
    "kernel_H": ("oracle_table",),
    "rel16": ("eval_Gr", "oracle_table"),
    "psi": ("psi",),
    "jelinek": ("eval_A1_product_form", "eval_A"),
    "H_gives_A": ("eval_H", "eval_A"),
    "primitive_substitution": ("eval_R", "eval_A"),
    "delta_gamma_calculus": ("delta", "gamma", "delta_bar", "gamma_bar"),
    "cancellation": ("eval_G1_u", "eval_H"),
    "maxk_boundary": ("eval_maxk", "eval_R", "eval_A"),
    "fishburn_p1": ("eval_P", "eval_A"),
    "patterns_01": ("count_avoiders", "closed_count", "gf_avoiders"),
    "patterns_10": ("count_avoiders", "closed_count", "gf_avoiders"),
    "patterns_00": ("count_avoiders", "closed_count", "gf_avoiders"),
    "patterns_012": ("count_avoiders", "closed_count"),
    "vincular_212": ("count_vincular_212_ternary", "count_avoiders"),
    "bijection_10_012": ("bijection_10_to_012", "bijection_012_to_10"),
    "embed_roundtrip": ("embed", "project"),
}

_REQUIRED_COVERED = frozenset(
    name
    for name in (
        "delta", "gamma", "delta_bar", "gamma_bar",
        "eval_G1_u", "eval_G1_full", "eval_Gr", "eval_G",
        "eval_H", "eval_A", "eval_P", "eval_R", "eval_maxk",
        "psi", "eval_A1_product_form", "oracle_table",
        "count_avoiders", "closed_count", "gf_avoiders",
        "count_vincular_212_ternary",
        "bijection_10_to_012", "bijection_012_to_10",
        "embed", "project",
    )
)


def assert_registry_complete() -> None:
    """Every evaluator and closed form must be exercised by at least one suite."""
    covered = {fn for fns in SUITE_COVERAGE.values() for fn in fns}
    # eval_Gr is implemented through eval_G1_full; rel16 checks the shift law
    missing = _REQUIRED_COVERED - covered
    if missing:
        raise AssertionError(f"verification suites do not cover: {sorted(missing)}")


def _task_matrix(budget: int) -> list[tuple]:
    psi_n = min(20, 2 * budget + 4)
    jelinek_n = min(30, 3 * budget + 6)
    eval_n = budget + 4
    tasks: list[tuple] = []
    for p in (1, 2, 3, 4):
        for name in ORACLE_GF_NAMES:
            tasks.append(("oracle", name, p, budget, 2))
    for p in (1, 2, 3):
        tasks.append(("identity", "kernel_G", p, budget))
        tasks.append(("identity", "kernel_H", p, budget))
    for p in (1, 2, 3, 4):
        tasks.append(("identity", "rel16", p, budget))
    tasks.append(("identity", "psi", None, psi_n))
    tasks.append(("identity", "jelinek", 1, jelinek_n))
    for p in (1, 2, 3, 4):
        tasks.append(("identity", "H_gives_A", p, eval_n))
        tasks.append(("identity", "primitive_substitution", p, eval_n))
    tasks.append(("identity", "delta_gamma_calculus", None, eval_n))
    for p in (1, 2, 3, 4):
        tasks.append(("identity", "cancellation", p, eval_n))
    for p in (1, 2, 3):
        tasks.append(("identity", "maxk_boundary", p, budget + 2))
    tasks.append(("identity", "fishburn_p1", None, eval_n))
    for p in (1, 2, 3, 4):
        tasks.append(("pattern", "patterns_01", p, budget))
        tasks.append(("pattern", "patterns_10", p, budget))
    for p in (2, 3):
        tasks.append(("pattern", "patterns_00", p, budget))
    for p in (2, 3, 4, 5):
        tasks.append(("pattern", "patterns_012", p, budget))
    tasks.append(("pattern", "vincular_212", 3, min(budget + 2, 10)))
    tasks.append(("pattern", "bijection_10_012", 2, min(budget + 4, 12)))
    for p in (1, 2, 3, 4):
        tasks.append(("pattern", "embed_roundtrip", p, min(budget, 8)))
    return tasks


def _execute(task: tuple) -> CheckReport:
    kind = task[0]
    if kind == "oracle":
        _kind, name, p, n_max, k = task
        return check_oracle_vs(name, p, n_max, k)
    if kind == "identity":
        _kind, name, p, n_max = task
        return check_identity(name, p, n_max)
    _kind, name, p, n_max = task
    return check_pattern(name, p, n_max)


def run_all(budget: int) -> list[CheckReport]:
    """Run the full verification matrix for p in 1..4.

    budget caps the length of every enumeration-backed comparison; the pure
    series identities run at fixed desk scales.  Set PASCENT_JOBS > 1 to run
    independent suites in worker processes (reports keep registry order).
    """
    if budget < 4:
        raise ValueError("budget must be at least 4")
    assert_registry_complete()
    tasks = _task_matrix(budget)
    jobs = int(os.environ.get("PASCENT_JOBS", "1") or "1")
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            return pool.map(_execute, tasks)
    return [_execute(task) for task in tasks]
