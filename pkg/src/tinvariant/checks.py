"""Runtime self-check: every acceptance property, reported pass/fail.

Used by ``tinvariant selfcheck``.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass

from .closed_form import DEFAULT_CONVENTION, Convention, reconcile
from .fibers import (
    PRINTED_ORBIT,
    antipodal_sums,
    class_of,
    det_mod5,
    fiber_vector,
    labeled_orbit,
    pair_geometry,
    trapezoids,
)
from .golden import EPS, ONE, ZERO, GoldenNum
from .seifert import (
    h1,
    lens_presentation,
    parse_presentation,
    random_presentation,
    sweep_all_classes,
    t_invariant,
    t_of_classes,
)
from .tensors import _sparse_generators, constants, is_symmetric3, mat_mul, orbit_closure

# t and H1 for the six presentations compared against homology
COMPARISON_TABLE = (
    ("-1; (2,1) (2,1) (2,1)", (2, 2), GoldenNum(3, 1)),
    ("-1; (2,1) (2,1) (4,1)", (2, 2), GoldenNum(1)),
    ("-1; (2,1) (2,1) (3,1)", (4,), GoldenNum(3, 1)),
    ("-1; (2,1) (2,1) (5,1)", (4,), GoldenNum(2, 3)),
    ("-1; (2,1) (2,1) (3,2)", (8,), GoldenNum(3, 2)),
    ("-1; (2,1) (2,1) (5,2)", (8,), GoldenNum(2, -1)),
)

ANCHORS = (
    ("S^3", (1, 0), ONE),
    ("RP^3", (2, 1), EPS + 1),
    ("S^2 x S^1", (0, 1), EPS + 2),
    ("L(5,2)", (5, 2), ZERO),
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def check_constants() -> CheckResult:
    c = constants()
    ok = is_symmetric3(c.phi_T)
    for perm in (c.phi_23, c.phi_13):
        ok &= all(row.count(ONE) == 1 and row.count(ZERO) == 4 for row in perm)
        ok &= mat_mul(perm, perm) == tuple(
            tuple(ONE if i == j else ZERO for j in range(5)) for i in range(5)
        )
    ok &= c.phi_T[4][4][4] == -GoldenNum(0, 0, 5, -3)
    return CheckResult("1 constants fidelity", bool(ok), "PHI_T symmetric, permutations are involutions")


def check_orbit() -> CheckResult:
    _sparse_generators()  # constants are built once per process
    orbit, dt = _timed(orbit_closure)
    printed = {vec for _, vec in PRINTED_ORBIT}
    ok = len(orbit) == 12 and set(orbit) == printed and dt < 1e-3
    return CheckResult("2 orbit", ok, f"{len(orbit)} vectors, {dt * 1e3:.3f} ms", dt)


def check_geometry() -> CheckResult:
    want = {0: "max", 1: "medial", 2: "min"}
    bad = []
    classes = list(labeled_orbit())
    for c1, c2 in itertools.combinations(classes, 2):
        d = det_mod5(c1, c2)
        _, tier = pair_geometry(c1, c2)
        if tier != want[min(d, 5 - d)]:
            bad.append((str(c1), str(c2), d, tier))
    n = len(classes) * (len(classes) - 1) // 2
    return CheckResult("3 icosahedron geometry", not bad and n == 66, f"{n} pairs, {len(bad)} bad")


def check_anchors() -> CheckResult:
    bad = []
    for name, (p, q), want in ANCHORS:
        got = t_invariant(lens_presentation(p, q))
        if got != want:
            bad.append(f"{name}: {got} != {want}")
    return CheckResult("4 anchors", not bad, "; ".join(bad) or "S^3, RP^3, S^2xS^1, L(5,2)")


def check_table() -> CheckResult:
    def run():
        bad = []
        for text, torsion, want in COMPARISON_TABLE:
            p = parse_presentation(text)
            g = h1(p)
            t = t_invariant(p)
            if g.torsion != torsion or g.free_rank or t != want:
                bad.append(f"{text}: H1={g} t={t}")
        return bad

    bad, dt = _timed(run)
    return CheckResult("5 comparison table", not bad and dt < 1e-2, "; ".join(bad) or f"{dt * 1e3:.2f} ms", dt)


def check_distinct() -> CheckResult:
    sweep, dt = _timed(sweep_all_classes)
    values = set(sweep.values())
    ok = len(sweep) == 364 and len(values) == 12 and dt < 1.0
    return CheckResult("6 distinct values", ok, f"{len(values)} values over {len(sweep)} triples", dt)


def check_mod5(limit: int = 60) -> CheckResult:
    seen: dict = {}
    bad = 0
    for a in range(1, limit + 1):
        for b in range(1, limit + 1):
            if math.gcd(a, b) != 1:
                continue
            v = fiber_vector(a, b)
            prev = seen.setdefault(class_of(a, b), v)
            bad += prev != v
    return CheckResult("7 mod-5 invariance", bad == 0 and len(seen) == 12, f"{len(seen)} classes, {bad} violations")


def check_routes(convention: Convention = DEFAULT_CONVENTION) -> CheckResult:
    try:
        report = reconcile(convention=convention)
    except Exception as exc:  # reported, not raised
        return CheckResult("8 route agreement", False, str(exc))
    lens = {r["witness"]: r for r in report["lens_table"]}
    called_out = all(not lens[w]["printed_agrees"] for w in ("L(2,1)", "L(5,2)"))
    total = sum(s["total"] for s in report["per_case"].values())
    return CheckResult(
        "8 route agreement",
        called_out and total == 364,
        f"convention {report['selected_convention']}, {total}/364 agree; lens-table deviations at L(2,1), L(5,2)",
    )


def check_linear_relations() -> CheckResult:
    sums = antipodal_sums()
    vector_ok = len(set(sums.values())) == 1
    classes = list(labeled_orbit())
    value_ok = True
    for c2, c3 in itertools.combinations_with_replacement(classes, 2):
        totals = {t_of_classes(c, c2, c3) + t_of_classes(c.doubled(), c2, c3) for c in classes}
        value_ok &= len(totals) == 1
    quads = trapezoids()
    trap_ok = bool(quads)
    for c1, c2, c3, c4 in quads:
        for f2, f3 in itertools.combinations_with_replacement(classes, 2):
            lhs = t_of_classes(c1, f2, f3) - t_of_classes(c2, f2, f3)
            rhs = EPS * (t_of_classes(c3, f2, f3) - t_of_classes(c4, f2, f3))
            trap_ok &= lhs == rhs
    return CheckResult(
        "9 linear relations",
        vector_ok and value_ok and trap_ok,
        f"antipodal sums constant; {len(quads)} trapezoid quadruples verified",
    )


def check_homology(seed: int = 0, n: int = 200) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for _ in range(n):
        p = random_presentation(rng)
        (a1, b1), (a2, b2), (a3, b3) = p.fibers
        det = abs(p.b * a1 * a2 * a3 + b1 * a2 * a3 + b2 * a1 * a3 + b3 * a1 * a2)
        g = h1(p)
        order = g.order if g.order is not None else 0
        if order != det:
            bad.append(str(p))
    return CheckResult("10 homology cross-check", not bad, f"{n} presentations (seed {seed}), {len(bad)} bad")


def run_all(seed: int = 0, convention: Convention = DEFAULT_CONVENTION) -> list[CheckResult]:
    return [
        check_constants(),
        check_orbit(),
        check_geometry(),
        check_anchors(),
        check_table(),
        check_distinct(),
        check_mod5(),
        check_routes(convention),
        check_linear_relations(),
        check_homology(seed),
    ]
