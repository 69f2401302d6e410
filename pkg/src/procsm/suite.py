"""Seeded randomized verification of the main identity and its proof steps.

Arrangements are generated from a 64-bit linear congruential generator so
that every implementation of the suite draws the same cases:

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64
    draw(lo, hi) = lo + (state >> 33) mod (hi - lo + 1)     # after advancing

The initial state is ``seed mod 2**64``.  Case ``i`` uses the ambient
``AMBIENTS[i mod len]`` (all products of projective spaces with factors in
non-increasing order and total dimension ``<= max_dim``, ordered by dimension),
then draws ``m`` in ``[1, max_components]`` and, for each component, one
multidegree entry per factor in ``[1, max_multidegree]``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from procsm.characteristic import verify_main_identity, verify_silclaim_induction
from procsm.chow_ring import make_product_ambient
from procsm.errors import InvalidBounds
from procsm.log_csm import additivity_check, arrangement
from procsm.scenario import ENGINE, class_table

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = 2**64 - 1

LIMITS = {"max_dim": 3, "max_components": 4, "max_multidegree": 3}
CHECKS = ("verify_main", "verify_induction", "additivity")


class Lcg:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state >> 33

    def draw(self, lo: int, hi: int) -> int:
        return lo + self.next() % (hi - lo + 1)


def partitions(total: int, largest: int = None):
    """Partitions of ``total`` with non-increasing parts, largest first."""
    if total == 0:
        yield ()
        return
    largest = total if largest is None else largest
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def ambients(max_dim: int) -> list:
    return [p for d in range(1, max_dim + 1) for p in partitions(d)]


def generate(seed: int, max_dim: int, max_components: int, max_multidegree: int, count: int) -> list:
    """Case list ``[(factors, [multidegree, ...]), ...]``."""
    rng = Lcg(seed)
    shapes = ambients(max_dim)
    cases = []
    for i in range(count):
        factors = shapes[i % len(shapes)]
        m = rng.draw(1, max_components)
        comps = [[rng.draw(1, max_multidegree) for _ in factors] for _ in range(m)]
        cases.append((factors, comps))
    return cases


def check_case(case) -> dict:
    factors, comps = case
    ambient = make_product_ambient(factors)
    arr = arrangement(ambient, [ambient.divisor(c) for c in comps])
    main = verify_main_identity(arr)
    induction = verify_silclaim_induction(arr)
    additivity = additivity_check(arr)
    row = {
        "factors": list(factors),
        "components": [list(c) for c in comps],
        "verify_main": main.passed,
        "verify_induction": induction.passed,
        "additivity": additivity.passed,
    }
    if not main.passed:
        row["verify_main_sides"] = {
            "csm_zero": class_table(main.csm_zero),
            "silred_rhs": class_table(main.silred_rhs),
            "char_class": class_table(main.char_class),
        }
    if not induction.passed:
        row["verify_induction_failures"] = [
            {"m": lv.m, "failed": [k for k, ok in lv.checks.items() if not ok],
             "lhs": class_table(lv.lhs), "rhs": class_table(lv.rhs)}
            for lv in induction.levels if not lv.passed
        ]
    if not additivity.passed:
        row["additivity_sides"] = {
            "strata_sum": class_table(additivity.total),
            "tangent": class_table(additivity.tangent),
        }
    return row


def validate_bounds(max_dim, max_components, max_multidegree, count) -> None:
    given = {"max_dim": max_dim, "max_components": max_components, "max_multidegree": max_multidegree}
    for key, value in given.items():
        if not isinstance(value, int) or value < 1 or value > LIMITS[key]:
            raise InvalidBounds(f"{key} must be an integer in [1, {LIMITS[key]}], got {value!r}")
    if not isinstance(count, int) or count < 0:
        raise InvalidBounds(f"count must be a non-negative integer, got {count!r}")


def verify_suite(seed: int = 0, max_dim: int = 3, max_components: int = 4,
                 max_multidegree: int = 3, count: int = 100, jobs: int = 1) -> dict:
    validate_bounds(max_dim, max_components, max_multidegree, count)
    cases = generate(seed, max_dim, max_components, max_multidegree, count)
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(check_case, cases, chunksize=8))
    else:
        rows = [check_case(c) for c in cases]
    for i, row in enumerate(rows):
        row["index"] = i
    summary = {key: sum(1 for r in rows if r[key]) for key in CHECKS}
    return {
        "engine": ENGINE,
        "suite": {
            "seed": seed,
            "max_dim": max_dim,
            "max_components": max_components,
            "max_multidegree": max_multidegree,
            "count": count,
            "generator": "lcg64",
        },
        "cases": rows,
        "summary": {"count": count, **summary},
        "passed": all(summary[key] == count for key in CHECKS),
    }


def render_text(report: dict) -> str:
    s = report["suite"]
    lines = [
        f"engine: {report['engine']}",
        f"suite: seed={s['seed']} max_dim={s['max_dim']} max_components={s['max_components']} "
        f"max_multidegree={s['max_multidegree']} count={s['count']}",
        "",
    ]
    rows = report["cases"]
    if rows:
        amb = [" x ".join(f"P{n}" for n in r["factors"]) for r in rows]
        comps = [" ".join("(" + ",".join(map(str, c)) + ")" for c in r["components"]) for r in rows]
        wa = max(len("ambient"), *(len(a) for a in amb))
        wc = max(len("components"), *(len(c) for c in comps))
        lines.append(f"{'#':>4}  {'ambient':<{wa}}  {'components':<{wc}}  main  induction  additivity")
        for r, a, c in zip(rows, amb, comps):
            flags = ["pass" if r[k] else "FAIL" for k in CHECKS]
            lines.append(f"{r['index']:>4}  {a:<{wa}}  {c:<{wc}}  {flags[0]:<4}  {flags[1]:<9}  {flags[2]}")
        lines.append("")
    n = report["summary"]["count"]
    for key in CHECKS:
        lines.append(f"{key}: {report['summary'][key]}/{n} pass")
    lines.append(f"overall: {'PASS' if report['passed'] else 'FAIL'}")
    return "\n".join(lines) + "\n"
