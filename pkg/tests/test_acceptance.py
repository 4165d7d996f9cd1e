"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the terminal summary (see ``conftest.py``) and also
when this file is run directly with ``python -m tests.test_acceptance``.
"""

from __future__ import annotations

import random
import time
from itertools import combinations

import pytest

from idcode.classifier import classify
from idcode.corona import corona, corona_identifiable
from idcode.families import make_family
from idcode.graph import (
    Graph,
    contained_in_some_closed_nbhd,
    is_dominating,
    is_identifiable,
    is_identifying_code,
    is_total_dominating,
    popcount,
    separates,
    vset,
)
from idcode.solver import extend_separating, min_identifying_code
from idcode.sweep import verify_sweep
from idcode.theorem import (
    construct_cons1,
    construct_cons2,
    construct_cons3,
    construct_cons4,
    gamma_id_corona,
)

from .oracles import all_labeled, literal_conditions, oracle_is_code, oracle_separates

F = make_family
RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def brute(g: Graph) -> int:
    return min_identifying_code(g).optimum


def test_criterion_1_paths_and_cycles():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 13):
        if brute(F(f"path:{n}")) != n // 2 + 1:
            bad.append(f"P{n}")
    for n in range(6, 13):
        expected = n // 2 if n % 2 == 0 else (n + 3) // 2
        if brute(F(f"cycle:{n}")) != expected:
            bad.append(f"C{n}")
    for n in (4, 5):
        if brute(F(f"cycle:{n}")) != 3:
            bad.append(f"C{n}")
    elapsed = time.perf_counter() - t0
    record(1, "path/cycle table", not bad and elapsed < 10, f"mismatches={bad}, {elapsed:.2f}s < 10s")


FANS = {4: 4, 5: 3, 6: 4, 7: 4, 8: 5, 9: 5}
WHEELS = {4: 4, 5: 4, 6: 3, 7: 5, 8: 4}


def test_criterion_2_fans_and_wheels():
    t0 = time.perf_counter()
    k1 = F("k1")
    bad = []
    for family, base, table in (("F", "path", FANS), ("W", "cycle", WHEELS)):
        for n, expected in table.items():
            g = F(f"{base}:{n}")
            theorem = gamma_id_corona(k1, g).value
            direct = brute(corona(k1, g)[0])
            if (theorem, direct) != (expected, expected):
                bad.append(f"{family}{n}: theorem {theorem}, brute {direct}, expected {expected}")
    elapsed = time.perf_counter() - t0
    record(2, "fan/wheel values", not bad and elapsed < 30, f"mismatches={bad}, {elapsed:.2f}s < 30s")


def test_criterion_3_special_formulas():
    t0 = time.perf_counter()
    k1 = F("k1")
    bad = []
    for n in range(2, 7):
        h = F(f"complete:{n}")
        got = (gamma_id_corona(h, k1).value, brute(corona(h, k1)[0]))
        if got != (n + 1, n + 1):
            bad.append(f"K{n}.K1 {got}")
    for spec in ("path:3", "path:4", "cycle:4", "cycle:5", "g3"):
        h = F(spec)
        got = (gamma_id_corona(h, k1).value, brute(corona(h, k1)[0]))
        if got != (h.n, h.n):
            bad.append(f"{spec}.K1 {got}")
    for k, expected in ((3, 4), (4, 8)):
        tree = F(f"binomial:{k}")
        via_engine = gamma_id_corona(F(f"binomial:{k - 1}"), k1).value
        if (brute(tree), via_engine) != (expected, expected):
            bad.append(f"T{k}")
    elapsed = time.perf_counter() - t0
    record(3, "K_n.K1, H.K1, binomial trees", not bad and elapsed < 60, f"mismatches={bad}, {elapsed:.2f}s < 60s")


# gamma and gamma_t of the host graphs, by hand: K2 (1, 2), P3 (1, 2), C4 (2, 2)
HOSTS = {"k2": (2, 1, 2), "path:3": (3, 1, 2), "cycle:4": (4, 2, 2)}


def _table_value(g_spec: str, m: int, gamma: int, gamma_t: int) -> int:
    return {
        "path:3": 2 * m + gamma_t,
        "path:4": 3 * m + gamma_t,
        "cycle:4": 3 * m + gamma_t,
        "cycle:5": 3 * m + gamma_t,
        "star:3": 3 * m,
        "g3": 3 * m + gamma,
    }[g_spec]


def test_criterion_4_product_table():
    bad = []
    checked = 0
    for h_spec, (m, gamma, gamma_t) in HOSTS.items():
        h = F(h_spec)
        for g_spec in ("path:3", "path:4", "cycle:4", "cycle:5", "star:3", "g3"):
            g = F(g_spec)
            expected = _table_value(g_spec, m, gamma, gamma_t)
            theorem = gamma_id_corona(h, g).value
            if theorem != expected:
                bad.append(f"{h_spec}.{g_spec}: theorem {theorem} != {expected}")
            if h.n + h.n * g.n <= 64:
                direct = brute(corona(h, g)[0])
                checked += 1
                if direct != expected:
                    bad.append(f"{h_spec}.{g_spec}: brute {direct} != {expected}")
    record(4, "product table for H in {K2, P3, C4}", not bad, f"{checked} brute checks, mismatches={bad}")


REACHABLE_AT_3_4 = {
    "T2.1-unidentifiable",
    "T4.3-K1-a",
    "T4.3-K1-nota",
    "T4.5-Kn-K1",
    "T4.6-H-K1",
    "T4.1-ab",
    "T4.2-nc",
}


def test_criterion_5_exhaustive_sweep():
    t0 = time.perf_counter()
    report = verify_sweep(3, 4)
    elapsed = time.perf_counter() - t0
    tags = set(report.histogram)
    ok = report.mismatches == 0 and tags == REACHABLE_AT_3_4 and elapsed < 600
    record(
        5,
        "verify --max-h 3 --max-g 4",
        ok,
        f"{report.pairs} pairs, {report.mismatches} mismatches, tags {sorted(tags)}, {elapsed:.2f}s < 600s",
    )


def test_criterion_6_classifier_oracle():
    disagreements = 0
    checked = 0
    for n in range(1, 6):
        for g in all_labeled(n):
            if not is_identifiable(g):
                continue
            cl = classify(g)
            if (cl.a_exists, cl.b_exists, cl.c_exists) != literal_conditions(g):
                disagreements += 1
            checked += 1
    record(6, "classifier vs literal definitions, n <= 5", disagreements == 0,
           f"{checked} graphs, {disagreements} disagreements")


def test_criterion_7_g3_facts():
    g = F("g3")
    gamma = brute(g)
    min_codes = [s for s in combinations(range(7), 3) if oracle_is_code(g, s)]
    inside = all(set(s) <= {0, 2, 4, 6} for s in min_codes)
    no_pair = not any(oracle_separates(g, s) for s in combinations(range(7), 2))
    code_0135 = is_identifying_code(g, vset([0, 1, 3, 5]))
    cl = classify(g)
    w = cl.c_witness
    c_ok = (
        cl.c_exists is True
        and not cl.a_exists
        and not cl.b_exists
        and w.code == vset([0, 1, 3, 5])
        and w.z == 0
    )
    ok = gamma == 3 and min_codes and inside and no_pair and code_0135 and c_ok
    record(7, "G3 facts", bool(ok),
           f"gamma={gamma}, {len(min_codes)} min codes within {{0,2,4,6}}={inside}, "
           f"no 2-separator={no_pair}, {{0,1,3,5}} code={code_0135}, c witness ok={c_ok}")


# -- criterion 8: randomized property suite ------------------------------------------


def random_graph(rnd: random.Random, lo: int, hi: int, p: float | None = None) -> Graph:
    n = rnd.randint(lo, hi)
    p = rnd.random() if p is None else p
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rnd.random() < p])


def draw(rnd, lo, hi, accept):
    while True:
        g = random_graph(rnd, lo, hi)
        if accept(g):
            return g


def grow(rnd: random.Random, g_n: int, ok) -> int:
    """Random subset, enlarged one random vertex at a time until ``ok`` holds."""
    s = rnd.getrandbits(g_n)
    while not ok(s):
        s |= 1 << rnd.randrange(g_n)
    return s


def _no_universal(g: Graph) -> bool:
    return is_identifiable(g) and g.max_degree() <= g.n - 2


def _connected_nontrivial(g: Graph) -> bool:
    return g.n >= 2 and g.is_connected()


TRIALS = 1000


def test_criterion_8_randomized_properties():
    rnd = random.Random(20261016)
    failures = {"extend": 0, "cons1": 0, "cons2": 0, "cons3": 0, "cons4": 0, "lower-bound": 0}

    for _ in range(TRIALS):
        g = draw(rnd, 1, 9, is_identifiable)
        s = grow(rnd, g.n, lambda s: separates(g, s, g.full))
        code = extend_separating(g, s)
        if not (is_identifying_code(g, code) and code & s == s and popcount(code) <= popcount(s) + 1):
            failures["extend"] += 1

    def spread(g, s):
        return not contained_in_some_closed_nbhd(g, s)

    for _ in range(TRIALS):
        h = random_graph(rnd, 1, 5)
        g = draw(rnd, 2, 7, _no_universal)
        s = grow(rnd, g.n, lambda s: is_identifying_code(g, s) and spread(g, s))
        if not is_identifying_code(corona(h, g)[0], construct_cons1(h, g, s)):
            failures["cons1"] += 1

    for _ in range(TRIALS):
        h = draw(rnd, 2, 5, _connected_nontrivial)
        g = draw(rnd, 2, 7, is_identifiable)
        t = grow(rnd, g.n, lambda t: t != 0 and separates(g, t, g.full))
        if not is_identifying_code(corona(h, g)[0], construct_cons2(h, g, t)):
            failures["cons2"] += 1

    for _ in range(TRIALS):
        h = random_graph(rnd, 1, 5)
        g = draw(rnd, 2, 7, _no_universal)
        d = grow(rnd, h.n, lambda d: is_dominating(h, d))
        t_sep = grow(rnd, g.n, lambda t: separates(g, t, g.full) and spread(g, t))
        w = grow(rnd, g.n, lambda w: is_identifying_code(g, w))
        if not is_identifying_code(corona(h, g)[0], construct_cons3(h, g, d, t_sep, w)):
            failures["cons3"] += 1

    for _ in range(TRIALS):
        h = draw(rnd, 2, 5, _connected_nontrivial)
        g = draw(rnd, 1, 7, is_identifiable)
        t = grow(rnd, h.n, lambda t: is_total_dominating(h, t))
        w = grow(rnd, g.n, lambda w: is_identifying_code(g, w))
        if not is_identifying_code(corona(h, g)[0], construct_cons4(h, g, t, w)):
            failures["cons4"] += 1

    for _ in range(TRIALS):
        while True:
            h = random_graph(rnd, 1, 3)
            g = random_graph(rnd, 1, 5)
            if corona_identifiable(h, g):
                break
        if brute(corona(h, g)[0]) < h.n * brute(g):
            failures["lower-bound"] += 1

    record(8, f"randomized properties, {TRIALS} trials each", not any(failures.values()),
           ", ".join(f"{k} failures={v}" for k, v in failures.items()))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
