"""Acceptance suite: one test per criterion, each printing a pass/fail
line and enforcing its stated runtime budget.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import random
import time
from contextlib import contextmanager

from polyorbit import (
    OrbitKind,
    Polynomial,
    PrimeSet,
    certify_local,
    classify,
    decide_nilpotency,
    generate_list_members,
    iterate_linear_closed,
    iterate_value,
    lemma1_witnesses,
    linear,
    nilpotency_index,
    orbit_mod_p,
    parse_poly,
    primes_up_to,
    trap_first_hits,
    trap_fixed_points,
    SearchSpace,
    verify_theorem,
)


@contextmanager
def criterion(name: str, budget_s: float):
    start = time.perf_counter()
    failed = None
    try:
        yield
    except BaseException as exc:
        failed = exc
        raise
    finally:
        elapsed = time.perf_counter() - start
        status = "FAIL" if failed else ("PASS" if elapsed < budget_s else "FAIL")
        print(f"[acceptance] {name}: {status} ({elapsed:.2f}s, budget {budget_s:g}s)")
    assert elapsed < budget_s, f"{name} exceeded its {budget_s}s budget ({elapsed:.2f}s)"


def test_c01_paper_example_fixtures():
    with criterion("C1 worked-example fixtures", 1.0):
        # (a) (x-r)q(x) is nilpotent of index 1 at r
        assert nilpotency_index(parse_poly("x^3-3x^2+x-3"), 3) == 1
        # (b) x-1 has index r at every positive r
        for r in range(1, 11):
            assert nilpotency_index(linear(1, -1), r) == r
        assert nilpotency_index(linear(-2, -4), -1) == 2
        # (c) index 3 at r=1
        assert nilpotency_index(parse_poly("-2x^2+7x-3"), 1) == 3
        # (d) index 4 at r=2
        assert nilpotency_index(parse_poly("-x^3+9x^2-25x+25"), 2) == 4
        # (e) m_p = p-1 for the unit shift at 1, all p <= 100
        for p in primes_up_to(100):
            cert = orbit_mod_p(linear(1, 1), 1, p)
            assert cert.hit and cert.m_p == p - 1
        assert decide_nilpotency(linear(1, 1), 1).kind is OrbitKind.ESCAPED
        # (g) the slope-4 map is refuted at 5 when started at 1
        report = certify_local(linear(4, -2), 1, None, 100)
        assert report.refuted_at == 5
        # (h) at 0 it hits every prime: m_2 = 1, m_3 = 3, all p <= 500 Hit
        report = certify_local(linear(4, -2), 0, None, 500)
        assert report.consistent
        by_p = {c.p: c.m_p for c in report.certificates}
        assert by_p[2] == 1 and by_p[3] == 3


def test_c02_enumeration_at_one():
    with criterion("C2 full box at r=1", 60.0):
        space = SearchSpace(degree=3, coeff_bound=5, r=1, prime_bound=200)
        assert space.cardinality == 11**4 - 1
        report = verify_theorem(space)
        assert report.candidates_checked == space.cardinality
        assert report.discrepancies == []
        # every empirically-unrefuted candidate matched a catalog item
        assert report.review_flags == []
        assert report.totals["strictly-local"] == 1  # x+1 alone


def test_c03_enumeration_at_zero():
    with criterion("C3 full box at r=0", 60.0):
        space = SearchSpace(degree=3, coeff_bound=5, r=0, prime_bound=200)
        report = verify_theorem(space)
        assert report.discrepancies == []
        assert report.review_flags == []
        # -x+b counted nilpotent of index 2, not strictly local
        for b in [-5, -3, -1, 1, 2, 4]:
            v = classify(linear(-1, b), 0)
            assert v.is_nilpotent and v.index == 2 and v.note


def test_c04_positive_suites():
    with criterion("C4 generated members certify to 1000", 120.0):
        checked = 0
        for primes in ([2], [3], [2, 3], [2, 5]):
            A = PrimeSet(primes)
            for item in ("Thm3.1", "Thm3.2", "Thm3.3", "Thm3.4", "Thm3.5"):
                for u in generate_list_members(item, A=A, exponent_sum=3):
                    assert certify_local(u, 1, A, 1000).consistent, f"{u}, A={A}"
                    checked += 1
        for r in range(2, 13):
            for item in ("Thm4.1", "Thm4.2", "Thm4.3", "Thm4.4"):
                for u in generate_list_members(item, r=r, exponent_sum=3):
                    assert certify_local(u, r, None, 1000).consistent, f"{u}, r={r}"
                    checked += 1
        assert checked > 300


def test_c05_strictly_local_singleton_at_one():
    with criterion("C5 singleton strictly-local member at r=1", 30.0):
        found = []
        for a in range(-50, 51):
            if a == 0:
                continue
            for b in range(-50, 51):
                if classify(linear(a, b), 1).is_strictly_local:
                    found.append((a, b))
        assert found == [(1, 1)]


def test_c06_conjugation_identity():
    with criterion("C6 negate-conjugate orbit identity", 60.0):
        rng = random.Random(601)
        for _ in range(10_000):
            degree = rng.randint(1, 4)
            coeffs = [rng.randint(-9, 9) for _ in range(degree)]
            coeffs.append(rng.choice([c for c in range(-9, 10) if c]))
            u = Polynomial(coeffs)
            v = u.negate_conjugate()
            r = rng.randint(-9, 9)
            n = rng.randint(1, 5)
            assert iterate_value(v, -r, n) == -iterate_value(u, r, n)


def test_c07_reduction_identity():
    with criterion("C7 base-point reduction identity", 60.0):
        rng = random.Random(701)
        for _ in range(10_000):
            r = rng.randint(1, 20)
            degree = rng.randint(1, 3)
            coeffs = [r * rng.randint(-5, 5)]
            coeffs.extend(rng.randint(-9, 9) for _ in range(degree))
            u = Polynomial(coeffs)
            v = u.reduce_at(r)
            n = rng.randint(1, 5)
            assert r * iterate_value(v, 1, n) == iterate_value(u, r, n)


def test_c08_linear_iteration_formula():
    with criterion("C8 closed form vs step iteration", 60.0):
        rng = random.Random(801)
        for _ in range(10_000):
            a = rng.choice([c for c in range(-30, 31) if c])
            b = rng.randint(-30, 30)
            r = rng.randint(-30, 30)
            n = rng.randint(1, 50)
            assert iterate_linear_closed(a, b, r, n) == iterate_value(
                linear(a, b), r, n
            )


def test_c09_additive_trap():
    with criterion("C9 trap collapse and unique fixed point", 10.0):
        for p in primes_up_to(31):
            hits = trap_first_hits(p)
            assert len(hits) == p * p
            assert all(1 <= step <= p for step in hits.values())
            fixed = trap_fixed_points(p)
            assert [(pt.x, pt.y) for pt in fixed] == [(0, 0)]


def test_c10_subgroup_witnesses():
    with criterion("C10 witness lists nonempty", 10.0):
        assert lemma1_witnesses(-2, 1, 2, 200)
        assert lemma1_witnesses(2, -1, 1, 200)
