"""Desk-scale enumeration harness: cross-check the exact classifiers
against orbit decisions and residue certificates over finite coefficient
boxes, explore nilpotency/local-nilpotency windows for a fixed polynomial,
and generate catalog members for positive-direction testing.

Candidates are visited in lexicographic coefficient-vector order and
reports are merged in that order, so identical search spaces produce
byte-identical reports (wall time aside).
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .classify import NILPOTENT, Verdict, classify
from .modular import PrimeSet, _as_prime_set, certify_local, factorize
from .orbits import BudgetExceededError, OrbitKind, decide_nilpotency
from .polynomials import Polynomial, linear

CANDIDATE_BUDGET_DEFAULT = 10**7


@dataclass(frozen=True)
class SearchSpace:
    """All nonzero polynomials of degree <= degree with coefficients in
    [-coeff_bound, coeff_bound], classified at (r, A) and certified up to
    prime_bound."""

    degree: int
    coeff_bound: int
    r: int
    A: PrimeSet = field(default_factory=PrimeSet)
    prime_bound: int = 300

    def __post_init__(self):
        if self.degree < 1 or self.coeff_bound < 0:
            raise ValueError("degree must be >= 1 and coeff_bound >= 0")
        object.__setattr__(self, "A", _as_prime_set(self.A))

    @property
    def cardinality(self) -> int:
        """Distinct nonzero candidates (each polynomial counted once)."""
        return (2 * self.coeff_bound + 1) ** (self.degree + 1) - 1

    def candidates(self) -> Iterator[Polynomial]:
        rng = range(-self.coeff_bound, self.coeff_bound + 1)
        for vec in product(rng, repeat=self.degree + 1):
            if any(vec):
                yield Polynomial(vec)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coeff_bound": self.coeff_bound,
            "r": self.r,
            "A": list(self.A),
            "prime_bound": self.prime_bound,
        }


@dataclass(frozen=True)
class Discrepancy:
    poly: str
    verdict: str
    finding: str

    def to_dict(self) -> dict:
        return {"poly": self.poly, "verdict": self.verdict, "finding": self.finding}


@dataclass
class SearchReport:
    """Empty discrepancies means the run confirms the targeted catalog at
    this scale. review_flags are classified-non-member candidates that no
    prime up to the bound refuted: not failures (finite prime ranges cannot
    confirm membership), just entries for manual review."""

    space: SearchSpace
    totals: dict[str, int]
    per_item_citations: dict[str, int]
    discrepancies: list[Discrepancy]
    review_flags: list[dict]
    candidates_checked: int
    wall_time: float

    def to_dict(self) -> dict:
        return {
            "space": self.space.to_dict(),
            "cardinality": self.space.cardinality,
            "candidates_checked": self.candidates_checked,
            "totals": dict(sorted(self.totals.items())),
            "per_item_citations": dict(sorted(self.per_item_citations.items())),
            "discrepancies": [d.to_dict() for d in self.discrepancies],
            "review_flags": self.review_flags,
            "wall_time_s": self.wall_time,
        }


def _verdict_label(v: Verdict) -> str:
    if not v.decidable:
        return "undecidable"
    if not v.member:
        return "non-member"
    return v.subclass or "member"


def _verdict_summary(v: Verdict) -> str:
    if not v.decidable:
        return "undecidable"
    head = "InL" if v.member else "NotInL"
    if v.subclass:
        head += f" {v.subclass}"
    if v.index is not None:
        head += f"({v.index})"
    return f"{head} [{v.citation}]"


def verify_theorem(
    space: SearchSpace, *, budget: int = CANDIDATE_BUDGET_DEFAULT
) -> SearchReport:
    """Classify every candidate and compare against the empirical evidence
    (exact orbit decision plus residue certificates up to the bound).

    Hard discrepancies: a classified member that some prime refutes; a
    nilpotent orbit classified as non-member; any nilpotency subclass or
    index mismatch; an undecidable verdict inside an exact-theorem space.
    """
    if space.cardinality > budget:
        raise BudgetExceededError(
            f"{space.cardinality} candidates exceed the budget of {budget}"
        )
    start = time.perf_counter()
    totals: Counter = Counter()
    citations: Counter = Counter()
    discrepancies: list[Discrepancy] = []
    review_flags: list[dict] = []
    checked = 0
    for u in space.candidates():
        checked += 1
        v = classify(u, space.r, space.A)
        totals[_verdict_label(v)] += 1
        if v.decidable:
            citations[v.citation] += 1
        else:
            discrepancies.append(
                Discrepancy(str(u), _verdict_summary(v),
                            "classifier undecidable inside an exact-theorem space")
            )
            continue
        outcome = decide_nilpotency(u, space.r)
        if outcome.kind is OrbitKind.REACHED_ZERO:
            if not v.member:
                discrepancies.append(
                    Discrepancy(str(u), _verdict_summary(v),
                                f"orbit reaches 0 at step {outcome.index} "
                                "but classified non-member")
                )
            elif v.subclass != NILPOTENT or v.index != outcome.index:
                discrepancies.append(
                    Discrepancy(str(u), _verdict_summary(v),
                                f"orbit nilpotency index is {outcome.index}")
                )
        elif outcome.kind is OrbitKind.EXHAUSTED:
            review_flags.append(
                {"poly": str(u), "reason": "orbit undecided at resource caps"}
            )
            continue
        elif v.member and v.subclass == NILPOTENT:
            discrepancies.append(
                Discrepancy(str(u), _verdict_summary(v),
                            f"orbit never reaches 0 ({outcome.kind.value})")
            )
        report = certify_local(u, space.r, space.A, space.prime_bound)
        if report.refuted_at is not None:
            if v.member:
                discrepancies.append(
                    Discrepancy(str(u), _verdict_summary(v),
                                f"residue orbit refutes membership at "
                                f"p={report.refuted_at}")
                )
        elif not v.member and outcome.kind is not OrbitKind.REACHED_ZERO:
            review_flags.append(
                {
                    "poly": str(u),
                    "reason": f"classified non-member but consistent up to "
                              f"{space.prime_bound}; orbit {outcome.kind.value}",
                }
            )
    return SearchReport(
        space=space,
        totals=dict(totals),
        per_item_citations=dict(citations),
        discrepancies=discrepancies,
        review_flags=review_flags,
        candidates_checked=checked,
        wall_time=time.perf_counter() - start,
    )


def explore_N_of_u(u: Polynomial, r_bound: int, **caps) -> list[tuple[int, int | None]]:
    """Start points r in [-r_bound, r_bound] whose orbit reaches 0, with
    the exact index; an index of None marks a start point the caps left
    undecided (possible only under tiny budgets)."""
    if u.is_zero():
        raise ValueError("the zero polynomial has no orbit analysis")
    if r_bound < 0:
        raise ValueError("r_bound must be >= 0")
    found = []
    for r in range(-r_bound, r_bound + 1):
        outcome = decide_nilpotency(u, r, **caps)
        if outcome.kind is OrbitKind.REACHED_ZERO:
            found.append((r, outcome.index))
        elif outcome.kind is OrbitKind.EXHAUSTED:
            found.append((r, None))
    return found


@dataclass(frozen=True)
class LocalStatusEntry:
    """Per start point: nilpotent (exact), refuted (exact non-member),
    consistent (candidate member; exact when the classifier is decidable),
    or undecided (caps fired)."""

    r: int
    status: str
    index: int | None = None
    refuted_at: int | None = None
    bound: int | None = None
    exact_member: bool | None = None
    citation: str = ""

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "status": self.status,
            "index": self.index,
            "refuted_at": self.refuted_at,
            "bound": self.bound,
            "exact_member": self.exact_member,
            "citation": self.citation,
        }


def explore_LN_of_u(
    u: Polynomial, r_bound: int, prime_bound: int, **caps
) -> list[LocalStatusEntry]:
    """Local-nilpotency window: every r in [-r_bound, r_bound] with its
    empirical status, consulting the exact classifier first where it is
    decidable."""
    if u.is_zero():
        raise ValueError("the zero polynomial has no orbit analysis")
    if r_bound < 0:
        raise ValueError("r_bound must be >= 0")
    entries = []
    for r in range(-r_bound, r_bound + 1):
        verdict = classify(u, r)
        citation = verdict.citation if verdict.decidable else ""
        outcome = decide_nilpotency(u, r, **caps)
        if outcome.kind is OrbitKind.REACHED_ZERO:
            entries.append(
                LocalStatusEntry(r, "nilpotent", index=outcome.index,
                                 exact_member=True, citation=citation)
            )
            continue
        if outcome.kind is OrbitKind.EXHAUSTED:
            entries.append(LocalStatusEntry(r, "undecided"))
            continue
        report = certify_local(u, r, None, prime_bound)
        if report.refuted_at is not None:
            entries.append(
                LocalStatusEntry(r, "refuted", refuted_at=report.refuted_at,
                                 exact_member=False, citation=citation)
            )
        else:
            entries.append(
                LocalStatusEntry(
                    r, "consistent", bound=prime_bound,
                    exact_member=verdict.member if verdict.decidable else None,
                    citation=citation,
                )
            )
    return entries


_DEFAULT_MULTIPLIERS = (Polynomial(), Polynomial((1,)), Polynomial((0, 1)))


def _supported_shifts(primes: list[int], cap: int, minimum: int = 0,
                      require=None, per_cap: int | None = None) -> list[int]:
    """Products q1^s1*...*qk^sk with minimum <= sum(s) <= cap (and each
    s_i <= per_cap when given), ascending."""
    step = cap if per_cap is None else min(cap, per_cap)
    out = []
    for vec in product(range(step + 1), repeat=len(primes)):
        s = sum(vec)
        if s < minimum or s > cap:
            continue
        if require is not None and not require(vec):
            continue
        value = 1
        for q, e in zip(primes, vec):
            value *= q**e
        out.append(value)
    return sorted(set(out))


def generate_list_members(
    theorem_id: str,
    *,
    A: "PrimeSet | None" = None,
    r: int | None = None,
    exponent_sum: int = 3,
    exponent_cap: int | None = None,
    multipliers: tuple[Polynomial, ...] = _DEFAULT_MULTIPLIERS,
    coeff_bound: int = 5,
) -> list[Polynomial]:
    """Enumerate catalog members within bounds for positive testing.

    theorem_id is a catalog item ("Thm4.3") or a family ("Thm4" expands to
    every item). Thm3.* needs A; Thm4.* needs r >= 2 and Cor4.* needs
    r <= -2. exponent_sum caps the total of the prime-power exponents
    (exponent_cap additionally caps each one), multipliers bounds the free
    p(x) choices, coeff_bound bounds free integer parameters.
    """
    family, _, item = theorem_id.partition(".")
    if not item:
        items = {"Thm1": 4, "Thm2": 5, "Thm3": 5, "Thm4": 4, "Cor4": 4}.get(family)
        if items is None:
            raise ValueError(f"unknown catalog family {theorem_id!r}")
        members: list[Polynomial] = []
        for i in range(1, items + 1):
            for u in generate_list_members(
                f"{family}.{i}", A=A, r=r, exponent_sum=exponent_sum,
                exponent_cap=exponent_cap, multipliers=multipliers,
                coeff_bound=coeff_bound,
            ):
                if u not in members:
                    members.append(u)
        return members

    nonzero = [k for k in range(-coeff_bound, coeff_bound + 1) if k]

    if family == "Thm1":
        x_minus_1 = linear(1, -1)
        if item == "1":
            return [x_minus_1 * p for p in multipliers if not p.is_zero()]
        if item == "2":
            return [linear(-2, 4) + p * (x_minus_1 * linear(1, -2))
                    for p in multipliers]
        if item == "3":
            prod_123 = x_minus_1 * linear(1, -2) * linear(1, -3)
            return [Polynomial((-3, 7, -2)) + p * prod_123 for p in multipliers]
        if item == "4":
            return [linear(1, 1)]

    if family == "Thm2":
        if item == "1":
            return [linear(a, 0) for a in nonzero]
        if item == "2":
            return [linear(s, b) for s in (1, -1) for b in nonzero]
        if item == "3":
            return [
                linear(a, b)
                for a in nonzero
                for b in nonzero
                if abs(a) >= 2
                and set(factorize(a)) <= set(factorize(b))
            ]
        if item == "4":
            x = Polynomial((0, 1))
            return [x * p for p in multipliers if not p.is_zero()]
        if item == "5":
            return [
                linear(1, -a) * p
                for a in nonzero
                for p in multipliers
                if p.constant == -1
            ]

    if family == "Thm3":
        if A is None and item in ("1", "3", "4"):
            raise ValueError(f"{theorem_id} needs the excluded prime set A")
        qs = list(_as_prime_set(A))
        if item == "1":
            return [linear(1, s * b)
                    for b in _supported_shifts(qs, exponent_sum, per_cap=exponent_cap)
                    for s in (1, -1)]
        if item == "2":
            return [linear(a, -a) for a in nonzero]
        if item == "3":
            return [linear(s * a, 1)
                    for a in _supported_shifts(qs, exponent_sum, minimum=1,
                                               per_cap=exponent_cap)
                    for s in (1, -1)]
        if item == "4":
            return [linear(-2, -1)] if 2 in qs else []
        if item == "5":
            return [linear(-2, 4)]

    if family in ("Thm4", "Cor4"):
        if r is None:
            raise ValueError(f"{theorem_id} needs the start point r")
        if family == "Cor4":
            if r > -2:
                raise ValueError("Cor4.* covers r <= -2")
            return [
                u.negate_conjugate()
                for u in generate_list_members(
                    f"Thm4.{item}", r=-r, exponent_sum=exponent_sum,
                    exponent_cap=exponent_cap, multipliers=multipliers,
                    coeff_bound=coeff_bound,
                )
            ]
        if r < 2:
            raise ValueError("Thm4.* covers r >= 2")
        r_fac = factorize(r)
        qs = sorted(r_fac)
        exps = [r_fac[q] for q in qs]
        if item == "1":
            return [linear(1, b)
                    for b in _supported_shifts(qs, exponent_sum,
                                               per_cap=exponent_cap)]
        if item == "2":
            shifts = _supported_shifts(
                qs, exponent_sum, minimum=1,
                require=lambda vec: any(s > a for s, a in zip(vec, exps)),
                per_cap=exponent_cap,
            )
            return [linear(1, -b) for b in shifts]
        if item == "3":
            return [linear(s * a, r)
                    for a in _supported_shifts(qs, exponent_sum, minimum=1,
                                               per_cap=exponent_cap)
                    for s in (1, -1)]
        if item == "4":
            return [linear(-2, -r)] if r % 2 == 0 else []

    raise ValueError(f"unknown catalog item {theorem_id!r}")
