"""Binomial Groebner machinery for defining ideals of monomial curves.

Everything is a pure-difference binomial (coefficients +1/-1), so S-pairs
and reductions collapse to integer lattice operations on exponent vectors.
The defining ideal of a semigroup is computed by eliminating the parameter
variable from the graph ideal of the monomial map.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmbeddingDimensionTooSmall
from .ideals import trace_and_residue
from .semigroup import NumericalSemigroup

__all__ = [
    "Binomial",
    "MonomialOrder",
    "GroebnerBasis",
    "ClosureVerdict",
    "AcmHypothesisReport",
    "ArithmeticGbReport",
    "degrevlex",
    "elimination_order",
    "buchberger",
    "normal_form",
    "defining_ideal",
    "homogenized_gb",
    "acm_and_hypothesis",
    "projective_ng_verdict",
    "arithmetic_gb",
]

Monomial = tuple[int, ...]


def _drl_key(m: Sequence[int]) -> tuple:
    # ties break by the latest variable: a larger exponent there sorts lower
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order over a fixed variable sequence.

    ``degrevlex`` compares total degree first; ``elimination-block`` makes
    every monomial touching the leading block beat all block-free ones, with
    degrevlex inside each block.
    """

    kind: str
    variables: tuple[str, ...]
    block_split: int | None = None

    def key(self, m: Monomial) -> tuple:
        if self.kind == "degrevlex":
            return _drl_key(m)
        split = self.block_split
        return (_drl_key(m[:split]), _drl_key(m[split:]))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def to_json(self) -> dict:
        payload = {"kind": self.kind, "variables": list(self.variables)}
        if self.block_split is not None:
            payload["block_split"] = self.block_split
        return payload


def degrevlex(variables: Sequence[str]) -> MonomialOrder:
    return MonomialOrder("degrevlex", tuple(variables))


def elimination_order(variables: Sequence[str], block_split: int) -> MonomialOrder:
    return MonomialOrder("elimination-block", tuple(variables), block_split)


@dataclass(frozen=True)
class Binomial:
    """A pure-difference binomial; ``plus`` is the leading monomial under
    whatever order produced it."""

    plus: Monomial
    minus: Monomial

    @property
    def homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, (a, b) in enumerate(zip(self.plus, self.minus)) if a or b)

    def to_json(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus), "homogeneous": self.homogeneous}

    def __repr__(self) -> str:
        return f"Binomial({self.plus} - {self.minus})"


def _oriented(a: Monomial, b: Monomial, order: MonomialOrder) -> Binomial | None:
    if a == b:
        return None
    return Binomial(a, b) if order.greater(a, b) else Binomial(b, a)


def _divides(small: Monomial, big: Monomial) -> bool:
    for s, b in zip(small, big):
        if s > b:
            return False
    return True


class _Reducer:
    """Rewriting system over a growing list of oriented binomials.

    Leads and tails live in numpy arrays so the divisor scan (first divisor
    in insertion order) is a single vectorized comparison per rewrite step.
    """

    __slots__ = ("nvars", "count", "leads", "tails")

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.count = 0
        self.leads = np.zeros((16, nvars), dtype=np.int64)
        self.tails = np.zeros((16, nvars), dtype=np.int64)

    def add(self, b: Binomial) -> None:
        if self.count == len(self.leads):
            self.leads = np.vstack([self.leads, np.zeros_like(self.leads)])
            self.tails = np.vstack([self.tails, np.zeros_like(self.tails)])
        self.leads[self.count] = b.plus
        self.tails[self.count] = b.minus
        self.count += 1

    def reduce(self, m: Monomial) -> Monomial:
        vec = np.asarray(m, dtype=np.int64)
        leads = self.leads[: self.count]
        tails = self.tails[: self.count]
        while True:
            fits = (leads <= vec).all(axis=1)
            i = int(fits.argmax())
            if not fits[i]:
                return tuple(int(x) for x in vec)
            vec = vec - leads[i] + tails[i]


def _reducer_for(elements: Iterable[Binomial], nvars: int) -> _Reducer:
    red = _Reducer(nvars)
    for b in elements:
        red.add(b)
    return red


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis of a pure-difference binomial ideal."""

    elements: tuple[Binomial, ...]
    order: MonomialOrder
    homogeneous_flags: tuple[bool, ...]

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(b.plus for b in self.elements)

    @property
    def nvars(self) -> int:
        return len(self.order.variables)

    def to_json(self) -> dict:
        return {"order": self.order.to_json(), "elements": [b.to_json() for b in self.elements]}


def buchberger(gens: Iterable[Binomial], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger's algorithm.

    Normal pair selection (smallest lcm degree, ties by insertion index)
    with the coprime-leading-monomial criterion; fully deterministic.
    """
    basis: list[Binomial] = []
    seen: set[tuple[Monomial, Monomial]] = set()
    nvars = len(order.variables)
    reducer = _Reducer(nvars)
    pairs: list[tuple[int, int, int]] = []

    def push(b: Binomial) -> None:
        seen.add((b.plus, b.minus))
        j = len(basis)
        for i in range(j):
            lcm_deg = sum(max(a, b_) for a, b_ in zip(basis[i].plus, b.plus))
            heapq.heappush(pairs, (lcm_deg, i, j))
        basis.append(b)
        reducer.add(b)

    for g in gens:
        b = _oriented(g.plus, g.minus, order)
        if b is not None and (b.plus, b.minus) not in seen:
            push(b)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        f, g = basis[i], basis[j]
        lcm = tuple(max(a, b) for a, b in zip(f.plus, g.plus))
        if all(a + b == c for a, b, c in zip(f.plus, g.plus, lcm)):
            continue  # coprime leads: S-pair reduces to zero
        left = reducer.reduce(tuple(c - a + m for c, a, m in zip(lcm, f.plus, f.minus)))
        right = reducer.reduce(tuple(c - b + m for c, b, m in zip(lcm, g.plus, g.minus)))
        b = _oriented(left, right, order)
        if b is not None and (b.plus, b.minus) not in seen:
            push(b)

    # minimalize: drop elements whose lead is divisible by another kept lead
    by_lead = sorted(range(len(basis)), key=lambda i: order.key(basis[i].plus))
    kept: list[Binomial] = []
    for i in by_lead:
        lead = basis[i].plus
        if not any(_divides(k.plus, lead) for k in kept):
            kept.append(basis[i])

    # interreduce tails against the kept leads
    final = _reducer_for(kept, nvars)
    reduced = [Binomial(b.plus, final.reduce(b.minus)) for b in kept]

    flags = tuple(b.homogeneous for b in reduced)
    return GroebnerBasis(tuple(reduced), order, flags)


def normal_form(item: Binomial | Monomial, gb: GroebnerBasis) -> Binomial | Monomial | None:
    """Fully reduced remainder; ``None`` means the binomial is in the ideal.

    Monomials reduce to monomials (pure-difference rewriting never cancels
    a lone monomial).
    """
    red = _reducer_for(gb.elements, gb.nvars)
    if isinstance(item, Binomial):
        left = red.reduce(item.plus)
        right = red.reduce(item.minus)
        return _oriented(left, right, gb.order)
    return red.reduce(tuple(item))


def is_groebner(gb: GroebnerBasis) -> bool:
    """Buchberger criterion: every S-pair reduces to zero."""
    red = _reducer_for(gb.elements, gb.nvars)
    n = len(gb.elements)
    for i in range(n):
        for j in range(i + 1, n):
            f, g = gb.elements[i], gb.elements[j]
            lcm = tuple(max(a, b) for a, b in zip(f.plus, g.plus))
            left = red.reduce(tuple(c - a + m for c, a, m in zip(lcm, f.plus, f.minus)))
            right = red.reduce(tuple(c - b + m for c, b, m in zip(lcm, g.plus, g.minus)))
            if left != right:
                return False
    return True


def _gamma_degree(m: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(m, weights))


def _assert_balanced(gb: GroebnerBasis, weights: Sequence[int]) -> None:
    for b in gb.elements:
        if _gamma_degree(b.plus, weights) != _gamma_degree(b.minus, weights):
            raise AssertionError(f"{b} is not balanced for weights {list(weights)}")


def _assert_coprime_parts(gb: GroebnerBasis) -> None:
    # reduced bases of prime toric ideals never share a variable across sides
    for b in gb.elements:
        if any(p > 0 and m > 0 for p, m in zip(b.plus, b.minus)):
            raise AssertionError(f"{b} has a common monomial factor")


def _x_variables(e: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, e + 1))


def reduced_gb(s: NumericalSemigroup) -> GroebnerBasis:
    """Reduced degrevlex Groebner basis of the defining ideal.

    Computed by eliminating t from the graph ideal of x_i -> t^(n_i); the
    t-free part of that elimination basis is already the reduced basis for
    degrevlex on the x variables.
    """
    e = s.embedding_dimension
    if e < 2:
        raise EmbeddingDimensionTooSmall(f"need at least 2 generators, got {s.generators}")
    nvars = e + 1
    elim = elimination_order(("t",) + _x_variables(e), block_split=1)
    gens = []
    for i, n in enumerate(s.generators):
        t_power = (n,) + (0,) * e
        x_var = tuple(1 if k == i + 1 else 0 for k in range(nvars))
        gens.append(Binomial(t_power, x_var))
    full = buchberger(gens, elim)

    order = degrevlex(_x_variables(e))
    elements = []
    for b in full.elements:
        if b.plus[0] == 0:
            if b.minus[0] != 0:
                raise AssertionError(f"t-free lead with t in the tail: {b}")
            elements.append(Binomial(b.plus[1:], b.minus[1:]))
    elements.sort(key=lambda b: order.key(b.plus))
    gb = GroebnerBasis(tuple(elements), order, tuple(b.homogeneous for b in elements))
    _assert_balanced(gb, s.generators)
    _assert_coprime_parts(gb)
    return gb


def defining_ideal(s: NumericalSemigroup) -> list[Binomial]:
    """A minimal binomial generating set of the defining ideal.

    Starts from the reduced degrevlex basis and drops any element lying in
    the ideal of the others, scanning from the largest lead down.
    """
    gb = reduced_gb(s)
    order = gb.order
    kept = list(gb.elements)
    for i in reversed(range(len(kept))):
        if len(kept) == 1:
            break
        others = kept[:i] + kept[i + 1 :]
        if normal_form(kept[i], buchberger(others, order)) is None:
            kept = others
    return kept


def homogenized_gb(s: NumericalSemigroup) -> GroebnerBasis:
    """Homogenize the affine basis with a new variable placed last.

    Under degrevlex with the homogenizing variable last, homogenizing a
    reduced basis keeps it a reduced Groebner basis; this is re-asserted by
    reducing every S-pair.
    """
    affine = reduced_gb(s)
    e = s.embedding_dimension
    order = degrevlex(_x_variables(e) + ("x0",))
    elements = []
    for b in affine.elements:
        dp, dm = sum(b.plus), sum(b.minus)
        top = max(dp, dm)
        plus = b.plus + (top - dp,)
        minus = b.minus + (top - dm,)
        if not order.greater(plus, minus):
            raise AssertionError(f"homogenization flipped the lead of {b}")
        elements.append(Binomial(plus, minus))
    gb = GroebnerBasis(tuple(elements), order, tuple(True for _ in elements))
    if not is_groebner(gb):
        raise AssertionError(f"homogenized basis of {s} fails the Buchberger criterion")
    _assert_balanced(gb, s.generators + (0,))
    return gb


@dataclass(frozen=True)
class AcmHypothesisReport:
    acm: bool
    hypothesis: bool
    gb: GroebnerBasis


@dataclass(frozen=True)
class ClosureVerdict:
    """Transfer of the nearly-Gorenstein property to the projective closure.

    ``projective_ng`` is present exactly when the transfer criterion applies
    (the curve passes the leading-monomial Cohen-Macaulay test and the last
    variable meets every non-homogeneous basis element).
    """

    acm: bool
    hypothesis: bool
    applicable: bool
    affine_ng: bool
    projective_ng: bool | None

    def to_json(self) -> dict:
        payload = {
            "acm": self.acm,
            "hypothesis": self.hypothesis,
            "applicable": self.applicable,
            "affine_ng": self.affine_ng,
        }
        if self.projective_ng is not None:
            payload["projective_ng"] = self.projective_ng
        return payload


def acm_and_hypothesis(s: NumericalSemigroup) -> AcmHypothesisReport:
    """Leading-monomial Cohen-Macaulay test plus the last-variable support test.

    acm: no leading monomial of the degrevlex basis is divisible by the last
    variable.  hypothesis: every non-homogeneous element has the last
    variable somewhere in its support.
    """
    e = s.embedding_dimension
    if e < 3:
        raise EmbeddingDimensionTooSmall(f"the projective criterion needs >= 3 generators, got {s.generators}")
    gb = reduced_gb(s)
    last = e - 1
    acm = all(b.plus[last] == 0 for b in gb.elements)
    hypothesis = all(b.homogeneous or last in b.support() for b in gb.elements)
    return AcmHypothesisReport(acm=acm, hypothesis=hypothesis, gb=gb)


def projective_ng_verdict(s: NumericalSemigroup) -> ClosureVerdict:
    """Combine the transfer criterion with the affine residue computation."""
    report = acm_and_hypothesis(s)
    affine_ng = trace_and_residue(s).nearly_gorenstein
    applicable = report.acm and report.hypothesis
    return ClosureVerdict(
        acm=report.acm,
        hypothesis=report.hypothesis,
        applicable=applicable,
        affine_ng=affine_ng,
        projective_ng=affine_ng if applicable else None,
    )


@dataclass(frozen=True)
class ArithmeticGbReport:
    gb: GroebnerBasis
    printed_set_used: bool
    discrepancies: tuple[str, ...]


def arithmetic_gb(n1: int, d: int, e: int) -> ArithmeticGbReport:
    """Published explicit basis for an arithmetic-sequence curve, validated.

    The quadric family x_i*x_j - x_{i-1}*x_{j+1} is checked for membership;
    the second family as printed indexes a variable past the end of the
    variable list, which is recorded as a discrepancy and triggers fallback
    to the computed basis rather than guessing the intended index.
    """
    from .constructions import arithmetic_semigroup

    s = arithmetic_semigroup(n1, d, e)
    reference = reduced_gb(s)
    discrepancies: list[str] = []

    def var(i: int) -> Monomial:
        return tuple(1 if k == i - 1 else 0 for k in range(e))

    quadrics = []
    for i in range(2, e):
        for j in range(i, e):
            plus = tuple(a + b for a, b in zip(var(i), var(j)))
            minus = tuple(a + b for a, b in zip(var(i - 1), var(j + 1)))
            quadrics.append(Binomial(plus, minus))
    for b in quadrics:
        if normal_form(b, reference) is not None:
            discrepancies.append(f"quadric {b} is not in the defining ideal")

    q, remainder = divmod(n1 - 1, e - 1)
    r_prime = remainder + 1  # n1 = q*(e-1) + r_prime with r_prime in [1, e-1]
    second_family_size = e - r_prime
    if second_family_size >= 1:
        discrepancies.append(
            f"second family as printed uses x_(e+i) with e={e}, i up to {second_family_size}, "
            "which is outside the variable list"
        )

    if discrepancies:
        return ArithmeticGbReport(gb=reference, printed_set_used=False, discrepancies=tuple(discrepancies))

    candidate = buchberger(quadrics, reference.order)
    if candidate.elements != reference.elements:
        return ArithmeticGbReport(
            gb=reference,
            printed_set_used=False,
            discrepancies=("printed set does not generate the defining ideal",),
        )
    return ArithmeticGbReport(gb=candidate, printed_set_used=True, discrepancies=())
