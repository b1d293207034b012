"""Exact arithmetic of numerical semigroups.

A numerical semigroup is a subset of the nonnegative integers closed under
addition, containing 0, with finite complement.  Everything here is computed
exactly over a boolean membership window of size multiplicity * max_generator,
which always covers the Frobenius number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyInput, GcdNotOne, TrivialSemigroup

__all__ = [
    "NumericalSemigroup",
    "GapProfile",
    "PseudoFrobeniusSet",
    "new_semigroup",
    "gap_profile",
    "pseudo_frobenius",
]


def _closure_table(generators: Sequence[int], size: int) -> np.ndarray:
    """Boolean table over [0, size]: reachable sums of the generators.

    Forward DP, one generator at a time; the inner doubling closes the table
    under repeated addition of that generator before the next one is folded in.
    """
    table = np.zeros(size + 1, dtype=bool)
    table[0] = True
    for g in generators:
        step = g
        while step <= size:
            table[step:] |= table[:-step]
            step *= 2
    return table


def _is_redundant(g: int, others: Sequence[int]) -> bool:
    """True iff g is a sum of the other generators (so not needed)."""
    small = [h for h in others if h <= g]
    if not small:
        return False
    return bool(_closure_table(small, g)[g])


class NumericalSemigroup:
    """A numerical semigroup, stored as its minimal generators plus caches.

    Instances are immutable after construction and safe to share between
    threads.  Construction reduces a non-minimal input generating set and
    records that this happened in ``was_reduced``.
    """

    __slots__ = (
        "generators",
        "multiplicity",
        "frobenius",
        "apery",
        "was_reduced",
        "window_size",
        "_window",
    )

    def __init__(self, raw_generators: Iterable[int]):
        raw = list(raw_generators)
        if not raw:
            raise EmptyInput("need at least one generator")
        if any(not isinstance(g, int) or g <= 0 for g in raw):
            raise ValueError(f"generators must be positive integers, got {raw}")
        if math.gcd(*raw) != 1:
            raise GcdNotOne(f"gcd of {sorted(set(raw))} is {math.gcd(*raw)}, not 1")

        gens = sorted(set(raw))
        minimal = [g for i, g in enumerate(gens) if not _is_redundant(g, gens[:i] + gens[i + 1 :])]
        self.generators: tuple[int, ...] = tuple(minimal)
        self.was_reduced: bool = list(minimal) != sorted(raw)
        self.multiplicity: int = minimal[0]

        # W = n1 * ne bounds F + ne, so every lookup below stays in range.
        self.window_size: int = minimal[0] * minimal[-1]
        self._window: np.ndarray = _closure_table(minimal, self.window_size)
        self._window.setflags(write=False)

        members = np.nonzero(self._window)[0]
        residues, first = np.unique(members % self.multiplicity, return_index=True)
        if len(residues) != self.multiplicity:
            raise AssertionError("membership window too small for the Apery set")
        apery = [0] * self.multiplicity
        for r, idx in zip(residues, first):
            apery[int(r)] = int(members[idx])
        self.apery: tuple[int, ...] = tuple(apery)
        self.frobenius: int = max(apery) - self.multiplicity

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def is_naturals(self) -> bool:
        return self.generators == (1,)

    def contains(self, x: int) -> bool:
        """Membership test, valid for any integer."""
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool(self._window[x])

    def member_mask(self, size: int) -> np.ndarray:
        """Boolean membership indicator over [0, size)."""
        mask = np.ones(size, dtype=bool)
        upper = min(size, self.frobenius + 1)
        if upper > 0:
            mask[:upper] = self._window[:upper]
        return mask

    def members_below(self, bound: int) -> list[int]:
        """All semigroup elements in [0, bound)."""
        return [int(x) for x in np.nonzero(self.member_mask(bound))[0]]

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"


@dataclass(frozen=True)
class GapProfile:
    """Gap data of a semigroup: the gaps, their count, and the count of
    semigroup elements below the Frobenius number."""

    gaps: tuple[int, ...]
    genus: int
    frobenius: int
    non_gap_count: int


@dataclass(frozen=True)
class PseudoFrobeniusSet:
    """The pseudo-Frobenius numbers (gaps x with x + s inside for all nonzero
    members s) and their count, the type."""

    elements: tuple[int, ...]
    type: int


def new_semigroup(raw_generators: Iterable[int]) -> NumericalSemigroup:
    """Build the semigroup generated by ``raw_generators``.

    Non-minimal inputs are reduced to the unique minimal generating set,
    with ``was_reduced`` flagging that this happened.
    """
    return NumericalSemigroup(raw_generators)


def gap_profile(s: NumericalSemigroup) -> GapProfile:
    f = s.frobenius
    if f < 0:
        return GapProfile(gaps=(), genus=0, frobenius=f, non_gap_count=0)
    window = s.member_mask(f + 1)
    gaps = tuple(int(x) for x in np.nonzero(~window)[0])
    non_gaps = int(np.count_nonzero(window[:f]))
    return GapProfile(gaps=gaps, genus=len(gaps), frobenius=f, non_gap_count=non_gaps)


def pseudo_frobenius(s: NumericalSemigroup) -> PseudoFrobeniusSet:
    """Exact pseudo-Frobenius set.

    Checking x + g for the generators g suffices: any nonzero member is a sum
    of generators, and the ideal property propagates along that sum.
    """
    if s.is_naturals:
        raise TrivialSemigroup("the naturals have no gaps, hence no pseudo-Frobenius numbers")
    f = s.frobenius
    table = s._window
    mask = ~table[1 : f + 1]
    for g in s.generators:
        mask = mask & table[1 + g : f + 1 + g]
    elements = tuple(int(x) + 1 for x in np.nonzero(mask)[0])
    return PseudoFrobeniusSet(elements=elements, type=len(elements))
