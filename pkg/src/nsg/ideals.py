"""Relative ideals over a numerical semigroup and the canonical trace.

A relative ideal is a bounded-below subset of the integers stable under
adding semigroup elements.  It is stored as a finite head plus a conductor:
everything from the conductor up belongs to the ideal.  With that shape,
duals, Minkowski sums, and complements are linear scans over boolean
indicator arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import AmbientMismatch, TrivialSemigroup
from .semigroup import NumericalSemigroup, gap_profile

__all__ = [
    "RelativeIdeal",
    "TraceReport",
    "GapBoundCheck",
    "canonical_ideal",
    "dual_ideal",
    "ideal_sum",
    "minimal_generators",
    "trace_and_residue",
    "gap_bound_check",
]

_DIRECT_CONV_LIMIT = 1 << 16


def _bool_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Indicator of the Minkowski sum of two indicator arrays."""
    n = len(a) + len(b) - 1
    if len(a) == 0 or len(b) == 0:
        return np.zeros(max(n, 0), dtype=bool)
    if len(a) * len(b) <= _DIRECT_CONV_LIMIT:
        return np.convolve(a.astype(np.int64), b.astype(np.int64)) > 0
    size = 1 << (n - 1).bit_length()
    fa = np.fft.rfft(a.astype(np.float64), size)
    fb = np.fft.rfft(b.astype(np.float64), size)
    conv = np.fft.irfft(fa * fb, size)[:n]
    # counts are integers well below 2**52, so 0.5 separates 0 from >= 1
    return conv > 0.5


@dataclass(frozen=True)
class RelativeIdeal:
    """Canonical head/conductor form of a relative ideal.

    ``head`` holds exactly the elements below ``conductor``; the interval
    [conductor, infinity) is contained wholesale, and conductor - 1 is not
    in the ideal (when the head is empty the conductor is the minimum).
    """

    ambient: NumericalSemigroup
    head: tuple[int, ...]
    conductor: int

    @property
    def min_element(self) -> int:
        return self.head[0] if self.head else self.conductor

    def contains(self, x: int) -> bool:
        return x >= self.conductor or x in self.head

    def indicator(self, lo: int, hi: int) -> np.ndarray:
        """Boolean membership array over [lo, hi)."""
        n = hi - lo
        if n <= 0:
            return np.zeros(0, dtype=bool)
        ind = np.zeros(n, dtype=bool)
        if self.conductor < hi:
            ind[max(self.conductor, lo) - lo :] = True
        if self.head:
            arr = np.asarray(self.head)
            sel = arr[(arr >= lo) & (arr < hi)]
            ind[sel - lo] = True
        return ind

    def shift(self, a: int) -> "RelativeIdeal":
        return RelativeIdeal(self.ambient, tuple(h + a for h in self.head), self.conductor + a)

    def elements_below(self, bound: int) -> list[int]:
        return [int(x) + self.min_element for x in np.nonzero(self.indicator(self.min_element, bound))[0]]

    def is_stable(self) -> bool:
        """Check stability under adding ambient generators (exact: elements at
        conductor or above only ever move further into the tail)."""
        for x in self.head:
            for g in self.ambient.generators:
                if not self.contains(x + g):
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RelativeIdeal)
            and self.ambient.generators == other.ambient.generators
            and self.head == other.head
            and self.conductor == other.conductor
        )

    def __hash__(self) -> int:
        return hash((self.ambient.generators, self.head, self.conductor))

    def __repr__(self) -> str:
        return f"RelativeIdeal(head={list(self.head)}, tail>={self.conductor})"


def _normalize(ambient: NumericalSemigroup, elements: Iterable[int], tail_start: int) -> RelativeIdeal:
    """Build canonical form from elements below ``tail_start`` plus the tail."""
    elems = {int(e) for e in elements if e < tail_start}
    conductor = tail_start
    while conductor - 1 in elems:
        conductor -= 1
        elems.discard(conductor)
    return RelativeIdeal(ambient, tuple(sorted(elems)), conductor)


@dataclass(frozen=True)
class TraceReport:
    """Trace ideal of the canonical ideal, with residue and classification."""

    trace: RelativeIdeal
    trace_min_gens: tuple[int, ...]
    residue: int
    missing: tuple[int, ...]
    gorenstein: bool
    nearly_gorenstein: bool
    gap_bound: int
    question_holds: bool


@dataclass(frozen=True)
class GapBoundCheck:
    residue: int
    gap_bound: int
    holds: bool
    slack: int


def canonical_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    """The canonical ideal normalized to start at 0: all z with F - z a gap.

    Its minimal generators over the semigroup are F - x for the
    pseudo-Frobenius numbers x.
    """
    if s.is_naturals:
        raise TrivialSemigroup("the naturals are their own canonical ideal; no gaps to reflect")
    f = s.frobenius
    window = s.member_mask(f + 1)
    mask = ~window[::-1]
    return _normalize(s, (int(z) for z in np.nonzero(mask)[0]), f + 1)


def dual_ideal(s: NumericalSemigroup, ideal: RelativeIdeal) -> RelativeIdeal:
    """All z whose translate z + ideal lands inside the semigroup.

    z fails exactly when some gap is z + (ideal element); the candidate
    range [-m, F - m] is scanned via one boolean convolution and the tail
    [F + 1 - m, infinity) is included wholesale.
    """
    f = s.frobenius
    m = ideal.min_element
    if f < 0:
        return _normalize(s, (), -m)
    gaps_ind = ~s.member_mask(f + 1)
    ideal_ind = ideal.indicator(m, m + f + 1)
    bad = _bool_convolve(gaps_ind, ideal_ind[::-1])
    # bad index k corresponds to z = k - (m + f)
    mask = ~bad[f : 2 * f + 1]
    elements = (int(i) - m for i in np.nonzero(mask)[0])
    return _normalize(s, elements, f + 1 - m)


def ideal_sum(left: RelativeIdeal, right: RelativeIdeal) -> RelativeIdeal:
    """Minkowski sum of two relative ideals over the same semigroup."""
    if left.ambient.generators != right.ambient.generators:
        raise AmbientMismatch(
            f"cannot add ideals over {left.ambient.generators} and {right.ambient.generators}"
        )
    ml, mr = left.min_element, right.min_element
    bound = left.conductor + right.conductor
    li = left.indicator(ml, bound - mr)
    ri = right.indicator(mr, bound - ml)
    conv = _bool_convolve(li, ri)
    base = ml + mr
    sums = (base + int(k) for k in np.nonzero(conv)[0] if base + int(k) < bound)
    return _normalize(left.ambient, sums, bound)


def minimal_generators(ideal: RelativeIdeal) -> tuple[int, ...]:
    """Elements not reachable from the ideal by adding a nonzero member.

    It suffices to subtract single generators: reaching x from x - s for a
    composite member s implies reaching it from x - g for a generator g by
    stability.  Candidates live below conductor + multiplicity.
    """
    s = ideal.ambient
    lo = ideal.min_element
    hi = ideal.conductor + s.multiplicity
    keep = ideal.indicator(lo, hi)
    for g in s.generators:
        keep &= ~ideal.indicator(lo - g, hi - g)
    return tuple(int(lo + i) for i in np.nonzero(keep)[0])


def _is_symmetric(s: NumericalSemigroup) -> bool:
    f = s.frobenius
    if f < 0:
        return True
    window = s.member_mask(f + 1)
    return bool(np.all(window == ~window[::-1]))


def trace_and_residue(s: NumericalSemigroup) -> TraceReport:
    """Canonical trace ideal, residue, and nearly-Gorenstein classification.

    The Gorenstein flag comes from the independent symmetry test and is
    cross-checked against residue zero; disagreement means a bug, not data.
    """
    if s.is_naturals:
        trace = RelativeIdeal(s, (), 0)
        return TraceReport(
            trace=trace,
            trace_min_gens=(0,),
            residue=0,
            missing=(),
            gorenstein=True,
            nearly_gorenstein=True,
            gap_bound=0,
            question_holds=True,
        )
    kan = canonical_ideal(s)
    trace = ideal_sum(kan, dual_ideal(s, kan))
    missing_mask = s.member_mask(trace.conductor) & ~trace.indicator(0, trace.conductor)
    missing = tuple(int(x) for x in np.nonzero(missing_mask)[0])
    residue = len(missing)
    gorenstein = _is_symmetric(s)
    if gorenstein != (residue == 0):
        raise AssertionError(
            f"symmetry test and residue disagree on {s}: symmetric={gorenstein}, residue={residue}"
        )
    profile = gap_profile(s)
    bound = profile.genus - profile.non_gap_count
    return TraceReport(
        trace=trace,
        trace_min_gens=minimal_generators(trace),
        residue=residue,
        missing=missing,
        gorenstein=gorenstein,
        nearly_gorenstein=residue <= 1,
        gap_bound=bound,
        question_holds=residue <= bound,
    )


def gap_bound_check(s: NumericalSemigroup) -> GapBoundCheck:
    """Residue against the gap-count bound; negative slack would be a finding."""
    if s.is_naturals:
        raise TrivialSemigroup("gap bound needs at least one gap")
    report = trace_and_residue(s)
    return GapBoundCheck(
        residue=report.residue,
        gap_bound=report.gap_bound,
        holds=report.question_holds,
        slack=report.gap_bound - report.residue,
    )
