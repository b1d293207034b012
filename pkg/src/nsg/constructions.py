"""Gluings and liftings of numerical semigroups, with predicted invariants.

Both constructions come with closed-form predictions for the Frobenius
number, pseudo-Frobenius set, trace ideal, residue, and the gap-count bound.
``verify_construction`` recomputes everything directly on the built
semigroup and reports field-by-field agreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    GcdViolation,
    LambdaIsGenerator,
    LambdaNotMember,
    MuIsGenerator,
    MuNotMember,
    NonMinimalGluing,
    NonMinimalSequence,
    ScaledSetsIntersect,
)
from .ideals import RelativeIdeal, TraceReport, _bool_convolve, _normalize, minimal_generators, trace_and_residue
from .semigroup import GapProfile, NumericalSemigroup, gap_profile, new_semigroup, pseudo_frobenius

__all__ = [
    "GluingSpec",
    "PredictedInvariants",
    "VerificationOutcome",
    "glue",
    "glued_invariants",
    "lift",
    "lifted_invariants",
    "verify_construction",
    "arithmetic_semigroup",
]


@dataclass(frozen=True)
class GluingSpec:
    """Parameters of a gluing: two factors plus the cross scaling pair.

    ``lam`` must be a non-generator member of ``left`` and ``mu`` one of
    ``right``, coprime to each other; the glued semigroup is generated by
    mu * (left generators) together with lam * (right generators).
    """

    left: NumericalSemigroup
    right: NumericalSemigroup
    lam: int
    mu: int


@dataclass(frozen=True)
class PredictedInvariants:
    """Closed-form predictions for a glued or lifted semigroup.

    For gluings the whole trace is predicted as a set (``trace_set``); for
    liftings the prediction is at generator level only and ``trace_set``
    stays None.
    """

    frobenius: int
    pf: tuple[int, ...]
    trace_min_gens: tuple[int, ...]
    residue: int
    gap_bound: int
    provenance: str
    trace_set: RelativeIdeal | None = None


@dataclass(frozen=True)
class ComputedInvariants:
    trace: TraceReport
    gaps: GapProfile
    pf: tuple[int, ...]


@dataclass(frozen=True)
class VerificationOutcome:
    predicted: PredictedInvariants
    computed: ComputedInvariants
    verified: bool
    discrepancies: tuple[str, ...]


def _pf_elements(s: NumericalSemigroup) -> tuple[int, ...]:
    """Pseudo-Frobenius numbers, extended to the naturals by (-1,).

    The extension keeps the gluing and lifting formulas total: -1 is the
    Frobenius number of the naturals and plays the canonical-generator role
    there.
    """
    if s.is_naturals:
        return (-1,)
    return pseudo_frobenius(s).elements


def _validate(spec: GluingSpec) -> None:
    if spec.lam <= 0 or spec.mu <= 0:
        raise ValueError("gluing scalars must be positive")
    if math.gcd(spec.lam, spec.mu) != 1:
        raise GcdViolation(f"gcd({spec.lam}, {spec.mu}) != 1")
    if spec.lam in spec.left.generators:
        raise LambdaIsGenerator(f"{spec.lam} is a generator of {spec.left}")
    if not spec.left.contains(spec.lam):
        raise LambdaNotMember(f"{spec.lam} is not a member of {spec.left}")
    if spec.mu in spec.right.generators:
        raise MuIsGenerator(f"{spec.mu} is a generator of {spec.right}")
    if not spec.right.contains(spec.mu):
        raise MuNotMember(f"{spec.mu} is not a member of {spec.right}")
    scaled_left = {spec.mu * g for g in spec.left.generators}
    scaled_right = {spec.lam * g for g in spec.right.generators}
    if scaled_left & scaled_right:
        raise ScaledSetsIntersect(f"scaled generator sets share {sorted(scaled_left & scaled_right)}")


def glue(spec: GluingSpec) -> NumericalSemigroup:
    """Build the gluing; the scaled union must come out minimal."""
    _validate(spec)
    scaled = sorted({spec.mu * g for g in spec.left.generators} | {spec.lam * g for g in spec.right.generators})
    built = new_semigroup(scaled)
    if built.was_reduced or list(built.generators) != scaled:
        raise NonMinimalGluing(f"scaled union {scaled} reduced to {list(built.generators)}")
    return built


def _dilate(ind: np.ndarray, k: int) -> np.ndarray:
    """Indicator of k * S from the indicator of S (same origin, stretched)."""
    out = np.zeros((len(ind) - 1) * k + 1 if len(ind) else 0, dtype=bool)
    out[::k] = ind
    return out


def _predicted_glued_trace(spec: GluingSpec, built: NumericalSemigroup) -> RelativeIdeal:
    """The set {mu*a + lam*b : a, b in the factor traces} in canonical form.

    Everything from mu*c1 + lam*c2 + mu*lam on is a sum of tail elements
    (coprimality of mu and lam covers the residues), so a finite convolution
    suffices.
    """
    tl = trace_and_residue(spec.left).trace
    tr = trace_and_residue(spec.right).trace
    bound = spec.mu * tl.conductor + spec.lam * tr.conductor + spec.mu * spec.lam
    li = _dilate(tl.indicator(tl.min_element, tl.conductor + spec.lam + 1), spec.mu)
    ri = _dilate(tr.indicator(tr.min_element, tr.conductor + spec.mu + 1), spec.lam)
    conv = _bool_convolve(li, ri)
    base = spec.mu * tl.min_element + spec.lam * tr.min_element
    sums = (base + int(k) for k in np.nonzero(conv)[0] if base + int(k) < bound)
    return _normalize(built, sums, bound)


def glued_invariants(spec: GluingSpec) -> PredictedInvariants:
    """Predict all invariants of the gluing from the factors alone."""
    _validate(spec)
    built = glue(spec)
    lam, mu = spec.lam, spec.mu
    f1, f2 = spec.left.frobenius, spec.right.frobenius
    pf = tuple(sorted({mu * g + lam * h + mu * lam for g in _pf_elements(spec.left) for h in _pf_elements(spec.right)}))
    rep1, rep2 = trace_and_residue(spec.left), trace_and_residue(spec.right)
    gp1, gp2 = gap_profile(spec.left), gap_profile(spec.right)
    trace_set = _predicted_glued_trace(spec, built)
    return PredictedInvariants(
        frobenius=mu * f1 + lam * f2 + mu * lam,
        pf=pf,
        trace_min_gens=minimal_generators(trace_set),
        residue=mu * rep1.residue + lam * rep2.residue,
        gap_bound=mu * (gp1.genus - gp1.non_gap_count) + lam * (gp2.genus - gp2.non_gap_count),
        provenance="gluing",
        trace_set=trace_set,
    )


def lift(s: NumericalSemigroup, k: int) -> NumericalSemigroup:
    """Scale every generator except the multiplicity by k."""
    if k < 1:
        raise ValueError(f"lift factor must be >= 1, got {k}")
    if math.gcd(k, s.multiplicity) != 1:
        raise GcdViolation(f"gcd({k}, {s.multiplicity}) != 1")
    lifted = [s.multiplicity] + [k * g for g in s.generators[1:]]
    built = new_semigroup(lifted)
    if built.was_reduced:
        raise AssertionError(f"lifted generators {lifted} unexpectedly reduced")
    return built


def lifted_invariants(s: NumericalSemigroup, k: int) -> PredictedInvariants:
    """Predict the lift's invariants; the trace scales at generator level."""
    if k < 1:
        raise ValueError(f"lift factor must be >= 1, got {k}")
    if math.gcd(k, s.multiplicity) != 1:
        raise GcdViolation(f"gcd({k}, {s.multiplicity}) != 1")
    n1 = s.multiplicity
    report = trace_and_residue(s)
    gp = gap_profile(s)
    return PredictedInvariants(
        frobenius=k * s.frobenius + (k - 1) * n1,
        pf=tuple(sorted(k * f + (k - 1) * n1 for f in _pf_elements(s))),
        trace_min_gens=tuple(sorted(k * g for g in report.trace_min_gens)),
        residue=k * report.residue,
        gap_bound=k * (gp.genus - gp.non_gap_count),
        provenance="lifting",
    )


def verify_construction(predicted: PredictedInvariants, built: NumericalSemigroup) -> VerificationOutcome:
    """Recompute every predicted invariant directly and diff the two sides."""
    report = trace_and_residue(built)
    gp = gap_profile(built)
    pf_direct = _pf_elements(built)
    discrepancies = []
    if predicted.frobenius != built.frobenius:
        discrepancies.append("frobenius")
    if predicted.pf != pf_direct:
        discrepancies.append("pf")
    if predicted.residue != report.residue:
        discrepancies.append("residue")
    if predicted.gap_bound != gp.genus - gp.non_gap_count:
        discrepancies.append("gap_bound")
    if predicted.trace_set is not None and predicted.trace_set != report.trace:
        discrepancies.append("trace_set")
    if predicted.trace_min_gens != report.trace_min_gens:
        discrepancies.append("trace_min_gens")
    return VerificationOutcome(
        predicted=predicted,
        computed=ComputedInvariants(trace=report, gaps=gp, pf=pf_direct),
        verified=not discrepancies,
        discrepancies=tuple(discrepancies),
    )


def arithmetic_semigroup(n1: int, d: int, e: int) -> NumericalSemigroup:
    """The semigroup generated by the arithmetic sequence n1, n1+d, ...

    Minimal generation forces e <= n1; the gcd condition is on (n1, d).
    """
    if math.gcd(n1, d) != 1:
        raise GcdViolation(f"gcd({n1}, {d}) != 1")
    if n1 < 2 or d < 1 or e < 2 or e > n1:
        raise NonMinimalSequence(f"need n1 >= 2, d >= 1, 2 <= e <= n1; got n1={n1}, d={d}, e={e}")
    built = new_semigroup([n1 + i * d for i in range(e)])
    if built.was_reduced:
        raise NonMinimalSequence(f"arithmetic sequence n1={n1}, d={d}, e={e} is not minimal")
    return built
