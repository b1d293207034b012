"""Family scans, the gap-bound hunter, and JSONL persistence.

Every scan record is a pure function of its instance parameters, so worker
pools never affect content; records are sorted before writing and the
timestamp comes from SOURCE_DATE_EPOCH (default 0), which keeps repeated
runs byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .constructions import (
    GluingSpec,
    VerificationOutcome,
    arithmetic_semigroup,
    glue,
    glued_invariants,
    lift,
    lifted_invariants,
    verify_construction,
)
from .errors import GluingError
from .ideals import gap_bound_check, trace_and_residue
from .semigroup import NumericalSemigroup, gap_profile, new_semigroup, pseudo_frobenius
from .toric import projective_ng_verdict

__all__ = [
    "ScanRecord",
    "ScanSummary",
    "record_id",
    "canonical_json",
    "info_payload",
    "build_record",
    "random_semigroup",
    "random_gluing_spec",
    "random_lift",
    "scan_family",
    "hunt",
    "write_jsonl",
]


def canonical_json(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def record_id(generators: Sequence[int]) -> str:
    """Stable id: hash of the sorted generator list."""
    key = ",".join(str(g) for g in sorted(generators))
    return hashlib.sha256(key.encode()).hexdigest()[:16]


def _timestamp() -> int:
    return int(os.environ.get("SOURCE_DATE_EPOCH", "0"))


@dataclass(frozen=True)
class ScanRecord:
    id: str
    generators: tuple[int, ...]
    provenance: dict
    invariants_json: dict
    verification: dict | None
    timestamp: int
    seed: int

    def to_json(self) -> dict:
        payload = {
            "id": self.id,
            "generators": list(self.generators),
            "provenance": self.provenance,
            "invariants_json": self.invariants_json,
            "timestamp": self.timestamp,
            "seed": self.seed,
        }
        if self.verification is not None:
            payload["verification"] = self.verification
        return payload


@dataclass(frozen=True)
class ScanSummary:
    records: int
    gorenstein: int
    nearly_gorenstein: int
    question_holds: int
    verification_failures: int

    def line(self) -> str:
        return (
            f"{self.records} records: gorenstein {self.gorenstein}, "
            f"nearly_gorenstein {self.nearly_gorenstein}, question_holds {self.question_holds}, "
            f"verification_failures {self.verification_failures}"
        )


def info_payload(s: NumericalSemigroup, toric: bool = False, slack: bool = False) -> dict:
    """All invariants of one semigroup, JSON-ready (integers only)."""
    profile = gap_profile(s)
    report = trace_and_residue(s)
    if s.is_naturals:
        pf_elements: tuple[int, ...] = ()
    else:
        pf_elements = pseudo_frobenius(s).elements
    payload = {
        "multiplicity": s.multiplicity,
        "embedding_dimension": s.embedding_dimension,
        "frobenius": profile.frobenius,
        "gaps": list(profile.gaps),
        "genus": profile.genus,
        "non_gap_count": profile.non_gap_count,
        "pf": list(pf_elements),
        "type": len(pf_elements),
        "trace": {"head": list(report.trace.head), "conductor": report.trace.conductor},
        "trace_min_gens": list(report.trace_min_gens),
        "residue": report.residue,
        "missing": list(report.missing),
        "gorenstein": report.gorenstein,
        "nearly_gorenstein": report.nearly_gorenstein,
        "gap_bound": report.gap_bound,
        "question_holds": report.question_holds,
    }
    if slack:
        payload["slack"] = report.gap_bound - report.residue
    if toric:
        payload["closure"] = projective_ng_verdict(s).to_json()
    return payload


def _verification_payload(outcome: VerificationOutcome) -> dict:
    return {
        "verified": outcome.verified,
        "discrepancies": list(outcome.discrepancies),
        "predicted": {
            "frobenius": outcome.predicted.frobenius,
            "pf": list(outcome.predicted.pf),
            "trace_min_gens": list(outcome.predicted.trace_min_gens),
            "residue": outcome.predicted.residue,
            "gap_bound": outcome.predicted.gap_bound,
            "provenance": outcome.predicted.provenance,
        },
    }


def build_record(
    s: NumericalSemigroup,
    provenance: dict,
    seed: int,
    verification: dict | None = None,
    toric: bool = False,
    slack: bool = False,
) -> ScanRecord:
    return ScanRecord(
        id=record_id(s.generators),
        generators=s.generators,
        provenance=provenance,
        invariants_json=info_payload(s, toric=toric, slack=slack),
        verification=verification,
        timestamp=_timestamp(),
        seed=seed,
    )


def random_semigroup(rng: random.Random, max_multiplicity: int, min_multiplicity: int = 3) -> NumericalSemigroup:
    """Seeded random semigroup: pick a multiplicity, then draw generators
    from (m, 3m] until the set has gcd 1 and is already minimal."""
    while True:
        m = rng.randint(min_multiplicity, max_multiplicity)
        extra = rng.randint(1, max(1, m - 1))
        candidates = sorted({m, *(rng.randint(m + 1, 3 * m) for _ in range(extra))})
        if math.gcd(*candidates) != 1:
            continue
        s = new_semigroup(candidates)
        if not s.was_reduced:
            return s


def random_gluing_spec(rng: random.Random, max_multiplicity: int) -> GluingSpec:
    """Seeded valid gluing spec; scalars stay within a small multiple of the
    factor multiplicities to keep the glued semigroup desk-sized."""
    while True:
        left = random_semigroup(rng, max_multiplicity)
        right = random_semigroup(rng, max_multiplicity)
        lam_pool = [
            x
            for x in range(2 * left.multiplicity, 4 * left.multiplicity + 1)
            if left.contains(x) and x not in left.generators
        ]
        mu_pool = [
            x
            for x in range(2 * right.multiplicity, 4 * right.multiplicity + 1)
            if right.contains(x) and x not in right.generators
        ]
        for _ in range(16):
            lam = rng.choice(lam_pool)
            mu = rng.choice(mu_pool)
            if math.gcd(lam, mu) != 1:
                continue
            spec = GluingSpec(left, right, lam, mu)
            try:
                glue(spec)
            except GluingError:
                continue
            return spec


def random_lift(rng: random.Random, max_multiplicity: int, max_k: int = 7) -> tuple[NumericalSemigroup, int]:
    while True:
        s = random_semigroup(rng, max_multiplicity)
        k = rng.randint(1, max_k)
        if math.gcd(k, s.multiplicity) == 1:
            return s, k


def _worker_count() -> int:
    raw = os.environ.get("NSG_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


def _pmap(fn: Callable, items: list) -> list:
    workers = _worker_count()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _random_worker(args: tuple) -> dict:
    generators, seed = args
    s = new_semigroup(generators)
    return build_record(s, {"kind": "random"}, seed).to_json()


def _arithmetic_worker(args: tuple) -> dict:
    n1, d, e, seed = args
    s = arithmetic_semigroup(n1, d, e)
    return build_record(s, {"kind": "arithmetic", "n1": n1, "d": d, "e": e}, seed, toric=True).to_json()


def _gluing_worker(args: tuple) -> dict:
    left_gens, right_gens, lam, mu, verify, seed = args
    spec = GluingSpec(new_semigroup(left_gens), new_semigroup(right_gens), lam, mu)
    built = glue(spec)
    verification = None
    if verify:
        verification = _verification_payload(verify_construction(glued_invariants(spec), built))
    provenance = {
        "kind": "gluing",
        "parents": [record_id(left_gens), record_id(right_gens)],
        "lambda": lam,
        "mu": mu,
    }
    return build_record(built, provenance, seed, verification=verification).to_json()


def _lifting_worker(args: tuple) -> dict:
    base_gens, k, verify, seed = args
    base = new_semigroup(base_gens)
    built = lift(base, k)
    verification = None
    if verify:
        verification = _verification_payload(verify_construction(lifted_invariants(base, k), built))
    provenance = {"kind": "lifting", "parent": record_id(base_gens), "k": k}
    return build_record(built, provenance, seed, verification=verification).to_json()


def scan_family(
    family: str,
    seed: int,
    limit: int,
    max_multiplicity: int,
    verify: bool = False,
    max_d: int = 5,
) -> list[dict]:
    """Deterministic scan of one family; returns sorted JSON-ready records."""
    rng = random.Random(seed)
    items: list[tuple] = []
    if family == "random":
        for _ in range(limit):
            items.append((random_semigroup(rng, max_multiplicity).generators, seed))
        records = _pmap(_random_worker, items)
    elif family == "arithmetic":
        for n1 in range(3, max_multiplicity + 1):
            for d in range(1, max_d + 1):
                if math.gcd(n1, d) != 1:
                    continue
                for e in range(3, n1 + 1):
                    items.append((n1, d, e, seed))
        if limit:
            items = items[:limit]
        records = _pmap(_arithmetic_worker, items)
    elif family == "gluing":
        for _ in range(limit):
            spec = random_gluing_spec(rng, max_multiplicity)
            items.append((spec.left.generators, spec.right.generators, spec.lam, spec.mu, verify, seed))
        records = _pmap(_gluing_worker, items)
    elif family == "lifting":
        for _ in range(limit):
            s, k = random_lift(rng, max_multiplicity)
            items.append((s.generators, k, verify, seed))
        records = _pmap(_lifting_worker, items)
    else:
        raise ValueError(f"unknown family {family!r}")
    records.sort(key=lambda r: (r["id"], canonical_json(r)))
    return records


def summarize(records: Iterable[dict]) -> ScanSummary:
    records = list(records)
    inv = [r["invariants_json"] for r in records]
    return ScanSummary(
        records=len(records),
        gorenstein=sum(1 for i in inv if i["gorenstein"]),
        nearly_gorenstein=sum(1 for i in inv if i["nearly_gorenstein"]),
        question_holds=sum(1 for i in inv if i["question_holds"]),
        verification_failures=sum(
            1 for r in records if r.get("verification") and not r["verification"]["verified"]
        ),
    )


def hunt(max_genus: int, seed: int = 0) -> tuple[list[dict], list[dict], dict[int, int]]:
    """Enumerate the genus tree and look for residues above the gap bound.

    Returns (all records sorted by id, violating records, slack histogram).
    """
    from .enumeration import by_genus

    records: list[dict] = []
    findings: list[dict] = []
    histogram: dict[int, int] = {}
    for genus, level in by_genus(max_genus):
        for s in level:
            check = gap_bound_check(s)
            histogram[check.slack] = histogram.get(check.slack, 0) + 1
            rec = build_record(s, {"kind": "hunt", "genus": genus}, seed, slack=True).to_json()
            records.append(rec)
            if not check.holds:
                findings.append(rec)
    records.sort(key=lambda r: (r["id"], canonical_json(r)))
    findings.sort(key=lambda r: (r["id"], canonical_json(r)))
    return records, findings, dict(sorted(histogram.items()))


def write_jsonl(path: str, records: Iterable[dict]) -> None:
    """Append records, one canonical JSON object per line."""
    with open(path, "a", encoding="utf-8") as fh:
        for record in records:
            fh.write(canonical_json(record) + "\n")
