"""Command-line interface.

Exit codes: 0 success (or verification passed / skipped), 2 invalid input or
violated construction precondition, 3 a verified prediction failed to match
the direct computation, 4 output I/O failure.
"""

from __future__ import annotations

import sys

import click

from .constructions import GluingSpec, glue, glued_invariants, lift, lifted_invariants, verify_construction
from .errors import NsgError
from .scan import (
    build_record,
    canonical_json,
    hunt as run_hunt,
    info_payload,
    scan_family,
    summarize,
    write_jsonl,
)
from .semigroup import NumericalSemigroup, new_semigroup
from .toric import acm_and_hypothesis, projective_ng_verdict


def _parse_generators(text: str) -> NumericalSemigroup:
    try:
        gens = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.UsageError(f"could not parse generators from {text!r}")
    if not gens:
        raise click.UsageError("empty generator list")
    try:
        return new_semigroup(gens)
    except (NsgError, ValueError) as exc:
        raise click.UsageError(str(exc))


def _echo_table(payload: dict, indent: str = "") -> None:
    for key, value in payload.items():
        if isinstance(value, dict):
            click.echo(f"{indent}{key}:")
            _echo_table(value, indent + "  ")
        elif isinstance(value, bool):
            click.echo(f"{indent}{key}: {'yes' if value else 'no'}")
        elif isinstance(value, list):
            click.echo(f"{indent}{key}: {', '.join(str(v) for v in value)}")
        else:
            click.echo(f"{indent}{key}: {value}")


@click.group()
def main() -> None:
    """Numerical semigroup toolkit: traces, residues, gluings, liftings,
    and projective-closure verdicts."""


@main.command()
@click.argument("generators")
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object instead of a table.")
@click.option("--toric", is_flag=True, help="Include the projective-closure verdict (needs >= 3 generators).")
def info(generators: str, as_json: bool, toric: bool) -> None:
    """Report all invariants of the semigroup generated by GENERATORS."""
    s = _parse_generators(generators)
    try:
        payload = {"generators": list(s.generators), **info_payload(s, toric=toric)}
    except NsgError as exc:
        raise click.UsageError(str(exc))
    if as_json:
        click.echo(canonical_json(payload))
    else:
        _echo_table(payload)


def _report_verification(predicted, built, as_json: bool) -> None:
    outcome = verify_construction(predicted, built)
    if as_json:
        click.echo(
            canonical_json(
                {
                    "generators": list(built.generators),
                    "verified": outcome.verified,
                    "discrepancies": list(outcome.discrepancies),
                    "invariants_json": info_payload(built),
                }
            )
        )
    else:
        click.echo(f"verified: {'yes' if outcome.verified else 'NO'}")
        if outcome.discrepancies:
            click.echo(f"discrepancies: {', '.join(outcome.discrepancies)}")
    if not outcome.verified:
        sys.exit(3)


def _report_construction(predicted, built, verify: bool, as_json: bool) -> None:
    if verify:
        _report_verification(predicted, built, as_json)
        return
    payload = {
        "generators": list(built.generators),
        "predicted": {
            "frobenius": predicted.frobenius,
            "pf": list(predicted.pf),
            "trace_min_gens": list(predicted.trace_min_gens),
            "residue": predicted.residue,
            "gap_bound": predicted.gap_bound,
        },
    }
    if as_json:
        click.echo(canonical_json(payload))
    else:
        _echo_table(payload)


@main.command(name="glue")
@click.argument("left")
@click.argument("right")
@click.option("--lambda", "lam", type=int, required=True, help="Non-generator member of LEFT.")
@click.option("--mu", type=int, required=True, help="Non-generator member of RIGHT.")
@click.option("--verify", is_flag=True, help="Check every predicted invariant against direct computation.")
@click.option("--json", "as_json", is_flag=True)
def glue_cmd(left: str, right: str, lam: int, mu: int, verify: bool, as_json: bool) -> None:
    """Glue two semigroups and report the predicted invariants."""
    l, r = _parse_generators(left), _parse_generators(right)
    spec = GluingSpec(l, r, lam, mu)
    try:
        built = glue(spec)
        predicted = glued_invariants(spec)
    except (NsgError, ValueError) as exc:
        raise click.UsageError(str(exc))
    _report_construction(predicted, built, verify, as_json)


@main.command(name="lift")
@click.argument("generators")
@click.option("-k", type=int, required=True, help="Scaling factor, coprime to the multiplicity.")
@click.option("--verify", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
def lift_cmd(generators: str, k: int, verify: bool, as_json: bool) -> None:
    """Lift a semigroup by scaling all generators but the multiplicity."""
    s = _parse_generators(generators)
    try:
        built = lift(s, k)
        predicted = lifted_invariants(s, k)
    except (NsgError, ValueError) as exc:
        raise click.UsageError(str(exc))
    _report_construction(predicted, built, verify, as_json)


@main.command()
@click.argument("generators")
@click.option("--json", "as_json", is_flag=True)
def toric(generators: str, as_json: bool) -> None:
    """Projective-closure verdict for the monomial curve of GENERATORS."""
    s = _parse_generators(generators)
    try:
        verdict = projective_ng_verdict(s)
        gb = acm_and_hypothesis(s).gb
    except NsgError as exc:
        raise click.UsageError(str(exc))
    if as_json:
        click.echo(canonical_json({**verdict.to_json(), "gb": gb.to_json()}))
    else:
        _echo_table(verdict.to_json())
        click.echo(f"basis elements: {len(gb.elements)}")


@main.command()
@click.argument("family", type=click.Choice(["random", "arithmetic", "gluing", "lifting"]))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--limit", type=int, default=100, show_default=True, help="Instance count (0 for an empty scan).")
@click.option("--max-multiplicity", type=int, default=8, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True, help="JSONL file to append to.")
@click.option("--verify", is_flag=True, help="Verify construction predictions (gluing and lifting).")
def scan(family: str, seed: int, limit: int, max_multiplicity: int, out: str, verify: bool) -> None:
    """Scan a family of semigroups and append one JSONL record each."""
    records = scan_family(family, seed=seed, limit=limit, max_multiplicity=max_multiplicity, verify=verify)
    try:
        write_jsonl(out, records)
    except OSError as exc:
        click.echo(f"cannot write {out}: {exc}", err=True)
        sys.exit(4)
    click.echo(summarize(records).line())


@main.command()
@click.option("--max-genus", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Optional JSONL file for all records.")
def hunt(max_genus: int, seed: int, out: str | None) -> None:
    """Exhaustively test residue <= genus - non_gaps up to a genus bound."""
    if max_genus < 1:
        raise click.UsageError("--max-genus must be >= 1")
    records, findings, histogram = run_hunt(max_genus, seed=seed)
    if out is not None:
        try:
            write_jsonl(out, records)
        except OSError as exc:
            click.echo(f"cannot write {out}: {exc}", err=True)
            sys.exit(4)
    click.echo(f"checked {len(records)} semigroups up to genus {max_genus}")
    click.echo("slack histogram: " + ", ".join(f"{k}: {v}" for k, v in histogram.items()))
    if findings:
        click.echo(f"VIOLATIONS FOUND: {len(findings)}")
        for rec in findings:
            click.echo(canonical_json(rec))
    else:
        click.echo("no violations")


if __name__ == "__main__":
    main()
