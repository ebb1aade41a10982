"""Command line interface.

Machine output (--json) is byte-identical to the gateway's HTTP bodies for
the same inputs; both go through harmonica.service. Exit codes: 0 success,
1 usage or unreadable/invalid input artifacts, 2 domain outcomes (error
conflicts, invalid or contradictory configurations, and similar).
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import service
from .banco.configuration import enumerate_configurations, parse_configuration
from .banco.features import load_feature_model
from .errors import (
    DocumentParseError,
    HarmonicaError,
    MissingFileError,
    ModelStructureError,
    ValidationFailedError,
)
from .jsonio import canonical_json, read_json_document
from .kb.linter import validate_knowledge_base
from .kb.loader import DOCUMENT_NAMES, load_knowledge_base, parse_knowledge_base

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DOMAIN = 2

_INPUT_ERRORS = (DocumentParseError, MissingFileError, ValidationFailedError, ModelStructureError)


def _echo_payload(payload: dict) -> None:
    click.echo(canonical_json(payload), nl=False)


def _fail(error: HarmonicaError) -> None:
    """Print the error body (stable API shape) and exit with the right code."""
    _echo_payload(error.to_payload())
    sys.exit(EXIT_INPUT if isinstance(error, _INPUT_ERRORS) else EXIT_DOMAIN)


@click.group()
def main() -> None:
    """Blockchain selection (BLADE) and product derivation (BANCO)."""


# --- knowledge base ----------------------------------------------------------

@main.group()
def kb() -> None:
    """Knowledge base maintenance."""


@kb.command("lint")
@click.argument("kb_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--model", "model_file", type=click.Path(exists=True, dir_okay=False),
              help="Feature model used to flag assets that can never activate.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
def kb_lint(kb_dir: str, model_file: str | None, as_json: bool) -> None:
    """Validate a KB directory; exits 0 only on zero errors."""
    root = Path(kb_dir)
    try:
        docs = {}
        for name in DOCUMENT_NAMES:
            path = root / f"{name}.json"
            if not path.is_file():
                raise MissingFileError(name)
            docs[name] = read_json_document(path)
        parsed = parse_knowledge_base(docs, root)
        model = load_feature_model(model_file) if model_file else None
    except HarmonicaError as error:
        if as_json:
            _echo_payload(error.to_payload())
        else:
            click.echo(f"error: {error.message}")
        sys.exit(EXIT_INPUT)

    report = validate_knowledge_base(parsed, model)
    if as_json:
        _echo_payload(report.to_payload())
    else:
        for issue in report.issues:
            click.echo(f"{issue.severity}: {issue.location}: {issue.message}")
        click.echo(f"{len(report.errors)} error(s), {len(report.warnings)} warning(s)")
    sys.exit(EXIT_OK if report.ok else EXIT_INPUT)


# --- recommendation ----------------------------------------------------------

def _load_kb_or_fail(kb_dir: str):
    try:
        return load_knowledge_base(kb_dir)
    except HarmonicaError as error:
        _fail(error)


def _run_profile_op(op, kb_dir: str, profile_file: str) -> dict:
    kb_obj = _load_kb_or_fail(kb_dir)
    try:
        doc = read_json_document(profile_file)
        return op(doc, kb_obj)
    except HarmonicaError as error:
        _fail(error)


@main.command()
@click.option("--kb", "kb_dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--profile", "profile_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--json/--table", "as_json", default=False, help="Machine or table output (default table).")
def recommend(kb_dir: str, profile_file: str, as_json: bool) -> None:
    """Rank blockchains and patterns for a preference profile.

    Exits 2 when error-severity conflicts suppress the ranking.
    """
    payload = _run_profile_op(service.recommend_op, kb_dir, profile_file)
    if as_json:
        _echo_payload(payload)
    else:
        _print_recommendation_table(payload)
    sys.exit(EXIT_DOMAIN if payload["ranking"] is None else EXIT_OK)


@main.command()
@click.option("--kb", "kb_dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--profile", "profile_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--json/--table", "as_json", default=False)
def conflicts(kb_dir: str, profile_file: str, as_json: bool) -> None:
    """Check a profile against the conflict rules; exits 2 on error severity."""
    payload = _run_profile_op(service.conflicts_op, kb_dir, profile_file)
    if as_json:
        _echo_payload(payload)
    else:
        if not payload["violations"]:
            click.echo("no conflicts")
        for violation in payload["violations"]:
            rule = violation["rule"]
            click.echo(
                f"{violation['severity']}: {rule['left']} vs {rule['right']}: {rule['explanation']}"
            )
    has_errors = any(v["severity"] == "error" for v in payload["violations"])
    sys.exit(EXIT_DOMAIN if has_errors else EXIT_OK)


def _print_recommendation_table(payload: dict) -> None:
    for violation in payload["conflicts"]["violations"]:
        rule = violation["rule"]
        click.echo(f"conflict ({violation['severity']}): {rule['left']} vs {rule['right']}")
    if payload["ranking"] is None:
        click.echo("ranking withheld: resolve the error-severity conflicts above first")
        return
    click.echo(f"{'rank':<5}{'blockchain':<14}{'closeness':>10}{'d+':>10}{'d-':>10}")
    for position, entry in enumerate(payload["ranking"]["entries"], start=1):
        click.echo(
            f"{position:<5}{entry['blockchain_id']:<14}"
            f"{entry['closeness']:>10.4f}{entry['d_plus']:>10.4f}{entry['d_minus']:>10.4f}"
        )
    for record in payload["ranking"]["disqualified"]:
        click.echo(
            f"disqualified: {record['blockchain_id']} "
            f"({record['attribute_id']} scores {record['actual_score']}, requires {record['min_level']})"
        )
    click.echo("patterns:")
    for pattern in payload["patterns"]:
        if "excluded_reason" in pattern:
            click.echo(f"  - {pattern['pattern_id']}: excluded ({pattern['excluded_reason']})")
        else:
            note = f" [conflicts with {', '.join(pattern['conflicts_with'])}]" if pattern["conflicts_with"] else ""
            click.echo(f"  - {pattern['pattern_id']}: score {pattern['score']}{note}")


# --- configurator ------------------------------------------------------------

@main.group()
def configure() -> None:
    """Work with feature configurations."""


def _load_model_or_fail(model_file: str):
    try:
        return load_feature_model(model_file)
    except HarmonicaError as error:
        _fail(error)


@configure.command("preselect")
@click.option("--model", "model_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--report", "report_file", required=True, type=click.Path(exists=True, dir_okay=False),
              help="A recommendation report as produced by `recommend --json`.")
@click.option("--json", "as_json", is_flag=True)
def configure_preselect(model_file: str, report_file: str, as_json: bool) -> None:
    """Seed a configuration from a recommendation report."""
    model = _load_model_or_fail(model_file)
    try:
        payload = service.preselect_op(read_json_document(report_file), model)
    except HarmonicaError as error:
        _fail(error)
    if as_json:
        _echo_payload(payload)
    else:
        click.echo(f"selected: {', '.join(payload['selected'])}")
        click.echo(f"open: {len(payload['open'])} feature(s)")
    sys.exit(EXIT_OK)


@configure.command("validate")
@click.option("--model", "model_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--config", "config_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def configure_validate(model_file: str, config_file: str, as_json: bool) -> None:
    """Check a configuration; exits 2 unless it is complete and valid."""
    model = _load_model_or_fail(model_file)
    try:
        payload = service.validate_op(read_json_document(config_file), model)
    except HarmonicaError as error:
        _fail(error)
    if as_json:
        _echo_payload(payload)
    else:
        click.echo(f"status: {payload['status']}")
        for violation in payload["violations"]:
            click.echo(f"violation ({violation['rule']}): {violation['message']}")
        if payload["open"]:
            click.echo(f"open: {', '.join(payload['open'])}")
    sys.exit(EXIT_OK if payload["status"] == "valid" else EXIT_DOMAIN)


@configure.command("complete")
@click.option("--model", "model_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--config", "config_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--select", "selects", multiple=True, help="Select a feature before propagating.")
@click.option("--deselect", "deselects", multiple=True, help="Deselect a feature before propagating.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", "out_file", type=click.Path(dir_okay=False), help="Also write the result to a file.")
def configure_complete(model_file: str, config_file: str, selects: tuple[str, ...],
                       deselects: tuple[str, ...], as_json: bool, out_file: str | None) -> None:
    """Propagate all forced decisions (exit 2 on contradiction)."""
    model = _load_model_or_fail(model_file)
    try:
        doc = read_json_document(config_file)
        config = parse_configuration(doc)
        doc = {
            "selected": sorted(config.selected | set(selects)),
            "deselected": sorted(config.deselected | set(deselects)),
        }
        payload = service.complete_op(doc, model)
    except HarmonicaError as error:
        _fail(error)
    if out_file:
        Path(out_file).write_text(canonical_json(payload), encoding="utf-8")
    if as_json:
        _echo_payload(payload)
    else:
        click.echo(f"selected: {', '.join(payload['selected'])}")
        click.echo(f"deselected: {', '.join(payload['deselected'])}")
        click.echo(f"open: {', '.join(payload['open']) or '(none)'}")
    sys.exit(EXIT_OK)


@configure.command("enumerate")
@click.option("--model", "model_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--limit", default=10_000, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def configure_enumerate(model_file: str, limit: int, as_json: bool) -> None:
    """List every complete valid configuration."""
    model = _load_model_or_fail(model_file)
    try:
        configs = enumerate_configurations(model, limit=limit)
    except HarmonicaError as error:
        _fail(error)
    if as_json:
        _echo_payload({"count": len(configs), "configurations": [c.to_payload() for c in configs]})
    else:
        click.echo(f"{len(configs)} valid configuration(s)")
        for config in configs:
            click.echo("  " + ", ".join(sorted(config.selected)))
    sys.exit(EXIT_OK)


# --- generation ---------------------------------------------------------------

def _parse_var(pairs: tuple[str, ...]) -> dict[str, str]:
    variables = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise click.UsageError(f"--var expects key=value, got {pair!r}")
        variables[key] = value
    return variables


@main.command()
@click.option("--kb", "kb_dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--model", "model_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--config", "config_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
@click.option("--var", "variables", multiple=True, help="Template variable, key=value (repeatable).")
@click.option("--json", "as_json", is_flag=True)
def generate(kb_dir: str, model_file: str, config_file: str, out_dir: str,
             variables: tuple[str, ...], as_json: bool) -> None:
    """Generate the product tree for a complete valid configuration."""
    from .banco.generator import render_product, write_product_tree

    kb_obj = _load_kb_or_fail(kb_dir)
    model = _load_model_or_fail(model_file)
    try:
        config = parse_configuration(read_json_document(config_file))
        manifest, files = render_product(config, model, kb_obj, _parse_var(variables))
        write_product_tree(manifest, files, out_dir)
        payload = service.generate_payload(manifest, files)
    except HarmonicaError as error:
        _fail(error)
    if as_json:
        _echo_payload(payload)
    else:
        for entry in payload["manifest"]["entries"]:
            click.echo(f"{entry['sha256'][:12]}  {entry['bytes']:>7}  {entry['path']}")
        click.echo(f"manifest: {out_dir}/manifest.json")
    sys.exit(EXIT_OK)


# --- reporting ----------------------------------------------------------------

@main.command()
@click.option("--kb", "kb_dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--profile", "profile_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
def report(kb_dir: str, profile_file: str, out_dir: str) -> None:
    """Write the recommendation report with CSV tables and figures."""
    from .reporting import write_report_files

    kb_obj = _load_kb_or_fail(kb_dir)
    try:
        doc = read_json_document(profile_file)
        payload = service.recommend_op(doc, kb_obj)
        written = write_report_files(payload, kb_obj, out_dir)
    except HarmonicaError as error:
        _fail(error)
    for path in written:
        click.echo(str(path))
    sys.exit(EXIT_DOMAIN if payload["ranking"] is None else EXIT_OK)


# --- service ------------------------------------------------------------------

@main.command()
@click.option("--kb", "kb_dir", envvar="HARMONICA_KB_DIR", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--model", "model_file", envvar="HARMONICA_MODEL", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--port", envvar="HARMONICA_PORT", default=8720, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--frontend", "frontend_dir", envvar="HARMONICA_FRONTEND", default=None,
              type=click.Path(file_okay=False), help="Static directory with the built web UI.")
def serve(kb_dir: str, model_file: str, port: int, host: str, frontend_dir: str | None) -> None:
    """Serve the HTTP API (refuses to start on an invalid KB or model)."""
    from .gateway.app import serve as run_server

    try:
        run_server(kb_dir, model_file, host=host, port=port, frontend_dir=frontend_dir)
    except HarmonicaError as error:
        click.echo(f"error: {error.message}", err=True)
        sys.exit(EXIT_INPUT)


if __name__ == "__main__":
    main()
