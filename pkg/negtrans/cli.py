"""Command-line front end.

Every subcommand exits with the status of its worst verdict: 0 for
Proved/pass, 1 for Refuted/fail, 2 for Unknown and 64 for usage errors.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import click

from negtrans import __version__
from negtrans.config import Config, load_config
from negtrans.errors import (
    EXIT_OK,
    EXIT_REFUTED,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    NegtransError,
    exit_code_for,
)
from negtrans.kernel import Kernel
from negtrans.kripke import Countermodel, CuratedEntry
from negtrans.parser import parse, render
from negtrans.proofsearch import Decision, Logic, Verdict
from negtrans.rewrite import (
    RuleSet,
    Validity,
    builtin_ruleset,
    dump_ruleset,
    enumerate_all_paths,
    enumerate_maximal,
    kolmogorov_form,
    label,
    load_ruleset,
    ruleset_names,
    standard_path,
    validate_rule,
)
from negtrans.translations import (
    TRANSLATIONS,
    BotMode,
    apply_translation,
    builtin,
    translations_related,
    with_bot_mode,
)
from negtrans.utils.log_manager import init_logging
from negtrans.verify import CheckResult, Status, Summary, run_all

logger = logging.getLogger(__name__)

_VERDICT_EXIT = {
    Verdict.PROVED: EXIT_OK,
    Verdict.REFUTED: EXIT_REFUTED,
    Verdict.UNKNOWN: EXIT_UNKNOWN,
}


def verdict_exit(decisions: Iterable[Decision]) -> int:
    return max((_VERDICT_EXIT[d.verdict] for d in decisions), default=EXIT_OK)


class State:
    """Per-invocation settings shared by the subcommands."""

    def __init__(self, config: Config, output: str):
        self.config = config
        self.output = output
        self._kernel: Optional[Kernel] = None

    @property
    def machine(self) -> bool:
        return self.output == "machine"

    @property
    def kernel(self) -> Kernel:
        if self._kernel is None:
            self._kernel = Kernel.from_config(self.config)
        return self._kernel

    def emit(self, record: Dict[str, Any], text: str) -> None:
        if self.machine:
            click.echo(json.dumps(record, sort_keys=False))
        else:
            click.echo(text)


class NegtransGroup(click.Group):
    """Maps usage errors to 64 and package errors to their own status."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
        except click.ClickException as e:
            e.show()
            code = EXIT_USAGE
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        except NegtransError as e:
            click.echo(f"error: {e}", err=True)
            code = exit_code_for(e)
        else:
            code = rv if isinstance(rv, int) else EXIT_OK
        if standalone_mode:
            sys.exit(code)
        return code


def _ruleset(spec: str) -> RuleSet:
    if spec.startswith("@"):
        path = Path(spec[1:])
        try:
            text = path.read_text()
        except OSError as e:
            raise click.BadParameter(f"cannot read {path}: {e}", param_hint="--rules") from e
        return load_ruleset(text, name=None)
    return builtin_ruleset(spec)


def _witness_text(decision: Decision) -> List[str]:
    w = decision.witness
    if isinstance(w, Countermodel):
        return [w.diagram()]
    if isinstance(w, CuratedEntry):
        return [f"curated: {w.key} ({w.status})", w.argument]
    return []


def _witness_record(decision: Decision) -> Optional[Dict[str, Any]]:
    w = decision.witness
    if isinstance(w, Countermodel):
        return w.as_record()
    if isinstance(w, CuratedEntry):
        return {"curated": w.key, "status": w.status}
    return None


@click.group(cls=NegtransGroup)
@click.version_option(__version__, prog_name="negtrans")
@click.option("--output", type=click.Choice(["text", "machine"]), default="text", show_default=True)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML file with overrides (default: config/negtrans.yaml)")
@click.option("--profile", default=None, help="Configuration name: development, testing, audit")
@click.option("--seed", type=int, default=None, help="Seed for the random corpora")
@click.option("--max-worlds", type=int, default=None, help="Largest Kripke frame searched")
@click.option("--max-domain", type=int, default=None, help="Largest domain per world")
@click.option("--catalog", type=click.Choice(["catalog", "all"]), default=None,
              help="Frame catalog, or every rooted poset")
@click.option("--constant-domains", is_flag=True, default=None, help="Only constant-domain models")
@click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logging")
@click.pass_context
def cli(ctx, output, config_path, profile, seed, max_worlds, max_domain, catalog, constant_domains, verbose):
    """Negative translations and their simplifications."""
    config = load_config(config_path, profile)
    for attr, value in (
        ("SEED", seed),
        ("KRIPKE_MAX_WORLDS", max_worlds),
        ("KRIPKE_MAX_DOMAIN", max_domain),
        ("KRIPKE_CATALOG", catalog),
        ("CONSTANT_DOMAINS", constant_domains),
    ):
        if value is not None:
            setattr(config, attr, value)
    if verbose:
        config.LOG_LEVEL = "DEBUG" if verbose > 1 else "INFO"
    init_logging(config)
    ctx.obj = State(config, output)


@cli.command()
@click.option("-t", "--translation", "name", default="kolmogorov", show_default=True,
              help=f"One of: {', '.join(TRANSLATIONS)}")
@click.option("--bot", type=click.Choice(["atom", "literal"]), default="atom", show_default=True,
              help="Apply the atom clause to falsum, or map it to a fixed literal")
@click.argument("formula")
@click.pass_obj
def translate(state: State, name, bot, formula):
    """Translate FORMULA."""
    f = parse(formula)
    spec = with_bot_mode(builtin(name), BotMode(bot))
    result = apply_translation(spec, f)
    state.emit(
        {"command": "translate", "translation": name, "bot": bot,
         "input": render(f), "output": render(result)},
        render(result),
    )
    return EXIT_OK


@cli.command()
@click.option("--rules", "rules_spec", default="r1", show_default=True,
              help="Built-in rule set name or @file")
@click.option("--strategy", type=click.Choice(["standard", "enumerate"]), default="standard",
              show_default=True)
@click.option("--from-source", is_flag=True, help="Apply the Kolmogorov translation first")
@click.argument("formula")
@click.pass_obj
def simplify(state: State, rules_spec, strategy, from_source, formula):
    """Rewrite FORMULA with a simplification rule set."""
    rs = _ruleset(rules_spec)
    f = parse(formula)
    start = kolmogorov_form(f) if from_source else label(f)

    if strategy == "standard":
        path = standard_path(start, rs)
        lines = [
            f"{i}. {step.rule.symbol.value} at {list(step.position)}: {render(node)}"
            for i, (step, node) in enumerate(zip(path.steps, path.nodes[1:]), 1)
        ]
        lines.append(render(path.final))
        record = {"command": "simplify", "rules": rs.name, "strategy": strategy,
                  "start": render(start), "final": render(path.final), "path": path.as_record()}
        state.emit(record, "\n".join(lines))
        return EXIT_OK

    paths = enumerate_all_paths(start, rs, state.config.PATH_NODE_BUDGET)
    longest = max(p.length for p in paths)
    finals = sorted({render(p.final) for p in paths if p.length == longest})
    lines = [f"{p.length}: {render(p.final)}" for p in paths]
    lines.append(f"{len(paths)} maximal paths, longest {longest}")
    lines += [f"longest ends in: {text}" for text in finals]
    record = {"command": "simplify", "rules": rs.name, "strategy": strategy,
              "start": render(start), "longest": longest, "longest_finals": finals,
              "paths": [p.as_record() for p in paths]}
    state.emit(record, "\n".join(lines))
    return EXIT_OK


@cli.command()
@click.option("--logic", default="ipc", show_default=True, help="cpc, ipc or ml (or full names)")
@click.option("--depth", type=int, default=None, help="Bounded first-order search depth")
@click.argument("formula")
@click.pass_obj
def prove(state: State, logic, depth, formula):
    """Decide FORMULA in a logic."""
    f = parse(formula)
    target = Logic.from_name(logic)
    kernel = state.kernel
    if depth is not None:
        kernel = Kernel(kernel.bounds, depth, kernel.node_budget)
    decision = kernel.decide(f, target, witness=True)
    state.emit(
        {"command": "prove", "logic": target.value, "formula": render(f),
         "verdict": decision.verdict.value, "depth": decision.depth, "note": decision.note,
         "witness": _witness_record(decision)},
        "\n".join([str(decision)] + _witness_text(decision)),
    )
    return verdict_exit([decision])


@cli.command()
@click.option("--logic", default="ipc", show_default=True)
@click.argument("formula")
@click.pass_obj
def countermodel(state: State, logic, formula):
    """Search a bounded Kripke countermodel for FORMULA (exit 1 when found)."""
    f = parse(formula)
    found = state.kernel.refute(f, Logic.from_name(logic))
    if found is None:
        state.emit(
            {"command": "countermodel", "formula": render(f), "found": False},
            "no countermodel within bounds",
        )
        return EXIT_UNKNOWN
    state.emit(
        {"command": "countermodel", "formula": render(f), "found": True,
         "countermodel": found.as_record()},
        found.diagram(),
    )
    return EXIT_REFUTED


@cli.command()
@click.option("--logic", default="ipc", show_default=True)
@click.argument("first")
@click.argument("second")
@click.pass_obj
def related(state: State, logic, first, second):
    """Compare two translations clause by clause."""
    relation = translations_related(builtin(first), builtin(second), state.kernel, Logic.from_name(logic))
    lines = [
        f"{c.clause:8} {c.decision.verdict.value:8} {render(c.left)}  vs  {render(c.right)}"
        for c in relation.clauses
    ]
    lines.append(f"{first} {'~' if relation.related else '!~'} {second}")
    record = dict(relation.as_record(), command="related")
    state.emit(record, "\n".join(lines))
    return verdict_exit(c.decision for c in relation.clauses)


@cli.command()
@click.argument("checks", nargs=-1)
@click.pass_obj
def verify(state: State, checks):
    """Run the named checks, or all of them."""
    only = None if not checks or "all" in checks else list(checks)

    def sink(result: CheckResult) -> None:
        emit_result(state, result)

    summary = run_all(state.config, only=only, kernel=state.kernel, sink=sink)
    emit_report(state, summary)
    return summary.exit_code


def emit_result(state: State, result: CheckResult) -> None:
    if state.machine:
        click.echo(json.dumps(result.as_record()))
        return
    click.echo(f"{result.check_id:16} {result.status.value:26} "
               f"{result.instances:6} instances {result.wall_time:7.2f}s  {result.statement}")
    if result.status is not Status.PASS:
        for evidence in result.evidence[:10]:
            click.echo(f"    {evidence.verdict}: {evidence.instance}")


def emit_report(state: State, summary: Summary) -> None:
    if state.machine:
        click.echo(json.dumps({"summary": summary.line, "exit": summary.exit_code,
                               "documented_gaps": summary.documented_gaps}))
    else:
        click.echo(summary.line)


@cli.command()
@click.argument("name", required=False)
@click.option("--validate", is_flag=True, help="Decide every rule in intuitionistic logic")
@click.pass_obj
def rules(state: State, name, validate):
    """List rule sets, or print NAME (a built-in or @file)."""
    if name is None:
        state.emit({"command": "rules", "names": ruleset_names()}, "\n".join(ruleset_names()))
        return EXIT_OK
    rs = _ruleset(name)
    if not validate:
        state.emit({"command": "rules", "name": rs.name, "rules": [str(r) for r in rs.rules]},
                   dump_ruleset(rs).rstrip("\n"))
        return EXIT_OK
    verdicts = [validate_rule(rule, state.kernel) for rule in rs.rules]
    lines = [f"{v.status.value:8} {v.rule}  {v.reason}".rstrip() for v in verdicts]
    state.emit(
        {"command": "rules", "name": rs.name,
         "validity": [{"rule": str(v.rule), "status": v.status.value, "reason": v.reason}
                      for v in verdicts]},
        "\n".join(lines),
    )
    codes = {Validity.VALID: EXIT_OK, Validity.INVALID: EXIT_REFUTED, Validity.UNKNOWN: EXIT_UNKNOWN}
    return max(codes[v.status] for v in verdicts)


@cli.command()
@click.pass_obj
def maximal(state: State):
    """Search every rule schema for the maximal simplifications."""
    report = enumerate_maximal(state.kernel)
    lines = []
    for rs in report.sets:
        lines.append(dump_ruleset(rs).rstrip("\n"))
    for v in report.undecided:
        lines.append(f"# undecided: {v.rule}  [{v.reason}]")
    lines.append(f"# {report.checked} decreasing candidates checked")
    state.emit(dict(report.as_record(), command="maximal"), "\n".join(lines))
    return EXIT_OK if not report.ties else EXIT_UNKNOWN


def main(argv: Optional[List[str]] = None) -> int:
    return cli.main(args=argv, prog_name="negtrans")


if __name__ == "__main__":
    main()
