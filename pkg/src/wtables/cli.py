"""Command-line surface for the toolkit.

Exit codes: 0 success, 2 domain error (undefined operation, failed internal
cross-check), 64 usage error.
"""

import json
import random
import sys
from dataclasses import dataclass, field

import click

from . import __version__
from .bv import bv, bv_details, bv_prime, bv_raw
from .cache import DEFAULT_DIR, Store
from .caction import c_k_action, c_three_row_trace
from .classify import classify as _classify
from .classify import primitive_ideal_fingerprints
from .domino import DominoTableau, cycles, dt, find_cycle_path, garfinkle
from .domino import move_through_seq
from .render import (parse_domino, parse_stable, parse_tableau,
                     parse_word_text, render_domino, render_partition,
                     render_stable, render_tableau, render_word)
from .stables import stable_from_json, stable_to_json
from .tau import DEFAULT_CAP, tau_class
from .words import parse_word, rs_insert

DOMAIN_ERRORS = (ValueError, AssertionError, ArithmeticError)


@dataclass
class RunConfig:
    """Validated run-wide settings, merged from the config file and flags."""

    fmt: str = "json"
    cap: int = DEFAULT_CAP
    workers: int = 1
    cache_dir: str = str(DEFAULT_DIR)
    seed: int = 0
    store: Store = field(init=False)

    def __post_init__(self):
        if self.fmt not in ("json", "ascii"):
            raise click.UsageError(f"format must be json or ascii, got {self.fmt!r}")
        if self.cap <= 0 or self.workers <= 0:
            raise click.UsageError("cap and workers must be positive")
        self.store = Store(self.cache_dir)


def _merged_config(path, **flags) -> RunConfig:
    base = {}
    if path:
        with open(path) as fh:
            base = json.load(fh)
    base.update({k: v for k, v in flags.items() if v is not None})
    return RunConfig(**base)


@click.group()
@click.version_option(__version__)
@click.option("--format", "fmt", type=click.Choice(["json", "ascii"]), default=None,
              help="Output format (default json).")
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON file with defaults for cap, workers, cache_dir, format.")
@click.option("--cap", type=int, default=None, help="Closure size cap.")
@click.option("--workers", type=int, default=None, help="Enumeration shards.")
@click.option("--cache-dir", default=None, help="Content-addressed cache directory.")
@click.option("--seed", type=int, default=None, help="Seed for randomized suites.")
@click.pass_context
def cli(ctx, fmt, config, cap, workers, cache_dir, seed):
    cfg = _merged_config(config, fmt=fmt, cap=cap, workers=workers,
                         cache_dir=cache_dir, seed=seed)
    random.seed(cfg.seed)
    ctx.obj = cfg


def _word_args(entries):
    flat = []
    for e in entries:
        flat.extend(p for p in e.replace(",", " ").split() if p)
    if not flat:
        raise click.UsageError("a word is required")
    return parse_word(flat)


def _emit(cfg, payload, ascii_text):
    if cfg.fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(ascii_text)


def _read_json_arg(arg):
    text = sys.stdin.read() if arg == "-" else arg
    return json.loads(text)


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("word", nargs=-1)
@click.pass_obj
def rs(cfg, word):
    """Insertion tableau of a word (rows bottom first)."""
    t = rs_insert(_word_args(word))
    _emit(cfg, {"tableau": [[str(x) for x in r] for r in t]}, render_tableau(t))


@cli.command(name="bv", context_settings={"ignore_unknown_options": True})
@click.option("--gtype", type=click.Choice(["B", "C"]), required=True)
@click.option("--details", is_flag=True, help="Show q, content, u and v lists.")
@click.option("--raw", type=click.Choice(["plain", "zero"]), default=None,
              help="Run the plain or zero-inserted doubled word variant instead.")
@click.argument("weight", nargs=-1)
@click.pass_obj
def bv_cmd(cfg, gtype, details, raw, weight):
    """Jordan type of the associated variety attached to a weight."""
    mu = _word_args(weight)
    if raw:
        out = (bv_raw if raw == "plain" else bv_prime)(mu)
        _emit(cfg, {"partition": list(out)}, render_partition(out))
        return
    if details:
        data = bv_details(mu, gtype)
        _emit(cfg, data, "\n".join(f"{k}: {v}" for k, v in data.items()))
        return
    out = bv(mu, gtype)
    _emit(cfg, {"partition": list(out)}, render_partition(out))


@cli.command(name="tau-class", context_settings={"ignore_unknown_options": True})
@click.option("--members", is_flag=True, help="Dump every member.")
@click.argument("weight", nargs=-1)
@click.pass_obj
def tau_class_cmd(cfg, members, weight):
    """Closure of a weight under the tau relations."""
    mu = _word_args(weight)

    def compute():
        cls = tau_class(mu, cfg.cap)
        out = {
            "seed": [str(x) for x in cls.seed],
            "size": len(cls),
            "fingerprint": [str(x) for x in cls.fingerprint],
            "non_regular": cls.has_repeated_abs,
        }
        if members:
            out["members"] = sorted([str(x) for x in m] for m in cls.members)
        return out

    params = {"weight": [str(x) for x in mu], "cap": cfg.cap, "members": members}
    data = cfg.store.memo("tau-class", params, compute)
    text = "size {size}  fingerprint {fp}  non_regular {nr}".format(
        size=data["size"], fp=" ".join(data["fingerprint"]), nr=data["non_regular"])
    if members:
        text += "\n" + "\n".join(" ".join(m) for m in data["members"])
    _emit(cfg, data, text)


@cli.group()
def domino():
    """Domino tableau operations."""


@domino.command(name="dt")
@click.argument("tableau")
@click.pass_obj
def domino_dt(cfg, tableau):
    """Slide algorithm on a signed tableau (JSON rows bottom first, or -)."""
    rows = [parse_word(r) for r in _read_json_arg(tableau)]
    r = dt(rows)
    _emit(cfg, r.to_json(), render_domino(r))


@domino.command(name="cycles")
@click.argument("tableau")
@click.pass_obj
def domino_cycles(cfg, tableau):
    """Cycles of a domino tableau (JSON label -> cell pairs, or -)."""
    r = DominoTableau.from_json(_read_json_arg(tableau))
    cyc = sorted(sorted(c) for c in cycles(r))
    _emit(cfg, {"cycles": cyc}, "\n".join(" ".join(map(str, c)) for c in cyc))


@domino.command(name="mt")
@click.option("--cycle", "cycle_opts", multiple=True, required=True,
              help="A cycle as comma-separated labels; repeat for a sequence.")
@click.argument("tableau")
@click.pass_obj
def domino_mt(cfg, cycle_opts, tableau):
    """Move a domino tableau through one or more cycles."""
    r = DominoTableau.from_json(_read_json_arg(tableau))
    seq = [frozenset(int(x) for x in c.replace(",", " ").split()) for c in cycle_opts]
    out = move_through_seq(r, seq)
    _emit(cfg, out.to_json(), render_domino(out))


@domino.command(name="compare", context_settings={"ignore_unknown_options": True})
@click.argument("word", nargs=-1)
@click.pass_obj
def domino_compare(cfg, word):
    """Connect the two signed-permutation front ends by a cycle sequence."""
    w = _word_args(word)
    n = max(abs(int(x)) for x in w)
    half_word = tuple(w[:n])
    g0 = garfinkle(half_word + tuple(-x for x in reversed(half_word)), "G0")
    from fractions import Fraction
    g1 = garfinkle(half_word + (Fraction(0),) + tuple(-x for x in reversed(half_word)), "G1")
    path = find_cycle_path(g0, g1)
    payload = {
        "g0": g0.to_json(),
        "g1": g1.to_json(),
        "cycle_sequence": None if path is None else [sorted(c) for c in path],
    }
    text = "\n".join([
        "G0:", render_domino(g0), "G1:", render_domino(g1),
        "cycles: " + ("none" if path is None
                      else "; ".join(" ".join(map(str, sorted(c))) for c in path)),
    ])
    _emit(cfg, payload, text)


@cli.command()
@click.option("--k", type=int, default=1, show_default=True,
              help="Which component-group generator to apply.")
@click.option("--strategy", type=click.Choice(["oracle", "pipeline"]),
              default="oracle", show_default=True)
@click.option("--trace", is_flag=True, help="Print every intermediate diagram.")
@click.argument("table")
@click.pass_obj
def caction(cfg, k, strategy, trace, table):
    """Component-group generator acting on an s-table (JSON, or -)."""
    a = stable_from_json(_read_json_arg(table))
    result = c_k_action(a, k, strategy, cfg.cap)
    payload = stable_to_json(result)
    text = render_stable(result)
    if trace:
        steps = c_three_row_trace(a, cfg.cap) if a.frame.shape.r == 1 else None
        if steps is not None:
            payload = {"result": payload,
                       "trace": [{"step": name,
                                  "rows": [[str(x) for x in r] for r in rows]}
                                 for name, rows in steps]}
            text = "\n\n".join(
                name + "\n" + "\n".join(" ".join(str(x) for x in r) for r in rows)
                for name, rows in steps)
    _emit(cfg, payload, text)


@cli.command()
@click.option("--gtype", type=click.Choice(["B", "C"]), required=True)
@click.option("--partition", required=True, help="For example 5,5,4,2,2.")
@click.option("--bound", required=True, help="Bound on |entries|.")
@click.option("--method", type=click.Choice(["bv", "conjugacy", "both"]),
              default="bv", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "ascii"]), default=None)
@click.pass_obj
def classify(cfg, gtype, partition, bound, method, fmt):
    """Enumerate and classify the finite-dimensional tables at a bound."""
    if fmt:
        cfg.fmt = fmt
    parts = tuple(int(x) for x in partition.replace(",", " ").split())
    params = {"gtype": gtype, "partition": list(parts), "bound": bound,
              "method": method, "cap": cfg.cap}
    report = cfg.store.memo(
        "classify", params,
        lambda: _classify(parts, gtype, bound, method, cfg.cap, cfg.workers))
    lines = [
        "type {} partition {} bound {} method {}".format(
            gtype, ",".join(map(str, report["partition"])), bound, method),
        "tables {tables}  finite-dimensional {finite_dimensional}  orbits {orbits}"
        .format(**report["counts"]),
    ]
    for orb in report["orbits"]:
        lines.append("")
        lines.append("fingerprint " + " ".join(orb["tau_fingerprint"])
                     + ("  (non-regular)" if orb["non_regular"] else ""))
        for rows in orb["tables"]:
            mark = " <- representative" if rows == orb["representative"] else ""
            lines.append("  " + " | ".join(" ".join(r) for r in rows) + mark)
    _emit(cfg, report, "\n".join(lines))


@cli.command()
@click.argument("kind", type=click.Choice(["word", "partition", "tableau",
                                           "stable", "domino"]))
@click.argument("data")
@click.pass_obj
def render(cfg, kind, data):
    """ASCII rendering of a JSON object of the given kind (or - for stdin)."""
    obj = _read_json_arg(data)
    if kind == "word":
        click.echo(render_word(parse_word(obj)))
    elif kind == "partition":
        click.echo(render_partition(obj))
    elif kind == "tableau":
        click.echo(render_tableau([parse_word(r) for r in obj]))
    elif kind == "stable":
        click.echo(render_stable(stable_from_json(obj)))
    else:
        click.echo(render_domino(DominoTableau.from_json(obj)))


def _golden_checks():
    from .caction import c_three_row
    from .partitions import validate_orbit_partition
    from .stables import SFrame, make_stable

    def table(gtype, parts, rows):
        return make_stable(SFrame.identity(validate_orbit_partition(parts, gtype)),
                           rows)

    a_c = table("C", (4, 4, 2), [[2, 3, 4, 5], [-1, 1], [-5, -4, -3, -2]])
    ca_c = table("C", (4, 4, 2), [[-5, 2, 3, 4], [-1, 1], [-4, -3, -2, 5]])
    a_b = table("B", (3, 3, 5), [[-2, 5, 6], [-3, -1, 0, 1, 3], [-6, -5, 2]])
    ca_b = table("B", (3, 3, 5), [[-2, -1, 5], [-6, -3, 0, 3, 6], [-5, 1, 2]])
    r = DominoTableau.from_dominoes(
        {1: {(1, 1), (2, 1)}, 2: {(1, 2), (2, 2)}, 3: {(1, 3), (1, 4)}})
    dt_golden = DominoTableau.from_dominoes(
        {1: {(2, 1), (3, 1)}, 2: {(1, 2), (1, 3)}, 3: {(2, 2), (2, 3)}},
        zero_cell=True)
    mt1 = DominoTableau.from_dominoes(
        {1: {(2, 1), (3, 1)}, 2: {(1, 2), (2, 2)}, 3: {(1, 3), (1, 4)}},
        zero_cell=True)
    mt23 = DominoTableau.from_dominoes(
        {1: {(1, 1), (2, 1)}, 2: {(1, 2), (1, 3)}, 3: {(1, 4), (1, 5)}})
    checks = [
        ("three-row action, type C", lambda: c_three_row(a_c, "pipeline") == ca_c
         and c_three_row(ca_c, "pipeline") == a_c),
        ("three-row action, type B", lambda: c_three_row(a_b, "pipeline") == ca_b
         and c_three_row(ca_b, "pipeline") == a_b),
        ("oracle agrees on both pairs", lambda: c_three_row(a_c, "oracle") == ca_c
         and c_three_row(a_b, "oracle") == ca_b),
        ("slide algorithm", lambda: dt(rs_insert([-2, -3, 1, 0, -1, 3, 2])) == dt_golden),
        ("cycles", lambda: cycles(r) == frozenset({frozenset({1}), frozenset({2, 3})})),
        ("moving through {1}", lambda: move_through_seq(r, [{1}]) == mt1),
        ("moving through {2,3}", lambda: move_through_seq(r, [{2, 3}]) == mt23),
        ("plain equals zero-inserted duality", lambda: all(
            bv_raw(m) == bv_prime(m)
            for m in [(1, -2), (2, 2, -1), (0, 1, 3), (-3, 1, -1)])),
    ]
    return checks


@cli.command()
@click.pass_obj
def verify(cfg, ):
    """Run the golden-example battery and report pass/fail."""
    failures = 0
    for name, check in _golden_checks():
        ok = check()
        failures += not ok
        click.echo(f"{'PASS' if ok else 'FAIL'}  {name}")
    if failures:
        raise AssertionError(f"{failures} golden check(s) failed")
    click.echo("all golden checks passed")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False, obj=None)
        return 0
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 64
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 130
    except DOMAIN_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
