"""Command-line interface: ``legaug <command> ...``.

Exit codes: 0 on success, 1 on bad input or a domain error, 2 when a
verification check fails.
"""

from __future__ import annotations

import itertools
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import click

from .augcat import MINUS, PLUS, AugCategory, HomElement, dga_homotopic, enumerate_augmentations, is_isomorphic_augplus, isomorphic_in_cohomology
from .bordered import Assembly, assemble, sections
from .dga import Augmentation, Dga, check_dga
from .errors import LegaugError
from .mcopy import build_mcopy
from .ncpoly import Ring
from .plat import classical_invariants, parse_plat
from .slice_mc import verify_slice_equivalences
from .verify import CHECKS, Workspace, run_checks

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2
MAX_ARITY_CAP = 8


class VerificationFailed(Exception):
    pass


@dataclass
class RunConfig:
    input_path: Path | None
    input_kind: str  # "plat" or "raw-dga"
    field_spec: str
    max_arity: int = 4
    command: str = ""
    output: str = "table"
    flips: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        self.ring = Ring.parse(self.field_spec)
        if not 1 <= self.max_arity <= MAX_ARITY_CAP:
            raise LegaugError(f"--max-arity must lie in [1, {MAX_ARITY_CAP}]")
        if self.input_kind not in ("plat", "raw-dga"):
            raise LegaugError(f"unknown input kind {self.input_kind!r}")


@dataclass
class Loaded:
    config: RunConfig
    dga: Dga
    assembly: Assembly | None = None
    _augs: list[Augmentation] | None = field(default=None, repr=False)

    @property
    def ring(self) -> Ring:
        return self.config.ring

    def augs(self) -> list[Augmentation]:
        if self._augs is None:
            self._augs = enumerate_augmentations(self.dga, self.ring)
        return self._augs

    def aug(self, index: int) -> Augmentation:
        augs = self.augs()
        if not 1 <= index <= len(augs):
            raise LegaugError(f"augmentation index {index} out of range 1..{len(augs)}")
        return augs[index - 1]


def emit_json(result: Any) -> bytes:
    """Deterministic JSON: sorted keys, fixed separators, trailing newline."""
    return (json.dumps(result, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _input_kind(path: Path) -> str:
    if path.suffix == ".json":
        return "raw-dga"
    head = path.read_text().lstrip()[:1]
    return "raw-dga" if head == "{" else "plat"


def load(config: RunConfig) -> Loaded:
    if config.input_path is None:
        raise LegaugError("no input file")
    text = config.input_path.read_text()
    if config.input_kind == "raw-dga":
        dga = Dga.from_json(text, config.ring)
        rep = check_dga(dga)
        if not rep.ok:
            raise LegaugError(f"input DGA fails the checks:\n{rep}")
        return Loaded(config, dga)
    diagram = parse_plat(text)
    asm = assemble(diagram, config.ring, config.flips)
    return Loaded(config, asm.dga, asm)


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise LegaugError(f"--pair expects i,j, got {text!r}") from None
    return a, b


def _parse_sections(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise LegaugError(f"--sections expects a..b, got {text!r}") from None
    return a, b


def _out(ctx: click.Context, payload: Any, table: str) -> None:
    if ctx.obj["json"]:
        click.echo(emit_json(payload).decode("utf-8"), nl=False)
    else:
        click.echo(table)


def _config(ctx: click.Context, path: str | None, field_spec: str, command: str, max_arity: int = 4) -> RunConfig:
    p = Path(path) if path else None
    kind = _input_kind(p) if p else "plat"
    return RunConfig(
        p,
        kind,
        field_spec,
        max_arity,
        command,
        "json" if ctx.obj["json"] else "table",
        tuple(ctx.obj["flips"]),
    )


_input = click.argument("path", type=click.Path(exists=True, dir_okay=False))


def _field_option(default: str):
    return click.option("--field", "field_spec", default=default, show_default=True, help="Z or Fp:<prime>")


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Emit deterministic JSON.")
@click.option("--flip-component", "flips", type=int, multiple=True, help="Reverse the orientation of a component.")
@click.pass_context
def cli(ctx: click.Context, as_json: bool, flips: tuple[int, ...]) -> None:
    """Augmentation categories of Legendrian links in plat position."""
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    ctx.obj["flips"] = flips


@cli.command()
@_input
@_field_option("Z")
@click.option("--sections", "span", default=None, help="Slice range a..b (0 = left cusps, N+1 = right cusps).")
@click.pass_context
def dga(ctx: click.Context, path: str, field_spec: str, span: str | None) -> None:
    """Print the DGA as raw JSON."""
    cfg = _config(ctx, path, field_spec, "dga")
    loaded = load(cfg)
    d = loaded.dga
    if span is not None:
        if loaded.assembly is None:
            raise LegaugError("--sections needs a plat input")
        a, b = _parse_sections(span)
        d = sections(loaded.assembly.diagram, a, b, cfg.ring, cfg.flips).dga
    click.echo(emit_json(d.to_json_obj()).decode("utf-8"), nl=False)


@cli.command()
@_input
@_field_option("Z")
@click.option("-m", "--copies", "m", type=click.IntRange(1, 6), default=2, show_default=True)
@click.pass_context
def mcopy(ctx: click.Context, path: str, field_spec: str, m: int) -> None:
    """Print the DGA of the m-copy."""
    loaded = load(_config(ctx, path, field_spec, "mcopy"))
    mc = build_mcopy(loaded.dga, m)
    _out(ctx, mc.to_json_obj(), str(mc))


@cli.command()
@_input
@_field_option("Fp:2")
@click.pass_context
def augs(ctx: click.Context, path: str, field_spec: str) -> None:
    """List all augmentations."""
    loaded = load(_config(ctx, path, field_spec, "augs"))
    found = loaded.augs()
    lines = [f"{len(found)} augmentation(s) over {loaded.ring.name}"]
    for i, e in enumerate(found, 1):
        lines.append(f"  e{i}: " + ", ".join(f"{k}={v}" for k, v in e.as_dict().items()))
    _out(ctx, [e.as_dict() for e in found], "\n".join(lines))


@cli.command()
@_input
@_field_option("Fp:2")
@click.pass_context
def invariants(ctx: click.Context, path: str, field_spec: str) -> None:
    """Thurston-Bennequin number, writhe and rotation numbers of a plat."""
    loaded = load(_config(ctx, path, field_spec, "invariants"))
    if loaded.assembly is None:
        raise LegaugError("invariants need a plat input")
    inv = classical_invariants(loaded.assembly.diagram, loaded.assembly.trace)
    payload = {"tb": inv.tb, "writhe": inv.writhe, "rotation": list(inv.rotation), "tb_per_component": list(inv.tb_per_component)}
    _out(ctx, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))


def _direction(text: str) -> str:
    if text not in (PLUS, MINUS):
        raise LegaugError("--direction must be plus or minus")
    return text


@cli.command()
@_input
@_field_option("Fp:2")
@click.option("--pair", default="1,1", show_default=True, help="Augmentation indices i,j (1-based).")
@click.option("--direction", default=PLUS, show_default=True, help="plus or minus.")
@click.pass_context
def cohomology(ctx: click.Context, path: str, field_spec: str, pair: str, direction: str) -> None:
    """Ranks of the cohomology of hom(e_i, e_j)."""
    loaded = load(_config(ctx, path, field_spec, "cohomology"))
    i, j = _parse_pair(pair)
    e1, e2 = loaded.aug(i), loaded.aug(j)
    cat = AugCategory(loaded.dga, loaded.ring)
    direction = _direction(direction)
    ranks = cat.cohomology(e1, e2, direction)
    payload = {str(k): v for k, v in sorted(ranks.items()) if v}
    sym = "+" if direction == PLUS else "-"
    table = "\n".join([f"H^* Hom{sym}(e{i}, e{j}) over {loaded.ring.name}"] + [f"  H^{k} = {v}" for k, v in sorted(ranks.items())])
    _out(ctx, payload, table)


@cli.command()
@_input
@_field_option("Fp:2")
@click.option("--pair", default="1,1", show_default=True, help="Augmentation indices i,j; products use objects e_i, ..., e_i, e_j.")
@click.option("--direction", default=PLUS, show_default=True)
@click.option("--max-arity", type=int, default=4, show_default=True)
@click.option("--limit", type=int, default=100000, show_default=True, help="Cap on argument tuples per arity.")
@click.pass_context
def mtable(ctx: click.Context, path: str, field_spec: str, pair: str, direction: str, max_arity: int, limit: int) -> None:
    """Table of nonzero products m_k on basis elements."""
    cfg = _config(ctx, path, field_spec, "mtable", max_arity)
    loaded = load(cfg)
    direction = _direction(direction)
    i, j = _parse_pair(pair)
    e1, e2 = loaded.aug(i), loaded.aug(j)
    cat = AugCategory(loaded.dga, loaded.ring)
    rows = []
    for k in range(1, cfg.max_arity + 1):
        objs = [e1] * k + [e2]
        path_ = list(range(1, k + 2)) if direction == PLUS else list(range(k + 1, 0, -1))
        bases = [cat.hom_basis(objs[t], objs[t + 1], direction) for t in range(k)]
        for combo in itertools.islice(itertools.product(*[b.keys for b in bases]), limit):
            args = [HomElement(b, {key: 1}) for b, key in zip(bases, combo)]
            args.reverse()
            out = cat.compose(objs, path_, args)
            if not out.is_zero():
                rows.append({"arity": k, "inputs": [str(a) for a in args], "output": str(out)})
    table = "\n".join(f"m{r['arity']}({', '.join(r['inputs'])}) = {r['output']}" for r in rows) or "all products vanish"
    _out(ctx, rows, table)


@cli.command()
@_input
@_field_option("Fp:2")
@click.option("--pair", default="1,2", show_default=True)
@click.pass_context
def iso(ctx: click.Context, path: str, field_spec: str, pair: str) -> None:
    """Decide whether two augmentations are isomorphic, by two independent routes."""
    loaded = load(_config(ctx, path, field_spec, "iso"))
    i, j = _parse_pair(pair)
    e1, e2 = loaded.aug(i), loaded.aug(j)
    cat = AugCategory(loaded.dga, loaded.ring)
    homotopy, _ = dga_homotopic(loaded.dga, e1, e2)
    single = len(loaded.dga.basepoints) <= 1
    witness = None
    if homotopy and single:
        _, witness = is_isomorphic_augplus(cat, e1, e2, construct_inverse=True)
    try:
        cohom = isomorphic_in_cohomology(cat, e1, e2)
    except LegaugError:
        cohom = None
    payload = {
        "homotopy": homotopy,
        "cohomology_search": cohom,
        "witness": None if witness is None else {"alpha": str(witness.alpha), "beta": str(witness.beta)},
    }
    lines = [f"e{i} ~ e{j} by DGA homotopy: {homotopy}", f"mutually inverse classes found in H^0: {cohom}"]
    if witness is not None:
        lines += [f"  alpha = {witness.alpha}", f"  beta  = {witness.beta}"]
    _out(ctx, payload, "\n".join(lines))
    if cohom is not None and cohom != homotopy:
        raise VerificationFailed("the two isomorphism tests disagree")


@cli.command()
@click.argument("check", type=click.Choice(sorted(CHECKS) + ["all"]))
@_input
@_field_option("Fp:2")
@click.option("--max-arity", type=int, default=4, show_default=True)
@click.option("--sample", type=int, default=60, show_default=True, help="Random tuples per arity and direction.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def verify(ctx: click.Context, check: str, path: str, field_spec: str, max_arity: int, sample: int, seed: int) -> None:
    """Run structural checks; exit 2 if any fails."""
    cfg = _config(ctx, path, field_spec, "verify", max_arity)
    loaded = load(cfg)
    ws = Workspace(loaded.dga, cfg.ring, loaded.assembly, cfg.max_arity, sample, seed)
    names = sorted(CHECKS) if check == "all" else [check]
    results = run_checks(ws, names)
    lines = []
    for r in results:
        status = "SKIP" if r.skipped else ("PASS" if r.ok else "FAIL")
        extra = f" ({r.skipped})" if r.skipped else f" [{r.checked} checked]"
        lines.append(f"{status} {r.name}{extra}")
        lines += [f"    {m}" for m in r.messages]
    _out(ctx, [r.as_json() for r in results], "\n".join(lines))
    if not all(r.ok for r in results):
        raise VerificationFailed("verification failed")


@cli.command("slice-check")
@click.option("-n", "--strands", "n", type=click.IntRange(1, 10), default=4, show_default=True)
@click.option("--trials", type=int, default=100, show_default=True)
@_field_option("Fp:3")
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def slice_check(ctx: click.Context, n: int, trials: int, field_spec: str, seed: int) -> None:
    """Randomized identities between slice categories and Morse complex categories."""
    cfg = _config(ctx, None, field_spec, "slice-check")
    rep = verify_slice_equivalences(n, None, trials, cfg.ring, seed)
    payload = {"ok": rep.ok, "checks": rep.checks, "failures": rep.failures}
    lines = [f"{'PASS' if rep.ok else 'FAIL'} slice identities over {cfg.ring.name}, n={n}"]
    lines += [f"  {k}: {v}" for k, v in sorted(rep.checks.items())] + [f"  {f}" for f in rep.failures]
    _out(ctx, payload, "\n".join(lines))
    if not rep.ok:
        raise VerificationFailed("slice identities failed")


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch ``argv`` and return the exit code."""
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="legaug", standalone_mode=False)
    except VerificationFailed as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_VERIFY
    except LegaugError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DOMAIN
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_DOMAIN
    except (click.exceptions.Abort, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run())
