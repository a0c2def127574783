"""Command line interface: ``goodsemigroup <command> ...``.

Exit status 0 on success, 1 when a computation or check fails (the error
message is printed as is), 2 on malformed arguments or input files.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click
import numpy as np

from ._box import clamp_table
from .exceptions import GoodSemigroupError, UsageError
from .ideal import ideal_from_generators, principal_ideal
from .lattice import format_point, parse_point
from .levels import compute_levels
from .oracle import CorpusSpec, brute_force_partition, write_corpus
from .semigroup import check_small_elements, parse_semigroup
from .subspace import subspaces_of_level, theorem_main_check


def _load(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_semigroup(text)


def _partition(S, omega=None, generators=()):
    if generators:
        E = ideal_from_generators(S, [parse_point(g, S.d) for g in generators])
    else:
        if omega is None:
            omega = S.minimal_nonzero()
            if omega is None:
                raise UsageError("--omega is required for a non-local semigroup")
        else:
            omega = parse_point(omega, S.d)
        E = principal_ideal(S, omega)
    return compute_levels(E.complement(), E)


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except UsageError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)
        except GoodSemigroupError as exc:
            click.echo(str(exc), err=True)
            ctx.exit(1)


@click.group(cls=_Group)
def main():
    """Good semigroups, their ideals and the levels of Apery sets."""


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
def validate(file):
    """Check the axioms for the small elements listed in FILE."""
    try:
        text = Path(file).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {file}: {exc.strerror}") from None
    d, points, conductor = parse_semigroup(text, validate=False)
    report = check_small_elements(d, points, conductor)
    click.echo(report.to_text(), nl=False)
    sys.exit(0 if report.ok else 1)


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--omega", default=None, help="Generator of the principal ideal, e.g. (1,2,3).")
def apery(file, omega):
    """Levels of the Apery set of OMEGA."""
    click.echo(_partition(_load(file), omega).to_text(), nl=False)


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--omega", default=None)
@click.option("--generator", "generators", multiple=True,
              help="Ideal generator; repeat for a non-principal ideal.")
def levels(file, omega, generators):
    """Levels of the complement of an ideal."""
    click.echo(_partition(_load(file), omega, generators).to_text(), nl=False)


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--omega", default=None)
def subspaces(file, omega):
    """Representatives per level with their dimensions."""
    P = _partition(_load(file), omega)
    for i in range(1, P.N + 1):
        click.echo(f"A{i}")
        for s in subspaces_of_level(P, i):
            click.echo(f"dim={s.dimension} {s}")


@main.command("check-theorem")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--omega", default=None)
@click.option("--all-small", is_flag=True, help="Use every nonzero small element as omega.")
def check_theorem(file, omega, all_small):
    """Level count and subspace-dimension thresholds for OMEGA + S."""
    S = _load(file)
    if all_small:
        if omega is not None:
            raise UsageError("--omega and --all-small are exclusive")
        omegas = sorted(p for p in S.small if any(p))
    else:
        if omega is None:
            omega = S.minimal_nonzero()
            if omega is None:
                raise UsageError("--omega is required for a non-local semigroup")
        else:
            omega = parse_point(omega, S.d)
        omegas = [omega]
    failed = 0
    for w in omegas:
        report = theorem_main_check(compute_levels(principal_ideal(S, w).complement()), w)
        prefix = f"omega={format_point(w)} " if all_small else ""
        click.echo(prefix + report.to_text())
        failed += not report.passed
    sys.exit(1 if failed else 0)


@main.command()
@click.option("--seed", type=int, required=True)
@click.option("--d", "d", type=click.IntRange(1, 6), required=True)
@click.option("--count", type=click.IntRange(1), default=1, show_default=True)
@click.option("--kind", type=click.Choice(["closure", "product"]), default="closure",
              show_default=True)
@click.option("--caps", default=None, help="Conductor cap per axis, e.g. (8,8).")
@click.option("--out", type=click.Path(file_okay=False), default=".", show_default=True)
def generate(seed, d, count, kind, caps, out):
    """Write a reproducible corpus of validated semigroups."""
    spec = CorpusSpec(seed=seed, d=d, count=count, kind=kind,
                      caps=parse_point(caps, d) if caps else ())
    Path(out).mkdir(parents=True, exist_ok=True)
    for path in write_corpus(spec, out):
        click.echo(str(path))


@main.command("oracle-diff")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--omega", default=None)
@click.option("--padding", type=click.IntRange(1), default=None,
              help="Grid margin beyond the ideal conductor (default max(omega)+2).")
def oracle_diff(file, omega, padding):
    """Compare the levels with a brute-force peel of an explicit grid."""
    S = _load(file)
    P = _partition(S, omega)
    G = brute_force_partition(S, P.ideal, padding)
    mine = clamp_table(P.level_table(), G.grid.bound)
    bad = np.argwhere(mine != G.table)
    click.echo(f"grid {format_point(G.grid.bound)} cells={G.table.size} "
               f"levels={P.N}/{G.N} mismatches={len(bad)}")
    for x in bad[:20]:
        x = tuple(int(v) for v in x)
        click.echo(f"{format_point(x)} primary={mine[x]} oracle={G.table[x]}")
    sys.exit(0 if not len(bad) and P.N == G.N else 1)


def run(argv=None) -> int:
    """Run the CLI in-process and return the exit status."""
    try:
        rc = main.main(args=argv, prog_name="goodsemigroup", standalone_mode=False)
    except click.exceptions.ClickException as exc:
        exc.show()
        return exc.exit_code
    except SystemExit as exc:
        return int(exc.code or 0)
    return rc if isinstance(rc, int) else 0


if __name__ == "__main__":  # pragma: no cover
    main()
