"""Command-line interface: ``mmpts enumerate | analyze | canon | derive | verify | selftest``."""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from . import codec
from .canonical import IsoStore, canonical_form
from .census import Statistic, group_table, group_table_tsv, histogram, labelled_count
from .design import Claim, DesignError, LeaveKind, Pbd35, validate
from .pipeline import enumerate_designs
from .transforms import (
    DeriveOp,
    delete_point,
    deletion_points,
    design_to_pbd,
    from_pbd,
    leave_normalizing_perm,
    normalize_leave,
    to_pbd,
)


@click.group()
@click.option("-v", "--verbose", count=True, help="Log progress to stderr.")
def main(verbose: int) -> None:
    """Enumerate and analyse maximum partial triple systems."""
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@main.command("enumerate")
@click.option("--v", "v", type=int, required=True, help="Order of the systems.")
@click.option("--type", "type_filter", type=click.Choice(["q", "n", "both"]), default="both")
@click.option("--seeds", type=click.Choice(["paper", "auto"]), default="auto")
@click.option("--engine", type=click.Choice(["backtrack", "dlx", "both"]), default="backtrack")
@click.option("--method", type=click.Choice(["auto", "direct", "derive"]), default="auto")
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--split-depth", type=int, default=0, show_default=True)
@click.option("--check/--no-check", default=False, help="Validate every completion.")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def enumerate_cmd(v, type_filter, seeds, engine, method, workers, split_depth, check, out):
    """Run the search and write one canonical representative per class."""
    progress = lambda msg: click.echo(msg, err=True)  # noqa: E731
    res = enumerate_designs(
        v, method, seeds, engine, workers, split_depth, type_filter, check, progress
    )
    tag = {"q": "Q", "n": "N"}.get(type_filter, "-")
    codec.write_file(out, codec.corpus_for(v, res.designs(), tag))
    click.echo(f"v\t{v}")
    click.echo(f"method\t{res.method}")
    click.echo(f"raw\t{res.raw}")
    click.echo(f"classes\t{res.classes}")
    if v % 6 in (4, 5):
        counts = res.type_counts()
        click.echo(f"type_q\t{counts.get('Q', 0)}")
        click.echo(f"type_n\t{counts.get('N', 0)}")
    for name, n in res.per_seed:
        click.echo(f"seed\t{name}\t{n}")


@main.command()
@click.option("--in", "src", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--stats", default="pasch,mitre,fano,groups", show_default=True)
@click.option("--histogram", "hist_dir", type=click.Path(file_okay=False), default=None)
@click.option("--labelled-count", "want_labelled", is_flag=True)
def analyze(src, stats, hist_dir, want_labelled):
    """Histograms of configuration counts and automorphism groups."""
    corpus = codec.read_file(src)
    name = Path(src).name
    wanted = [Statistic(s.strip()) for s in stats.split(",") if s.strip()]
    want_groups = Statistic.GROUP_ORDER in wanted or want_labelled
    groups = [canonical_form(d)[1] for d in corpus] if want_groups else []
    outdir = Path(hist_dir) if hist_dir else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    for stat in wanted:
        if stat is Statistic.GROUP_ORDER:
            text = group_table_tsv(group_table(groups), name)
        else:
            text = histogram(corpus, stat).to_tsv(name)
        click.echo(text, nl=False)
        if outdir:
            (outdir / f"{stat.value}.tsv").write_text(text, encoding="utf-8")
    click.echo(f"designs\t{len(corpus)}")
    if want_labelled:
        click.echo(f"labelled\t{labelled_count((g.order for g in groups), corpus.v)}")


@main.command()
@click.option("--in", "src", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--dedupe", is_flag=True, help="Keep one design per class, sorted by key.")
def canon(src, out, dedupe):
    """Relabel every design canonically."""
    corpus = codec.read_file(src)
    forms = [canonical_form(d, with_group=False)[0] for d in corpus]
    if dedupe:
        store = IsoStore()
        for f in forms:
            store.add(f.key, f.design)
        designs = store.designs()
    else:
        designs = [f.design for f in forms]
    codec.write_file(out, codec.Corpus(corpus.v, designs, corpus.type_tag, corpus.leave, corpus.kind))
    click.echo(f"read\t{len(corpus)}")
    click.echo(f"written\t{len(designs)}")


@main.command()
@click.option("--op", type=click.Choice([o.value for o in DeriveOp]), required=True)
@click.option("--in", "src", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--dedupe", is_flag=True)
def derive(op, src, out, dedupe):
    """Point deletion, or conversion to and from PBD(v, {3, 5*})."""
    corpus = codec.read_file(src)
    op = DeriveOp(op)
    results = []
    v = corpus.v
    kind = "mmpts"
    tag = "-"
    for d in corpus:
        if op is DeriveOp.DELETE_LEAVE_POINTS:
            results.extend(delete_point(d, x) for x in deletion_points(d))
            v = corpus.v - 1
        elif op is DeriveOp.TO_PBD:
            try:
                pbd = to_pbd(d)
            except DesignError:
                continue
            pd = pbd.as_design()
            results.append(pd.relabel(leave_normalizing_perm(pd)))
            kind = "pbd"
        else:
            pbd = design_to_pbd(d)
            results.extend(normalize_leave(from_pbd(pbd, i)) for i in range(15))
            tag = "Q"
    raw = len(results)
    if dedupe:
        store = IsoStore()
        for d in results:
            f, _ = canonical_form(d, with_group=False)
            store.add(f.key, f.design)
        results = store.designs()
    if op is DeriveOp.DELETE_LEAVE_POINTS and corpus.type_tag != "-" and v % 6 == 4:
        tag = corpus.type_tag
    codec.write_file(out, codec.corpus_for(v, results, tag, kind))
    click.echo(f"raw\t{raw}")
    click.echo(f"written\t{len(results)}")


@main.command()
@click.option("--in", "src", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--claim", type=click.Choice(["mmpts", "sts", "pbd"]), default="mmpts")
def verify(src, claim):
    """Exit 0 iff every line of the file is a valid design of the claimed kind."""
    lines = Path(src).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise click.ClickException("empty file")
    try:
        head = codec.loads(lines[0] + "\n")
    except DesignError as exc:
        raise click.ClickException(str(exc)) from None
    bad = 0
    total = 0
    for lineno, line in enumerate(lines[1:], start=2):
        s = line.strip()
        if not s:
            continue
        total += 1
        try:
            d = codec.decode(s, head.v, head.leave)
            if claim == "pbd":
                shape = d.leave_shape()
                if shape.kind is not LeaveKind.K5:
                    raise DesignError("leave is not a K5")
                Pbd35(d.v, d.triples, shape.points).check()
            else:
                validate(d, Claim(claim)).raise_first()
        except DesignError as exc:
            bad += 1
            click.echo(f"line {lineno}: {type(exc).__name__}: {exc}", err=True)
    click.echo(f"checked\t{total}")
    click.echo(f"invalid\t{bad}")
    sys.exit(1 if bad else 0)


@main.command()
@click.option("--criteria", default="1,2,3,4,5,6,7,8", show_default=True)
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--details", is_flag=True, help="Print the evidence for passing criteria too.")
def selftest(criteria, trials, details):
    """Run the small-order acceptance suite."""
    from .acceptance import run

    nums = [int(x) for x in criteria.split(",") if x.strip()]
    results = run(nums, trials, echo=click.echo, verbose=details)
    sys.exit(0 if all(r.ok for r in results) else 1)


if __name__ == "__main__":
    main()
