"""Command-line front end.

Subcommands: solve, verify, enumerate, gen, bench.  Exit codes are part of
the interface:

    0  solved / unique
    1  usage, I/O, or schema error (including enumeration over the cap)
    2  point is not a valid solution
    3  no solution found (secondary ray / enumeration came up empty)
    4  multiple solutions

``verify`` reads the report that ``solve --output`` wrote; ``solve --cap N``
additionally requests a uniqueness certificate from the enumeration oracle.
"""

from __future__ import annotations

import json
import statistics
import sys
import time

import click
import numpy as np

from . import fileio
from .beam import to_contact_lcp
from .cascade import as_lcp_solution, assemble_full, solve_cascade
from .contact import assemble, solve_structured, split_signed
from .errors import (
    DimensionTooLarge,
    LcpError,
    MaxIterationsExceeded,
    NumericalBreakdown,
    PivotLimitExceeded,
    RayTermination,
    SchemaError,
)
from .generate import gen_problem
from .lcp import assemble_w, validate
from .lemke import lemke_solve
from .oracle import Verdict, certify_unique

EXIT_SOLVED = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NONE = 3
EXIT_MULTIPLE = 4

_SOLVER_FAILURES = (RayTermination, PivotLimitExceeded, NumericalBreakdown, MaxIterationsExceeded)


@click.group()
def cli():
    """Two-sided contact LCP toolkit."""


def _structure(pf: fileio.ProblemFile):
    """Assembled LCP plus block structure: (lcp, block_sizes, gap_sums).

    block_sizes/gap_sums are None for general problems; gap_sums holds the
    per-index value of gamma_l + gamma_u (i.e. 2 y*) in block order.
    """
    if pf.kind == "general":
        return pf.problem, None, None
    if pf.kind == "contact":
        c = pf.problem
        return assemble(c), [c.n], 2.0 * c.y_star
    if pf.kind == "beam":
        c = to_contact_lcp(pf.problem)
        return assemble(c), [c.n], 2.0 * c.y_star
    if pf.kind == "cascade":
        p = pf.problem
        return (
            assemble_full(p),
            [blk.n for blk in p.blocks],
            np.concatenate([blk.q1 + blk.q2 for blk in p.blocks]),
        )
    raise SchemaError(f"unknown kind {pf.kind!r}", field="kind")


def _contact_section(z: np.ndarray, w: np.ndarray, sizes: list[int]) -> dict:
    """Canonical per-block force split and gap vectors for the report."""
    f_l, f_u, g_l, g_u = [], [], [], []
    offset = 0
    for n in sizes:
        z1 = z[offset : offset + n]
        z2 = z[offset + n : offset + 2 * n]
        lo, up = split_signed(z1 - z2)
        f_l.append(lo)
        f_u.append(up)
        g_l.append(w[offset : offset + n])
        g_u.append(w[offset + n : offset + 2 * n])
        offset += 2 * n
    return {
        "F_l": np.concatenate(f_l).tolist(),
        "F_u": np.concatenate(f_u).tolist(),
        "gamma_l": np.concatenate(g_l).tolist(),
        "gamma_u": np.concatenate(g_u).tolist(),
    }


def _fail(exc: Exception, code: int) -> int:
    click.echo(f"error: {exc}", err=True)
    return code


@cli.command("solve")
@click.option("--input", "input_path", required=True, help="Problem file (JSON).")
@click.option("--output", "output_path", default=None, help="Where to write the report.")
@click.option(
    "--solver",
    type=click.Choice(["lemke", "pgs", "cascade"]),
    default="lemke",
    show_default=True,
)
@click.option("--tol", type=float, default=None, help="Validation tolerance.")
@click.option(
    "--cap", type=int, default=None, help="Request a uniqueness certificate (enumeration cap)."
)
def cmd_solve(input_path, output_path, solver, tol, cap) -> int:
    """Solve a problem file and write a report."""
    try:
        pf = fileio.load_problem(input_path)
        lcp, sizes, _ = _structure(pf)
    except SchemaError as exc:
        return _fail(exc, EXIT_USAGE)

    if solver == "pgs" and pf.kind not in ("contact", "beam"):
        raise click.UsageError("--solver pgs requires a contact or beam problem")
    if solver == "cascade" and pf.kind != "cascade":
        raise click.UsageError("--solver cascade requires a cascade problem")

    try:
        start = time.perf_counter()
        if solver == "lemke":
            sol = lemke_solve(lcp)
        elif solver == "pgs":
            c = pf.problem if pf.kind == "contact" else to_contact_lcp(pf.problem)
            sol = solve_structured(c).as_lcp_solution()
        else:
            sol = as_lcp_solution(pf.problem, solve_cascade(pf.problem))
        wall = time.perf_counter() - start
    except _SOLVER_FAILURES as exc:
        return _fail(exc, EXIT_NONE)
    except LcpError as exc:
        return _fail(exc, EXIT_USAGE)

    tol_eff = tol if tol is not None else 1e-8 * (1.0 + float(np.abs(lcp.q).max()))
    report = validate(lcp, sol.z, tol_eff)
    doc = {
        "solver_tag": sol.solver_tag,
        "kind": pf.kind,
        "solved": report.solved,
        "z": sol.z.tolist(),
        "w": sol.w.tolist(),
        "residuals": {
            "min_z": report.min_z,
            "min_w": report.min_w,
            "comp_gap": report.comp_gap,
        },
        "iterations": sol.iterations,
        "wall_time": wall,
    }
    if sizes is not None:
        doc["contact"] = _contact_section(sol.z, sol.w, sizes)
    if cap is not None:
        try:
            cert = certify_unique(lcp, tol=tol if tol is not None else 1e-9, cap=cap)
        except DimensionTooLarge as exc:
            return _fail(exc, EXIT_USAGE)
        doc["uniqueness_verdict"] = cert.verdict.value

    text = json.dumps(doc, indent=2) + "\n"
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    return EXIT_SOLVED if report.solved else EXIT_INVALID


@cli.command("verify")
@click.option("--input", "input_path", required=True, help="Problem file (JSON).")
@click.option(
    "--output",
    "solution_path",
    required=True,
    help="Solution/report file to check (as written by solve).",
)
@click.option("--tol", type=float, default=1e-9, show_default=True)
def cmd_verify(input_path, solution_path, tol) -> int:
    """Re-validate a stored solution against its problem."""
    try:
        pf = fileio.load_problem(input_path)
        lcp, sizes, gap_sums = _structure(pf)
        with open(solution_path, encoding="utf-8") as fh:
            doc = fileio.parse_report(fh.read())
        z = np.asarray(doc["z"], dtype=np.float64)
        if z.shape[0] != lcp.n:
            raise SchemaError(
                f"z has length {z.shape[0]} but the problem has dimension {lcp.n}",
                field="report.z",
            )
    except (SchemaError, OSError) as exc:
        return _fail(exc, EXIT_USAGE)

    report = validate(lcp, z, tol)
    click.echo(f"feasible: {report.feasible}")
    click.echo(f"solved: {report.solved}")
    click.echo(f"min_z: {report.min_z:.6e}")
    click.echo(f"min_w: {report.min_w:.6e}")
    click.echo(f"comp_gap: {report.comp_gap:.6e}")
    for idx, kind, magnitude in report.per_index_violations:
        click.echo(f"violation[{idx}] {kind}: {magnitude:.6e}")
    if report.degenerate_indices:
        click.echo(f"degenerate indices: {list(report.degenerate_indices)}")

    if sizes is not None:
        w = assemble_w(lcp, z)
        force_prod = 0.0
        gap_residual = 0.0
        offset = 0
        pos = 0
        for n in sizes:
            z1 = z[offset : offset + n]
            z2 = z[offset + n : offset + 2 * n]
            w1 = w[offset : offset + n]
            w2 = w[offset + n : offset + 2 * n]
            force_prod = max(force_prod, float((z1 * z2).max(initial=0.0)))
            seg = gap_sums[pos : pos + n]
            gap_residual = max(gap_residual, float(np.abs(w1 + w2 - seg).max(initial=0.0)))
            offset += 2 * n
            pos += n
        click.echo(f"max F_l*F_u: {force_prod:.6e}")
        click.echo(f"gap-sum residual: {gap_residual:.6e}")

    return EXIT_SOLVED if report.solved else EXIT_INVALID


@cli.command("enumerate")
@click.option("--input", "input_path", required=True, help="Problem file (JSON).")
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--cap", type=int, default=14, show_default=True)
def cmd_enumerate(input_path, tol, cap) -> int:
    """Enumerate all solutions by complementary support and classify uniqueness."""
    try:
        pf = fileio.load_problem(input_path)
        lcp, _, _ = _structure(pf)
        cert = certify_unique(lcp, tol=tol, cap=cap)
    except (SchemaError, DimensionTooLarge) as exc:
        return _fail(exc, EXIT_USAGE)

    enum = cert.enumeration
    for sol, count in zip(enum.solutions, enum.multiplicities):
        click.echo(f"solution (x{count}): {sol.z.tolist()}")
    for sing in enum.singular_supports:
        state = "consistent" if sing.consistent else "inconsistent"
        click.echo(f"singular support {list(sing.support)}: {state}")
    click.echo(f"verdict: {cert.verdict.value}")
    return {
        Verdict.UNIQUE: EXIT_SOLVED,
        Verdict.MULTIPLE: EXIT_MULTIPLE,
        Verdict.NONE: EXIT_NONE,
    }[cert.verdict]


@cli.command("gen")
@click.option("--kind", type=click.Choice(list(fileio.KINDS)), required=True)
@click.option("--n", type=click.IntRange(min=1), default=4, show_default=True)
@click.option(
    "--t",
    type=click.IntRange(min=1),
    default=3,
    show_default=True,
    help="Block count (cascade only).",
)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", "output_path", default=None, help="Write here instead of stdout.")
def cmd_gen(kind, n, t, seed, output_path) -> int:
    """Generate a deterministic pseudo-random problem file."""
    problem = gen_problem(kind, n, t, seed)
    pf = fileio.ProblemFile(
        kind, problem, {"name": f"{kind}-n{n}-seed{seed}", "seed": seed}
    )
    text = fileio.serialize_problem(pf)
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    return EXIT_SOLVED


@cli.command("bench")
@click.option(
    "--n",
    "sizes_arg",
    default="10,50",
    show_default=True,
    help="Comma-separated problem sizes.",
)
@click.option("--t", "reps", type=click.IntRange(min=1), default=5, show_default=True,
              help="Repetitions per measurement.")
@click.option("--seed", type=int, default=0, show_default=True)
def cmd_bench(sizes_arg, reps, seed) -> int:
    """Time both solvers on generated contact instances; CSV on stdout."""
    try:
        sizes = [int(tok) for tok in sizes_arg.split(",") if tok.strip()]
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError
    except ValueError:
        raise click.UsageError(f"--n must be comma-separated positive integers, got {sizes_arg!r}")

    from .generate import gen_contact

    rng = np.random.default_rng(seed)
    click.echo("kind,n,solver,median_wall_time,iterations")
    for n in sizes:
        c = gen_contact(n, rng)
        lcp = assemble(c)
        for tag in ("lemke", "pgs"):
            times = []
            iterations = 0
            for _ in range(reps):
                start = time.perf_counter()
                if tag == "lemke":
                    sol = lemke_solve(lcp)
                    iterations = sol.iterations
                else:
                    iterations = solve_structured(c).sweeps
                times.append(time.perf_counter() - start)
            click.echo(f"contact,{n},{tag},{statistics.median(times):.6g},{iterations}")
    return EXIT_SOLVED


def main(argv=None) -> int:
    """Entry point returning the exit code (console script wraps it in sys.exit)."""
    try:
        rv = cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    return rv if isinstance(rv, int) else EXIT_SOLVED


if __name__ == "__main__":
    sys.exit(main())
