"""Command-line interface: play, verify, render, replay, serve."""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from .adversaries import ADVERSARY_NAMES, make_adversary
from .render import render_matrix, render_state
from .strategies import Session, load_policy, run_master
from .traces import ReplayError, Trace, replay as replay_trace
from .verifier import fuzz_first_fit_bound, verify_forced_win


@click.group()
def main() -> None:
    """Online proper-interval coloring game tools."""


@main.command()
@click.option(
    "--adversary",
    "adversary_name",
    type=click.Choice(ADVERSARY_NAMES),
    default="first-fit",
    show_default=True,
)
@click.option("--seed", type=int, default=None, help="seed for the random adversary")
@click.option("--trace", "trace_path", type=click.Path(exists=True), default=None,
              help="trace file for the scripted adversary")
@click.option("--render", "do_render", is_flag=True, help="draw the board per move")
@click.option("--out", type=click.Path(), default=None, help="write the game trace here")
def play(adversary_name: str, seed: Optional[int], trace_path: Optional[str],
         do_render: bool, out: Optional[str]) -> None:
    """Run the master strategy against an adversary until 7 colors."""
    scripted = None
    if trace_path is not None:
        with open(trace_path) as fh:
            scripted = Trace.from_json(fh.read())
    try:
        adversary = make_adversary(adversary_name, seed=seed, trace=scripted)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    session = Session.new(adversary=adversary)
    try:
        if do_render:
            policy = load_policy()
            while not session.finished():
                pending = session.next_pending(policy)
                color = adversary.choose(pending)
                session.commit(pending, color)
                click.echo(render_state(session.state))
        else:
            run_master(session)
    except ReplayError as exc:
        raise click.ClickException(f"scripted trace rejected: {exc}")
    used = sorted(c.value for c in session.state.used_colors())
    click.echo(
        f"forced {len(used)} colors ({', '.join(used)}) in "
        f"{len(session.moves)} moves vs {adversary.name}"
    )
    if out:
        with open(out, "w") as fh:
            fh.write(session.trace().to_json())
        click.echo(f"trace written to {out}")


@main.command()
@click.option("--omega", type=int, default=4, show_default=True)
@click.option("--memo", is_flag=True, help="memoize subtrees by window signature")
@click.option("--export-failures", type=click.Path(), default=None,
              help="directory for failing traces")
@click.option("--json", "as_json", is_flag=True, help="emit the report as JSON")
def verify(omega: int, memo: bool, export_failures: Optional[str],
           as_json: bool) -> None:
    """Exhaustively check the strategy against all canonical adversaries."""
    if omega != 4:
        raise click.UsageError(
            "the shipped strategy targets omega=4; other clique bounds "
            "have no strategy table"
        )
    report = verify_forced_win(
        omega=omega, use_memo=memo, export_failures=export_failures
    )
    click.echo(report.to_json() if as_json else report.summary())
    sys.exit(0 if report.all_leaves_force_7 else 1)


@main.command()
@click.option("--omega", type=int, default=4, show_default=True)
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def fuzz(omega: int, trials: int, seed: int) -> None:
    """Check greedy coloring stays within 2*omega-1 colors on random games."""
    ok, worst = fuzz_first_fit_bound(omega, trials, seed)
    bound = 2 * omega - 1
    click.echo(
        f"{'PASS' if ok else 'FAIL'}: greedy used at most {worst} colors "
        f"over {trials} trials (bound {bound})"
    )
    sys.exit(0 if ok else 1)


@main.command()
@click.argument("trace_path", type=click.Path(exists=True))
@click.option("--matrix", "show_matrix", is_flag=True, help="also print the endpoint matrix")
def render(trace_path: str, show_matrix: bool) -> None:
    """Replay a trace and draw the final board."""
    with open(trace_path) as fh:
        trace = Trace.from_json(fh.read())
    try:
        state = replay_trace(trace)
    except ReplayError as exc:
        raise click.ClickException(str(exc))
    click.echo(render_state(state), nl=False)
    if show_matrix:
        click.echo(render_matrix(state), nl=False)


@main.command(name="replay")
@click.argument("trace_path", type=click.Path(exists=True))
def replay_cmd(trace_path: str) -> None:
    """Validate a trace through the engine; exit nonzero on any violation."""
    with open(trace_path) as fh:
        trace = Trace.from_json(fh.read())
    try:
        state = replay_trace(trace)
    except ReplayError as exc:
        raise click.ClickException(str(exc))
    used = sorted(c.value for c in state.used_colors())
    click.echo(
        f"ok: {len(trace.moves)} moves, {len(used)} colors ({', '.join(used)})"
    )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Serve the interactive game API (and bundled web UI, if present)."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
