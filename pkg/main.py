import sys
import argparse
from typing import List, Optional
from src.log.logger import set_log_level, setup_logger
from src.game import trace_io
from src.game.engine import run_game
from src.builder.path_builder import PathBuilder, game_config
from src.painter.painters import parse_painter
from src.harness.dot_export import export_dot, roles_from_plan
from src.harness.interactive import play_interactive
from src.harness.verifier import verify_exhaustive, verify_sampled
from src.harness.verifier_config import VerifierConfig
from src.solver.solver import ExactSolver
from src.solver.solver_config import SolverConfig
from src.solver.strategy_table import save as save_table, verify_table

logger = setup_logger('MAIN PROCESSOR')


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info(f"Wrote {path}")
    else:
        print(text, end='' if text.endswith('\n') else '\n')


def cmd_play(args: argparse.Namespace) -> int:
    """Plays one game of PathBuilder against a named Painter or a person at the terminal."""
    cfg = game_config(args.n)
    builder = PathBuilder(args.n)
    if args.interactive:
        trace = play_interactive(args.n, builder=builder)
    else:
        painter = parse_painter(args.painter, cfg)
        trace = run_game(builder, painter, cfg)
        print(f"{getattr(painter, 'name', args.painter)} painter: {trace.status} (budget {cfg.budget})")
    if args.trace_out:
        trace_io.save(trace, args.trace_out)
    if args.dot:
        _write(export_dot(trace, roles_from_plan(builder.plan)), args.dot)
    if not args.interactive and not args.trace_out:
        print(trace_io.dumps(trace), end='')
    return 0 if trace.status.won else 1


def cmd_verify(args: argparse.Namespace) -> int:
    """Checks the Builder budget against every or against sampled Painter reply sequences."""
    if args.trials is not None:
        report = verify_sampled(args.n, args.trials, args.seed)
    else:
        report = verify_exhaustive(args.n, VerifierConfig(workers=args.workers))
    print(report.to_text())
    if args.record:
        _write(report.to_record() + '\n', args.record)
    return 0 if report.passed else 1


def cmd_solve(args: argparse.Namespace) -> int:
    """Computes the exact game value for red P_m against blue P_n."""
    config = SolverConfig()
    if args.max_budget is not None and args.max_budget > config.max_budget:
        config = SolverConfig(max_budget=args.max_budget)
    solver = ExactSolver(args.m, args.n, config)
    result = solver.solve(args.max_budget, with_table=bool(args.emit_table))
    if not result.solved:
        print(f"P{args.m}/P{args.n}: not decided within {args.max_budget or config.max_budget} rounds "
              f"({result.nodes_expanded} nodes)")
        return 1
    print(f"P{args.m}/P{args.n}: {result.value} rounds ({result.nodes_expanded} nodes)")
    if args.emit_table:
        leaves, deepest = verify_table(result.table)
        save_table(result.table, args.emit_table)
        print(f"table: {len(result.table)} entries, {leaves} verified plays, at most {deepest} rounds "
              f"-> {args.emit_table}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    """Renders a saved trace as Graphviz source or as the plain line format."""
    trace = trace_io.load(args.trace)
    text = export_dot(trace) if args.format == 'dot' else trace_io.dumps(trace)
    _write(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='ramsey-lab',
                                     description='Online Ramsey game laboratory: red P4 against blue P_n.')
    parser.add_argument('--log-level', help='override RAMSEY_LOG_LEVEL (DEBUG, INFO, WARNING, ...)')
    sub = parser.add_subparsers(dest='command', required=True)

    play = sub.add_parser('play', help='play one game')
    play.add_argument('--n', type=int, required=True, help='order of the blue target path')
    play.add_argument('--painter', default='blocking', help='blocking, blue, red, random[:seed] or minimax')
    play.add_argument('--interactive', action='store_true', help='color the edges yourself')
    play.add_argument('--trace-out', help='save the trace to this file')
    play.add_argument('--dot', help='write Graphviz source of the game to this file')
    play.set_defaults(func=cmd_play)

    verify = sub.add_parser('verify', help='certify the round budget')
    verify.add_argument('--n', type=int, required=True)
    mode = verify.add_mutually_exclusive_group()
    mode.add_argument('--exhaustive', action='store_true', help='every reply sequence (default)')
    mode.add_argument('--trials', type=int, help='number of random reply sequences')
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--workers', type=int, help='worker processes for exhaustive runs')
    verify.add_argument('--record', help='write the key=value report record to this file')
    verify.set_defaults(func=cmd_verify)

    solve = sub.add_parser('solve', help='exact game value by search')
    solve.add_argument('--m', type=int, required=True, help='order of the red target path')
    solve.add_argument('--n', type=int, required=True, help='order of the blue target path')
    solve.add_argument('--max-budget', type=int)
    solve.add_argument('--emit-table', help='write the verified strategy table to this file')
    solve.set_defaults(func=cmd_solve)

    export = sub.add_parser('export', help='render a saved trace')
    export.add_argument('--trace', required=True)
    export.add_argument('--format', choices=('dot', 'text'), default='dot')
    export.add_argument('--output')
    export.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.log_level:
            set_log_level(args.log_level)
        return args.func(args)
    except ValueError as e:  # RamseyError included
        logger.error(f"{args.command} failed: {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
