import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Dict, Iterable, List, NoReturn, Optional

from core.config import DEFAULT_CONFIG, load_config as _load_config, profile_path, section_defaults
from core.convergence import convergence_report
from core.errors import (
    BudgetExceededError,
    CardGameError,
    DualTargetError,
    MoveNotEnabledError,
    ParameterError,
    UnreachableError,
)
from core.game import (
    configurations,
    count_configurations,
    dual_configurations,
    is_dual,
    is_fixed_point,
    make_params,
    parse_configuration,
)
from core.oracle import PathCap, SweepSettings, run_sweep, summarize
from core.order import build_poset, hasse_records, hasse_to_dot
from core.statespace import DEFAULT_NODE_BUDGET, build_graph, check_budget, graph_records, reduce, to_dot
from core.statespace.graph import EnablingRule

logger = logging.getLogger("orchestrator")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BUDGET = 2
EXIT_VERIFY_FAILED = 3

EXIT_CODES = {
    ParameterError: EXIT_VALIDATION,
    MoveNotEnabledError: EXIT_VALIDATION,
    UnreachableError: EXIT_VALIDATION,
    DualTargetError: EXIT_VALIDATION,
    BudgetExceededError: EXIT_BUDGET,
}

LOG_FORMAT = "[%(name)s] %(levelname)s %(message)s"


class CliParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with the validation code (argparse uses 2)."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


# Harness hook: an alternative enabling rule for `verify` (negative controls only).
VERIFY_ENABLING: Optional[EnablingRule] = None


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(logging.INFO if verbose else logging.WARNING)


def _out_path(args: argparse.Namespace, default_name: Optional[str] = None) -> Optional[str]:
    """--out as given; a bare file name is placed in out_dir."""
    out = getattr(args, "out", None) or default_name
    if not out:
        return None
    if os.path.dirname(out) or os.path.isabs(out):
        return out
    return os.path.join(getattr(args, "out_dir", None) or "outputs", out)


def _emit(args: argparse.Namespace, text: str) -> None:
    out = _out_path(args)
    if out is None:
        sys.stdout.write(text)
        return
    parent = os.path.dirname(out)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(out, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info("wrote %s", out)


def _lines(records: Iterable[str]) -> str:
    return "".join(r + "\n" for r in records)


def _params(args: argparse.Namespace):
    return make_params(args.cards, args.players)


def _budget(args: argparse.Namespace) -> int:
    return int(getattr(args, "node_budget", None) or DEFAULT_NODE_BUDGET)


def cmd_enumerate(args: argparse.Namespace) -> int:
    """CLI handler for enumerate: every configuration, duals and the fixed point marked."""
    params = _params(args)
    check_budget(params, _budget(args))
    listing = []
    fixed = 0
    for a in configurations(params):
        dual, fix = is_dual(a, params), is_fixed_point(a)
        fixed += fix
        if args.format == "records":
            listing.append(json.dumps({"config": str(a), "dual": dual, "fixed": fix}))
        else:
            tags = [t for t, on in (("dual", dual), ("fixed", fix)) if on]
            listing.append(" ".join([str(a)] + tags))
    _emit(args, _lines(listing))
    total, duals = count_configurations(params), len(dual_configurations(params))
    print(f"total={total} dual={duals} fixed={fixed}", file=sys.stderr)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    """CLI handler for graph: G, or R(G) with --reduced."""
    params = _params(args)
    g = build_graph(params, budget=_budget(args))
    target = reduce(g, params) if args.reduced else g
    if args.format == "png":
        from core.vis import render_state_graph

        kind = "R" if args.reduced else "G"
        out = _out_path(args, f"{kind}_n{params.n}_p{params.p}.png")
        render_state_graph(target, out)
        print(f"Graph image written -> {out}", file=sys.stderr)
    elif args.format == "records":
        _emit(args, _lines(graph_records(target)))
    else:
        _emit(args, to_dot(target))
    return EXIT_OK


def cmd_lattice(args: argparse.Namespace) -> int:
    """CLI handler for lattice: Hasse diagram of GC(origin) with shot-vector labels."""
    params = _params(args)
    origin = parse_configuration(args.origin, params)
    if is_dual(origin, params):
        raise DualTargetError(f"origin ({origin}) is dual; GC(O) needs a non-dual origin")
    rg = reduce(build_graph(params, budget=_budget(args)), params)
    pv = build_poset(origin, rg, budget=_budget(args))
    if args.format == "png":
        from core.vis import render_hasse

        out = _out_path(args, f"GC_{'-'.join(map(str, origin.cards))}.png")
        render_hasse(pv, out)
        print(f"Hasse diagram written -> {out}", file=sys.stderr)
    elif args.format == "records":
        _emit(args, _lines(hasse_records(pv, table=args.table)))
    else:
        _emit(args, hasse_to_dot(pv, table=args.table))
    return EXIT_OK


def cmd_converge(args: argparse.Namespace) -> int:
    """CLI handler for converge: inactive player, shot vector, time to P, recurrence bound."""
    params = _params(args)
    report = convergence_report(parse_configuration(args.origin, params))
    _emit(args, report.to_json() + "\n" if args.format == "records" else report.to_text())
    return EXIT_OK


def _sweep_settings(args: argparse.Namespace) -> SweepSettings:
    base = SweepSettings()

    def pick(name: str) -> int:
        value = getattr(args, name, None)
        return int(value) if value is not None else getattr(base, name)

    return SweepSettings(
        max_cards=pick("max_cards"),
        max_players=pick("max_players"),
        deep_max_cards=pick("deep_max_cards"),
        deep_max_players=pick("deep_max_players"),
        path_max_cards=pick("path_max_cards"),
        path_max_players=pick("path_max_players"),
        samples=pick("samples"),
        seed=pick("seed"),
        node_budget=_budget(args),
        cap=PathCap(
            max_paths=int(getattr(args, "max_paths", None) or base.cap.max_paths),
            max_length=int(getattr(args, "max_path_length", None) or base.cap.max_length),
        ),
        concurrency=max(1, pick("concurrency")),
    )


def cmd_verify(args: argparse.Namespace) -> int:
    """CLI handler for verify: one JSON record per (check, instance)."""
    settings = _sweep_settings(args)
    if settings.max_cards < 0 or settings.max_players < 2:
        raise ParameterError(f"need max-cards >= 0 and max-players >= 2, got {settings.max_cards} and {settings.max_players}")
    outcomes = run_sweep(settings, enabling=VERIFY_ENABLING)
    _emit(args, _lines(json.dumps(o.to_record()) for o in outcomes))
    passed, failed, inconclusive = summarize(outcomes)
    print(f"passed={passed} failed={failed} inconclusive={inconclusive}", file=sys.stderr)
    if failed:
        return EXIT_VERIFY_FAILED
    if inconclusive:
        return EXIT_BUDGET
    return EXIT_OK


def _resolve_config_path(args: argparse.Namespace) -> Optional[str]:
    """Explicit --config, then config/verify_<profile>.toml, then the default file."""
    path = getattr(args, "config", None)
    profile = getattr(args, "profile", None)
    if not path and profile:
        path = str(profile_path(profile))
    if not path and DEFAULT_CONFIG.exists():
        path = str(DEFAULT_CONFIG)
    return path


def _cmd_init_config(args: argparse.Namespace) -> int:
    target = Path(args.path)
    target.parent.mkdir(parents=True, exist_ok=True)
    if target.exists() and not args.force:
        print(f"Config already exists: {target}. Use --force to overwrite.", file=sys.stderr)
        return EXIT_OK
    if DEFAULT_CONFIG.exists():
        content = DEFAULT_CONFIG.read_text(encoding="utf-8")
    else:
        content = "[common]\nout_dir = 'outputs'\n"
    target.write_text(content, encoding="utf-8")
    print(f"Config template written -> {target}", file=sys.stderr)
    return EXIT_OK


def _cmd_show_config(args: argparse.Namespace) -> int:
    cfg_path = _resolve_config_path(args)
    cfg = _load_config(cfg_path)
    print(json.dumps({
        "config_path": cfg_path,
        "sections": list(cfg.keys()),
        "effective": section_defaults(cfg, args.inspect),
    }, ensure_ascii=False, indent=2))
    return EXIT_OK


def _add_game_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("-n", "--cards", type=int, required=True, help="Number of cards n")
    sp.add_argument("-p", "--players", type=int, required=True, help="Number of players p (>= 2)")


def _add_common_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--out", help="Output file (default: standard output)")
    sp.add_argument("--out-dir", help="Directory for bare --out file names (default outputs/)")
    sp.add_argument("--node-budget", type=int, help=f"Refuse state spaces above this size (default {DEFAULT_NODE_BUDGET})")
    sp.add_argument("--verbose", action="store_true", help="Log progress to stderr")


def build_parser() -> argparse.ArgumentParser:
    p = CliParser(description="Game of Cards on a ring: state spaces, lattices and convergence")
    p.add_argument("--config", help="Path to TOML config file (defaults to config/cardgame.toml if present)")
    sub = p.add_subparsers(dest="command", required=True)

    en = sub.add_parser("enumerate", help="List every configuration with dual / fixed annotations")
    _add_game_args(en)
    en.add_argument("--format", choices=["text", "records"], default="text")
    _add_common_args(en)
    en.set_defaults(func=cmd_enumerate)

    gr = sub.add_parser("graph", help="Export the transition graph G or the reduced graph R(G)")
    _add_game_args(gr)
    gr.add_argument("--format", choices=["dot", "records", "png"], default="dot")
    gr.add_argument("--reduced", action="store_true", help="Collapse the dual configurations into BOT")
    _add_common_args(gr)
    gr.set_defaults(func=cmd_graph)

    la = sub.add_parser("lattice", help="Hasse diagram of GC(origin) with shot vectors")
    _add_game_args(la)
    la.add_argument("--origin", required=True, help="Comma-separated origin configuration, e.g. 4,1,1")
    la.add_argument("--format", choices=["dot", "records", "png"], default="dot")
    la.add_argument("--table", action="store_true", help="Add the pairwise inf/sup table")
    _add_common_args(la)
    la.set_defaults(func=cmd_lattice)

    co = sub.add_parser("converge", help="Convergence report of one origin")
    _add_game_args(co)
    co.add_argument("--origin", required=True, help="Comma-separated origin configuration")
    co.add_argument("--format", choices=["text", "records"], default="text")
    _add_common_args(co)
    co.set_defaults(func=cmd_converge)

    ve = sub.add_parser("verify", help="Run every brute-force check over a sweep of instances")
    ve.add_argument("--max-cards", type=int, help="Sweep 0 <= n <= max-cards (default 10)")
    ve.add_argument("--max-players", type=int, help="Sweep 2 <= p <= max-players (default 5)")
    ve.add_argument("--samples", type=int, help="Random plays per instance (default 1000)")
    ve.add_argument("--seed", type=int, help="Seed for the random plays (default 0)")
    ve.add_argument("--concurrency", type=int, help="Worker threads (default 1)")
    ve.add_argument("--profile", choices=["desk", "quick"], help="Use preset config: loads config/verify_<profile>.toml")
    _add_common_args(ve)
    ve.set_defaults(func=cmd_verify)

    initc = sub.add_parser("init-config", help="Generate a config template / 生成配置模板")
    initc.add_argument("--path", default=str(DEFAULT_CONFIG), help="Where to write the config TOML")
    initc.add_argument("--force", action="store_true", help="Overwrite if file exists")
    initc.set_defaults(func=_cmd_init_config)

    sc = sub.add_parser("show-config", help="Print the merged config for a subcommand (for troubleshooting)")
    sc.add_argument("--profile", choices=["desk", "quick"], help="Inspect config/verify_<profile>.toml")
    sc.add_argument("--inspect", choices=["enumerate", "graph", "lattice", "converge", "verify"], default="verify",
                    help="Subcommand whose effective settings are shown")
    sc.set_defaults(func=_cmd_show_config)

    p.subparsers = sub.choices  # type: ignore[attr-defined]
    return p


def _apply_config_defaults(parser: argparse.ArgumentParser, pre_args: argparse.Namespace) -> Dict:
    cmd = getattr(pre_args, "command", None)
    if cmd in (None, "init-config", "show-config"):
        return {}
    cfg = _load_config(_resolve_config_path(pre_args))
    defaults = section_defaults(cfg, cmd)
    if defaults:
        # subparser defaults win over the parent's, so set them where the arguments live
        parser.subparsers[cmd].set_defaults(**defaults)  # type: ignore[attr-defined]
    return defaults


def main(argv: List[str]) -> int:
    parser = build_parser()
    try:
        # First pass: discover --config, the subcommand and --profile
        pre_args, _ = parser.parse_known_args(argv)
        _apply_config_defaults(parser, pre_args)
        args = parser.parse_args(argv)
    except SystemExit as e:
        # usage errors and --help
        return int(e.code or EXIT_OK)
    _setup_logging(bool(getattr(args, "verbose", False)))
    try:
        return args.func(args)
    except CardGameError as e:
        code = next((c for t, c in EXIT_CODES.items() if isinstance(e, t)), EXIT_VALIDATION)
        print(f"{args.command}: {e}", file=sys.stderr)
        return code


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
