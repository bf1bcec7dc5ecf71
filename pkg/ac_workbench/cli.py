"""
Command-line interface: ``ac-workbench <subcommand> [options]``.

Settings resolve as command-line flags, then the ``--config`` file (YAML or
JSON, a ``common:`` block plus one block per subcommand), then model
defaults. Machine-readable output goes to stdout, or to files under
``--out`` together with a ``manifest.json``; human summaries go to stderr.

Exit codes: 0 success, 1 verification failure or runtime error, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ValidationError

from ac_workbench.analysis.anatomy import anatomy
from ac_workbench.analysis.lm_dataset import gen_lm_dataset, length_histogram, split_by_seed, token_count
from ac_workbench.analysis.supermoves import mine_supermoves
from ac_workbench.certificates import ak3_certificate, verify
from ac_workbench.core.presentation import format_presentation, parse_presentation
from ac_workbench.core.series import (
    DatasetEntry,
    MSIndex,
    gen_AK,
    gen_Gordon,
    gen_MS,
    gen_MS_dataset,
    mms_length25,
)
from ac_workbench.enums import MoveSet, SearchAlgorithm, SeriesKind, TableFormat
from ac_workbench.exceptions import ACWorkbenchError
from ac_workbench.models.config import (
    AdaptConfig,
    EnvConfig,
    LMDatasetConfig,
    NeighborhoodConfig,
    PPOConfig,
    SearchConfig,
    TopologyConfig,
)
from ac_workbench.models.results import Certificate
from ac_workbench.neighborhoods import neighborhood_report
from ac_workbench.search import batch_solve
from ac_workbench.topology import dump_graph, enumerate_identity_component, persistence_rows, sweep
from ac_workbench.utils.formatters import (
    _format_anatomy,
    _format_batch_summary,
    _format_dataset_file,
    _format_neighborhood_report,
    _format_persistence_rows,
    _format_profile,
    _format_series,
    _format_supermoves,
    _format_table,
    _format_verification_concise,
)
from ac_workbench.utils.manifest import ManifestRecorder, write_manifest
from ac_workbench.utils.parsers import (
    _parse_certificate,
    _parse_dataset_entries,
    _parse_labels,
    _parse_move_path,
    _parse_move_paths,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(ACWorkbenchError):
    """Bad command-line input detected after argument parsing."""


def configure_logging(level: str | int = "INFO") -> None:
    """Install a single stderr handler on the root logger."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level if isinstance(level, int) else level.upper())


# ============================================================================
# Settings and I/O
# ============================================================================


def _load_config_file(path: Path | None, section: str) -> dict[str, Any]:
    """``common`` merged with the subcommand's block; keys use underscores."""
    if path is None:
        return {}
    try:
        data = yaml.safe_load(path.read_text()) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise UsageError(f"Cannot read config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"Config file {path} must contain a mapping")
    merged: dict[str, Any] = {}
    for block in (data.get("common") or {}, data.get(section) or {}):
        if not isinstance(block, dict):
            raise UsageError(f"Config block in {path} must be a mapping")
        merged.update({str(k).replace("-", "_"): v for k, v in block.items()})
    return merged


def _resolve(model: type[BaseModel], file_values: dict[str, Any], flags: dict[str, Any]) -> dict[str, Any]:
    """Field values for ``model``: flags over file values; unset fields keep model defaults."""
    fields = model.model_fields
    values = {k: v for k, v in file_values.items() if k in fields}
    values.update({k: v for k, v in flags.items() if k in fields and v is not None})
    return values


def _settings(args: argparse.Namespace, key: str, default: Any = None) -> Any:
    """A plain (non-model) setting with the same precedence."""
    value = getattr(args, key, None)
    if value is not None:
        return value
    return args.file_config.get(key, default)


def _read_text(path: Path) -> str:
    try:
        return sys.stdin.read() if str(path) == "-" else path.read_text()
    except OSError as exc:
        raise UsageError(f"Cannot read {path}: {exc}") from exc


def _dataset(args: argparse.Namespace) -> list[DatasetEntry]:
    path = _settings(args, "dataset")
    if path is None:
        return gen_MS_dataset()
    return _parse_dataset_entries(_read_text(Path(path)))


def _emit(args: argparse.Namespace, name: str, text: str) -> None:
    """Write main output to stdout, or to ``--out/name``."""
    if args.out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    target = Path(args.out) / name
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text if text.endswith("\n") else text + "\n")
    logger.info("Wrote %s", target)


def _summary(text: str) -> None:
    sys.stderr.write(text.rstrip("\n") + "\n")


def _table_format(args: argparse.Namespace) -> TableFormat:
    return TableFormat(_settings(args, "format", TableFormat.TSV.value))


# ============================================================================
# Subcommands
# ============================================================================


def cmd_gen_series(args: argparse.Namespace) -> int:
    kind = SeriesKind(_settings(args, "series", SeriesKind.MS_DATASET.value))
    if kind is SeriesKind.MS_DATASET:
        entries = gen_MS_dataset(
            n_max=_settings(args, "nmax", 7),
            wlen_max=_settings(args, "wlen", 7),
            rotate=bool(args.rotate or args.file_config.get("rotate", False)),
        )
    elif kind is SeriesKind.AK:
        entries = [DatasetEntry(gen_AK(_required(args, "n")))]
    elif kind is SeriesKind.MS:
        n, w = _required(args, "n"), _required(args, "w")
        entries = [DatasetEntry(gen_MS(n, w), MSIndex(n, w))]
    elif kind is SeriesKind.MMS:
        entries = [DatasetEntry(mms_length25())]
    else:
        m, n, p, q = _required(args, "gordon")
        entries = [DatasetEntry(gen_Gordon(m, n, p, q))]

    fmt = _table_format(args)
    if fmt is TableFormat.MARKDOWN:
        _emit(args, "series.md", _format_series(entries, fmt))
    else:
        _emit(args, "series.txt", _format_dataset_file(entries, f"{kind.value}: {len(entries)} presentations"))
    _summary(f"Generated {len(entries)} presentation(s)")
    return EXIT_OK


def _required(args: argparse.Namespace, key: str) -> Any:
    value = _settings(args, key)
    if value is None:
        raise UsageError(f"--{key} is required for this series")
    return value


def _bound_setting(raw: Any) -> int | str | None:
    if raw is None or raw in ("auto", "unbounded"):
        return raw
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise UsageError(f"--max-relator-len must be 'auto', 'unbounded' or an integer, got {raw!r}") from None


def cmd_solve(args: argparse.Namespace) -> int:
    flags = {
        "algorithm": args.algo,
        "max_nodes": args.max_nodes,
        "move_set": args.move_set,
        "max_relator_length": _bound_setting(args.max_relator_len),
    }
    cfg = SearchConfig(**_resolve(SearchConfig, args.file_config, flags))
    entries = _dataset(args)
    results, summary = batch_solve(entries, cfg, _settings(args, "threads"))
    lines = [
        json.dumps(
            {
                "input": format_presentation(r.input),
                "solved": r.solved,
                "path": r.path,
                "nodes_visited": r.nodes_visited,
                "max_length_seen": r.max_length_seen,
            }
        )
        for r in results
    ]
    _emit(args, "solve.jsonl", "\n".join(lines))
    _summary(_format_batch_summary(summary, _table_format(args)))
    args.manifest_config = cfg.model_dump(mode="json")
    return EXIT_OK


def _certificate(args: argparse.Namespace) -> Certificate:
    path = _settings(args, "cert")
    if path is None:
        return ak3_certificate()
    path = Path(path)
    text = _read_text(path)
    if path.suffix.lower() in (".json", ".yaml", ".yml"):
        data = yaml.safe_load(text)
        if not isinstance(data, dict):
            raise UsageError(f"Certificate file {path} must contain a mapping")
        return _parse_certificate(data)
    moves, move_set = _parse_move_path(text)
    start, terminal = _settings(args, "start"), _settings(args, "terminal")
    ceiling = _settings(args, "max_length")
    if start is None or terminal is None or ceiling is None:
        raise UsageError("A path-file certificate needs --start, --terminal and --max-length")
    return Certificate(
        start=parse_presentation(start),
        moves=moves,
        claimed_terminal=parse_presentation(terminal),
        claimed_max_length=int(ceiling),
        move_set=move_set,
    )


def cmd_verify_ak3(args: argparse.Namespace) -> int:
    cert = _certificate(args)
    report = verify(cert, equivalence_bound=_settings(args, "equivalence_bound", 25))
    fmt = _table_format(args)
    body = _format_profile(report.length_profile, fmt)
    terminal = f"terminal\t{format_presentation(report.terminal)}"
    _emit(args, "verification.tsv", f"{body}\n\n{terminal}")
    _summary(_format_verification_concise(report))
    if not report.ok:
        _summary(f"First divergent step: {report.first_divergence}")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_persistence_table(args: argparse.Namespace) -> int:
    flags = {
        "lmax": args.lmax,
        "move_set": args.move_set,
        "allow_large": args.allow_large or None,
        "max_vertices": args.max_vertices,
        "elder_bars": args.elder_bars or None,
    }
    cfg = TopologyConfig(**_resolve(TopologyConfig, args.file_config, flags))
    graph = enumerate_identity_component(cfg.lmax, cfg.move_set, cfg.max_vertices)
    result = sweep(graph, elder_bars=cfg.elder_bars)
    fmt = _table_format(args)
    text = _format_persistence_rows(persistence_rows(graph, result, cfg.lmax), fmt)
    if cfg.elder_bars:
        text += "\n\n" + _format_table(["birth", "death"], [[b.birth, b.death] for b in result.bars], fmt)
    _emit(args, "persistence.tsv", text)
    dump = _settings(args, "dump_graph")
    if dump is not None:
        dump_graph(graph, Path(dump))
    _summary(f"{cfg.move_set.value} lmax={cfg.lmax}: {graph.num_vertices} vertices, {graph.num_edges} edges")
    args.manifest_config = cfg.model_dump(mode="json")
    return EXIT_OK


def cmd_neighborhoods(args: argparse.Namespace) -> int:
    cfg = NeighborhoodConfig(**_resolve(NeighborhoodConfig, args.file_config, {"k": args.k, "move_set": args.move_set}))
    presentations = [e.presentation for e in _dataset(args)]
    labels_path = _settings(args, "labels")
    labels = _parse_labels(_read_text(Path(labels_path))) if labels_path else None
    if labels is not None:
        missing = [i for i in range(len(presentations)) if i not in labels]
        if missing:
            raise UsageError(f"Labels file lacks {len(missing)} dataset lines (first: {missing[0]})")
    report = neighborhood_report(presentations, cfg.k, labels, cfg.move_set, _settings(args, "threads"))
    _emit(args, "neighborhoods.tsv", _format_neighborhood_report(report, _table_format(args)))
    stats = report.stats
    _summary(f"k={cfg.k}: min={stats.min} max={stats.max} median={stats.median:.0f} distinct={stats.distinct}")
    args.manifest_config = cfg.model_dump(mode="json")
    return EXIT_OK


def cmd_train_ppo(args: argparse.Namespace) -> int:
    from ac_workbench.analysis.supermoves import ActionSpaceAdapter
    from ac_workbench.rl.trainer import PPOTrainer

    env_cfg = EnvConfig(
        **_resolve(EnvConfig, args.file_config, {"horizon": args.horizon, "max_relator_length": args.max_relator_len})
    )
    ppo_values = _resolve(
        PPOConfig,
        args.file_config,
        {"actors": args.actors, "rollout_length": args.rollout_length, "lr": args.lr},
    )
    if "minibatch_size" not in ppo_values:
        defaults = PPOConfig.model_fields
        actors = ppo_values.get("actors", defaults["actors"].default)
        rollout = ppo_values.get("rollout_length", defaults["rollout_length"].default)
        minibatches = ppo_values.get("minibatches", defaults["minibatches"].default)
        ppo_values["minibatch_size"] = max(1, actors * rollout // minibatches)
    ppo_cfg = PPOConfig(**ppo_values)

    out = Path(args.out or _settings(args, "out_dir", "runs/ppo"))
    args.out = str(out)
    adapt_every = _settings(args, "adapt_every", 0)
    adapter = ActionSpaceAdapter(AdaptConfig(**_resolve(AdaptConfig, args.file_config, {}))) if adapt_every else None
    dataset = [e.presentation for e in _dataset(args)]
    trainer = PPOTrainer(
        dataset,
        env_cfg,
        ppo_cfg,
        seed=_settings(args, "seed", 0),
        out_dir=out,
        adapter=adapter,
        adapt_every=adapt_every,
    )
    report = trainer.run(
        _settings(args, "total_rollouts", 100),
        checkpoint_every=_settings(args, "checkpoint_every", 0),
    )
    _summary(f"{report.updates} updates, {report.env_steps} environment steps, {len(report.solved)} solved")
    args.manifest_config = {"env": env_cfg.model_dump(mode="json"), "ppo": ppo_cfg.model_dump(mode="json")}
    return EXIT_OK


def _path_files(raw: Sequence[str]) -> list[list[int]]:
    paths: list[list[int]] = []
    for item in raw:
        path = Path(item)
        files = sorted(path.glob("*.txt")) if path.is_dir() else [path]
        for file in files:
            found, _ = _parse_move_paths(_read_text(file))
            paths.extend(found)
    return paths


def cmd_anatomy(args: argparse.Namespace) -> int:
    paths = _path_files(args.paths)
    profile = anatomy(paths)
    _emit(args, "anatomy.tsv", _format_anatomy(profile, _table_format(args)))
    _summary(f"{len(paths)} path(s), {profile.total} move(s)")
    return EXIT_OK


def cmd_mine_supermoves(args: argparse.Namespace) -> int:
    paths = _path_files(args.paths)
    ranked = mine_supermoves(
        paths,
        _settings(args, "max_len", 6),
        _settings(args, "top_k", 20),
        _settings(args, "min_support", 1),
    )
    _emit(args, "supermoves.tsv", _format_supermoves(ranked, _table_format(args)))
    _summary(f"{len(ranked)} supermove(s) from {len(paths)} path(s)")
    return EXIT_OK


def cmd_gen_lm_dataset(args: argparse.Namespace) -> int:
    flags = {
        "n_phases": args.phases,
        "per_phase": args.per_phase,
        "moves_per_sample": args.moves,
        "l_max": args.lmax,
    }
    cfg = LMDatasetConfig(**_resolve(LMDatasetConfig, args.file_config, flags))
    seed = _settings(args, "seed", 0)
    seeds = [e.presentation for e in _dataset(args)]
    records = list(gen_lm_dataset(seeds, cfg, seed, _settings(args, "threads")))

    def dump(rows: Sequence[Any]) -> str:
        return "\n".join(
            json.dumps(
                {
                    "presentation": format_presentation(r.presentation),
                    "seed_index": r.seed_index,
                    "phase": r.phase,
                    "l_i": r.l_i,
                }
            )
            for r in rows
        )

    if args.out is None:
        _emit(args, "lm_dataset.jsonl", dump(records))
    else:
        train, validation = split_by_seed(records, cfg.validation_fraction, seed)
        _emit(args, "lm_train.jsonl", dump(train))
        _emit(args, "lm_validation.jsonl", dump(validation))
    counts, edges = length_histogram(records)
    _summary(f"{len(records)} presentations, {token_count(records)} tokens")
    rows = [[f"{edges[i]:.1f}", f"{edges[i + 1]:.1f}", c] for i, c in enumerate(counts)]
    _summary(_format_table(["low", "high", "count"], rows, _table_format(args)))
    args.manifest_config = cfg.model_dump(mode="json")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import ac_workbench.tools  # noqa: F401
    from ac_workbench.server import run

    run()
    return EXIT_OK


# ============================================================================
# Parser
# ============================================================================


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="YAML/JSON config file (flags override it)")
    common.add_argument("--seed", type=int, help="Random seed")
    common.add_argument("--threads", type=int, help="Worker processes for batch work (default: all cores)")
    common.add_argument("--format", choices=[f.value for f in TableFormat], help="Table format (default tsv)")
    common.add_argument("--out", help="Write outputs and manifest.json into this directory")
    common.add_argument("--log-level", default="INFO", help="Logging level (default INFO)")
    common.add_argument("-v", "--verbose", action="store_true", help="Shortcut for --log-level DEBUG")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="ac-workbench", description="Andrews-Curtis trivialization workbench")
    sub = parser.add_subparsers(dest="command", required=True)
    move_sets = [m.value for m in MoveSet]

    p = sub.add_parser("gen-series", parents=[common], help="Generate AK, MS, MMS or Gordon presentations")
    p.add_argument("--series", choices=[s.value for s in SeriesKind])
    p.add_argument("--nmax", type=int, help="Largest n for the MS dataset (default 7)")
    p.add_argument("--wlen", type=int, help="Longest w for the MS dataset (default 7)")
    p.add_argument("--rotate", action="store_true", help="Store the smallest rotation of X·w as the second relator")
    p.add_argument("--n", type=int)
    p.add_argument("--w")
    p.add_argument("--gordon", type=int, nargs=4, metavar=("M", "N", "P", "Q"))
    p.set_defaults(handler=cmd_gen_series)

    p = sub.add_parser("solve", parents=[common], help="BFS or greedy search over a dataset")
    p.add_argument("dataset", nargs="?", help="Presentation file ('-' for stdin; default: MS dataset)")
    p.add_argument("--algo", choices=[a.value for a in SearchAlgorithm])
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--move-set", choices=move_sets)
    p.add_argument("--max-relator-len", help="auto, unbounded or an integer")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("verify-ak3", parents=[common], help="Replay the AK(3) certificate or a given one")
    p.add_argument("--cert", help="Certificate file: JSON/YAML mapping or move-path file")
    p.add_argument("--start", help="Start presentation for a move-path certificate")
    p.add_argument("--terminal", help="Claimed terminal presentation for a move-path certificate")
    p.add_argument("--max-length", type=int, help="Claimed length ceiling for a move-path certificate")
    p.add_argument("--equivalence-bound", type=int, help="Relator bound for the terminal equivalence search")
    p.set_defaults(handler=cmd_verify_ak3)

    p = sub.add_parser("persistence-table", parents=[common], help="Persistence of the trivial component")
    p.add_argument("--lmax", type=int)
    p.add_argument("--move-set", choices=move_sets)
    p.add_argument("--allow-large", action="store_true", help="Permit lmax above 13")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--elder-bars", action="store_true")
    p.add_argument("--dump-graph", help="Directory for vertices.bin and edges.bin")
    p.set_defaults(handler=cmd_persistence_table)

    p = sub.add_parser("neighborhoods", parents=[common], help="k-step neighborhood sizes over a dataset")
    p.add_argument("dataset", nargs="?", help="Presentation file (default: MS dataset)")
    p.add_argument("--k", type=int)
    p.add_argument("--labels", help="Lines 'index,solved|unsolved'")
    p.add_argument("--move-set", choices=move_sets)
    p.set_defaults(handler=cmd_neighborhoods)

    p = sub.add_parser("train-ppo", parents=[common], help="Train the PPO agent")
    p.add_argument("--dataset", help="Presentation file (default: MS dataset)")
    p.add_argument("--horizon", type=int)
    p.add_argument("--actors", type=int)
    p.add_argument("--rollout-length", type=int)
    p.add_argument("--lr", type=float)
    p.add_argument("--total-rollouts", type=int, help="Number of collect/update rounds")
    p.add_argument("--max-relator-len", type=int, help="Relator width L")
    p.add_argument("--checkpoint-every", type=int)
    p.add_argument("--adapt-every", type=int, help="Adapt the action space every N updates (0 = off)")
    p.set_defaults(handler=cmd_train_ppo)

    p = sub.add_parser("anatomy", parents=[common], help="Move-frequency profile of path files")
    p.add_argument("paths", nargs="+", help="Move-path files or directories of them")
    p.set_defaults(handler=cmd_anatomy)

    p = sub.add_parser("mine-supermoves", parents=[common], help="Rank recurring move sequences")
    p.add_argument("paths", nargs="+", help="Move-path files or directories of them")
    p.add_argument("--max-len", type=int)
    p.add_argument("--top-k", type=int)
    p.add_argument("--min-support", type=int)
    p.set_defaults(handler=cmd_mine_supermoves)

    p = sub.add_parser("gen-lm-dataset", parents=[common], help="Phased random-walk language-model dataset")
    p.add_argument("--dataset", help="Seed presentation file (default: MS dataset)")
    p.add_argument("--phases", type=int)
    p.add_argument("--per-phase", type=int)
    p.add_argument("--moves", type=int, help="Random moves per emitted presentation")
    p.add_argument("--lmax", type=int)
    p.set_defaults(handler=cmd_gen_lm_dataset)

    p = sub.add_parser("serve", parents=[common], help="Run the MCP server on stdio")
    p.set_defaults(handler=cmd_serve)
    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and run the subcommand; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging("DEBUG" if args.verbose else args.log_level)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        args.file_config = _load_config_file(args.config, args.command)
        args.manifest_config = {}
        inputs = [Path(p) for p in _input_files(args)]
        recorder = ManifestRecorder(args.command, {}, _settings(args, "seed"), inputs)
        code = handler(args)
    except (UsageError, ValidationError, ValueError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    except ACWorkbenchError as exc:
        logger.error("%s", exc)
        return EXIT_FAILURE

    if args.out is not None:
        recorder.manifest.config = {"arguments": _arguments(args), "resolved": args.manifest_config}
        write_manifest(Path(args.out), recorder.finish())
    return code


def _input_files(args: argparse.Namespace) -> list[str]:
    files: list[str] = []
    for key in ("dataset", "cert", "labels"):
        value = getattr(args, key, None)
        if value and value != "-" and Path(value).is_file():
            files.append(value)
    for value in getattr(args, "paths", None) or []:
        path = Path(value)
        if path.is_dir():
            files.extend(str(f) for f in sorted(path.glob("*.txt")))
        elif path.is_file():
            files.append(value)
    if args.config is not None and Path(args.config).is_file():
        files.append(str(args.config))
    return files


def _arguments(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"handler", "file_config", "manifest_config", "config"}
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in vars(args).items() if k not in skip}


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
