"""Command-line interface: ``cooc count``, ``cooc check-map``, ``cooc verify``.

Exit codes: 0 success, 1 input format error, 2 configuration
contradiction, 3 internal invariant failure, 4 oracle mismatch.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from dataclasses import dataclass

from . import kernels
from .cooc_model import BoundaryModel, CombinedModel, DistanceModel, candidate_edges
from .corpus import read_alignment, read_pos, read_pretokenized, read_text
from .counting import CountingAssumption, count_all, count_edges
from .errors import CoocError, InputFormatError, InvariantError, TooLarge
from .filters import DEFAULT_ORDER, CognateRule, FilterSet, Mrbd, PosCompat, apply_filter_set
from .geometry import BitextSpace, Units, read_map
from .oracle import MAX_TOKENS, MAX_VERTICES, brute_count_all

log = logging.getLogger("cooc")

EXIT_INPUT = 1
EXIT_CONFIG = 2
EXIT_INTERNAL = 3
EXIT_MISMATCH = 4


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    text1: str
    text2: str
    mode: str
    map_path: str | None = None
    delta: float | None = None
    units: Units = Units.CHARACTERS
    alignment_path: str | None = None
    assumption: CountingAssumption = CountingAssumption.AT_MOST_ONE
    mrbd_path: str | None = None
    pos1_path: str | None = None
    pos2_path: str | None = None
    pos_compat_path: str | None = None
    cognate: bool = False
    cognate_threshold: float = 0.58
    cognate_min_length: int = 4
    filter_order: tuple[str, ...] | None = None
    fold_case: bool = False
    pretokenized: bool = False
    output: str = "-"

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        order = None
        if args.filters is not None:
            order = tuple(f.strip() for f in args.filters.split(",") if f.strip())
        cfg = cls(
            text1=args.text1,
            text2=args.text2,
            mode=args.mode,
            map_path=args.map,
            delta=args.delta,
            units=Units(args.units),
            alignment_path=args.alignment,
            assumption=CountingAssumption.parse(args.assumption),
            mrbd_path=args.mrbd,
            pos1_path=args.pos1,
            pos2_path=args.pos2,
            pos_compat_path=args.pos_compat,
            cognate=args.cognate,
            cognate_threshold=args.cognate_threshold,
            cognate_min_length=args.cognate_min_length,
            filter_order=order,
            fold_case=args.fold_case,
            pretokenized=args.pretokenized,
            output=getattr(args, "output", "-"),
        )
        cfg.validate()
        return cfg

    def validate(self):
        needs_map = self.mode in ("distance", "combined")
        needs_alignment = self.mode in ("boundary", "combined")
        if needs_map and self.map_path is None:
            raise ConfigError(f"--mode {self.mode} requires --map")
        if needs_map and self.delta is None:
            raise ConfigError(f"--mode {self.mode} requires --delta")
        if self.delta is not None and not self.delta >= 0:
            raise ConfigError("--delta must be nonnegative")
        if needs_alignment and self.alignment_path is None:
            raise ConfigError(f"--mode {self.mode} requires --alignment")
        if (self.pos1_path is None) != (self.pos2_path is None):
            raise ConfigError("--pos1 and --pos2 must be given together")
        if self.pos_compat_path is not None and self.pos1_path is None:
            raise ConfigError("--pos-compat requires --pos1 and --pos2")
        if not 0.0 <= self.cognate_threshold <= 1.0:
            raise ConfigError("--cognate-threshold must lie in [0, 1]")
        if self.filter_order is not None:
            available = self.available_filters()
            seen = set()
            for name in self.filter_order:
                if name not in DEFAULT_ORDER:
                    raise ConfigError(f"unknown filter {name!r} in --filters")
                if name in seen:
                    raise ConfigError(f"filter {name!r} listed twice in --filters")
                if name not in available:
                    raise ConfigError(f"filter {name!r} listed in --filters but its resources were not given")
                seen.add(name)

    def available_filters(self) -> set[str]:
        out = set()
        if self.pos1_path is not None:
            out.add("pos")
        if self.mrbd_path is not None:
            out.add("mrbd")
        if self.cognate:
            out.add("cognate")
        return out


def load_inputs(cfg: RunConfig):
    """Read every input named by ``cfg``; returns ``(half1, half2, model, filters)``."""
    reader = read_pretokenized if cfg.pretokenized else read_text
    half1 = reader(cfg.text1, cfg.fold_case)
    half2 = reader(cfg.text2, cfg.fold_case)
    model = None
    distance = boundary = None
    if cfg.mode in ("distance", "combined"):
        space = BitextSpace(half1.extent(cfg.units), half2.extent(cfg.units), cfg.units)
        distance = DistanceModel(read_map(cfg.map_path, space), cfg.delta)
        model = distance
    if cfg.mode in ("boundary", "combined"):
        boundary = BoundaryModel(read_alignment(cfg.alignment_path, (half1, half2)))
        model = boundary
    if cfg.mode == "combined":
        model = CombinedModel(distance, boundary)

    resources = {}
    if cfg.pos1_path is not None:
        half1 = read_pos(cfg.pos1_path, half1)
        half2 = read_pos(cfg.pos2_path, half2)
        resources["pos"] = PosCompat.read(cfg.pos_compat_path) if cfg.pos_compat_path else PosCompat()
    if cfg.mrbd_path is not None:
        resources["mrbd"] = Mrbd.read(cfg.mrbd_path, cfg.fold_case)
    if cfg.cognate:
        resources["cognate"] = CognateRule(cfg.cognate_threshold, cfg.cognate_min_length)
    order = cfg.filter_order if cfg.filter_order is not None else DEFAULT_ORDER
    filters = FilterSet(tuple(resources[k] for k in order if k in resources))
    return half1, half2, model, filters


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary file and rename."""
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cooc-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_count(cfg: RunConfig) -> int:
    half1, half2, model, filters = load_inputs(cfg)
    edges = candidate_edges(model, half1, half2)
    consumed, residual = apply_filter_set(edges, (half1, half2), filters)
    _check_filter_invariants(edges, consumed, residual)
    table = count_edges(residual, half1, half2, cfg.assumption, consumed)
    write_atomic(cfg.output, table.to_tsv())
    print(
        f"tokens: {len(half1)} x {len(half2)}; edges: {len(edges)}; "
        f"consumed links: {len(consumed)}; type pairs: {len(table)}",
        file=sys.stderr,
    )
    return 0


def _check_filter_invariants(edges, consumed, residual):
    edge_set = set(edges)
    if not set(residual) <= edge_set or not set(consumed) <= edge_set:
        raise InvariantError("filters introduced edges that were not candidates")
    used1 = {i for i, _ in consumed}
    used2 = {j for _, j in consumed}
    if any(i in used1 or j in used2 for i, j in residual):
        raise InvariantError("a consumed token survived in the residual edges")


def cmd_check_map(args) -> int:
    reader = read_pretokenized if args.pretokenized else read_text
    half1 = reader(args.text1)
    half2 = reader(args.text2)
    units = Units(args.units)
    space = BitextSpace(half1.extent(units), half2.extent(units), units)
    bmap = read_map(args.map, space)
    print(f"anchors: {len(bmap)}; max interpolation gap: {bmap.max_gap():.6g} {units.value}")
    return 0


def cmd_verify(cfg: RunConfig, max_tokens: int = MAX_TOKENS, max_component: int = MAX_VERTICES) -> int:
    half1, half2, model, filters = load_inputs(cfg)
    try:
        expected = brute_count_all(
            model, half1, half2, cfg.assumption, filters,
            max_tokens=max_tokens, max_component=max_component,
        )
    except TooLarge as exc:
        print(f"error: input exceeds oracle limits: {exc}", file=sys.stderr)
        return EXIT_INPUT
    actual = count_all(model, half1, half2, cfg.assumption, filters)
    diff = actual.first_difference(expected)
    if diff is not None:
        (u, v), got, want = diff
        print(f"mismatch: {u}\t{v}: production {got}, oracle {want}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"ok: {len(actual)} type pairs identical (kernels: {kernels.BACKEND})", file=sys.stderr)
    return 0


def _add_run_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("text1", help="first text half (UTF-8, one segment per line)")
    p.add_argument("text2", help="second text half")
    p.add_argument("--mode", required=True, choices=["distance", "boundary", "combined"])
    p.add_argument("--map", help="anchor file, 'x<TAB>y' per line")
    p.add_argument("--delta", type=float, help="distance threshold in axis units")
    p.add_argument("--units", default="characters", choices=[u.value for u in Units])
    p.add_argument("--alignment", help="segment alignment file")
    p.add_argument(
        "--assumption",
        default="at-most-one",
        choices=["naive", "at-most-one", "at-least-one"],
        help="counting assumption (default: %(default)s)",
    )
    p.add_argument("--mrbd", help="bilingual dictionary, 'word1<TAB>word2' per line")
    p.add_argument("--pos1", help="POS tags for text1, one line per segment")
    p.add_argument("--pos2", help="POS tags for text2")
    p.add_argument("--pos-compat", help="compatible tag pairs, 'tag1<TAB>tag2' per line")
    p.add_argument("--cognate", action="store_true", help="grant exclusive candidacy to cognates")
    p.add_argument("--cognate-threshold", type=float, default=0.58)
    p.add_argument("--cognate-min-length", type=int, default=4)
    p.add_argument("--filters", help="comma-separated filter order (default: pos,mrbd,cognate)")
    p.add_argument("--fold-case", action="store_true")
    p.add_argument("--pretokenized", action="store_true", help="texts are 'token<TAB>start<TAB>end[<TAB>segment]' files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cooc", description="Word co-occurrence counts for bitexts")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="write the co-occurrence table as TSV")
    _add_run_arguments(p)
    p.add_argument("-o", "--output", default="-", help="output TSV (default: stdout)")

    p = sub.add_parser("check-map", help="validate an anchor file against two texts")
    p.add_argument("map")
    p.add_argument("text1")
    p.add_argument("text2")
    p.add_argument("--units", default="characters", choices=[u.value for u in Units])
    p.add_argument("--pretokenized", action="store_true")

    p = sub.add_parser("verify", help="compare production counts with the brute-force oracle")
    _add_run_arguments(p)
    p.add_argument("--max-tokens", type=int, default=MAX_TOKENS)
    p.add_argument("--max-component", type=int, default=MAX_VERTICES)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(format="%(levelname)s: %(message)s", level="DEBUG" if args.verbose else "WARNING")
    log.debug("kernel backend: %s", kernels.BACKEND)
    try:
        if args.command == "check-map":
            return cmd_check_map(args)
        cfg = RunConfig.from_args(args)
        if args.command == "count":
            return cmd_count(cfg)
        return cmd_verify(cfg, args.max_tokens, args.max_component)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CoocError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
