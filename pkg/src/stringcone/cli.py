"""Command-line surface.

Subcommands: crystal (graph dump), polytope (one weight's section),
cone (inferred weighted cone), degenerate (certificate JSON), verify
(acceptance suite).  Outputs are byte-stable for identical configs;
timings go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .cartan import build_cartan, is_dominant, longest_word, validate_word
from .degeneration import degeneration_certificate, report_to_json
from .errors import RootSystemError, StringConeError, WordError
from .pathcrystal import DEFAULT_NODE_CAP, edge_lines, enumerate_crystal
from .polyhedra import conic_hull, format_h_rep, section_lattice_points
from .strings import weighted_points
from .acceptance import run_full

_STAGE_CODES = {
    "general": 1,
    "cartan": 3,
    "crystal": 4,
    "strings": 5,
    "polyhedra": 6,
    "degeneration": 7,
}


@dataclass(frozen=True)
class RunConfig:
    type_label: str | None = None
    rank: int | None = None
    w0_word: tuple | None = None
    lam: tuple | None = None
    demazure_word: tuple | None = None
    level_bound: int = 2
    node_cap: int = DEFAULT_NODE_CAP
    out: str | None = None
    threads: int = 1

    def canonical_args(self):
        """Echo the config as a flag list; parsing it again round-trips."""
        args = []
        if self.type_label is not None:
            args += ["--type", self.type_label]
        if self.rank is not None:
            args += ["--rank", str(self.rank)]
        if self.w0_word is not None:
            args += ["--word", ",".join(str(i) for i in self.w0_word)]
        if self.lam is not None:
            args += ["--lambda", ",".join(str(c) for c in self.lam)]
        if self.demazure_word is not None:
            args += ["--demazure", ",".join(str(i) for i in self.demazure_word)]
        if self.level_bound != 2:
            args += ["--level-bound", str(self.level_bound)]
        if self.node_cap != DEFAULT_NODE_CAP:
            args += ["--cap", str(self.node_cap)]
        if self.out is not None:
            args += ["--out", self.out]
        if self.threads != 1:
            args += ["--threads", str(self.threads)]
        return args


def _int_tuple(text: str):
    if text == "":
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stringcone",
        description="String parametrizations, weighted string cones, and "
        "toric-degeneration certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, blurb in (
        ("crystal", "dump one crystal graph"),
        ("polytope", "integral section of the weighted cone at one weight"),
        ("cone", "infer the weighted string cone"),
        ("degenerate", "emit a degeneration certificate"),
        ("verify", "run the acceptance suite"),
    ):
        p = sub.add_parser(name, help=blurb)
        p.add_argument("--type", dest="type_label")
        p.add_argument("--rank", type=int)
        p.add_argument("--word", type=_int_tuple)
        p.add_argument("--lambda", dest="lam", type=_int_tuple)
        p.add_argument("--demazure", type=_int_tuple)
        p.add_argument("--level-bound", type=int, default=2)
        p.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP)
        p.add_argument("--out")
        p.add_argument("--threads", type=int, default=1)
    return parser


def parse_args(argv=None):
    """Parse and validate argv into (subcommand, RunConfig).

    Unknown types, malformed words, and non-dominant weights are usage
    errors here, before any pipeline stage runs.
    """
    parser = _build_parser()
    ns = parser.parse_args(argv)
    config = RunConfig(
        type_label=ns.type_label,
        rank=ns.rank,
        w0_word=ns.word,
        lam=ns.lam,
        demazure_word=ns.demazure,
        level_bound=ns.level_bound,
        node_cap=ns.cap,
        out=ns.out,
        threads=ns.threads,
    )
    if config.threads < 1:
        parser.error("--threads must be at least 1")
    if config.level_bound < 0:
        parser.error("--level-bound must be nonnegative")
    if ns.command != "verify":
        if config.type_label is None or config.rank is None:
            parser.error(f"{ns.command} requires --type and --rank")
        try:
            datum = build_cartan(config.type_label, config.rank)
        except RootSystemError as exc:
            parser.error(str(exc))
        for word in (config.w0_word, config.demazure_word):
            if word is not None:
                try:
                    validate_word(datum, word)
                except WordError as exc:
                    parser.error(str(exc))
        if config.lam is not None:
            if len(config.lam) != config.rank:
                parser.error(f"--lambda needs {config.rank} coordinates")
            if not is_dominant(config.lam):
                parser.error(f"lambda {config.lam} is not dominant")
    if ns.command in ("crystal", "polytope") and config.lam is None:
        parser.error(f"{ns.command} requires --lambda")
    return ns.command, config


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _fmt(vec) -> str:
    return ",".join(str(c) for c in vec)


def _cmd_crystal(config: RunConfig) -> int:
    datum = build_cartan(config.type_label, config.rank)
    graph = enumerate_crystal(datum, config.lam, node_cap=config.node_cap)
    lines = [
        f"crystal {config.type_label}{config.rank} lambda {_fmt(config.lam)}",
        f"nodes {graph.size}",
    ]
    for node in range(graph.size):
        lines.append(
            f"{node} weight {_fmt(graph.weights[node])}"
            f" eps {_fmt(graph.eps[node])} phi {_fmt(graph.phi[node])}"
        )
    edges = edge_lines(graph)
    lines.append(f"edges {len(edges)}")
    lines.extend(edges)
    _emit("\n".join(lines) + "\n", config.out)
    return 0


def _infer_cone(config: RunConfig, datum):
    word = config.w0_word if config.w0_word is not None else longest_word(datum)
    points = weighted_points(
        datum, word, config.level_bound, node_cap=config.node_cap
    )
    return word, conic_hull([p.lam + p.psi for p in points])


def _cmd_polytope(config: RunConfig) -> int:
    datum = build_cartan(config.type_label, config.rank)
    word, cone = _infer_cone(config, datum)
    section = section_lattice_points(cone, config.lam)
    lines = [
        f"polytope {config.type_label}{config.rank}"
        f" word {_fmt(word)} lambda {_fmt(config.lam)}",
        f"inequalities {len(cone.facets)}",
    ]
    n = datum.rank
    for u in cone.facets:
        const = sum(a * b for a, b in zip(u[:n], config.lam))
        lines.append(" ".join([str(const)] + [str(c) for c in u[n:]]))
    lines.append(f"points {len(section)}")
    lines += [" ".join(str(c) for c in p) for p in section]
    _emit("\n".join(lines) + "\n", config.out)
    return 0


def _cmd_cone(config: RunConfig) -> int:
    datum = build_cartan(config.type_label, config.rank)
    word, cone = _infer_cone(config, datum)
    text = format_h_rep(cone)
    if config.out is None:
        _emit(text, None)
        return 0
    _emit(text, config.out)
    doc = {
        "type": config.type_label,
        "rank": config.rank,
        "word": list(word),
        "level_bound": config.level_bound,
        "rays": [list(r) for r in cone.rays],
        "facets": [list(u) for u in cone.facets],
    }
    Path(config.out + ".json").write_text(
        json.dumps(doc, separators=(",", ":")) + "\n"
    )
    return 0


def _cmd_degenerate(config: RunConfig) -> int:
    datum = build_cartan(config.type_label, config.rank)
    word = config.w0_word if config.w0_word is not None else longest_word(datum)
    report = degeneration_certificate(
        datum,
        word,
        config.demazure_word,
        config.level_bound,
        node_cap=config.node_cap,
    )
    _emit(report_to_json(report), config.out)
    for stage, ms in report.timings.items():
        print(f"timing {stage} {ms:.1f}ms", file=sys.stderr)
    return 0 if report.passing else 1


def _cmd_verify(config: RunConfig, runner=run_full) -> int:
    start = time.perf_counter()
    text, results = runner()
    _emit(text, config.out)
    elapsed = time.perf_counter() - start
    print(f"timing verify {elapsed * 1000.0:.1f}ms", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


_COMMANDS = {
    "crystal": _cmd_crystal,
    "polytope": _cmd_polytope,
    "cone": _cmd_cone,
    "degenerate": _cmd_degenerate,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    command, config = parse_args(argv)
    try:
        return _COMMANDS[command](config)
    except StringConeError as exc:
        print(f"error[{exc.stage}]: {exc}", file=sys.stderr)
        return _STAGE_CODES.get(exc.stage, 1)


if __name__ == "__main__":
    sys.exit(main())
