"""Command line front end: parse inputs, dispatch analyses, print reports.

Reports are line-oriented `key: value` text; --json switches every
subcommand to a single machine-readable object.  Exit codes: 0 for
success with a true verdict where one applies, 1 for a false verdict,
2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .core import (
    BuildingSet,
    building_set_json,
    enumerate_building_sets,
    format_building_set,
    frozenset_of,
    parse_building_set,
    validate_building_set,
)
from .errors import CriterionSatisfied, Error, NotWeakFano, ParseError
from .fan import check_complete, check_nonsingular, product_fan_report
from .intersect import (
    FailingPair,
    WallReport,
    fano_bruteforce,
    negative_witness,
    weak_fano_bruteforce,
    weak_fano_criterion,
)
from .nested import maximal_nested_sets
from .polytope import (
    Digraph,
    LatticePolytope,
    format_polytope,
    is_reflexive,
    lattice_equivalent,
    lattice_points,
    parse_digraph,
    parse_polytope,
    polytope_from_building_set,
    polytope_from_digraph,
    polytope_json,
)

THREADS_ENV = "WEAKFANO_THREADS"

# The classification's outside comparison point: a digraph whose polytope
# has six lattice points but matches no building-set class.
SIX_POINT_DIGRAPH = Digraph(4, ((1, 2), (2, 3), (3, 1), (1, 4), (4, 3)))

# The three building sets whose polytopes must land in distinct classes.
LISTED_SIX_POINT: tuple[tuple[int, tuple[tuple[int, ...], ...]], ...] = (
    (4, ((1, 2), (1, 2, 3, 4))),
    (4, ((1, 2, 3), (1, 2, 3, 4))),
    (5, ((1, 2, 3), (4, 5))),
)


def _listed_building_sets() -> list[BuildingSet]:
    out = []
    for ground, extras in LISTED_SIX_POINT:
        family = [(i,) for i in range(1, ground + 1)] + list(extras)
        out.append(validate_building_set(ground, family))
    return out


def _fmt_set(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _fmt_family(fam) -> str:
    return " ".join(_fmt_set(s) for s in fam)


def _set_list(fam) -> list[list[int]]:
    return [sorted(s) for s in fam]


def _pair_json(pair: FailingPair) -> dict:
    return {
        "component": sorted(pair.component),
        "first": sorted(pair.first),
        "second": sorted(pair.second),
        "union_is_component": pair.union_is_component,
        "piece_count": pair.piece_count,
    }


def _wall_json(wall: WallReport) -> dict:
    return {
        "component": sorted(wall.component),
        "shared": _set_list(wall.shared),
        "flanks": _set_list(wall.flanks),
        "degree": wall.degree,
        "coefficients": list(wall.coefficients),
    }


# ---------------------------------------------------------------------------
# Six-point classification.


@dataclass(frozen=True)
class SixPointClass:
    representative: BuildingSet
    polytope: LatticePolytope
    members: int


@dataclass(frozen=True)
class SixPointReport:
    candidate_count: int
    kept_count: int
    classes: tuple[SixPointClass, ...]
    listed_classes: tuple[int | None, ...]
    digraph_class: int | None
    reportdir: Path


def _six_point_candidates():
    """Building sets whose variety has dimension three.

    Connected families on four elements, plus products of a connected
    family on three elements with the one connected family on a pair.
    Three segment factors always give the seven-point octahedron, so
    partitions into three pairs can never reach six lattice points.
    """
    yield from enumerate_building_sets(4, connected_only=True, up_to_relabeling=True)
    pair_part = (1 << 3, 1 << 4, (1 << 3) | (1 << 4))
    for b3 in enumerate_building_sets(3, connected_only=True, up_to_relabeling=True):
        masks = set(b3.masks) | set(pair_part)
        yield BuildingSet(5, tuple(sorted(masks, key=lambda m: (m.bit_count(), m))))


def classify_six_point(reportdir) -> SixPointReport:
    """Bucket the six-lattice-point ray hulls by lattice equivalence.

    Writes one file per class plus a summary into reportdir and reports
    where the three listed building sets and the comparison digraph
    polytope land.
    """
    reportdir = Path(reportdir)
    reportdir.mkdir(parents=True, exist_ok=True)
    reps: list[BuildingSet] = []
    polys: list[LatticePolytope] = []
    counts: list[int] = []
    candidates = kept = 0
    for b in _six_point_candidates():
        candidates += 1
        if not weak_fano_criterion(b).verdict:
            continue
        p = polytope_from_building_set(b)
        if len(lattice_points(p)) != 6:
            continue
        kept += 1
        for i, q in enumerate(polys):
            if lattice_equivalent(q, p) is not None:
                counts[i] += 1
                break
        else:
            reps.append(b)
            polys.append(p)
            counts.append(1)

    def _bucket(p: LatticePolytope) -> int | None:
        for i, q in enumerate(polys):
            if lattice_equivalent(q, p) is not None:
                return i
        return None

    listed = tuple(
        _bucket(polytope_from_building_set(b)) for b in _listed_building_sets()
    )
    digraph_poly = polytope_from_digraph(SIX_POINT_DIGRAPH).polytope
    digraph_class = _bucket(digraph_poly)

    for i, (b, p, c) in enumerate(zip(reps, polys, counts), start=1):
        body = [
            f"class {i}",
            f"members {c}",
            "",
            format_building_set(b).rstrip(),
            "",
            format_polytope(p).rstrip(),
            f"lattice points {len(lattice_points(p))}",
            "",
        ]
        (reportdir / f"class-{i}.txt").write_text("\n".join(body))
    summary = [
        f"candidates {candidates}",
        f"kept {kept}",
        f"classes {len(reps)}",
    ]
    for i, (b, c) in enumerate(zip(reps, counts), start=1):
        summary.append(
            f"class {i}: members {c}, representative " + _fmt_family(b.members)
        )
    for i, cls in enumerate(listed, start=1):
        summary.append(f"listed {i}: class {'-' if cls is None else cls + 1}")
    summary.append(
        "digraph polytope: "
        + ("no matching class" if digraph_class is None else f"class {digraph_class + 1}")
    )
    (reportdir / "summary.txt").write_text("\n".join(summary) + "\n")
    classes = tuple(
        SixPointClass(b, p, c) for b, p, c in zip(reps, polys, counts)
    )
    return SixPointReport(candidates, kept, classes, listed, digraph_class, reportdir)


# ---------------------------------------------------------------------------
# Subcommand handlers.  Each returns (exit_code, text_lines, json_payload).


def _load_building_set(path: str) -> BuildingSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_building_set(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _load_digraph(path: str) -> Digraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_digraph(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _load_polytope(path: str) -> LatticePolytope:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_polytope(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _cmd_validate(ns):
    b = _load_building_set(ns.file)
    comps = b.components
    lines = [
        "valid: yes",
        f"ground: {b.ground_size}",
        f"members: {len(b.masks)}",
        f"connected: {'yes' if b.is_connected else 'no'}",
        f"components: {_fmt_family(comps)}",
    ]
    payload = {
        "valid": True,
        "ground": b.ground_size,
        "members": len(b.masks),
        "connected": b.is_connected,
        "components": _set_list(comps),
    }
    return 0, lines, payload


def _cmd_nested(ns):
    b = _load_building_set(ns.file)
    sets = maximal_nested_sets(b)
    expected = b.ground_size - len(b.max_masks)
    fams = [[frozenset_of(m) for m in ns_] for ns_ in sets]
    lines = [
        f"maximal nested sets: {len(sets)}",
        f"cardinality each: {expected}",
    ]
    lines += [_fmt_family(f) if f else "(empty)" for f in fams]
    payload = {
        "count": len(sets),
        "cardinality": expected,
        "sets": [_set_list(f) for f in fams],
    }
    return 0, lines, payload


def _cmd_fan(ns):
    b = _load_building_set(ns.file)
    rep = product_fan_report(b)
    lines = [f"dimension: {rep.dimension}", f"component fans: {len(rep.parts)}"]
    parts_payload = []
    ok = True
    for part in rep.parts:
        fan = part.fan
        nonsing = check_nonsingular(fan)
        complete = check_complete(fan, samples=ns.samples, seed=ns.seed)
        ok = ok and nonsing and bool(complete)
        comp = sorted(part.labels)
        lines += [
            f"component {_fmt_set(comp)}: dimension {fan.dimension}, "
            f"rays {len(fan.ray_masks)}, cones {len(fan.cones)}, walls {len(fan.walls)}",
            f"  nonsingular: {'yes' if nonsing else 'no'}",
            f"  complete: {'yes' if complete else 'no'} "
            f"({complete.samples} sample points)",
        ]
        parts_payload.append({
            "component": comp,
            "dimension": fan.dimension,
            "rays": len(fan.ray_masks),
            "cones": len(fan.cones),
            "walls": len(fan.walls),
            "nonsingular": nonsing,
            "complete": bool(complete),
            "samples": complete.samples,
        })
    payload = {"dimension": rep.dimension, "components": parts_payload, "ok": ok}
    return (0 if ok else 1), lines, payload


def _cmd_analyze(ns):
    b = _load_building_set(ns.file)
    lines: list[str] = []
    payload: dict = {"method": ns.method}
    verdict = None
    if ns.method in ("criterion", "both"):
        rc = weak_fano_criterion(b)
        verdict = rc.verdict
        lines.append(f"criterion weak Fano: {'yes' if rc.verdict else 'no'}")
        payload["criterion"] = {"weak_fano": rc.verdict}
        if rc.witness is not None:
            pair = rc.witness
            lines.append(
                f"failing pair: {_fmt_set(pair.first)} {_fmt_set(pair.second)}"
                f" in component {_fmt_set(pair.component)}"
            )
            payload["criterion"]["failing_pair"] = _pair_json(pair)
    if ns.method in ("bruteforce", "both"):
        rb = weak_fano_bruteforce(b)
        verdict = rb.verdict if verdict is None else verdict
        walls = sum(cv.wall_count or 0 for cv in rb.per_component)
        lines.append(f"bruteforce weak Fano: {'yes' if rb.verdict else 'no'}")
        lines.append(f"walls: {walls}")
        payload["bruteforce"] = {"weak_fano": rb.verdict, "walls": walls}
        if rb.min_degree is not None:
            lines.append(f"minimal wall degree: {rb.min_degree}")
            payload["bruteforce"]["min_degree"] = rb.min_degree
            fano = rb.min_degree >= 1
        else:
            fano = True
        lines.append(f"fano: {'yes' if fano else 'no'}")
        payload["bruteforce"]["fano"] = fano
        if rb.witness is not None:
            wall = rb.witness
            lines.append(
                f"negative wall: degree {wall.degree}, "
                f"shared {_fmt_family(wall.shared)}, "
                f"flanks {_fmt_family(wall.flanks)}"
            )
            payload["bruteforce"]["negative_wall"] = _wall_json(wall)
    if ns.method == "both":
        agree = payload["criterion"]["weak_fano"] == payload["bruteforce"]["weak_fano"]
        lines.append(f"methods agree: {'yes' if agree else 'no'}")
        payload["methods_agree"] = agree
    payload["weak_fano"] = verdict
    return (0 if verdict else 1), lines, payload


def _parse_pair_token(token: str) -> frozenset[int]:
    items = set()
    for part in token.replace(",", " ").split():
        try:
            items.add(int(part))
        except ValueError:
            raise ParseError(f"--pair: expected integers, got {part!r}") from None
    if not items:
        raise ParseError("--pair: empty member")
    return frozenset(items)


def _cmd_witness(ns):
    b = _load_building_set(ns.file)
    first = _parse_pair_token(ns.pair[0])
    second = _parse_pair_token(ns.pair[1])
    try:
        trace = negative_witness(b, first, second)
    except CriterionSatisfied as exc:
        return 1, [f"no witness: {exc}"], {"witness": None, "reason": str(exc)}
    lines = []
    for step in trace.steps:
        lines.append(
            f"step {step.tag}: {_fmt_set(step.first)} {_fmt_set(step.second)}"
        )
    for layer in trace.layers:
        lines.append(
            f"layer {layer.mode}: {_fmt_set(layer.first)} {_fmt_set(layer.second)}"
            f" pivots {layer.pivots[0]},{layer.pivots[1]}"
        )
    lines += [
        f"final pair: {_fmt_set(trace.final_first)} {_fmt_set(trace.final_second)}",
        f"wall: {_fmt_family(trace.shared)}",
        f"degree: {trace.degree}",
        "coefficients: " + " ".join(str(c) for c in trace.coefficients),
    ]
    payload = {
        "steps": [
            {"first": sorted(s.first), "second": sorted(s.second), "tag": s.tag}
            for s in trace.steps
        ],
        "layers": [
            {
                "first": sorted(l.first),
                "second": sorted(l.second),
                "mode": l.mode,
                "pivots": list(l.pivots),
            }
            for l in trace.layers
        ],
        "final_pair": [sorted(trace.final_first), sorted(trace.final_second)],
        "wall": _set_list(trace.shared),
        "degree": trace.degree,
        "coefficients": list(trace.coefficients),
    }
    return 0, lines, payload


def _polytope_lines(p: LatticePolytope):
    lines = format_polytope(p).rstrip().split("\n")
    pts = lattice_points(p)
    lines += [
        f"reflexive: {'yes' if is_reflexive(p) else 'no'}",
        f"lattice points: {len(pts)}",
    ]
    payload = polytope_json(p)
    payload["reflexive"] = is_reflexive(p)
    payload["lattice_points"] = len(pts)
    return lines, payload


def _cmd_polytope(ns):
    b = _load_building_set(ns.file)
    try:
        p = polytope_from_building_set(b)
    except NotWeakFano as exc:
        return 1, [f"no polytope: {exc}"], {"polytope": None, "reason": str(exc)}
    lines, payload = _polytope_lines(p)
    return 0, lines, payload


def _cmd_digraph_polytope(ns):
    g = _load_digraph(ns.file)
    dp = polytope_from_digraph(g)
    lines = [
        f"nodes: {dp.node_count}",
        f"ambient dimension: {dp.ambient_dim}",
        f"points: {len(dp.points)}",
        f"affine dimension: {dp.affine_dim}",
    ]
    payload = {
        "nodes": dp.node_count,
        "ambient_dim": dp.ambient_dim,
        "points": [list(p) for p in dp.points],
        "affine_dim": dp.affine_dim,
        "polytope": None,
    }
    if dp.polytope is None:
        lines.append("degenerate: the points do not span the ambient space")
        return 1, lines, payload
    plines, ppayload = _polytope_lines(dp.polytope)
    payload["polytope"] = ppayload
    return 0, lines + plines, payload


def _cmd_equiv(ns):
    p = _load_polytope(ns.first)
    q = _load_polytope(ns.second)
    witness = lattice_equivalent(p, q)
    if witness is None:
        return 1, ["equivalent: no"], {"equivalent": False}
    lines = ["equivalent: yes"]
    for row in witness.matrix:
        lines.append("matrix " + " ".join(str(x) for x in row))
    for src, dst in witness.maps:
        lines.append(
            "maps " + " ".join(str(x) for x in src) + " -> " + " ".join(str(x) for x in dst)
        )
    payload = {
        "equivalent": True,
        "matrix": [list(r) for r in witness.matrix],
        "maps": [[list(a), list(m)] for a, m in witness.maps],
    }
    return 0, lines, payload


def _cmd_enumerate(ns):
    sets = list(enumerate_building_sets(ns.ground, connected_only=ns.connected))
    lines = [f"count: {len(sets)}"]
    for b in sets:
        lines.append(_fmt_family(b.members))
    payload = {"count": len(sets), "building_sets": [building_set_json(b) for b in sets]}
    return 0, lines, payload


def _cmd_classify(ns):
    report = classify_six_point(ns.six_point)
    lines = [
        f"candidates: {report.candidate_count}",
        f"kept (six lattice points): {report.kept_count}",
        f"classes: {len(report.classes)}",
    ]
    for i, cls in enumerate(report.classes, start=1):
        lines.append(
            f"class {i}: members {cls.members}, representative "
            + _fmt_family(cls.representative.members)
        )
    for i, idx in enumerate(report.listed_classes, start=1):
        lines.append(f"listed set {i}: class {'-' if idx is None else idx + 1}")
    lines.append(
        "digraph polytope: "
        + ("no matching class" if report.digraph_class is None
           else f"class {report.digraph_class + 1}")
    )
    lines.append(f"report written to: {report.reportdir}")
    payload = {
        "candidates": report.candidate_count,
        "kept": report.kept_count,
        "classes": [
            {
                "members": cls.members,
                "representative": building_set_json(cls.representative),
                "polytope": polytope_json(cls.polytope),
            }
            for cls in report.classes
        ],
        "listed_classes": [None if i is None else i + 1 for i in report.listed_classes],
        "digraph_class": (
            None if report.digraph_class is None else report.digraph_class + 1
        ),
        "reportdir": str(report.reportdir),
    }
    return (0 if len(report.classes) == 3 else 1), lines, payload


# ---------------------------------------------------------------------------
# Argument parsing and dispatch.


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="weakfano",
        description="Weak Fano analysis of building sets and their polytopes.",
    )
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help=f"worker bound (reserved; runs sequentially); default ${THREADS_ENV} or 1",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a building set file")
    p.add_argument("file")
    p = sub.add_parser("nested", parents=[common], help="list maximal nested sets")
    p.add_argument("file")
    p = sub.add_parser("fan", parents=[common], help="build and check component fans")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=1000,
                   help="sample points for the completeness check")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p = sub.add_parser("analyze", parents=[common], help="decide weak Fano")
    p.add_argument("file")
    p.add_argument("--method", choices=("criterion", "bruteforce", "both"),
                   default="both")
    p = sub.add_parser("witness", parents=[common],
                       help="descend from a bad pair to a negative wall")
    p.add_argument("file")
    p.add_argument("--pair", nargs=2, required=True, metavar=("I1", "I2"),
                   help="two members as comma-separated elements")
    p = sub.add_parser("polytope", parents=[common],
                       help="ray hull of a weak Fano building set")
    p.add_argument("file")
    p = sub.add_parser("digraph-polytope", parents=[common],
                       help="arrow-vector hull of a digraph")
    p.add_argument("file")
    p = sub.add_parser("equiv", parents=[common],
                       help="test two polytope files for lattice equivalence")
    p.add_argument("first")
    p.add_argument("second")
    p = sub.add_parser("enumerate", parents=[common], help="list building sets")
    p.add_argument("--ground", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p = sub.add_parser("classify", parents=[common],
                       help="classify six-point ray hulls")
    p.add_argument("--six-point", dest="six_point", required=True, metavar="DIR",
                   help="directory for class representatives")
    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "nested": _cmd_nested,
    "fan": _cmd_fan,
    "analyze": _cmd_analyze,
    "witness": _cmd_witness,
    "polytope": _cmd_polytope,
    "digraph-polytope": _cmd_digraph_polytope,
    "equiv": _cmd_equiv,
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
}


def _thread_count(ns) -> int:
    if getattr(ns, "threads", None) is not None:
        count = ns.threads
    else:
        try:
            count = int(os.environ.get(THREADS_ENV, "1"))
        except ValueError:
            count = 1
    return max(1, count)


def run(argv) -> int:
    """Dispatch one invocation; returns the process exit status."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    ns.thread_count = _thread_count(ns)
    try:
        code, lines, payload = _HANDLERS[ns.command](ns)
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if getattr(ns, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
