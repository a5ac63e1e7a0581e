"""Command-line interface: ``starfree <command> [options]``.

Exit codes: 0 on success (including a pass with warnings), 1 when a
classification disagrees with the published list, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from starfree import catalog, classeq, classify
from starfree.catalog.recipes import dihedral
from starfree.errors import AbelianGroup, StarFreeError
from starfree.graph import commuting_graph, star_report, strong_star_number
from starfree.group import ORDER_BOUND, FiniteGroup, centralizer_profile
from starfree.groupfile import GroupFileError, read_group_file

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    group: str | None = None
    k: int | None = None
    sizes: tuple[int, ...] | None = None
    center: int | None = None
    n: int | None = None
    raw: bool = False
    verify: bool = False
    stretch: bool = False
    order_bound: int = ORDER_BOUND
    fmt: str = "text"
    output: Path | None = None

    def __post_init__(self):
        allowed = ("text", "json", "dot") if self.command == "export" else ("text", "json")
        if self.command == "export" and self.fmt == "text":
            object.__setattr__(self, "fmt", "dot")
        if self.fmt not in allowed:
            raise UsageError(f"format {self.fmt!r} is not valid for {self.command}")


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise UsageError(f"malformed size list {text!r}; expected integers like 2,3,4") from None
    return sizes


def load_group(ref: str, bound: int = ORDER_BOUND) -> FiniteGroup:
    """A catalog name, or ``file:path.json``."""
    if ref.startswith("file:"):
        return read_group_file(ref[len("file:"):], bound=bound)
    return catalog.build(ref)


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def cmd_analyze(cfg: RunConfig) -> int:
    G = load_group(cfg.group, cfg.order_bound)
    if G.is_abelian:
        raise AbelianGroup(f"{G.label or cfg.group} is abelian; its commuting graph is empty (vacuously star-free)")
    rep = star_report(G)
    prof = centralizer_profile(G)
    if cfg.fmt == "json":
        doc = json.loads(rep.to_json())
        doc["profile"] = [list(e) for e in prof.entries]
        _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
        return EXIT_OK
    comps = ", ".join(f"{v}v/{e}e x{c}" for (v, e), c in _count(rep.components))
    lines = [
        f"group: {rep.group}",
        f"order: {rep.order}",
        f"center size: {rep.center_order}",
        "profile: " + ", ".join(f"(|C|={s}, classes={m})" for s, m in prof.entries),
        f"strong star number S: {rep.strong_star_number}",
        f"induced star number: {rep.induced_star_number}",
        f"max degree: {rep.max_degree}",
        "degree histogram: " + ", ".join(f"{d}:{c}" for d, c in rep.degree_histogram.items()),
        f"components: {comps}",
    ]
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def _count(items):
    out: dict = {}
    for it in items:
        out[it] = out.get(it, 0) + 1
    return list(out.items())


def cmd_classify(cfg: RunConfig) -> int:
    k = cfg.k
    if k is None or not 2 <= k <= classify.MAX_K:
        raise UsageError(f"--k must be between 2 and {classify.MAX_K}")
    if k in classify.PUBLISHED:
        report = classify.verify_against_published(k, stretch=cfg.stretch)
    else:
        report = classify.strong_k_star_free_groups(k, stretch=cfg.stretch)
    _emit(report.to_json() + "\n" if cfg.fmt == "json" else report.render(), cfg.output)
    if report.unverifiable_orders:
        print(
            "warning: UNVERIFIED candidate orders " + ", ".join(map(str, report.unverifiable_orders))
            + (" (try --stretch)" if not cfg.stretch else ""),
            file=sys.stderr,
        )
    return EXIT_MISMATCH if report.status == classify.FAIL else EXIT_OK


def cmd_solve(cfg: RunConfig) -> int:
    sols = classeq.solve(cfg.sizes, cfg.center, strict=not cfg.raw)
    if cfg.fmt == "json":
        _emit(classeq.solutions_to_json(sols) + "\n", cfg.output)
        return EXIT_OK
    head = f"sizes {','.join(map(str, cfg.sizes))}, center {cfg.center}" + (" (raw arithmetic)" if cfg.raw else "")
    lines = [head]
    lines += [f"n={s.order} m=({','.join(map(str, s.multiplicities))}) classes={classeq.conjugacy_count(s)}" for s in sols]
    lines.append(f"{len(sols)} solution(s)")
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    if cfg.k is None or cfg.k < 1:
        raise UsageError("--k must be a positive integer")
    cands = classeq.enumerate_candidates(cfg.k)
    if cfg.fmt == "json":
        _emit(json.dumps(cands.to_dict(), indent=2) + "\n", cfg.output)
        return EXIT_OK
    lines = [f"k={cfg.k}: {len(cands.tuples)} size sets, bound on distinct sizes {classeq.distinct_size_bound(cfg.k)}"]
    for t in cands.tuples:
        sols = "; ".join(f"n={s.order} m=({','.join(map(str, s.multiplicities))})" for s in t.solutions)
        lines.append(f"z={t.center} sizes={{{','.join(map(str, t.sizes))}}}: {sols}")
    lines.append("candidate orders: " + ", ".join(map(str, cands.orders)))
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def cmd_dihedral(cfg: RunConfig) -> int:
    n = cfg.n
    if n is None or n < 3:
        raise UsageError("--n must be an integer >= 3")
    value = classify.dihedral_star_number(n)
    sol = classify.dihedral_class_equation(n, verify=cfg.verify)
    doc = {"n": n, "order": 2 * n, "closed_form": value, "class_equation": sol.to_dict()}
    if cfg.verify:
        doc["computed"] = strong_star_number(dihedral(n))
    if cfg.fmt == "json":
        _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
    else:
        lines = [
            f"D{2 * n}: closed form S = {value}",
            f"class equation: z={sol.center} sizes={list(sol.sizes)} m={list(sol.multiplicities)}",
        ]
        if cfg.verify:
            lines.append(f"computed S = {doc['computed']}")
        _emit("\n".join(lines) + "\n", cfg.output)
    if cfg.verify and doc["computed"] != value:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_export(cfg: RunConfig) -> int:
    G = load_group(cfg.group, cfg.order_bound)
    if cfg.fmt == "dot":
        text = commuting_graph(G).to_dot()
    else:
        text = star_report(G).to_json() + "\n"
    _emit(text, cfg.output)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
    "dihedral": cmd_dihedral,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="starfree", description="Star-freeness of commuting graphs of finite groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json"), default="text"):
        p.add_argument("--format", dest="fmt", choices=formats, default=default)
        p.add_argument("--output", type=Path, help="write to this file instead of stdout")

    p = sub.add_parser("analyze", help="star numbers, profile and components of one group")
    p.add_argument("--group", required=True, help="catalog name or file:path.json")
    p.add_argument("--order-bound", type=int, default=ORDER_BOUND)
    common(p)

    p = sub.add_parser("classify", help="strong k-star-free groups, compared with the published list")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--stretch", action="store_true", help="also scan orders 25-32")
    common(p)

    p = sub.add_parser("solve", help="solve the class equation for given sizes and center")
    p.add_argument("--sizes", required=True, help="comma-separated centralizer sizes")
    p.add_argument("--center", type=int, required=True)
    p.add_argument("--raw", action="store_true", help="keep every integral n, skipping divisibility filters")
    common(p)

    p = sub.add_parser("enumerate", help="all class-equation candidates for strong k-star-free groups")
    p.add_argument("--k", type=int, required=True)
    common(p)

    p = sub.add_parser("dihedral", help="strong star number of D_2n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="recompute from the group itself")
    common(p)

    p = sub.add_parser("export", help="commuting graph as DOT or the star report as JSON")
    p.add_argument("--group", required=True)
    p.add_argument("--order-bound", type=int, default=ORDER_BOUND)
    common(p, formats=("dot", "json"), default="dot")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            group=getattr(args, "group", None),
            k=getattr(args, "k", None),
            sizes=_parse_sizes(args.sizes) if getattr(args, "sizes", None) is not None else None,
            center=getattr(args, "center", None),
            n=getattr(args, "n", None),
            raw=getattr(args, "raw", False),
            verify=getattr(args, "verify", False),
            stretch=getattr(args, "stretch", False),
            order_bound=getattr(args, "order_bound", ORDER_BOUND),
            fmt=args.fmt,
            output=args.output,
        )
        return COMMANDS[cfg.command](cfg)
    except (UsageError, StarFreeError, GroupFileError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
