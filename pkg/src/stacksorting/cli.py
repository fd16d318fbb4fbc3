"""Command-line front end: ``stacksort <command> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .cache import ResultCache
from .perm import check_normalized, format_patterns, format_perm, parse_patterns, parse_perm
from .sliding import swl, swu
from .stacksort import fertility, preimages, sort_iterate
from .verify import CLAIMS, VerificationReport, av, contained_in, preimage_sequence, run_claim
from .vhc import enumerate_vhcs, fertility_via_vhc

log = logging.getLogger("stacksorting")

N_MAX_CAP = 10
FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    """Bad input; reported on stderr with exit status 2."""


@dataclass
class RunConfig:
    n_max: Optional[int] = None
    families: list[str] = field(default_factory=lambda: ["binary"])
    m_max: int = 3
    stats: list[str] = field(default_factory=list)
    output_format: str = "table"
    cache_dir: Optional[Path] = None
    use_cache: bool = True
    workers: int = 1
    unsafe: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError("worker count must be at least 1")
        if self.n_max is not None:
            if self.n_max < 0:
                raise UsageError("n_max must be nonnegative")
            if self.n_max > N_MAX_CAP and not self.unsafe:
                raise UsageError(f"n_max {self.n_max} exceeds the cap of {N_MAX_CAP}; pass --unsafe to override")
        if self.m_max < 0:
            raise UsageError("m_max must be nonnegative")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            n_max=getattr(args, "n_max", None),
            families=getattr(args, "families", None) or ["binary"],
            m_max=getattr(args, "m_max", 3),
            output_format=args.format,
            cache_dir=args.cache_dir,
            use_cache=not args.no_cache,
            workers=args.workers,
            unsafe=args.unsafe,
        )

    def cache(self) -> ResultCache:
        return ResultCache(self.cache_dir, enabled=self.use_cache)


# -- rendering -------------------------------------------------------------

def render(headers: Sequence[str], rows: Sequence[Sequence], fmt: str, payload=None) -> str:
    """Fixed-width table, CSV, or JSON (``payload`` if given, else a list of row objects)."""
    if fmt == "json":
        data = payload if payload is not None else [dict(zip(headers, r)) for r in rows]
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(headers)
        w.writerows(rows)
        return buf.getvalue()
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _perm_arg(text: str) -> tuple[tuple[int, ...], bool]:
    try:
        p = parse_perm(text)
        check_normalized(p)
    except ValueError as e:
        raise UsageError(str(e)) from None
    compact = not any(ch.isspace() for ch in text.strip())
    return p, compact


def _comp(c) -> str:
    return "(" + ",".join(str(x) for x in c) + ")"


# -- commands --------------------------------------------------------------

def cmd_sort(args, cfg: RunConfig) -> tuple[str, int]:
    p, compact = _perm_arg(args.perm)
    out = format_perm(sort_iterate(p, args.times), compact)
    if cfg.output_format == "table":
        return out + "\n", 0
    return render(["input", "output"], [[format_perm(p, compact), out]], cfg.output_format), 0


def cmd_preimages(args, cfg: RunConfig) -> tuple[str, int]:
    p, compact = _perm_arg(args.perm)
    members = preimages(p, args.method)
    rows = [[format_perm(s, compact)] for s in members]
    payload = {"target": format_perm(p, compact), "count": len(members), "preimages": [r[0] for r in rows]}
    text = render(["preimage"], rows, cfg.output_format, payload)
    if cfg.output_format == "table":
        text += f"count: {len(members)}\n"
    return text, 0


def cmd_fertility(args, cfg: RunConfig) -> tuple[str, int]:
    p, compact = _perm_arg(args.perm)
    counts = {}
    if args.method in ("vhc", "both"):
        counts["vhc"] = fertility_via_vhc(p)
    if args.method in ("brute", "both"):
        counts["brute"] = fertility(p, "brute")
    status = 0
    if len(set(counts.values())) > 1:
        log.error("fertility methods disagree on %s: %s", format_perm(p, compact), counts)
        status = 1
    rows = [[m, c] for m, c in counts.items()]
    return render(["method", "fertility"], rows, cfg.output_format,
                  {"perm": format_perm(p, compact), **counts}), status


def cmd_vhc(args, cfg: RunConfig) -> tuple[str, int]:
    p, compact = _perm_arg(args.perm)
    rows = []
    for h in enumerate_vhcs(p):
        hooks = " ".join(f"({k.sw},{k.ne})" for k in h.hooks) or "-"
        shown = h.composition if args.show == "compositions" else h.type
        rows.append([hooks, _comp(shown)])
    payload = {"perm": format_perm(p, compact),
               "configurations": [{"hooks": [[k.sw, k.ne] for k in h.hooks], "composition": list(h.composition),
                                   "type": list(h.type)} for h in enumerate_vhcs(p)]}
    return render(["hooks", args.show[:-1]], rows, cfg.output_format, payload), 0


def _slide(fn, args, cfg: RunConfig) -> tuple[str, int]:
    p, compact = _perm_arg(args.perm)
    try:
        out = format_perm(fn(p), compact)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if cfg.output_format == "table":
        return out + "\n", 0
    return render(["input", "output"], [[format_perm(p, compact), out]], cfg.output_format), 0


def cmd_swu(args, cfg):
    return _slide(swu, args, cfg)


def cmd_swl(args, cfg):
    return _slide(swl, args, cfg)


def cmd_sequence(args, cfg: RunConfig) -> tuple[str, int]:
    n_max = cfg.n_max if cfg.n_max is not None else 8
    try:
        if args.contained_in:
            cls = contained_in(*parse_patterns(args.contained_in))
        else:
            cls = av(*parse_patterns(args.cls or ""))
    except ValueError as e:
        raise UsageError(str(e)) from None
    request = {"class": cls.kind, "perms": format_patterns(cls.perms), "preimage": args.preimage, "n_max": n_max}

    def compute():
        if args.preimage:
            return preimage_sequence(cls, n_max)
        return [len(cls.members(n)) for n in range(1, n_max + 1)]

    values = cfg.cache().fetch("sequence", request, compute)
    rows = [[n, v] for n, v in enumerate(values, start=1)]
    payload = {"class": cls.label, "preimage": args.preimage, "values": values}
    return render(["n", "count"], rows, cfg.output_format, payload), 0


def _run_claim_job(claim_id: str, n_max: Optional[int], m_max: int) -> dict:
    return run_claim(claim_id, n_max=n_max, m_max=m_max).to_dict()


def cmd_verify(args, cfg: RunConfig) -> tuple[str, int]:
    if args.list:
        rows = [[c.id, c.summary] for c in CLAIMS.values()]
        return render(["claim", "summary"], rows, cfg.output_format), 0
    wanted = list(CLAIMS) if not args.claim or "all" in args.claim else args.claim
    unknown = [c for c in wanted if c not in CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim(s): {', '.join(unknown)}; see verify --list")
    cache = cfg.cache()
    results: dict[str, dict] = {}
    todo = []
    for cid in wanted:
        hit = cache.get(cache.key("verify", {"claim": cid, "n_max": cfg.n_max, "m_max": cfg.m_max}))
        if hit is not None:
            results[cid] = hit
        else:
            todo.append(cid)
    if cfg.workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = {cid: pool.submit(_run_claim_job, cid, cfg.n_max, cfg.m_max) for cid in todo}
            for cid, fut in futures.items():
                results[cid] = fut.result()
    else:
        for cid in todo:
            results[cid] = _run_claim_job(cid, cfg.n_max, cfg.m_max)
    for cid in todo:
        cache.put(cache.key("verify", {"claim": cid, "n_max": cfg.n_max, "m_max": cfg.m_max}), results[cid])

    reports = [VerificationReport.from_dict(results[cid]) for cid in wanted]
    failing = [r.claim for r in reports if not r.passed]
    rows = [[r.claim, r.status, f"{r.ms:.1f}", _summary(r)] for r in reports]
    text = render(["claim", "status", "ms", "result"], rows, cfg.output_format,
                  [r.to_dict() for r in reports])
    if failing:
        log.error("first failing claim: %s", failing[0])
        return text, 1
    return text, 0


def _summary(r: VerificationReport) -> str:
    info = r.witness if not r.passed else r.detail
    if not info:
        return ""
    for key in ("sequence", "vhc_counts"):
        if key in info:
            return ",".join(str(x) for x in info[key])
    return json.dumps(info, sort_keys=True)[:80]


COMMANDS = {
    "sort": cmd_sort, "preimages": cmd_preimages, "fertility": cmd_fertility, "vhc": cmd_vhc,
    "swu": cmd_swu, "swl": cmd_swl, "sequence": cmd_sequence, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--output", type=Path, help="write the result to this file instead of stdout")
    common.add_argument("--cache-dir", type=Path, help="result cache directory (default: $STACKSORTING_CACHE_DIR)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--unsafe", action="store_true", help=f"allow n_max above {N_MAX_CAP}")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="stacksort", description="Stack-sorting preimages and hook configurations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", parents=[common], help="apply the stack-sorting map")
    p.add_argument("perm")
    p.add_argument("--times", type=int, default=1)

    p = sub.add_parser("preimages", parents=[common], help="list s^-1(perm)")
    p.add_argument("perm")
    p.add_argument("--method", choices=("trees", "brute"), default="trees")

    p = sub.add_parser("fertility", parents=[common], help="count preimages")
    p.add_argument("perm")
    p.add_argument("--method", choices=("vhc", "brute", "both"), default="vhc")

    p = sub.add_parser("vhc", parents=[common], help="list valid hook configurations")
    p.add_argument("perm")
    p.add_argument("--show", choices=("compositions", "types"), default="compositions")

    for name in ("swu", "swl"):
        p = sub.add_parser(name, parents=[common], help=f"apply {name}")
        p.add_argument("perm")

    p = sub.add_parser("sequence", parents=[common], help="class sizes or preimage counts for n = 1..n_max")
    p.add_argument("--class", dest="cls", help="basis patterns, e.g. 132,231")
    p.add_argument("--contained-in", help="use the class of patterns contained in these permutations")
    p.add_argument("--preimage", action="store_true", help="count stack-sorting preimages of the class")
    p.add_argument("--n-max", type=int)

    p = sub.add_parser("verify", parents=[common], help="run finite-level claim checks")
    p.add_argument("--claim", action="append", help="claim id, repeatable, or 'all'")
    p.add_argument("--list", action="store_true")
    p.add_argument("--n-max", type=int)
    p.add_argument("--m-max", type=int, default=3)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        cfg = RunConfig.from_args(args)
        text, status = COMMANDS[args.command](args, cfg)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
