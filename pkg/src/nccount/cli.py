"""Command-line front end.

Exit status: 0 on success, 2 for usage or input errors, 3 when a computed
invariant contradicts the theory (IntegrityError).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .curves import (count_Cl, decide_embedding, gram_witness_search, semiorthogonal_graph,
                     to_dot)
from .derived import enumerate_exceptional
from .quiver import Kind, Quiver, QuiverError, builtin, classify
from .reps import IntegrityError
from .weights import WeightError, WeightSequence, to_quiver

DEFAULT_WINDOW = 6


class InputError(Exception):
    pass


def load_quiver(source: str) -> Quiver:
    """A builtin name such as ``D~(4)`` or the path of a JSON file."""
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from exc
        q = Quiver.from_json(text)
        q.name = json.loads(text).get("name") or path.stem
        return q
    return builtin(source)


def _vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _genera(values: list[str] | None) -> list[int]:
    out = []
    for v in values or ["1"]:
        for x in v.split(","):
            try:
                l = int(x)
            except ValueError as exc:
                raise InputError(f"bad genus {x!r}") from exc
            if l < -1:
                raise InputError("genus must be >= -1")
            out.append(l)
    return out


def _window(args) -> int:
    w = args.window if args.window is not None else DEFAULT_WINDOW
    if w < 1:
        raise InputError("window must be >= 1")
    return w


def cmd_classify(args) -> str:
    lines = []
    for src in args.quiver:
        q = load_quiver(src)
        for c in classify(q):
            parts = [c.kind.value]
            if c.kind is not Kind.WILD:
                parts[0] += " " + c.pretty()
            parts.append(f"rank {len(c.vertices)}")
            if c.null_root is not None:
                parts.append(f"δ={_vec(c.null_root)}")
            if c.orientation is not None and len(c.vertices) > 2:
                parts.append(f"orientation {c.orientation[0]}/{c.orientation[1]}")
            if args.format == "json":
                lines.append(json.dumps({"quiver": src, "kind": c.kind.value, "label": c.label,
                                         "rank": len(c.vertices),
                                         "null_root": list(c.null_root) if c.null_root else None,
                                         "vertices": [q.vertices[i] for i in c.vertices]},
                                        sort_keys=True, ensure_ascii=False))
            else:
                lines.append(", ".join(parts))
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> str:
    w = _window(args)
    out = []
    for src in args.quiver:
        en = enumerate_exceptional(load_quiver(src), w)
        if args.format == "json":
            out.append(en.dump_jsonl())
        else:
            out.append("quiver\twindow\tdims\n" if not out else "")
            out.append("".join(f"{src}\t{w}\t{_vec(o.dims)}\n" for o in en))
            if en.truncated:
                out.append(f"# {src}: window-truncated, {len(en)} objects\n")
    return "".join(out)


def cmd_count(args) -> str:
    w = _window(args)
    rows = []
    for src in args.quiver:
        q = load_quiver(src)
        for l in _genera(args.genus):
            rows.append((src, count_Cl(q, l, w)))
    if args.format == "json":
        return "".join(json.dumps({**r.to_dict(), "quiver": s}, sort_keys=True) + "\n"
                       for s, r in rows)
    head = "quiver\tl\twindow\tcount\ttruncated\n"
    return head + "".join(f"{s}\t{r.l}\t{r.window}\t{r.count}\t{str(r.truncated).lower()}\n"
                          for s, r in rows)


def cmd_embed(args) -> str:
    if not args.from_ or not args.into:
        raise InputError("embed needs --from and --into")
    a, b = WeightSequence.parse(args.from_), WeightSequence.parse(args.into)
    verdict = decide_embedding(a, b)
    rec = {"from": str(a), "into": str(b), "verdict": str(verdict)}
    if args.witness:
        w = args.window if args.window is not None else 8
        found = gram_witness_search(a, to_quiver(b), w)
        rec["window"] = w
        rec["witness"] = None if found is None else [
            {"dims": list(o.dims), "shift": o.shift} for o in found]
    if args.format == "json":
        return json.dumps(rec, sort_keys=True) + "\n"
    out = f"{a} -> {b}\t{verdict}\n"
    if args.witness:
        if rec["witness"] is None:
            out += f"no witness within window {rec['window']}\n"
        else:
            out += "witness\t" + " ".join(f"{_vec(o['dims'])}[{o['shift']}]"
                                          for o in rec["witness"]) + "\n"
    return out


def cmd_graph(args) -> str:
    w = _window(args)
    if len(args.quiver) != 1:
        raise InputError("graph takes exactly one --quiver")
    src = args.quiver[0]
    l = _genera(args.genus)[0]
    res = count_Cl(load_quiver(src), l, w, check_stable=False)
    g = semiorthogonal_graph(res.curves)
    if args.format == "json":
        return json.dumps({"quiver": src, "l": l, "window": w,
                           "nodes": [c.to_dict() for c in res.curves],
                           "edges": sorted(g.edges())}, sort_keys=True) + "\n"
    return to_dot(res.curves, g, f"{src} genus {l} window {w}")


COMMANDS = {"classify": cmd_classify, "enumerate": cmd_enumerate, "count": cmd_count,
            "embed": cmd_embed, "graph": cmd_graph}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nccount",
                                description="Exceptional objects and non-commutative curves "
                                            "in derived categories of quivers.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--quiver", action="append", default=[],
                       help="builtin name (K(2), A~(2,1), D~(4), E~(6), A(3), ...) or JSON file")
        s.add_argument("--genus", action="append", help="l >= -1; repeat or comma-separate")
        s.add_argument("--window", type=int, help="bound on dimension-vector entries")
        s.add_argument("--from", dest="from_", help="weight triple, e.g. 2,2,2")
        s.add_argument("--into", help="weight triple, e.g. 2,3,5")
        s.add_argument("--witness", action="store_true", help="also search for a Gram witness")
        s.add_argument("--format", choices=["tsv", "json", "dot"],
                       default="dot" if name == "graph" else "tsv")
        s.add_argument("--out", help="write output to this file")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command not in ("embed",) and not args.quiver:
        parser.error(f"{args.command} needs --quiver")
    try:
        text = COMMANDS[args.command](args)
    except IntegrityError as exc:
        print(f"nccount: integrity error: {exc}", file=sys.stderr)
        return 3
    except (InputError, QuiverError, WeightError, ValueError) as exc:
        print(f"nccount: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
