"""Command-line harness: enumerate structures, run verification campaigns,
and inspect single structure files.

Campaign report streams are deterministic: one tab-separated line per
structure (id, c1, c2, c3, ok) followed by a summary comment.  Exit status
is nonzero exactly when a validation failure, an oracle discrepancy or an
equivalence failure occurred.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import canon, enumeration, le, ordered, storage


def _fmt_bool(b):
    return "true" if b else "false"


def _parse_shard(text):
    try:
        i, t = text.split("/")
        return int(i), int(t)
    except ValueError:
        raise argparse.ArgumentTypeError("shard must look like i/t, e.g. 0/4") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="posemi",
        description="finite ordered-semigroup toolkit: ideals, generators, "
        "intra-regularity and exhaustive verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="emit structure records")
    p.add_argument("--kind", required=True, choices=["semigroup", "ordered", "le"])
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--dedup", choices=["none", "iso"], default="none")
    p.add_argument("--shard", type=_parse_shard, metavar="I/T")
    p.add_argument("--limit", type=int)
    p.add_argument("--out", metavar="DIR", help="write one file per structure")

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("scope", choices=["theorem1", "theorem2", "remark"])
    p.add_argument("--max-order", type=int, dest="max_order")
    p.add_argument("--dedup", choices=["none", "iso"], default="none")
    p.add_argument("--shard", type=_parse_shard, metavar="I/T")
    p.add_argument("--file", help="verify one structure file instead of a universe")

    p = sub.add_parser("classify", help="ideal flags of a subset or element")
    p.add_argument("--file", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--subset", help="comma-separated indices or names")
    g.add_argument("--element", help="index or name")

    p = sub.add_parser("generate", help="generated ideal or ideal element")
    p.add_argument("--file", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--subset", help="comma-separated indices or names")
    g.add_argument("--element", help="index or name")
    p.add_argument("--kind", required=True, choices=["left", "right", "quasi"])

    p = sub.add_parser("witness", help="intra-regularity witness for an element")
    p.add_argument("--file", required=True)
    p.add_argument("--element", required=True)

    return parser


def _as_ordered_view(structure):
    if isinstance(structure, le.LeSemigroup):
        return ordered.OrderedSemigroup(structure.table, structure.leq)
    return structure


def _parse_subset(loaded, text):
    mask = 0
    for token in (t.strip() for t in text.split(",")):
        if token:
            mask |= 1 << loaded.index_of(token)
    return mask


def _set_str(loaded, mask):
    return "{" + ", ".join(loaded.label(i) for i in ordered.subset_indices(mask)) + "}"


def _greatest(s):
    tops = [t for t in range(s.n) if all(s.leq[i][t] for i in range(s.n))]
    return tops[0] if len(tops) == 1 else None


def _report_line(report):
    return "\t".join(
        [
            report.structure_id,
            _fmt_bool(report.c1),
            _fmt_bool(report.c2),
            _fmt_bool(report.c3),
            _fmt_bool(report.equivalence_ok),
        ]
    )


def _campaign(scope, max_order, dedup, shard):
    """Yield (line, ok) per structure of the enumerated universe."""
    dedup_mode = "up_to_iso" if dedup == "iso" else "none"
    idx = 0
    for n in range(1, max_order + 1):
        cfg = enumeration.EnumerationConfig(order=n, dedup=dedup_mode)
        if scope == "theorem2":
            for L in enumeration.enumerate_le_semigroups(cfg):
                if shard is None or idx % shard[1] == shard[0]:
                    report = le.verify_theorem2(L)
                    yield _report_line(report), report.equivalence_ok
                idx += 1
        elif scope == "theorem1":
            for s in enumeration.enumerate_ordered_semigroups(cfg):
                if shard is None or idx % shard[1] == shard[0]:
                    report = ordered.verify_theorem1(s)
                    yield _report_line(report), report.equivalence_ok
                idx += 1
        else:
            for s in enumeration.enumerate_ordered_semigroups(cfg):
                top = _greatest(s)
                if top is None:
                    continue
                if shard is None or idx % shard[1] == shard[0]:
                    poe = le.PoeSemigroup(s.table, s.leq, top=top)
                    ok = le.check_remark(poe) is True
                    yield _remark_line(poe, ok), ok
                idx += 1


def _remark_line(poe, ok):
    sid = canon.ordered_structure_id(poe.table, poe.leq)
    intra = le.is_intra_regular_poe(poe)
    return "\t".join([sid, _fmt_bool(intra), _fmt_bool(ok), "-", _fmt_bool(ok)])


def cmd_verify(args):
    if args.file:
        return _verify_file(args)
    if args.max_order is None:
        print("error: --max-order is required without --file", file=sys.stderr)
        return 2
    cap = enumeration.max_enum_order()
    if not 1 <= args.max_order <= cap:
        print(
            f"error: --max-order must be between 1 and {cap}"
            " (POSEMI_MAX_ORDER overrides the cap)",
            file=sys.stderr,
        )
        return 2
    checked = 0
    failed = []
    for line, ok in _campaign(args.scope, args.max_order, args.dedup, args.shard):
        print(line)
        checked += 1
        if not ok:
            failed.append(line.split("\t", 1)[0])
    for sid in failed:
        print(f"# FAILED {sid}")
    print(f"# checked={checked} failures={len(failed)}")
    return 1 if failed else 0


def _verify_file(args):
    loaded = storage.load(args.file)
    s = loaded.structure
    if args.scope == "theorem1":
        report = ordered.verify_theorem1(_as_ordered_view(s))
        print(_report_line(report))
        for cond, w in report.witnesses:
            print(
                f"# witness {cond} X={_set_str(loaded, w.x)}"
                f" M={_set_str(loaded, w.m)} Y={_set_str(loaded, w.y)}"
                f" element={loaded.label(w.violating_element)}"
            )
        ok = report.equivalence_ok
    elif args.scope == "theorem2":
        if not isinstance(s, le.LeSemigroup):
            print("error: theorem2 requires a le_semigroup file", file=sys.stderr)
            return 2
        report = le.verify_theorem2(s)
        print(_report_line(report))
        for cond, w in report.witnesses:
            print(
                f"# witness {cond} x={loaded.label(w.x)}"
                f" m={loaded.label(w.m)} y={loaded.label(w.y)}"
            )
        ok = report.equivalence_ok
    else:
        if isinstance(s, le.LeSemigroup):
            poe = le.as_poe_semigroup(s)
        elif isinstance(s, le.PoeSemigroup):
            poe = s
        else:
            top = _greatest(s)
            if top is None:
                print("error: remark requires a greatest element", file=sys.stderr)
                return 2
            poe = le.PoeSemigroup(s.table, s.leq, top=top)
        res = le.check_remark(poe)
        ok = res is True
        print(_remark_line(poe, ok))
        if not ok:
            print(
                f"# witness remark x={loaded.label(res.x)}"
                f" b={loaded.label(res.m)} y={loaded.label(res.y)}"
            )
    print(f"# checked=1 failures={0 if ok else 1}")
    return 0 if ok else 1


def cmd_classify(args):
    loaded = storage.load(args.file)
    s = loaded.structure
    if args.subset is not None:
        flags = ordered.classify_subset(_as_ordered_view(s), _parse_subset(loaded, args.subset))
        print(
            f"left={_fmt_bool(flags.left)} right={_fmt_bool(flags.right)}"
            f" quasi={_fmt_bool(flags.quasi)} bi={_fmt_bool(flags.bi)}"
            f" downward_closed={_fmt_bool(flags.downward_closed)}"
            f" nonempty={_fmt_bool(flags.nonempty)}"
        )
        return 0
    if not isinstance(s, (le.LeSemigroup, le.PoeSemigroup)):
        print(
            "error: element classification requires a poe_semigroup or"
            " le_semigroup file",
            file=sys.stderr,
        )
        return 2
    flags = le.element_class(s, loaded.index_of(args.element))
    print(
        f"right={_fmt_bool(flags.right)} left={_fmt_bool(flags.left)}"
        f" bi={_fmt_bool(flags.bi)} quasi={_fmt_bool(flags.quasi)}"
        f" quasi_defined={_fmt_bool(flags.quasi_defined)}"
    )
    return 0


def cmd_generate(args):
    loaded = storage.load(args.file)
    s = loaded.structure
    if args.subset is not None:
        base = _as_ordered_view(s)
        mask = _parse_subset(loaded, args.subset)
        got = ordered.gen_ideal(base, mask, args.kind)
        want = ordered.least_ideal_oracle(base, mask, args.kind)
        print(_set_str(loaded, got))
        if got == want:
            print("oracle: match")
            return 0
        print(f"oracle: MISMATCH expected {_set_str(loaded, want)}")
        return 1
    if not isinstance(s, le.LeSemigroup):
        print("error: element generation requires a le_semigroup file", file=sys.stderr)
        return 2
    a = loaded.index_of(args.element)
    got = le.gen_element(s, a, args.kind)
    want = le.least_element_oracle(s, a, args.kind)
    print(loaded.label(got))
    if got == want:
        print("oracle: match")
        return 0
    print(f"oracle: MISMATCH expected {loaded.label(want)}")
    return 1


def cmd_witness(args):
    loaded = storage.load(args.file)
    base = _as_ordered_view(loaded.structure)
    pair = ordered.intra_regular_witness(base, loaded.index_of(args.element))
    if pair is None:
        print("none")
    else:
        print(f"({loaded.label(pair[0])}, {loaded.label(pair[1])})")
    return 0


def cmd_enumerate(args):
    dedup = "up_to_iso" if args.dedup == "iso" else "none"
    cfg = enumeration.EnumerationConfig(
        order=args.order, dedup=dedup, limit=args.limit, shard=args.shard
    )

    def records():
        if args.kind == "semigroup":
            discrete = [[i == j for j in range(args.order)] for i in range(args.order)]
            for t in enumeration.enumerate_semigroups(cfg):
                s = ordered.OrderedSemigroup(t, discrete)
                yield storage.to_payload(s), canon.ordered_structure_id(s.table, s.leq)
        elif args.kind == "ordered":
            for s in enumeration.enumerate_ordered_semigroups(cfg):
                yield storage.to_payload(s), canon.ordered_structure_id(s.table, s.leq)
        else:
            for L in enumeration.enumerate_le_semigroups(cfg):
                yield storage.to_payload(L), canon.le_structure_id(
                    L.table, L.join, L.meet
                )

    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        count = 0
        for i, (payload, sid) in enumerate(records()):
            path = outdir / f"{i:06d}-{sid}.json"
            path.write_text(
                json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
            )
            count += 1
        print(f"# wrote={count} dir={outdir}")
    else:
        for payload, _ in records():
            print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {
        "enumerate": cmd_enumerate,
        "verify": cmd_verify,
        "classify": cmd_classify,
        "generate": cmd_generate,
        "witness": cmd_witness,
    }
    try:
        return handlers[args.command](args)
    except storage.StructureFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
