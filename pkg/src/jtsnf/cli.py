"""``jt`` command line front end.

Exit codes: 0 success/match, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .jacobitrudi import ZERO_MINOR, SpecializationKind, build_jt, h_image, minor_matrix, submatrix_to_skew
from .partitions import Partition, PartitionError, lr_coefficient
from .snf import det
from .theorems import METHODS, corner_block, predict, sweep, verify

RINGS = {k.value: k for k in SpecializationKind}


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _index_list(text: str) -> tuple[int, ...]:
    try:
        idx = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list: {text!r}") from None
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise argparse.ArgumentTypeError(f"index list must be strictly increasing: {text!r}")
    return idx


def _emit(args, text: str, payload) -> None:
    out = json.dumps(payload, indent=2) if args.format == "json" else text
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _resolve_t(shape: Partition, t: int | None) -> int:
    if t is None:
        return len(shape)
    if t < len(shape):
        raise UsageError(f"t={t} is below the length {len(shape)} of {shape}")
    return t


def cmd_snf(args) -> int:
    t = _resolve_t(args.shape, args.t)
    kind = RINGS[args.ring]
    rep = verify(args.shape, t, kind, args.method)
    factored = rep.predicted.factored()
    lines = [f"shape {rep.shape}  t={t}  ring {kind.value}  method {args.method}"]
    for i, (f, c) in enumerate(zip(factored, rep.computed), 1):
        lines.append(f"  [{i}] predicted {f}")
        lines.append(f"      computed  {c}")
    lines.append("match" if rep.match else "MISMATCH")
    payload = rep.to_json()
    payload["predicted_factored"] = factored
    _emit(args, "\n".join(lines), payload)
    return 0 if rep.match else 1


def cmd_predict(args) -> int:
    t = _resolve_t(args.shape, args.t)
    kind = RINGS[args.ring]
    pred = predict(args.shape, t, kind)
    lines = [f"shape {args.shape}  t={t}  ring {kind.value}"]
    for i, (f, e) in enumerate(zip(pred.factored(), pred.entries), 1):
        lines.append(f"  [{i}] {f} = {e.monic()}")
    payload = {
        "shape": str(args.shape), "t": t, "kind": kind.name,
        "factored": pred.factored(), "expanded": [str(e.monic()) for e in pred.entries],
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_verify(args) -> int:
    kinds = list(SpecializationKind) if args.ring == "all" else [RINGS[args.ring]]
    report = sweep(args.max_weight, args.extra_rows, kinds, args.method, args.workers)
    failures = report.failures
    lines = [f"FAIL shape {c.shape} t={c.t} ring {c.kind.value}" for c in failures]
    lines.append(f"cases {len(report.cases)}  failures {len(failures)}  total_ms {report.total_ms:.1f}")
    _emit(args, "\n".join(lines), report.to_json())
    return 0 if not failures else 1


def cmd_minor(args) -> int:
    t = _resolve_t(args.shape, args.t)
    rows, cols = args.rows, args.cols
    if len(rows) != len(cols):
        raise UsageError("--rows and --cols must have the same length")
    if any(not 1 <= x <= t for x in rows + cols):
        raise UsageError(f"indices must lie in 1..{t}")
    k = len(rows)
    kind = RINGS[args.ring]
    skew = submatrix_to_skew(args.shape, t, rows, cols)
    minor = det(minor_matrix(build_jt(args.shape, t, kind), rows, cols))
    dmk = det(corner_block(args.shape, t, k, kind)[2])
    divisible = dmk.divides(minor) if dmk else None
    skew_text = "zero minor" if skew is ZERO_MINOR else str(skew)
    status = "n/a (det M_k = 0)" if divisible is None else ("yes" if divisible else "no")
    lines = [
        f"skew    {skew_text}",
        f"minor   {minor}",
        f"det M_{k} {dmk}",
        f"divisible by det M_{k}: {status}",
    ]
    payload = {
        "shape": str(args.shape), "t": t, "rows": list(rows), "cols": list(cols),
        "skew": None if skew is ZERO_MINOR else str(skew), "zero_minor": skew is ZERO_MINOR,
        "minor": str(minor), "det_mk": str(dmk), "divisible": divisible,
    }
    _emit(args, "\n".join(lines), payload)
    return 1 if divisible is False else 0


def cmd_lr(args) -> int:
    c = lr_coefficient(args.outer, args.inner, args.content)
    _emit(args, str(c), {"outer": str(args.outer), "inner": str(args.inner),
                         "content": str(args.content), "coefficient": c})
    return 0


def cmd_qh(args) -> int:
    kind = RINGS[args.ring]
    p = h_image(kind, args.index)
    _emit(args, str(p), {"index": args.index, "kind": kind.name, "value": str(p)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--method", choices=METHODS, default="reduce")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    shaped = argparse.ArgumentParser(add_help=False)
    shaped.add_argument("--shape", type=_partition_arg, required=True,
                        help="partition such as 7,5,5,2; '-' for the empty partition")
    shaped.add_argument("-t", type=int, default=None, help="matrix size (default: length of shape)")

    def ring(p, extra=()):
        p.add_argument("--ring", choices=tuple(RINGS) + tuple(extra), default="n")

    parser = argparse.ArgumentParser(prog="jt", description="Smith normal forms of specialised Jacobi-Trudi matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", parents=[common, shaped], help="compute and check one Smith form")
    ring(p)
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("predict", parents=[common, shaped], help="closed-form diagonal")
    ring(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", parents=[common], help="sweep all small partitions")
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--extra-rows", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    ring(p, ("all",))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minor", parents=[common, shaped], help="skew shape and divisibility of one minor")
    p.add_argument("--rows", type=_index_list, required=True)
    p.add_argument("--cols", type=_index_list, required=True)
    ring(p)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("--outer", type=_partition_arg, required=True)
    p.add_argument("--inner", type=_partition_arg, default=Partition())
    p.add_argument("--content", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("qh", parents=[common], help="specialised h_i")
    p.add_argument("index", type=int)
    ring(p)
    p.set_defaults(func=cmd_qh)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_weight", 0) < 0 or getattr(args, "extra_rows", 0) < 0:
        parser.error("sweep bounds must be non-negative")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"jt: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
