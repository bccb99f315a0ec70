"""Command-line interface.

Exit codes: 0 success, 1 not graphical, 2 invalid input (including a
rejected certificate), 3 forcibly polyhedral (``witness``), 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .canon import canonical_form
from .classifier import FORCIBLY_POLYHEDRAL, NOT_GRAPHICAL, classify
from .errors import InternalInvariantError, InvalidInputError, PolyseqError, UnsupportedOrderError
from .graph6 import from_graph6, to_graph6
from .planarity import PlanarEmbedding, euler_holds
from .polyhedrality import certificate_from_json, verify_certificate
from .sequences import havel_hakimi_realise, is_graphical, parse_sequence

EXIT_OK = 0
EXIT_NOT_GRAPHICAL = 1
EXIT_INVALID = 2
EXIT_FORCIBLY = 3
EXIT_INTERNAL = 4


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _emit(args, payload: dict, text: str) -> None:
    print(_dump(payload) if args.format == "json" else text)


def cmd_classify(args) -> int:
    res = classify(parse_sequence(args.sequence))
    _emit(args, res.to_json(), res.to_text())
    return EXIT_NOT_GRAPHICAL if res.verdict == NOT_GRAPHICAL else EXIT_OK


def cmd_witness(args) -> int:
    res = classify(parse_sequence(args.sequence))
    if res.verdict == NOT_GRAPHICAL:
        print(f"{res.sequence.to_text()}: not graphical", file=sys.stderr)
        return EXIT_NOT_GRAPHICAL
    if res.verdict == FORCIBLY_POLYHEDRAL:
        print(f"forcibly polyhedral ({res.polyhedron})", file=sys.stderr)
        return EXIT_FORCIBLY
    payload = {
        "graph6": to_graph6(res.witness),
        "certificate": res.certificate.to_json(),
        "trace": res.trace.to_json() if res.trace else None,
    }
    compact = lambda o: json.dumps(o, sort_keys=True)
    text = "\n".join([payload["graph6"], compact(payload["certificate"]), compact(payload["trace"])])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_realise(args) -> int:
    seq = parse_sequence(args.sequence)
    if not is_graphical(seq):
        print(f"{seq.to_text()}: not graphical", file=sys.stderr)
        return EXIT_NOT_GRAPHICAL
    g6 = to_graph6(havel_hakimi_realise(seq))
    _emit(args, {"sequence": list(seq), "graph6": g6}, g6)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    seq = parse_sequence(args.sequence)
    if not is_graphical(seq):
        print(f"{seq.to_text()}: not graphical", file=sys.stderr)
        return EXIT_NOT_GRAPHICAL
    out = []
    for g in oracle.enumerate_realisations(seq):
        out.append(to_graph6(g))
        if args.limit is not None and len(out) >= args.limit:
            break
    _emit(args, {"sequence": list(seq), "graphs": out}, "\n".join(out))
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = oracle.sweep(args.max_order, jobs=args.jobs)
    _emit(args, report.to_json(), report.to_text())
    return EXIT_OK if not report.disagreements else EXIT_INTERNAL


def cmd_verify(args) -> int:
    g = from_graph6(args.graph)
    if args.certificate == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.certificate) as fh:
            data = json.load(fh)
    if isinstance(data, dict) and "certificate" in data and "kind" not in data:
        data = data["certificate"]
    try:
        cert = certificate_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed certificate: {exc}") from exc
    if isinstance(cert, PlanarEmbedding):
        ok = euler_holds(g, cert)
    else:
        ok = verify_certificate(g, cert)
    _emit(args, {"accepted": ok}, "accept" if ok else "reject")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_canon(args) -> int:
    key = canonical_form(from_graph6(args.graph)).hex()
    _emit(args, {"canonical_form": key}, key)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    ap = argparse.ArgumentParser(prog="polyseq", description="Forcibly polyhedral degree sequences.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a degree sequence")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", parents=[common], help="non-polyhedral realisation with certificate")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("realise", parents=[common], help="Havel-Hakimi realisation as graph6")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_realise)

    p = sub.add_parser("enumerate", parents=[common], help="all realisations up to isomorphism")
    p.add_argument("sequence")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", parents=[common], help="exhaustive check of all sequences up to an order")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", parents=[common], help="check a certificate against a graph")
    p.add_argument("--graph", required=True, help="graph6 string")
    p.add_argument("--certificate", required=True, help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("canon", parents=[common], help="canonical form as hex")
    p.add_argument("graph")
    p.set_defaults(func=cmd_canon)
    return ap


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InvalidInputError, UnsupportedOrderError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except PolyseqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
