"""Command line interface.

Four subcommands, all emitting self-verifying JSON documents:

    polydegen family --l 2                 the full family member
    polydegen specialize --l 2 --alpha 1/2 a fiber: tameness word, or the
                                           wildness report when alpha is 0
    polydegen smith --l 1                  the one-variable-up commutator word
    polydegen verify --in doc.json         recompute a document's transcript

Exit codes: 0 every identity verified, 1 a verification failed, 2 usage or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .certificates import (
    ConjugationCertificate,
    build_stabilization,
    specialized_tameness,
)
from .documents import (
    dumps,
    family_document,
    loads,
    render_text,
    stabilization_document,
    verify_document,
    wildness_document,
    word_document,
)
from .errors import ParseError, PolydegenError
from .family import FamilyInstance, build_family
from .parsing import parse_rational


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydegen",
        description="exact tameness and wildness certificates for a degenerating "
        "family of polynomial automorphisms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family = sub.add_parser("family", help="emit the full family document for one l")
    family.add_argument("--l", type=_positive_int, required=True, help="family index, at least 1")
    _output_flags(family)
    family.set_defaults(func=cmd_family)

    specialize = sub.add_parser(
        "specialize",
        help="emit one fiber: a tameness word at alpha != 0, the wildness report at alpha = 0",
    )
    specialize.add_argument("--l", type=_positive_int, help="family index, at least 1")
    specialize.add_argument(
        "--in", dest="input", metavar="PATH", help="family document to read l from"
    )
    specialize.add_argument("--alpha", type=_rational, required=True, help="rational value for t")
    _output_flags(specialize)
    specialize.set_defaults(func=cmd_specialize)

    smith = sub.add_parser("smith", help="emit the four-factor stabilization document")
    smith.add_argument("--l", type=_positive_int, required=True, help="family index, at least 1")
    _output_flags(smith)
    smith.set_defaults(func=cmd_smith)

    verify = sub.add_parser("verify", help="recompute every identity in a document")
    verify.add_argument("--in", dest="input", metavar="PATH", required=True)
    verify.add_argument("--format", choices=("json", "text"), default="text")
    verify.add_argument("--out", metavar="PATH")
    verify.set_defaults(func=cmd_verify)
    return parser


def _output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", metavar="PATH", help="write the payload here instead of stdout")
    sub.add_argument("--format", choices=("json", "text"), default="json")


def _emit(doc: dict, args: argparse.Namespace) -> None:
    payload = dumps(doc) if args.format == "json" else render_text(doc)
    _write(payload, args.out)


def _write(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)


def cmd_family(args: argparse.Namespace) -> int:
    fam = build_family(args.l)
    _emit(family_document(fam), args)
    return 0


def _family_for(args: argparse.Namespace) -> FamilyInstance:
    if args.input is not None and args.l is not None:
        raise ParseError("give either --l or --in, not both")
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as handle:
            doc = loads(handle.read())
        if doc.get("kind") != "family":
            raise ParseError("--in expects a family document")
        l = doc.get("l")
        if not isinstance(l, int) or isinstance(l, bool) or l < 1:
            raise ParseError("family document has no usable l")
        return build_family(l)
    if args.l is None:
        raise ParseError("specialize needs --l or --in")
    return build_family(args.l)


def cmd_specialize(args: argparse.Namespace) -> int:
    fam = _family_for(args)
    if args.alpha == 0:
        doc = wildness_document(fam.delta, fam.h, l=fam.l)
    else:
        cert = ConjugationCertificate(
            delta=fam.delta,
            h=fam.h,
            tau=fam.tau,
            tau_inv=fam.tau_inv,
            epsilon=fam.epsilon,
            slice_potential=fam.slice_potential,
            automorphism=fam.automorphism,
        )
        word = specialized_tameness(cert, args.alpha)
        doc = word_document(word, fam.delta, fam.h, l=fam.l)
    _emit(doc, args)
    return 0


def cmd_smith(args: argparse.Namespace) -> int:
    fam = build_family(args.l)
    stab = build_stabilization(fam.delta, fam.h)
    bounds = {"nonzero_alpha": 3, "zero_alpha": 4, "zero_alpha_exactness": "claimed"}
    _emit(stabilization_document(stab, l=fam.l, bounds=bounds), args)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    with open(args.input, "r", encoding="utf-8") as handle:
        doc = loads(handle.read())
    embedded = doc.get("transcript")
    if not isinstance(embedded, list):
        raise ParseError("document has no transcript to verify against")
    checks = verify_document(doc)
    recomputed = [{"identity": c.identity, "pass": c.passed} for c in checks]
    matches = embedded == recomputed
    verified = matches and all(c.passed for c in checks)
    if args.format == "json":
        payload = dumps(
            {
                "verified": verified,
                "transcript_matches": matches,
                "checks": recomputed,
            }
        )
    else:
        lines = []
        for c in checks:
            lines.append(f"{'pass' if c.passed else 'FAIL'}  {c.identity}")
        lines.append(f"transcript match: {'yes' if matches else 'NO'}")
        good = sum(1 for c in checks if c.passed)
        lines.append(
            f"result: {'pass' if verified else 'FAIL'} ({good}/{len(checks)} identities)"
        )
        payload = "\n".join(lines) + "\n"
    _write(payload, args.out)
    return 0 if verified else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolydegenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
