"""Command-line surface.

There is no network transport here: the "secure channel" is a pad file
handed over out-of-band, the "public channel" is standard output.  Exit
codes: 0 success, 2 usage / precondition error, 3 data or corruption error.
"""

from __future__ import annotations

import argparse
import sys
from functools import partial
from typing import List, Optional

from . import analysis, codec, facts, private_object, reduction
from .bitstring import BitString, bits_from_text
from .codec import CorruptPadError
from .facts import ParseError
from .otp import Pad, decrypt, encrypt, keygen
from .padfile import PadFormatError, read_pad, write_pad
from .private_object import StatementParseError
from .rng import RandomSource

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3


def _add_seed(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--seed", type=int, required=required, help="64-bit seed")


def _message_args(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--in", dest="in_bits", metavar="BITS",
                       help="message as a string of 0/1 characters")
    group.add_argument("--text", help="message as text (8-bit character codes)")


def _message_bits(args: argparse.Namespace) -> BitString:
    if args.in_bits is not None:
        return BitString(args.in_bits)
    return bits_from_text(args.text)


def _cmd_keygen(args) -> int:
    pad = keygen(RandomSource(args.seed), args.bits)
    write_pad(args.out, pad.bits)
    print(f"wrote {args.bits}-bit pad to {args.out}")
    return EXIT_OK


def _cmd_reduce_keygen(args) -> int:
    params = reduction.ReductionParams(args.message_bits, args.k)
    gp = reduction.generate_reduced_pad(params, RandomSource(args.seed))
    write_pad(args.out, gp.bits)
    print(f"sampled length {gp.original_length}")
    print(f"wrote {gp.original_length}-bit pad to {args.out}")
    return EXIT_OK


def _cmd_encrypt(args, decrypting: bool = False) -> int:
    message = _message_bits(args)
    pad_bits = read_pad(args.pad)
    if args.reduced:
        if args.message_bits is None or args.k is None:
            raise ValueError("--reduced requires --message-bits and --k")
        params = reduction.ReductionParams(args.message_bits, args.k)
        gp = reduction.GeneratedPad(
            bits=pad_bits, original_length=pad_bits.length
        )
        op = reduction.decrypt_reduced if decrypting else reduction.encrypt_reduced
        print(op(message, gp, params).to01())
        return EXIT_OK
    pad = Pad(bits=pad_bits)
    print((decrypt if decrypting else encrypt)(message, pad).to01())
    return EXIT_OK


def _cmd_pad_compress(args) -> int:
    bits = read_pad(getattr(args, "in"))
    write_pad(args.out, codec.compress_pad(bits))
    return EXIT_OK


def _cmd_pad_decompress(args) -> int:
    bits = read_pad(getattr(args, "in"))
    write_pad(args.out, codec.decompress_pad(bits, args.message_length))
    return EXIT_OK


def _cmd_po_encode(args) -> int:
    message = _message_bits(args)
    obj = private_object.otp_object(read_pad(args.pad))
    for stmt in private_object.encode_statements(message, obj):
        print(private_object.statement_to_line(stmt))
    return EXIT_OK


def _read_lines(path: Optional[str]) -> List[str]:
    if path is None:
        return [line for line in sys.stdin.read().splitlines() if line.strip()]
    with open(path, "r", encoding="utf-8") as fh:
        return [line for line in fh.read().splitlines() if line.strip()]


def _cmd_po_decode(args) -> int:
    obj = private_object.otp_object(read_pad(args.pad))
    statements = [
        private_object.statement_from_line(line)
        for line in _read_lines(getattr(args, "in"))
    ]
    print(private_object.verify_statements(statements, obj).to01())
    return EXIT_OK


def _cmd_facts_encode(args) -> int:
    message = _message_bits(args)
    src = RandomSource(args.seed)
    for bit in message:
        print(facts.encode_bit(bit, src, args.size_bound))
    return EXIT_OK


def _cmd_facts_decode(args) -> int:
    bits = [facts.decode_string(line) for line in _read_lines(getattr(args, "in"))]
    print(BitString(bits).to01())
    return EXIT_OK


def _cmd_analyze(args) -> int:
    if args.check == "census":
        census = codec.codec_census(args.n)
        print("check=census")
        print(f"n={args.n}")
        for saving in sorted(census):
            print(f"pads_saving[{saving}]={census[saving]}")
        return EXIT_OK

    params = reduction.ReductionParams(args.n, args.k)
    if args.check == "exact":
        report = analysis.exhaustive_secrecy_check(params)
        print(report)
        return EXIT_OK if report.passed else 1

    if args.check == "eve":
        cfg = analysis.TrialConfig(params=params, trials=args.trials,
                                   seed=args.seed)
        rate = analysis.eve_guess_rate(cfg)
        print("check=eve")
        print(f"n={args.n}")
        print(f"k={args.k}")
        print(f"trials={args.trials}")
        print(f"guess_rate={rate:.6f}")
        print("expected=0.5")
        return EXIT_OK

    if args.check == "distinguish":
        m0 = BitString(args.m0) if args.m0 else BitString.zeros(args.n)
        m1 = BitString(args.m1) if args.m1 else BitString.ones(args.n)
        cfg = analysis.TrialConfig(params=params, trials=args.trials,
                                   seed=args.seed, m0=m0, m1=m1)
        report = analysis.distinguisher_test(cfg)
        print(report)
        return EXIT_OK if report.passed else 1

    # reduction
    cfg = analysis.TrialConfig(params=params, trials=args.trials, seed=args.seed)
    print(analysis.reduction_stats(cfg))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="otplab",
        description="One-time-pad laboratory: pads, reduced pads, codecs, "
        "statement encodings and secrecy analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a pad file")
    p.add_argument("--bits", type=int, required=True)
    _add_seed(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_keygen)

    p = sub.add_parser("reduce-keygen",
                       help="generate a (possibly shorter) transmitted pad")
    p.add_argument("--message-bits", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_seed(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_reduce_keygen)

    for name, decrypting in (("encrypt", False), ("decrypt", True)):
        p = sub.add_parser(name, help=f"{name} with a pad file")
        p.add_argument("--pad", required=True)
        _message_args(p)
        p.add_argument("--reduced", action="store_true",
                       help="complete a transmitted pad before the XOR")
        p.add_argument("--message-bits", type=int)
        p.add_argument("--k", type=int)
        p.set_defaults(func=partial(_cmd_encrypt, decrypting=decrypting))

    p = sub.add_parser("pad-compress", help="length-aware pad compression")
    p.add_argument("--in", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_pad_compress)

    p = sub.add_parser("pad-decompress", help="restore a compressed pad")
    p.add_argument("--in", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--message-length", type=int, required=True)
    p.set_defaults(func=_cmd_pad_decompress)

    p = sub.add_parser("po-encode",
                       help="encode a message as statements about a pad")
    p.add_argument("--pad", required=True)
    _message_args(p)
    p.set_defaults(func=_cmd_po_encode)

    p = sub.add_parser("po-decode",
                       help="verify statement lines against a pad")
    p.add_argument("--pad", required=True)
    p.add_argument("--in", help="statement file (default: stdin)")
    p.set_defaults(func=_cmd_po_decode)

    p = sub.add_parser("facts-encode",
                       help="encode bits as strings of the formal system")
    _message_args(p)
    _add_seed(p)
    p.add_argument("--size-bound", type=int, default=24)
    p.set_defaults(func=_cmd_facts_encode)

    p = sub.add_parser("facts-decode",
                       help="decode formal-system strings back to bits")
    p.add_argument("--in", help="string file, one per line (default: stdin)")
    p.set_defaults(func=_cmd_facts_decode)

    p = sub.add_parser("analyze", help="secrecy and reduction reports")
    p.add_argument("check",
                   choices=["exact", "eve", "distinguish", "reduction", "census"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--m0", help="first candidate message (distinguish)")
    p.add_argument("--m1", help="second candidate message (distinguish)")
    p.set_defaults(func=_cmd_analyze)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PadFormatError, CorruptPadError, ParseError, StatementParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    raise SystemExit(main())
