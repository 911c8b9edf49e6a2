"""Command-line entry point: encrypt, decrypt, analyze, bifurcation."""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import chaos, metrics
from .cipher import CipherConfig, CipherEnvelope, Mode, decrypt, encrypt, preprocess
from .errors import ChaodnaError
from .imageio import as_gray, histogram_render, load_image, save_pgm
from .keys import parse_key

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
KEY_ENV = "CHAODNA_KEY"
MODES = {"chaos": Mode.CHAOS_ONLY, "chaos-dna": Mode.CHAOS_DNA}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dims(text):
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}") from None
    if w <= 0 or h <= 0:
        raise argparse.ArgumentTypeError("dimensions must be positive")
    return w, h


def _add_cipher_flags(p):
    p.add_argument("--in", dest="inp", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--key", help=f"32 hex characters (default: ${KEY_ENV})")
    p.add_argument("--u", type=float, default=chaos.DEFAULT_U)
    p.add_argument("--burn-in", type=int, default=chaos.DEFAULT_BURN_IN)
    p.add_argument("--key-image", type=Path, help="use an external key image instead of a generated one")


def build_parser():
    parser = _Parser(prog="chaodna", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    enc = sub.add_parser("encrypt", help="encrypt a grayscale or color image")
    _add_cipher_flags(enc)
    enc.add_argument("--mode", choices=sorted(MODES), default="chaos-dna")
    enc.add_argument("--resize", type=_dims, metavar="WxH")
    enc.add_argument("--pgm-out", type=Path, help="also write the ciphertext pixels as PGM")

    dec = sub.add_parser("decrypt", help="decrypt an envelope back to PGM")
    _add_cipher_flags(dec)

    ana = sub.add_parser("analyze", help="PSNR, SSIM, chi-square and entropy report")
    ana.add_argument("--original", required=True, type=Path)
    ana.add_argument("--encrypted", required=True, type=Path, help="PGM or cipher envelope")
    ana.add_argument("--decrypted", required=True, type=Path)
    ana.add_argument("--out", type=Path, help="CSV destination (default: stdout)")
    ana.add_argument("--text", action="store_true", help="human-readable table instead of CSV")
    ana.add_argument("--hist-dir", type=Path, help="write histogram bar renders here")

    bif = sub.add_parser("bifurcation", help="logistic map bifurcation scan")
    bif.add_argument("--u-min", type=float, default=2.5)
    bif.add_argument("--u-max", type=float, default=4.0)
    bif.add_argument("--steps", type=int, default=600)
    bif.add_argument("--transient", type=int, default=1000)
    bif.add_argument("--samples", type=int, default=256)
    bif.add_argument("--p0", type=float, default=0.5)
    bif.add_argument("--out", required=True, type=Path, help="CSV destination")
    bif.add_argument("--pgm", type=Path, help="density render (default: next to --out)")
    bif.add_argument("--height", type=int, default=400)
    return parser


def _key(args):
    text = args.key if args.key is not None else os.environ.get(KEY_ENV)
    if not text:
        raise UsageError(f"a key is required: pass --key or set {KEY_ENV}")
    return parse_key(text)


def _config(args, resize=None):
    return CipherConfig(
        u=args.u,
        burn_in=args.burn_in,
        key_image=os.fspath(args.key_image) if args.key_image else None,
        target_dims=resize,
    )


def _load_gray(path):
    data = Path(path).read_bytes()
    if data[:4] == b"CDN1":
        return CipherEnvelope.from_bytes(data).pixels()
    return preprocess(load_image(path))


def cmd_encrypt(args):
    key = _key(args)
    cfg = _config(args, args.resize)
    plain = preprocess(load_image(args.inp), cfg)
    env = encrypt(plain, key, cfg, MODES[args.mode])
    args.out.write_bytes(env.to_bytes())
    if args.pgm_out:
        save_pgm(args.pgm_out, env.pixels())


def cmd_decrypt(args):
    key = _key(args)
    try:
        data = args.inp.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {args.inp}: {exc.strerror}") from exc
    env = CipherEnvelope.from_bytes(data)
    save_pgm(args.out, decrypt(env, key, _config(args)))


def cmd_analyze(args):
    images = {name: as_gray(_load_gray(getattr(args, name))) for name in ("original", "encrypted", "decrypted")}
    report = metrics.compare_report(images["original"], images["encrypted"], images["decrypted"])
    text = report.to_text() if args.text else report.to_csv()
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    if args.hist_dir:
        args.hist_dir.mkdir(parents=True, exist_ok=True)
        for name, rep in report.histograms.items():
            save_pgm(args.hist_dir / f"hist_{name}.pgm", histogram_render(rep.counts))


def cmd_bifurcation(args):
    points = chaos.bifurcation_scan(args.u_min, args.u_max, args.steps, args.transient, args.samples, args.p0)
    args.out.write_text(chaos.scan_to_csv(points))
    pgm = args.pgm or args.out.with_suffix(".pgm")
    save_pgm(pgm, chaos.scan_density(points, args.height))


COMMANDS = {
    "encrypt": cmd_encrypt,
    "decrypt": cmd_decrypt,
    "analyze": cmd_analyze,
    "bifurcation": cmd_bifurcation,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"chaodna {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ChaodnaError as exc:
        print(f"chaodna {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"chaodna {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
