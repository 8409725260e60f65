"""Command-line surface: one subcommand per analysis artifact.

Every subcommand validates its parameters, runs the corresponding library
operation and writes a single CSV or JSON artifact to a file or standard
output.  Exit codes: 0 success, 1 computation error, 2 usage error,
3 unwritable output path.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .cascade import cascade_scaling, cascade_wavelet
from .dwt import round_trip_error
from .errors import MathieuError
from .filters import filter_bank, qmf_deviation, transfer_G_values, transfer_H_values
from .mathieu import (
    EVEN,
    ODD,
    OrderParameterPair,
    characteristic_value,
    fourier_coefficients,
    recurrence_residual,
)
from .serialization import artifact_meta, render_csv, render_json, write_text


@dataclass
class RunConfig:
    nu: int
    q: float
    threshold: float = 1e-10
    iterations: int = 6
    samples: int = 1024
    format: str = "json"
    output: str | None = None


def _add_common(p: argparse.ArgumentParser, threshold=True, fmt=True) -> None:
    p.add_argument("--nu", type=int, required=True,
                   help="characteristic exponent (positive odd integer)")
    p.add_argument("--q", type=float, required=True,
                   help="elliptic parameter (finite, >= 0)")
    if threshold:
        p.add_argument("--threshold", type=float, default=1e-10,
                       help="FIR truncation magnitude (default 1e-10)")
    if fmt:
        p.add_argument("--format", choices=("csv", "json"), default="json",
                       help="artifact format (default json)")
    p.add_argument("--output", default="-",
                   help="output path, '-' for standard output (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mathieu-wavelets",
        description="Mathieu multiresolution analysis: eigenvalues, coefficients, "
                    "filter banks, spectra, cascade waveforms and DWT reports.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eig", help="characteristic value with convergence metadata",
                       description="Emit a JSON object {nu, q, a, matrix_order, "
                                   "residual}; with --kind odd the keys are b, "
                                   "b_matrix_order, b_residual (both for 'both').")
    _add_common(p, threshold=False, fmt=False)
    p.add_argument("--kind", choices=("even", "odd", "both"), default="even",
                   help="even -> a(q), odd -> b(q) (default even)")

    p = sub.add_parser("coeffs", help="harmonic coefficient table",
                       description="Coefficient table of ce (even) or se (odd). "
                                   "CSV columns: l,c.")
    _add_common(p, threshold=False)
    p.add_argument("--kind", choices=("even", "odd"), default="even")
    p.add_argument("--length", type=int, default=None,
                   help="number of coefficients (default: to the decay bound)")

    p = sub.add_parser("filters", help="truncated h/g filter bank",
                       description="Truncated smoothing and detail taps. "
                                   "CSV columns: l,h,g (zero where a filter has "
                                   "no tap at that index).")
    _add_common(p)

    p = sub.add_parser("spectrum", help="transfer functions on a frequency grid",
                       description="H and G over [0, 2pi). CSV columns: "
                                   "w,H_abs,G_abs,H_re,H_im,G_re,G_im.")
    _add_common(p)
    p.add_argument("--samples", type=int, default=1024,
                   help="number of grid points (default 1024)")

    p = sub.add_parser("cascade", help="scaling/wavelet waveforms",
                       description="Cascade approximants on the dyadic grid. "
                                   "CSV columns: t,phi,psi.")
    _add_common(p)
    p.add_argument("--iterations", type=int, default=6,
                   help="refinement rounds (default 6, max 24)")

    p = sub.add_parser("dwt", help="round-trip and QMF-deviation report",
                       description="Reconstruction-quality metrics for the bank. "
                                   "CSV columns: length,levels,trials,"
                                   "round_trip_error,qmf_deviation.")
    _add_common(p)
    p.add_argument("--length", type=int, default=256, help="signal length (default 256)")
    p.add_argument("--levels", type=int, default=3, help="decomposition levels (default 3)")
    p.add_argument("--trials", type=int, default=10, help="random trials (default 10)")

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.nu < 1 or args.nu % 2 == 0:
        parser.error(f"--nu must be a positive odd integer, got {args.nu}")
    if not math.isfinite(args.q) or args.q < 0.0:
        parser.error(f"--q must be finite and non-negative, got {args.q}")
    if getattr(args, "threshold", 1e-10) <= 0.0:
        parser.error("--threshold must be positive")
    if getattr(args, "samples", 1) < 1:
        parser.error("--samples must be positive")
    if getattr(args, "iterations", 1) < 1:
        parser.error("--iterations must be positive")


def _emit(args, header, rows, meta) -> None:
    if getattr(args, "format", "json") == "csv":
        text = render_csv(header, rows)
    else:
        data = [dict(zip(header, row)) for row in rows]
        text = render_json({"meta": meta, "data": data})
    write_text(text, args.output)


def cmd_eig(args) -> int:
    pair = OrderParameterPair(args.nu, args.q)
    payload: dict = {"nu": args.nu, "q": args.q}
    if args.kind in ("even", "both"):
        cv = characteristic_value(pair, EVEN)
        vec = fourier_coefficients(pair, cv)
        payload.update(a=cv.a, matrix_order=cv.matrix_order,
                       residual=recurrence_residual(vec))
    if args.kind in ("odd", "both"):
        cv = characteristic_value(pair, ODD)
        vec = fourier_coefficients(pair, cv)
        if args.kind == "both":
            payload.update(b=cv.a, b_matrix_order=cv.matrix_order,
                           b_residual=recurrence_residual(vec))
        else:
            payload.update(b=cv.a, matrix_order=cv.matrix_order,
                           residual=recurrence_residual(vec))
    write_text(render_json(payload), args.output)
    return 0


def cmd_coeffs(args) -> int:
    pair = OrderParameterPair(args.nu, args.q)
    kind = EVEN if args.kind == "even" else ODD
    cv = characteristic_value(pair, kind)
    vec = fourier_coefficients(pair, cv, length=args.length)
    meta = artifact_meta(args.nu, args.q, None, kind=args.kind, a=cv.a,
                         matrix_order=cv.matrix_order)
    rows = [[int(l), float(c)] for l, c in enumerate(vec.coeffs)]
    _emit(args, ["l", "c"], rows, meta)
    return 0


def cmd_filters(args) -> int:
    bank = filter_bank(args.nu, args.q, args.threshold)
    lmin = min(bank.h.lmin, bank.g.lmin)
    lmax = max(bank.h.lmax, bank.g.lmax)
    rows = [[int(l), bank.h.at(l), bank.g.at(l)] for l in range(lmin, lmax + 1)]
    meta = artifact_meta(args.nu, args.q, args.threshold, ce0=bank.ce0,
                         h_taps=int(np.count_nonzero(bank.h.values)),
                         g_taps=int(np.count_nonzero(bank.g.values)))
    _emit(args, ["l", "h", "g"], rows, meta)
    return 0


def cmd_spectrum(args) -> int:
    filter_bank(args.nu, args.q, args.threshold)   # surfaces degenerate ce0 early
    w = 2.0 * np.pi * np.arange(args.samples) / args.samples
    H = transfer_H_values(args.nu, args.q, w)
    G = transfer_G_values(args.nu, args.q, w)
    rows = [[float(wi), float(abs(Hi)), float(abs(Gi)),
             float(Hi.real), float(Hi.imag), float(Gi.real), float(Gi.imag)]
            for wi, Hi, Gi in zip(w, H, G)]
    meta = artifact_meta(args.nu, args.q, args.threshold, samples=args.samples)
    _emit(args, ["w", "H_abs", "G_abs", "H_re", "H_im", "G_re", "G_im"], rows, meta)
    return 0


def cmd_cascade(args) -> int:
    bank = filter_bank(args.nu, args.q, args.threshold)
    phi = cascade_scaling(bank, args.iterations)
    psi = cascade_wavelet(bank, args.iterations)
    rows = [[float(t), float(p), float(s)]
            for t, p, s in zip(phi.grid, phi.samples, psi.samples)]
    meta = artifact_meta(args.nu, args.q, args.threshold,
                         iterations=args.iterations, step=phi.step,
                         origin=phi.origin)
    _emit(args, ["t", "phi", "psi"], rows, meta)
    return 0


def cmd_dwt(args) -> int:
    bank = filter_bank(args.nu, args.q, args.threshold)
    err = round_trip_error(bank, args.length, args.levels, args.trials)
    dev = qmf_deviation(bank)
    rows = [[int(args.length), int(args.levels), int(args.trials),
             float(err), float(dev)]]
    meta = artifact_meta(args.nu, args.q, args.threshold)
    _emit(args, ["length", "levels", "trials", "round_trip_error", "qmf_deviation"],
          rows, meta)
    return 0


_COMMANDS = {
    "eig": cmd_eig,
    "coeffs": cmd_coeffs,
    "filters": cmd_filters,
    "spectrum": cmd_spectrum,
    "cascade": cmd_cascade,
    "dwt": cmd_dwt,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return _COMMANDS[args.command](args)
    except MathieuError as exc:
        print(f"mathieu-wavelets: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"mathieu-wavelets: cannot write output: {exc}", file=sys.stderr)
        return 3


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
