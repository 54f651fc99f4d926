"""Command-line front end.

Subcommands: ``frame`` (optimal moving frame), ``eframe`` (equivariant
variant), ``bezout``, ``mubasis``, ``verify`` (frame file against a vector),
``gen`` (witness families), ``oracle`` (brute-force cross-check), ``bench``
(runtime scaling grid).  Output is a human-readable table by default or a
versioned JSON document with ``--json``; all coefficients are exact
``num/den`` strings.  Exit codes: 0 success, 1 verification or cross-check
failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import sys
import time

from .equivariant import coefficient_section, equivariant_moving_frame
from .fields import FieldError, field_by_name
from .frame import MovingFrame, optimal_moving_frame, verify_frame
from .parser import ParseError, parse_vector
from .poly import Poly, PolyError, PolyMatrix, PolyVec, format_poly, vec_gcd
from .reference import WitnessSpec, brute_min_bezout, brute_mu_type, euclidean_frame, gen_witness, random_poly_vec

SCHEMA_VERSION = 1


class CliError(Exception):
    def __init__(self, message, code="input-error"):
        super().__init__(message)
        self.code = code


# --- serialization helpers --------------------------------------------------


def poly_to_coeffs(p: Poly):
    return [p.field.to_str(c) for c in p.coeffs]


def vec_to_coeffs(v: PolyVec):
    return [poly_to_coeffs(e) for e in v.entries]


def matrix_to_coeffs(m: PolyMatrix):
    return [[poly_to_coeffs(e) for e in row] for row in m.rows]


def matrix_from_coeffs(field, data) -> PolyMatrix:
    rows = []
    for row in data:
        rows.append([Poly(field, [field.parse(c) for c in entry]) for entry in row])
    return PolyMatrix(field, rows)


def vec_to_str(v: PolyVec) -> str:
    return "[" + ", ".join(format_poly(e) for e in v.entries) + "]"


# --- argument plumbing --------------------------------------------------------


def _default_seed():
    env = os.environ.get("OMFRAME_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise CliError(f"OMFRAME_SEED must be an integer, got {env!r}", code="usage-error")


def _field_of(args):
    try:
        return field_by_name(args.field)
    except FieldError as exc:
        raise CliError(str(exc), code="usage-error")


def _read_text_arg(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    return text


def _vector_of(args, field) -> PolyVec:
    text = _read_text_arg(args.vector)
    try:
        return parse_vector(text, field)
    except ParseError as exc:
        raise CliError(f"cannot parse vector: {exc}", code="parse-error")


def _int_list(text: str, flag: str):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise CliError(f"{flag} expects a comma-separated integer list, got {text!r}", code="usage-error")


# --- documents ---------------------------------------------------------------


def _frame_document(command, a, frame: MovingFrame, elapsed, extra=None):
    report = verify_frame(a, frame)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "field": a.field.name,
        "input": vec_to_str(a),
        "gcd": poly_to_coeffs(frame.gcd),
        "beta": frame.beta,
        "mu": list(frame.mu),
        "frame": matrix_to_coeffs(frame.matrix),
    }
    if frame.profile is not None:
        doc["pivots"] = list(frame.profile.pivots)
        doc["basic"] = list(frame.profile.basic)
        doc["periodic"] = list(frame.profile.periodic)
    if extra:
        doc.update(extra)
    doc["verification"] = report.as_dict()
    doc["ok"] = report.ok
    doc["timing"] = {"seconds": elapsed}
    return doc, report


def _print_frame_human(doc, frame: MovingFrame):
    print(f"input : {doc['input']}")
    print(f"field : {doc['field']}")
    print(f"gcd   : {format_poly(frame.gcd)}")
    print(f"beta  : {doc['beta']}")
    print(f"mu    : {tuple(doc['mu'])}")
    if "pivots" in doc:
        print(f"pivots: {doc['pivots']}  basic: {doc['basic']}")
    print("frame :")
    for line in str(frame.matrix).splitlines():
        print("  " + line)
    failed = [name for name, entry in doc["verification"].items() if not entry["ok"]]
    print("check : " + ("all passed" if not failed else "FAILED " + ", ".join(failed)))
    print(f"time  : {doc['timing']['seconds'] * 1000:.3f} ms")


def _emit(doc, args, human):
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        human()


# --- subcommands --------------------------------------------------------


def _cmd_frame(args):
    field = _field_of(args)
    a = _vector_of(args, field)
    try:
        t0 = time.perf_counter()
        frame = optimal_moving_frame(a)
        elapsed = time.perf_counter() - t0
    except PolyError as exc:
        raise CliError(str(exc))
    doc, report = _frame_document("frame", a, frame, elapsed)
    _emit(doc, args, lambda: _print_frame_human(doc, frame))
    return 0 if report.ok else 1


def _cmd_eframe(args):
    field = _field_of(args)
    a = _vector_of(args, field)
    try:
        t0 = time.perf_counter()
        frame = equivariant_moving_frame(a)
        elapsed = time.perf_counter() - t0
        section = coefficient_section(a if frame.gcd.is_one() else a.exact_div(frame.gcd))
    except PolyError as exc:
        raise CliError(str(exc))
    extra = {
        "section": {
            "indices": list(section.indices),
            "matrix": [[field.to_str(c) for c in row] for row in section.matrix],
        }
    }
    doc, report = _frame_document("eframe", a, frame, elapsed, extra=extra)
    _emit(doc, args, lambda: _print_frame_human(doc, frame))
    return 0 if report.ok else 1


def _cmd_bezout(args):
    field = _field_of(args)
    a = _vector_of(args, field)
    try:
        frame = optimal_moving_frame(a)
    except PolyError as exc:
        raise CliError(str(exc))
    bez = frame.bezout_vector()
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "bezout",
        "field": field.name,
        "input": vec_to_str(a),
        "gcd": poly_to_coeffs(frame.gcd),
        "bezout": vec_to_coeffs(bez),
        "degree": frame.beta,
    }

    def human():
        print(f"bezout vector : {vec_to_str(bez)}")
        print(f"degree        : {frame.beta}")
        print(f"gcd           : {format_poly(frame.gcd)}")

    _emit(doc, args, human)
    return 0


def _cmd_mubasis(args):
    field = _field_of(args)
    a = _vector_of(args, field)
    try:
        frame = optimal_moving_frame(a)
    except PolyError as exc:
        raise CliError(str(exc))
    basis = frame.mu_basis()
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "mubasis",
        "field": field.name,
        "input": vec_to_str(a),
        "mu": list(frame.mu),
        "mu_basis": [vec_to_coeffs(u) for u in basis],
    }

    def human():
        print(f"mu-type : {tuple(frame.mu)}")
        for k, u in enumerate(basis, start=1):
            print(f"u{k}      : {vec_to_str(u)}")

    _emit(doc, args, human)
    return 0


def _cmd_verify(args):
    field = _field_of(args)
    try:
        with open(args.frame_file, "r", encoding="utf-8") as fh:
            stored = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read frame file: {exc}")
    if "frame" not in stored:
        raise CliError("frame file carries no 'frame' matrix")
    if stored.get("field", field.name) != field.name:
        field = field_by_name(stored["field"])
    a = _vector_of(args, field)
    try:
        matrix = matrix_from_coeffs(field, stored["frame"])
        report = verify_frame(a, matrix)
    except (PolyError, FieldError) as exc:
        raise CliError(str(exc))
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "verify",
        "field": field.name,
        "input": vec_to_str(a),
        "verification": report.as_dict(),
        "ok": report.ok,
    }

    def human():
        print(report)
        print("verdict: " + ("PASS" if report.ok else "FAIL"))

    _emit(doc, args, human)
    return 0 if report.ok else 1


def _cmd_gen(args):
    field = _field_of(args)
    mu = tuple(_int_list(args.mu, "--mu")) if args.mu else None
    try:
        spec = WitnessSpec(kind=args.kind, n=args.n, d=args.d, mu=mu, j=args.j)
        witness = gen_witness(spec, field)
    except PolyError as exc:
        raise CliError(str(exc))
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "gen",
        "field": field.name,
        "kind": args.kind,
        "n": args.n,
        "d": args.d,
        "mu": list(mu) if mu else None,
        "j": args.j,
        "vector": vec_to_str(witness),
        "coeffs": vec_to_coeffs(witness),
    }
    _emit(doc, args, lambda: print(doc["vector"]))
    return 0


def _cmd_oracle(args):
    field = _field_of(args)
    a = _vector_of(args, field)
    try:
        if not vec_gcd(a).is_one():
            raise CliError("oracle cross-check expects gcd(a) = 1")
        frame = optimal_moving_frame(a)
        oracle_beta, _ = brute_min_bezout(a)
        oracle_mu = brute_mu_type(a)
    except PolyError as exc:
        raise CliError(str(exc))
    match = frame.beta == oracle_beta and frame.mu == oracle_mu
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "oracle",
        "field": field.name,
        "input": vec_to_str(a),
        "beta": frame.beta,
        "mu": list(frame.mu),
        "oracle_beta": oracle_beta,
        "oracle_mu": list(oracle_mu),
        "match": match,
    }

    def human():
        print(f"frame  : beta={frame.beta} mu={tuple(frame.mu)}")
        print(f"oracle : beta={oracle_beta} mu={tuple(oracle_mu)}")
        print("verdict: " + ("MATCH" if match else "MISMATCH"))

    _emit(doc, args, human)
    return 0 if match else 1


def _cmd_baseline(args):
    field = _field_of(args)
    a = _vector_of(args, field)
    try:
        matrix = euclidean_frame(a, rng=random.Random(args.seed))
        report = verify_frame(a, matrix)
    except PolyError as exc:
        raise CliError(str(exc))
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "baseline",
        "field": field.name,
        "input": vec_to_str(a),
        "frame": matrix_to_coeffs(matrix),
        "column_degrees": [matrix.col(j).degree for j in range(matrix.ncols)],
        "verification": report.as_dict(),
        "ok": report.checks[0].ok and report.checks[1].ok,
    }

    def human():
        print("baseline frame (no degree guarantee):")
        for line in str(matrix).splitlines():
            print("  " + line)
        print(f"column degrees: {doc['column_degrees']}")

    _emit(doc, args, human)
    return 0 if doc["ok"] else 1


def bench_cells(field, n_values, d_values, samples, seed):
    """Median frame-construction runtimes over a (n, d) grid; pure per cell."""
    cells = []
    for n in n_values:
        for d in d_values:
            rng = random.Random(f"{seed}:{n}:{d}")
            times = []
            for _ in range(samples):
                a = random_poly_vec(field, n, d, rng, bound=10, gcd_one=True)
                t0 = time.perf_counter()
                optimal_moving_frame(a)
                times.append(time.perf_counter() - t0)
            cells.append(
                {
                    "n": n,
                    "d": d,
                    "samples": samples,
                    "median_s": statistics.median(times),
                    "min_s": min(times),
                    "max_s": max(times),
                }
            )
    return cells


def _cmd_bench(args):
    field = _field_of(args)
    n_values = _int_list(args.n, "--n")
    d_values = _int_list(args.d, "--d")
    if not n_values or not d_values:
        raise CliError("bench needs nonempty --n and --d lists", code="usage-error")
    cells = bench_cells(field, n_values, d_values, args.samples, args.seed)
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "bench",
        "field": field.name,
        "seed": args.seed,
        "cells": cells,
    }

    def human():
        print(f"{'n':>4} {'d':>6} {'samples':>8} {'median_s':>12} {'min_s':>12} {'max_s':>12}")
        for c in cells:
            print(
                f"{c['n']:>4} {c['d']:>6} {c['samples']:>8}"
                f" {c['median_s']:>12.6f} {c['min_s']:>12.6f} {c['max_s']:>12.6f}"
            )

    _emit(doc, args, human)
    return 0


# --- entry point ----------------------------------------------------------


def build_arg_parser():
    parser = argparse.ArgumentParser(
        prog="omframe",
        description="Degree-optimal moving frames, minimal Bezout vectors and mu-bases "
        "for univariate polynomial vectors over exact fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, vector=True):
        p.add_argument("--field", default="q", help="coefficient field: q or gf:<p> (default q)")
        p.add_argument("--json", action="store_true", help="emit a structured JSON document")
        if vector:
            p.add_argument("vector", help="comma-separated polynomials in s, or - for stdin")

    p = sub.add_parser("frame", help="compute a degree-optimal moving frame")
    common(p)
    p.set_defaults(func=_cmd_frame)

    p = sub.add_parser("eframe", help="equivariant degree-optimal moving frame")
    common(p)
    p.set_defaults(func=_cmd_eframe)

    p = sub.add_parser("bezout", help="minimal-degree Bezout vector")
    common(p)
    p.set_defaults(func=_cmd_bezout)

    p = sub.add_parser("mubasis", help="degree-ordered mu-basis")
    common(p)
    p.set_defaults(func=_cmd_mubasis)

    p = sub.add_parser("verify", help="verify a stored frame against a vector")
    p.add_argument("frame_file", help="JSON document holding the frame matrix")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="generate a witness vector")
    p.add_argument("--kind", required=True, choices=["beta-mu", "lower-bound", "upper-bound", "detc"])
    p.add_argument("--n", type=int, required=True, help="vector length")
    p.add_argument("--d", type=int, default=None, help="degree (bound and detc witnesses)")
    p.add_argument("--mu", default=None, help="comma-separated mu-type (beta-mu witnesses)")
    p.add_argument("--j", type=int, default=None, help="requested minimal Bezout degree")
    common(p, vector=False)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="cross-check the frame against brute-force oracles")
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("baseline", help="classical extended-Euclid frame (non-optimal)")
    p.add_argument("--seed", type=int, default=None, help="seed for the combining-constant search")
    common(p)
    p.set_defaults(func=_cmd_baseline)

    p = sub.add_parser("bench", help="runtime scaling over an (n, d) grid")
    p.add_argument("--n", default="4", help="comma-separated list of vector lengths")
    p.add_argument("--d", default="8,16,32,64", help="comma-separated list of degrees")
    p.add_argument("--samples", type=int, default=5, help="random inputs per cell")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default: OMFRAME_SEED or 0)")
    common(p, vector=False)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "seed", None) is None and args.command in ("bench", "baseline"):
        try:
            args.seed = _default_seed()
        except CliError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except CliError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"schema": SCHEMA_VERSION, "error": {"code": exc.code, "message": str(exc)}}))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
