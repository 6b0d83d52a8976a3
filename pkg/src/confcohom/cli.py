"""Command-line access to the library; deterministic output.

Exit status: 0 on success, 1 on usage or parameter errors, 2 on a failed
certificate (zero witness, falsified basis claim, failed spot check).

Defaults for the oracle size cap and the certificate budget can be
overridden with the CONFCOHOM_CAP and CONFCOHOM_BUDGET environment
variables; explicit flags win over both.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import certificates, normalform, oracle, serialize, trivialization
from .algebra import ONE_COPY, TWO_COPY, AlgebraContext
from .errors import (
    ConfigurationError,
    OracleInconsistencyError,
    ParameterError,
    ParseError,
    SizeCapExceeded,
    UnsupportedCaseError,
    ZeroWitnessError,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits 2 on usage errors by default; this tool reserves 2
        # for failed certificates, so usage problems exit 1.
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"environment variable {name}={raw!r} is not an integer")


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParameterError(f"expected a comma-separated integer list, got {text!r}")


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _ctx(args, mode=None) -> AlgebraContext:
    return AlgebraContext(args.m, args.n, args.d, mode or getattr(args, "mode", TWO_COPY))


def _add_ctx_args(p, with_mode: bool = True) -> None:
    p.add_argument("--m", type=int, required=True, help="number of shared points")
    p.add_argument("--n", type=int, required=True, help="number of moving points")
    p.add_argument("--d", type=int, required=True, help="ambient dimension")
    if with_mode:
        p.add_argument("--mode", choices=[TWO_COPY, ONE_COPY], default=TWO_COPY)
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _read_input(args) -> str:
    if getattr(args, "element", None) is not None:
        return args.element
    if getattr(args, "file", None) is not None:
        with open(args.file, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


# -- subcommands ---------------------------------------------------------------


def _cmd_basis(args) -> int:
    ctx = _ctx(args)
    monos = normalform.basis_monomials(ctx, args.step)
    if args.json:
        _emit_json(
            {
                "m": ctx.m,
                "n": ctx.n,
                "d": ctx.d,
                "mode": ctx.mode,
                "step": args.step,
                "count": len(monos),
                "monomials": [
                    [{"copy": g.copy, "i": g.i, "j": g.j} for g in mono.factors]
                    for mono in monos
                ],
            }
        )
    else:
        for mono in monos:
            print(mono)
    return 0


def _cmd_reduce(args) -> int:
    ctx = _ctx(args)
    raw = _read_input(args).strip()
    if not raw:
        raise ParseError("empty input")
    if raw.startswith("["):
        e = serialize.element_from_obj(ctx, json.loads(raw))
    else:
        e = serialize.parse_element_text(ctx, raw)
    reduced = normalform.reduce_element(e)
    if args.json:
        _emit_json(
            {
                "m": ctx.m,
                "n": ctx.n,
                "d": ctx.d,
                "mode": ctx.mode,
                "element": serialize.element_to_obj(reduced),
                "text": str(reduced),
            }
        )
    else:
        print(reduced)
    return 0


def _cmd_expand(args) -> int:
    ctx = _ctx(args)
    J = _parse_int_list(args.J)
    e = normalform.expand_constant_column(ctx, J, args.r, primed=(args.copy == "wp"))
    if args.json:
        _emit_json(
            {
                "m": ctx.m,
                "n": ctx.n,
                "d": ctx.d,
                "mode": ctx.mode,
                "J": list(J),
                "r": args.r,
                "copy": args.copy,
                "element": serialize.element_to_obj(e),
                "text": str(e),
            }
        )
    else:
        print(e)
    return 0


def _cmd_admissible(args) -> int:
    J = _parse_int_list(args.J)
    pairs = normalform.admissible_sequences(J)
    if args.json:
        _emit_json(
            {
                "J": list(J),
                "count": len(pairs),
                "sequences": [
                    {"sequence": list(seq), "distinct_count": dc} for seq, dc in pairs
                ],
            }
        )
    else:
        for seq, dc in pairs:
            print(f"I={','.join(map(str, seq))}  distinct={dc}")
    return 0


def _cmd_poincare(args) -> int:
    ctx = _ctx(args, mode=TWO_COPY)
    coeffs = normalform.poincare_polynomial(ctx, args.space)
    if args.json:
        _emit_json(
            {
                "m": ctx.m,
                "n": ctx.n,
                "d": ctx.d,
                "space": args.space,
                "gen_degree": ctx.gen_degree,
                "coefficients": coeffs,
            }
        )
    else:
        print(" ".join(map(str, coeffs)))
    return 0


def _cmd_oracle_verify(args) -> int:
    cap = args.cap if args.cap is not None else _env_int("CONFCOHOM_CAP", oracle.DEFAULT_CAP)
    space = args.space
    max_step = args.max_step
    if max_step is None:
        max_step = oracle.feasible_max_step(space, args.m, args.n, cap)
    report = oracle.space_dimensions(args.m, args.n, args.d, space, max_step, cap)
    ok = report.ok
    spot_fail = None
    spots = 0
    if args.spot_check and space in ("E", "EXBE"):
        mode = TWO_COPY if space == "EXBE" else ONE_COPY
        ctx = AlgebraContext(args.m, args.n, args.d, mode)
        rng = random.Random(args.seed)
        for _ in range(args.spot_check):
            step = rng.randint(0, max_step) if max_step >= 0 else 0
            e = oracle.sample_element(ctx, step, rng)
            spots += 1
            if normalform.reduce_element(e) != oracle.oracle_project(e, cap):
                ok = False
                spot_fail = e
                break
    if args.json:
        obj = report.to_obj()
        obj["ok"] = ok
        obj["spot_checks"] = spots
        _emit_json(obj)
    else:
        for s in report.steps:
            flag = "ok" if (s.basis_match and s.torsion_free) else "MISMATCH"
            print(
                f"step {s.step}: spanning {s.spanning}, dimension {s.dimension}, "
                f"basis {s.basis_count}, torsion-free {s.torsion_free} [{flag}]"
            )
        if spots:
            print(f"spot checks: {spots} {'ok' if spot_fail is None else 'FAILED'}")
    if spot_fail is not None:
        print(f"reduce/oracle mismatch on {spot_fail}", file=sys.stderr)
    return 0 if ok else 2


def _cmd_psi(args) -> int:
    ctx = _ctx(args, mode=TWO_COPY)
    p = certificates.psi(ctx)
    w = certificates.witness_monomial(ctx)
    if args.json:
        _emit_json(
            {
                "m": ctx.m,
                "n": ctx.n,
                "d": ctx.d,
                "factor_count": len(certificates.psi_factors(ctx)),
                "element": serialize.element_to_obj(p),
                "text": str(p),
                "witness": [{"copy": g.copy, "i": g.i, "j": g.j} for g in w.factors],
                "witness_coefficient": str(p.coefficient(w)),
            }
        )
    else:
        print(p)
        print(f"witness {w}: coefficient {p.coefficient(w)}")
    return 0


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    return _env_int("CONFCOHOM_BUDGET", certificates.DEFAULT_BUDGET)


def _cmd_cuplength(args) -> int:
    ctx = _ctx(args, mode=TWO_COPY)
    cert = certificates.cup_length_bounds(ctx, _budget(args))
    if args.json:
        _emit_json(cert.to_obj())
    else:
        print(f"lower bound {cert.lower_bound} (witness coefficient {cert.witness_coefficient})")
        if cert.verdict is not None:
            print(f"verdict {cert.verdict} ({cert.vanishing_reason})")
        else:
            print(f"upper bound open: {cert.vanishing_reason}")
    return 0


def _cmd_ptc(args) -> int:
    ctx = _ctx(args, mode=TWO_COPY)
    result = certificates.ptc_value(ctx, _budget(args))
    if args.json:
        _emit_json(result.to_obj())
    else:
        print(result.value)
        print(f"lower: cup-length certificate {result.certificate.lower_bound}")
        print(f"upper: {result.upper_note}")
        for r in result.remarks:
            print(f"note: {r}")
    return 0


def _cmd_trivialize(args) -> int:
    raw = _read_input(args).strip()
    if not raw:
        raise ParseError("empty input")
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"input is not JSON: {exc}")
    if args.inverse:
        if not isinstance(payload, dict) or "moved" not in payload or "base" not in payload:
            raise ParseError('inverse input must be {"moved": [...], "base": [...]}')
        points = trivialization.untrivialize(
            payload["moved"], payload["base"], args.min_separation
        )
        _emit_json({"points": [[p.real, p.imag] for p in points]})
    else:
        if isinstance(payload, dict):
            payload = payload.get("points")
        if not isinstance(payload, list):
            raise ParseError('input must be a list of points or {"points": [...]}')
        moved, base = trivialization.trivialize(payload, args.min_separation)
        _emit_json(
            {
                "moved": [[p.real, p.imag] for p in moved],
                "base": [[p.real, p.imag] for p in base],
            }
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="confcohom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("basis", help="basis monomials of one degree step")
    _add_ctx_args(p)
    p.add_argument("--step", type=int, required=True)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("reduce", help="straighten an element onto the basis")
    _add_ctx_args(p)
    p.add_argument("--element", help="element text, e.g. 'w(1,3)*w(2,3)'")
    p.add_argument("--file", help="read the element from a file (JSON or text)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("expand", help="closed-form expansion of a column product")
    _add_ctx_args(p)
    p.add_argument("--J", required=True, help="comma-separated lower indices, e.g. 1,2")
    p.add_argument("--r", type=int, required=True, help="common upper index")
    p.add_argument("--copy", choices=["w", "wp"], default="w")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("admissible", help="admissible sequences for J")
    p.add_argument("--J", required=True, help="comma-separated strictly increasing J")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_admissible)

    p = sub.add_parser("poincare", help="Betti numbers per degree step")
    _add_ctx_args(p, with_mode=False)
    p.add_argument("--space", choices=list(normalform.SPACES), required=True)
    p.set_defaults(func=_cmd_poincare)

    p = sub.add_parser("oracle-verify", help="independent check of the claimed basis")
    _add_ctx_args(p, with_mode=False)
    p.add_argument("--space", choices=list(oracle.SPACES), default="EXBE")
    p.add_argument("--max-step", type=int, default=None)
    p.add_argument("--cap", type=int, default=None, help="spanning-set size cap")
    p.add_argument("--spot-check", type=int, default=0, metavar="N",
                   help="also compare N random reductions against the oracle")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_oracle_verify)

    p = sub.add_parser("psi", help="the reduced witness product")
    _add_ctx_args(p, with_mode=False)
    p.set_defaults(func=_cmd_psi)

    p = sub.add_parser("cuplength", help="cup-length certificate for the kernel ideal")
    _add_ctx_args(p, with_mode=False)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_cuplength)

    p = sub.add_parser("ptc", help="the complexity value with provenance")
    _add_ctx_args(p, with_mode=False)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_ptc)

    p = sub.add_parser("trivialize", help="planar trivialization / its inverse")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--file", help="read points from a file instead of stdin")
    p.add_argument("--min-separation", type=float,
                   default=trivialization.DEFAULT_MIN_SEPARATION)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON")
    p.set_defaults(func=_cmd_trivialize)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParameterError, ParseError, ConfigurationError, SizeCapExceeded,
            UnsupportedCaseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ZeroWitnessError, OracleInconsistencyError) as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
