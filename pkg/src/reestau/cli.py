"""Command-line surface: batch in, report out.

Subcommands
    tau           direct-chain test ideal (stabilization heuristic)
    tau-monomial  Newton-polyhedron oracle for monomial ideals
    tau-rees      certified route through the extended Rees algebra
    rees-present  defining ideal of the (extended) Rees algebra
    fjump         candidate F-jumping numbers (direct or Rees route)
    verify        full decomposition report across a degree window

Exit codes: 0 success/match, 2 verified mismatch, 1 computation error,
64 usage error.  The only environment knob is RESOURCE_CAP
("pairs=100000,degree=400").
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .cartier import ChainOptions, tau_multi_level, tau_pair_quotient
from .decomposition import (
    VerifyOptions,
    fjump_via_rees,
    render_jumps_text,
    render_report_json,
    render_report_text,
    rees_tau,
    verify_decomposition,
)
from .errors import ParseError, ReestauError
from .exponents import RationalExponent
from .fields import PrimeField
from .ideals import GBLimits, Ideal, set_default_limits
from .poly import PolyRing, format_generators
from .rees import graded_component, rees_data, rees_presentation
from .tau import f_jumping_numbers, tau_bms, tau_monomial, tau_principal

USAGE_ERROR = 64


def _ideal_text(I: Ideal) -> str:
    gb = I.groebner_basis()
    return format_generators(gb) if gb else "0"


def _apply_resource_cap() -> None:
    cap = os.environ.get("RESOURCE_CAP")
    if not cap:
        return
    limits = GBLimits()
    for piece in cap.split(","):
        piece = piece.strip()
        if not piece:
            continue
        key, _, value = piece.partition("=")
        if key == "pairs":
            limits.max_pairs = int(value)
        elif key == "degree":
            limits.max_degree = int(value)
        else:
            raise ReestauError(f"unknown RESOURCE_CAP key {key!r}")
    set_default_limits(limits)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="reestau", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, lam=True):
        sp.add_argument("--p", type=int, required=False, help="prime characteristic")
        sp.add_argument("--vars", help="comma-separated variable names")
        sp.add_argument("--ideal", help="comma-separated generators")
        if lam:
            sp.add_argument("--lambda", dest="lam", help="exponent, e.g. 5/6")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--job", help="job file with key = value lines")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("tau", help="direct-chain test ideal")
    common(sp)
    sp.add_argument("--e-max", type=int, default=6)
    sp.add_argument("--stabilize", type=int, default=2)

    sp = sub.add_parser("tau-monomial", help="Newton-polyhedron oracle")
    common(sp)

    sp = sub.add_parser("tau-rees", help="certified route with degree extraction")
    common(sp)
    sp.add_argument("--degrees", help="window like -2..3 (default: degree 0 only)")
    sp.add_argument("--levels", help="opt-in uncertified multi-level sum, e.g. 1,2")
    sp.add_argument("--q-cap", type=int, default=1 << 16)

    sp = sub.add_parser("rees-present", help="Rees presentation")
    common(sp, lam=False)
    sp.add_argument("--variant", choices=("S", "T"), default="T")

    sp = sub.add_parser("fjump", help="candidate F-jumping numbers")
    common(sp, lam=False)
    sp.add_argument("--bound", required=False, help="upper bound, e.g. 3")
    sp.add_argument("--via", choices=("direct", "rees"), default="direct")
    sp.add_argument("--e-max", type=int, default=2)
    sp.add_argument("--denom-cap", type=int, default=None)

    sp = sub.add_parser("verify", help="full decomposition report")
    common(sp)
    sp.add_argument("--degrees", help="window like -3..3")
    sp.add_argument("--e-max", type=int, default=4, help="heuristic-oracle depth")
    sp.add_argument("--no-bms", action="store_true", help="skip the heuristic oracle")

    return top


def _load_job(args) -> None:
    if not getattr(args, "job", None):
        return
    with open(args.job, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ReestauError(f"{args.job}:{lineno}: expected key = value")
            key = key.strip().replace("-", "_")
            value = value.strip()
            if key == "lambda":
                key = "lam"
            if not hasattr(args, key):
                raise ReestauError(f"{args.job}:{lineno}: unknown key {key!r}")
            if getattr(args, key) in (None, False):
                cur = getattr(args, key)
                if isinstance(cur, bool):
                    setattr(args, key, value.lower() in ("1", "true", "yes"))
                else:
                    setattr(args, key, value)


def _ring_and_ideal(args):
    if args.p is None or args.vars is None or args.ideal is None:
        raise SystemExit(USAGE_ERROR)
    names = tuple(nm.strip() for nm in str(args.vars).split(",") if nm.strip())
    ring = PolyRing(PrimeField(int(args.p)), names)
    return ring, Ideal.parse(str(args.ideal), ring)


def _lambda(args) -> RationalExponent:
    if getattr(args, "lam", None) is None:
        raise SystemExit(USAGE_ERROR)
    return RationalExponent.parse(str(args.lam))


def _parse_window(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ReestauError(f"bad degree window {text!r}")
    return tuple(range(int(lo), int(hi) + 1))


def _emit_tau(result, args, extra=None):
    if args.format == "json":
        doc = {
            "ideal": _ideal_text(result.ideal),
            "certificate": str(result.certificate),
            "iterations": result.iterations,
        }
        if getattr(result, "last_jump_below", None) is not None:
            doc["last_jump_below"] = str(result.last_jump_below)
        if getattr(result, "notes", ()):
            doc["notes"] = list(result.notes)
        if extra:
            doc.update(extra)
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(_ideal_text(result.ideal))
        print(f"certificate: {result.certificate}")
        if getattr(result, "last_jump_below", None) is not None:
            print(f"last jump witnessed below lambda: {result.last_jump_below}")
        for note in getattr(result, "notes", ()):
            print(note)


def _cmd_tau(args) -> int:
    ring, a = _ring_and_ideal(args)
    lam = _lambda(args)
    if len(a.gens) == 1:
        result = tau_principal(a.gens[0], lam.value, e_max=args.e_max, stabilize=args.stabilize)
    else:
        result = tau_bms(a, lam.value, e_max=args.e_max, stabilize=args.stabilize)
    _emit_tau(result, args)
    return 0


def _cmd_tau_monomial(args) -> int:
    ring, a = _ring_and_ideal(args)
    lam = _lambda(args)
    _emit_tau(tau_monomial(a, lam.value), args)
    return 0


def _cmd_tau_rees(args) -> int:
    ring, a = _ring_and_ideal(args)
    lam = _lambda(args)
    opts = ChainOptions(q_cap=args.q_cap, seed=args.seed)
    rd = rees_data(a)
    if args.levels:
        levels = tuple(int(x) for x in args.levels.split(","))
        pres = rd.T
        u = pres.ring.var(pres.ring.names[-1])
        ct = tau_multi_level(pres, u, lam, levels, opts)
        payload = {
            "quotient_ideal": _ideal_text(ct.ideal),
            "certificate": ct.certificate,
            "iterations": ct.iterations,
        }
        if args.format == "json":
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(f"uncertified lower bound (levels {args.levels}):")
            print(_ideal_text(ct.ideal))
        return 0
    tau0, ct, shift, k = rees_tau(rd, lam.value, opts)
    rows = {}
    if args.degrees:
        for n in _parse_window(args.degrees):
            rows[n] = graded_component(ct.ideal.gens, n - k, rd)
    if args.format == "json":
        doc = {
            "ideal": _ideal_text(tau0),
            "certificate": ct.certificate,
            "iterations": ct.iterations,
            "levels": list(ct.levels),
            "shift": str(shift),
            "degrees": {str(n): _ideal_text(I) for n, I in rows.items()},
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(_ideal_text(tau0))
        print(
            f"certificate: {ct.certificate} (levels {ct.levels}, "
            f"{ct.iterations} iterations, shift {shift})"
        )
        for n in sorted(rows):
            print(f"degree {n:+d}: {_ideal_text(rows[n])}")
    return 0


def _cmd_rees_present(args) -> int:
    ring, a = _ring_and_ideal(args)
    pres = rees_presentation(a, args.variant)
    gens = pres.defining.groebner_basis()
    if args.format == "json":
        doc = {
            "variant": args.variant,
            "ambient": list(pres.ring.names),
            "degrees": list(pres.degrees),
            "defining": [str(g) for g in gens],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"ambient: F_{ring.field.p}[{', '.join(pres.ring.names)}]")
        print(f"degrees: {dict(zip(pres.ring.names, pres.degrees))}")
        print(f"defining ideal: {format_generators(gens) or '0'}")
    return 0


def _cmd_fjump(args) -> int:
    ring, a = _ring_and_ideal(args)
    if args.bound is None:
        raise SystemExit(USAGE_ERROR)
    bound = Fraction(args.bound)
    if args.via == "rees":
        rep = fjump_via_rees(
            a,
            bound,
            e_max=args.e_max,
            denom_cap=args.denom_cap,
            opts=ChainOptions(seed=args.seed),
        )
        if args.format == "json":
            doc = {
                "via": "rees",
                "bound": str(bound),
                "jumps": [
                    {
                        "value": str(j.value),
                        "before": _ideal_text(j.before),
                        "after": _ideal_text(j.after),
                        "shifted": [str(s) for s in j.shifted],
                    }
                    for j in rep.jumps
                ],
                "wall_time_ms": rep.wall_time_ms,
            }
            print(json.dumps(doc, indent=2, sort_keys=True))
        else:
            print(render_jumps_text(rep))
        return 0
    if len(a.gens) != 1:
        raise ReestauError("direct fjump needs a principal ideal; use --via rees")
    denom_cap = args.denom_cap if args.denom_cap is not None else 50
    jumps = f_jumping_numbers(a.gens[0], bound, e_max=args.e_max, denom_cap=denom_cap)
    if args.format == "json":
        doc = {
            "via": "direct",
            "bound": str(bound),
            "jumps": [
                {
                    "value": str(j.value),
                    "before": _ideal_text(j.before),
                    "after": _ideal_text(j.after),
                }
                for j in jumps
            ],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"fjump (direct) bound={bound} candidates at resolution "
              f"(e_max={args.e_max}, denom_cap={denom_cap})")
        for j in jumps:
            print(f"  jump at {j.value}: ({_ideal_text(j.before)}) -> ({_ideal_text(j.after)})")
    return 0


def _cmd_verify(args) -> int:
    ring, a = _ring_and_ideal(args)
    lam = _lambda(args)
    opts = VerifyOptions(
        chain=ChainOptions(seed=args.seed),
        bms_e_max=args.e_max,
        run_bms=not args.no_bms,
        degrees=_parse_window(args.degrees) if args.degrees else None,
    )
    rep = verify_decomposition(a, lam.value, opts)
    if args.format == "json":
        print(render_report_json(rep))
    else:
        print(render_report_text(rep))
    return 2 if rep.verdict == "mismatch" else 0


_COMMANDS = {
    "tau": _cmd_tau,
    "tau-monomial": _cmd_tau_monomial,
    "tau-rees": _cmd_tau_rees,
    "rees-present": _cmd_rees_present,
    "fjump": _cmd_fjump,
    "verify": _cmd_verify,
}


def _merge_window_flags(argv):
    """Fold `--degrees -2..3` into `--degrees=-2..3` so argparse does not
    mistake the negative lower bound for an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--degrees",) and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_window_flags(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return USAGE_ERROR if ex.code not in (0, None) else 0
    try:
        _apply_resource_cap()
        _load_job(args)
        return _COMMANDS[args.command](args)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else USAGE_ERROR
    except ParseError as ex:
        print(f"parse error: {ex}", file=sys.stderr)
        return 1
    except ReestauError as ex:
        print(f"error ({type(ex).__name__}): {ex}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entry()
