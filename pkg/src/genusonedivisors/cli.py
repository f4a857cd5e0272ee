"""Command-line front end: ``genusone <command> [flags]``.

Exit status is 0 on success, 1 when ``verify`` finds a failing check and
2 on a usage error. Results go to stdout, diagnostics and logs to stderr.
"""
import argparse
import logging
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import List, Optional, Tuple

from genusonedivisors.certificates import certify_hain, extremal_ray_family, x_curve
from genusonedivisors.class_algebra import canonical_class, delta_irr_class, lambda_class, pair, psi_class
from genusonedivisors.config import VerifyConfig
from genusonedivisors.cremona import f_inverse_pushforward, f_pushforward, reduce_signature
from genusonedivisors.errors import GenusOneDivisorsException, InvalidDimensionException
from genusonedivisors.forgetful import pullback, pulled_back_certificate
from genusonedivisors.hain_divisor import (
    component_count,
    component_witness,
    decompose,
    family_curve,
    hain_class,
    hain_zero_section_class,
)
from genusonedivisors.models import AgeProfile, DivisorClass, FamilyData, Signature, SymDivisorClass
from genusonedivisors.reid_tai import APPENDIX_FIXTURES, reid_tai_check
from genusonedivisors.serializer import Serializer
from genusonedivisors.sym_quotient import boundary_cone_member, nonboundary_constraints_check, symmetrize
from genusonedivisors.torsion_lab import exact_order_count, monodromy_orbits
from genusonedivisors.utils import format_rational, get_log_level
from genusonedivisors.verify import format_table, run_suite

logger = logging.getLogger(__name__)

PROG = "genusone"
LOG_FORMAT = "%(name)s:%(levelname)s:%(message)s"


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


@contextmanager
def _flag(name: str):
    """Report domain errors raised inside the block against flag ``name``"""
    try:
        yield
    except GenusOneDivisorsException as error:
        raise UsageError(name, str(error))


def _int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(",") if piece.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _signature(text: str) -> Signature:
    try:
        return Signature(_int_list(text))
    except GenusOneDivisorsException as error:
        raise argparse.ArgumentTypeError(str(error))


def _rational_list(text: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(Fraction(piece) for piece in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals such as 1,1/2,-3, got {text!r}")


def _profile(text: str) -> AgeProfile:
    order, _, exponents = text.partition(":")
    try:
        return AgeProfile(int(order), _int_list(exponents))
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"expected k:e1,e2,... ({error})")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _padded(args) -> Signature:
    """--a, padded with zero entries up to --n"""
    if args.a is None:
        raise UsageError("--a", "a signature such as --a 1,1,-2 is required")
    n = getattr(args, "n", None)
    if n is None or n == args.a.n:
        return args.a
    if n < args.a.n:
        raise UsageError("--n", f"{n} is smaller than the signature length {args.a.n}")
    return Signature(args.a.entries + (0,) * (n - args.a.n))


def _point_count(args) -> int:
    if args.n is not None:
        return args.n
    if args.a is not None:
        return args.a.n
    raise UsageError("--n", "the number of marked points is required")


def _cmd_class(args):
    kind = args.kind
    if kind in ("hain", "zero-section"):
        a = _padded(args)
        with _flag("--a"):
            divisor = hain_class(a) if kind == "hain" else hain_zero_section_class(a)
    else:
        n = _point_count(args)
        with _flag("--n"):
            if kind == "canonical":
                divisor = canonical_class(n)
            elif kind == "delta-irr":
                divisor = delta_irr_class(n)
            elif kind == "lambda":
                divisor = lambda_class(n)
            else:
                if args.i is None:
                    raise UsageError("--i", "--kind psi needs a label")
                with _flag("--i"):
                    divisor = psi_class(n, args.i)
    return divisor, divisor.to_str()


def _cmd_components(args):
    a = _padded(args)
    with _flag("--a"):
        count = component_count(a)
        payload = {"signature": a, "count": count, "decomposition": [], "witness": []}
        lines = [f"{count} irreducible component{'s' if count != 1 else ''}"]
        if a.n >= 3 and not a.has_zero_entry:
            for t, component in decompose(a):
                payload["decomposition"].append({"t": t, "class": component})
                lines.append(f"  t={t}: {component.to_str()}")
            if not a.is_primitive:
                for weight, label, summand in component_witness(a):
                    payload["witness"].append({"weight": weight, "label": label, "class": summand})
                lines.append(f"  top component is not extremal: σ({a.d})·D_b + (σ({a.d})/12)·δ_irr + σ({a.d})·δ_{{0;{{1..n}}}}")
    return payload, "\n".join(lines)


def _cmd_pair(args):
    a = _padded(args)
    if args.family is not None:
        with _flag("--family"):
            curve = Serializer().deserialize(args.family, FamilyData)
            curve = family_curve(curve)
    else:
        with _flag("--x"):
            curve = x_curve(args.x if args.x is not None else a)
    with _flag("--a"):
        divisor = hain_class(a)
        value = pair(curve, divisor)
    return {"pairing": value, "curve": curve, "divisor": divisor}, f"C·D = {_rational(value)}"


def _cmd_pullback(args):
    if args.a is None:
        raise UsageError("--a", "a signature such as --a 1,1,-2 is required")
    if args.n is None:
        raise UsageError("--n", "the target number of marked points is required")
    with _flag("--keep"):
        divisor = pullback(hain_class(args.a), args.n, args.keep)
    return divisor, divisor.to_str()


def _report_text(report) -> str:
    lines = [f"pairing {_rational(report.pairing)}, verdict {report.verdict}"]
    lines.extend(f"  assumed [{assumption.tag}] {assumption.source}" for assumption in report.assumptions)
    return "\n".join(lines)


def _cmd_certify(args):
    if args.ray is not None:
        signature, divisor, ray = extremal_ray_family(args.ray)
        factor = args.ray * (args.ray + 1)
        payload = {"signature": signature, "class": divisor, "ray": ray, "factor": factor}
        return payload, f"D_{list(signature.entries)} = {factor}·({ray.to_str()})"
    if args.a is None:
        raise UsageError("--a", "a 3-entry signature or --ray is required")
    with _flag("--a"):
        if args.n is not None and args.n > 3:
            if args.a.n != 3:
                raise UsageError("--a", "pulled-back certificates take a 3-entry signature")
            report = pulled_back_certificate(args.n, args.a[1], args.a[2])
        else:
            report = certify_hain(args.a)
    return report, _report_text(report)


def _cmd_reduce(args):
    if args.a is None:
        raise UsageError("--a", "a 3-entry signature is required")
    with _flag("--a"):
        trace = reduce_signature(args.a)
    lines = [f"start {list(trace.start.entries)}"]
    for move, signature in zip(trace.steps, trace.intermediate_signatures()[1:]):
        label = f"permute {list(move.p.image)}" if move.p is not None else move.kind
        lines.append(f"  {label} -> {list(signature.entries)}")
    lines.append(f"end {list(trace.end.entries)} after {trace.f_step_count} f-steps")
    return trace, "\n".join(lines)


def _pushforward_input(args) -> DivisorClass:
    if args.delta is not None:
        with _flag("--delta"):
            return DivisorClass.from_subsets(3, 0, {args.delta: 1})
    if args.a is not None:
        with _flag("--a"):
            return hain_class(args.a)
    return lambda_class(3)


def _cmd_fstar(args):
    with _flag("--a" if args.delta is None else "--delta"):
        image = f_pushforward(_pushforward_input(args))
    return image, image.to_str()


def _cmd_fstar_inv(args):
    with _flag("--a" if args.delta is None else "--delta"):
        image = f_inverse_pushforward(_pushforward_input(args))
    return image, image.to_str()


def _check_quotient_points(n: int) -> None:
    if n < 2:
        raise InvalidDimensionException(f"the quotient needs at least 2 marked points, got {n}")


def _cmd_sym(args):
    if args.coords is not None:
        with _flag("--coords"):
            _check_quotient_points(len(args.coords))
            divisor = SymDivisorClass.from_coordinates(len(args.coords), args.coords)
    elif args.canonical is not None:
        with _flag("--canonical"):
            _check_quotient_points(args.canonical)
            divisor = symmetrize(canonical_class(args.canonical))
    else:
        raise UsageError("--coords", "give --coords a_irr,b_2,...,b_n or --canonical N")
    with _flag("--g"):
        report = nonboundary_constraints_check(divisor, args.g)
    member = boundary_cone_member(divisor)
    lines = [divisor.to_str(), f"boundary cone member: {'yes' if member else 'no'}"]
    lines.extend(f"  {name}·D = {_rational(value)}" for name, value in report.pairings)
    lines.extend(f"  {label}: {'holds' if holds else 'fails'}" for label, holds in report.chain)
    if report.is_boundary_divisor:
        lines.append(f"  note: {report.caveat}")
    lines.append(f"  normalization: {report.normalization}")
    return {"class": divisor, "boundary_cone_member": member, "constraints": report}, "\n".join(lines)


def _cmd_torsion(args):
    if args.orbits is not None:
        with _flag("--orbits"):
            orbits = monodromy_orbits(args.orbits)
        if args.csv:
            rows = ["k,orbit-size,representative"]
            rows.extend(f"{orbit.invariant},{orbit.size},\"({orbit.representative.x}, {orbit.representative.y})\""
                        for orbit in orbits)
            text = "\n".join(rows)
        else:
            rows = [f"{len(orbits)} orbits on (Z/{args.orbits})^2"]
            rows.extend(f"  k={orbit.invariant} size={orbit.size} representative="
                        f"({orbit.representative.x}, {orbit.representative.y})" for orbit in orbits)
            text = "\n".join(rows)
        return orbits, text
    if args.order is not None:
        modulus = args.modulus if args.modulus is not None else args.order
        with _flag("--order"):
            count = exact_order_count(args.order, modulus)
        payload = {"t": args.order, "modulus": modulus, "count": count}
        return payload, f"{count} points of exact order {args.order} in (Z/{modulus})^2"
    raise UsageError("--orbits", "give --orbits A or --order T [--modulus N]")


def _cmd_age(args):
    profiles = list(args.profile or [])
    if args.fixtures:
        profiles.extend(profile for profile, _ in APPENDIX_FIXTURES.values())
    if not profiles:
        raise UsageError("--profile", "give at least one --profile k:e1,e2,... or --fixtures")
    report = reid_tai_check(profiles)
    lines = []
    for entry in report.profiles:
        flags = []
        if entry.quasi_reflection:
            flags.append("quasi-reflection")
        if entry.ambiguous:
            flags.append("ambiguous")
        suffix = f" ({', '.join(flags)})" if flags else ""
        lines.append(f"k={entry.profile.k} exps={list(entry.profile.exps)}: age {format_rational(entry.age)}{suffix}")
    lines.append(f"verdict: {report.verdict}")
    return report, "\n".join(lines)


def _cmd_verify(args):
    with _flag("--max"):
        config = VerifyConfig(seed=args.seed, max_bound=args.max, workers=args.workers)
    results = run_suite(config)
    return results, format_table(results)


COMMANDS = {
    "class": _cmd_class,
    "components": _cmd_components,
    "pair": _cmd_pair,
    "pullback": _cmd_pullback,
    "certify": _cmd_certify,
    "reduce": _cmd_reduce,
    "fstar": _cmd_fstar,
    "fstar-inv": _cmd_fstar_inv,
    "sym": _cmd_sym,
    "torsion": _cmd_torsion,
    "age": _cmd_age,
    "verify": _cmd_verify,
}


def _rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else format_rational(value)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="write JSON to stdout")
    common.add_argument("--verbose", "-v", action="count", default=0, help="log to stderr (-vv for debug)")

    parser = _Parser(prog=PROG, description="Divisor classes on the moduli space of pointed genus-one curves.")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def add(name, help_text):
        return commands.add_parser(name, parents=[common], help=help_text)

    signature_help = "signature as comma-separated integers; write --a=-2,1,1 when it starts with a minus"

    sub = add("class", "print a divisor class")
    sub.add_argument("--a", type=_signature, help=signature_help)
    sub.add_argument("--n", type=_positive_int, help="number of marked points; pads --a with zeros")
    sub.add_argument("--kind", default="hain",
                     choices=("hain", "zero-section", "canonical", "psi", "delta-irr", "lambda"))
    sub.add_argument("--i", type=int, help="label for --kind psi")

    sub = add("components", "count and decompose the components of D_a")
    sub.add_argument("--a", type=_signature, help=signature_help)
    sub.add_argument("--n", type=_positive_int)

    sub = add("pair", "pair D_a with the X curve or with a family")
    sub.add_argument("--a", type=_signature, help=signature_help)
    sub.add_argument("--n", type=_positive_int)
    sub.add_argument("--x", type=_signature, help="signature of the X curve, default --a")
    sub.add_argument("--family", help='FamilyData JSON, e.g. {"n": 3, "d_irr": 12, "d_S": []}')

    sub = add("pullback", "pull D_a back along a forgetful map")
    sub.add_argument("--a", type=_signature, help=signature_help)
    sub.add_argument("--n", type=_positive_int, help="target number of marked points")
    sub.add_argument("--keep", type=_int_list, help="images of the labels of --a, default 1..m")

    sub = add("certify", "extremality certificates and the ray family")
    sub.add_argument("--a", type=_signature, help=signature_help)
    sub.add_argument("--n", type=_positive_int, help="pull the certificate back to n points")
    sub.add_argument("--ray", type=_positive_int, help="ray of (k+1, -k, -1)")

    sub = add("reduce", "reduce a primitive triple to (1, 1, -2)")
    sub.add_argument("--a", type=_signature, help=signature_help)

    for name, help_text in (("fstar", "push a 3-pointed class forward along f"),
                            ("fstar-inv", "push a 3-pointed class forward along f⁻¹")):
        sub = add(name, help_text)
        sub.add_argument("--a", type=_signature, help="push D_a forward")
        sub.add_argument("--delta", type=_int_list, help="push δ_{0;S} forward, e.g. --delta 2,3")

    sub = add("sym", "classes on the quotient by relabelings")
    sub.add_argument("--coords", type=_rational_list, help="a_irr,b_2,...,b_n")
    sub.add_argument("--canonical", type=_positive_int, help="symmetrize the canonical class on N points")
    sub.add_argument("--g", type=int, default=1, help="genus of the certificate curves")

    sub = add("torsion", "lattice torsion oracle")
    sub.add_argument("--orbits", type=_positive_int, help="monodromy orbits on (Z/A)^2")
    sub.add_argument("--order", type=_positive_int, help="count points of exact order T")
    sub.add_argument("--modulus", type=_positive_int, help="modulus for --order, default T")
    sub.add_argument("--csv", action="store_true", help="orbit table as CSV")

    sub = add("age", "ages and the extension verdict")
    sub.add_argument("--profile", type=_profile, action="append", help="k:e1,e2,...; repeatable")
    sub.add_argument("--fixtures", action="store_true", help="include the fixture profiles")

    sub = add("verify", "run the acceptance suite")
    sub.add_argument("--max", type=int, help="cap every sweep bound")
    sub.add_argument("--seed", type=int, help="seed for random sweeps, default GENUSONE_VERIFY_SEED")
    sub.add_argument("--workers", type=_positive_int, default=1, help="worker processes")

    return parser


def _configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = get_log_level()
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT, level=level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    logger.debug("running %s", args.command)
    try:
        payload, text = COMMANDS[args.command](args)
    except UsageError as error:
        sys.stderr.write(f"{PROG} {args.command}: error: {error}\n")
        return 2
    if args.json:
        sys.stdout.write(Serializer().dumps(payload) + "\n")
    else:
        sys.stdout.write(text + "\n")
    if args.command == "verify" and not all(result.passed for result in payload):
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
