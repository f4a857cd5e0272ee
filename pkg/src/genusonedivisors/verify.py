"""Acceptance suite: exhaustive and seeded sweeps over every identity the
library is expected to satisfy.

Each check is ``check_<name>(bound, rng, samples) -> CheckResult``. The
suite prints a fixed-order table on stdout; timings are only logged.
"""
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Callable, Dict, List

import numpy as np
from sympy import eye

from genusonedivisors.certificates import extremal_ray_family, x_curve
from genusonedivisors.class_algebra import are_proportional, pair, psi_class
from genusonedivisors.config import DEFAULT_SWEEPS, VerifyConfig
from genusonedivisors.cremona import (
    F_MOVE,
    f_inverse_matrix,
    f_inverse_pushforward,
    f_matrix,
    f_pushforward,
    reduce_signature,
)
from genusonedivisors.errors import GenusOneDivisorsException
from genusonedivisors.forgetful import pullback, pulled_back_certificate, pulled_back_hain_triple
from genusonedivisors.hain_divisor import (
    component_count,
    decompose,
    divisor_sum_of_sigma,
    eta,
    family_curve,
    family_invariants,
    grr_degree,
    hain_class,
    sigma_fn,
    sigma_table,
    vanishing_degree,
)
from genusonedivisors.models import CheckResult, DivisorClass, FamilyData, Signature, SymDivisorClass
from genusonedivisors.models.reduction_trace import F_TRANSFORM
from genusonedivisors.reid_tai import APPENDIX_FIXTURES, age, is_quasi_reflection
from genusonedivisors.sym_quotient import certificate_curves, nonboundary_constraints_check
from genusonedivisors.torsion_lab import exact_order_count, monodromy_orbits, orbit_invariant
from genusonedivisors.utils import boundary_masks, full_mask

logger = logging.getLogger(__name__)

SIGMA_ORACLE_LIMIT = 200
DECOMPOSITION_EXHAUSTIVE_BOUND = 6
PULLBACK_MAX_POINTS = 7
REDUCTION_BASE = (-2, 1, 1)
MAX_REPORTED_FAILURES = 3


def _result(name: str, failures: List[str], checked: int) -> CheckResult:
    if failures:
        shown = "; ".join(failures[:MAX_REPORTED_FAILURES])
        return CheckResult(name, False, f"{len(failures)} of {checked} failed: {shown}")
    return CheckResult(name, True, f"{checked} cases")


def _nonzero_triples(bound: int):
    for a1 in range(-bound, bound + 1):
        for a2 in range(-bound, bound + 1):
            a3 = -a1 - a2
            if a1 and a2 and a3 and abs(a3) <= bound:
                yield Signature((a1, a2, a3))


def check_certificate_pairing(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    checked = 0
    for a in _nonzero_triples(bound):
        if not a.is_primitive:
            continue
        checked += 1
        value = pair(x_curve(a), hain_class(a))
        if value != -1:
            failures.append(f"X·D_{list(a.entries)} = {value}")
    return _result("certificate_pairing", failures, checked)


def check_ray_family(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    rays = []
    for k in range(1, bound + 1):
        _, divisor, ray = extremal_ray_family(k)
        if divisor != k * (k + 1) * ray:
            failures.append(f"k={k}: class is not {k * (k + 1)} times the ray")
        rays.append(ray)
    for (i, first), (j, second) in combinations(enumerate(rays, start=1), 2):
        if are_proportional(first, second):
            failures.append(f"rays {i} and {j} are proportional")
    return _result("ray_family", failures, bound)


def check_sigma_identity(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    if bound < 1:
        return _result("sigma_identity", failures, 0)
    sums = divisor_sum_of_sigma(bound)
    squares = np.arange(bound + 1, dtype=np.int64) ** 2
    bad = np.nonzero(sums[1:] != squares[1:])[0]
    failures.extend(f"Σσ(t) over t | {d + 1} = {sums[d + 1]}" for d in bad[:MAX_REPORTED_FAILURES])
    table = sigma_table(bound)
    oracle_limit = min(bound, SIGMA_ORACLE_LIMIT)
    for t in range(1, oracle_limit + 1):
        value = sigma_fn(t)
        if value != table[t] or value != exact_order_count(t, t):
            failures.append(f"σ({t}) = {value} disagrees with the sieve or the lattice count")
    return _result("sigma_identity", failures, bound + oracle_limit)


def _random_nonzero_signature(rng: random.Random, n: int, bound: int) -> Signature:
    while True:
        entries = [rng.choice([value for value in range(-bound, bound + 1) if value]) for _ in range(n - 1)]
        last = -sum(entries)
        if last and abs(last) <= bound:
            return Signature(tuple(entries + [last]))


def _decomposition_failure(a: Signature):
    total = DivisorClass.zero(a.n)
    for _, component in decompose(a):
        total = total + component
    if total != hain_class(a):
        return f"components of {list(a.entries)} do not add up to D_a"
    return None


def check_decomposition(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    checked = 0
    exhaustive = min(bound, DECOMPOSITION_EXHAUSTIVE_BOUND)
    nonzero = [value for value in range(-exhaustive, exhaustive + 1) if value]
    for n in range(3, 6):
        for head in product(nonzero, repeat=n - 1):
            last = -sum(head)
            if not last or abs(last) > exhaustive:
                continue
            checked += 1
            failure = _decomposition_failure(Signature(head + (last,)))
            if failure:
                failures.append(failure)
    if bound >= 1:
        for _ in range(samples):
            checked += 1
            failure = _decomposition_failure(_random_nonzero_signature(rng, rng.randint(3, 5), bound))
            if failure:
                failures.append(failure)
    return _result("decomposition", failures, checked)


def check_monodromy_orbits(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    for a in range(1, bound + 1):
        orbits = monodromy_orbits(a)
        if len(orbits) != eta(a):
            failures.append(f"a={a}: {len(orbits)} orbits, η = {eta(a)}")
        invariants = [orbit.invariant for orbit in orbits]
        if len(set(invariants)) != len(invariants):
            failures.append(f"a={a}: two orbits share an invariant")
        for orbit in orbits:
            if any(gcd(gcd(x, y), a) != orbit.invariant for x, y in orbit.members):
                failures.append(f"a={a}: orbit of {orbit.representative.to_dict()} mixes gcd strata")
        if orbits and orbit_invariant(orbits[0].representative, a) != a:
            failures.append(f"a={a}: the origin is not in the first orbit")
        if component_count((a, -a)) != eta(a) - 1:
            failures.append(f"a={a}: component count of ({a}, -{a}) is not η - 1")
    return _result("monodromy_orbits", failures, bound)


def check_automorphism_matrices(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    if f_matrix() * f_inverse_matrix() != eye(5) or f_inverse_matrix() * f_matrix() != eye(5):
        failures.append("f_* and (f⁻¹)_* are not inverse matrices")
    if f_pushforward(hain_class((2, -1, -1))) != DivisorClass.from_subsets(3, 0, {(1, 3): 1}):
        failures.append("f_*D_(2,-1,-1) != δ13")
    if f_inverse_pushforward(hain_class((-1, 2, -1))) != DivisorClass.from_subsets(3, 0, {(2, 3): 1}):
        failures.append("(f⁻¹)_*D_(-1,2,-1) != δ23")
    return _result("automorphism_matrices", failures, 3)


def _trace_failure(a: Signature):
    trace = reduce_signature(a)
    if tuple(sorted(trace.end.entries)) != REDUCTION_BASE:
        return f"{list(a.entries)} ends at {list(trace.end.entries)}"
    signatures = trace.intermediate_signatures()
    if signatures[-1] != trace.end:
        return f"{list(a.entries)} does not replay"
    for before, move, after in zip(signatures, trace.steps, signatures[1:]):
        if not after.is_primitive:
            return f"{list(a.entries)} passes through non-primitive {list(after.entries)}"
        if move.kind == F_TRANSFORM and max(map(abs, after.entries)) >= max(map(abs, before.entries)):
            return f"{list(a.entries)}: f-step {list(before.entries)} does not shrink"
    return None


def _primitive_triples(bound: int) -> np.ndarray:
    """Every primitive triple without zeros and with |a_i| <= bound, one per row"""
    values = np.arange(-bound, bound + 1, dtype=np.int64)
    a1, a2 = (grid.ravel() for grid in np.meshgrid(values, values, indexing="ij"))
    a3 = -a1 - a2
    keep = (a1 != 0) & (a2 != 0) & (a3 != 0) & (np.abs(a3) <= bound) & (np.gcd(np.gcd(a1, a2), a3) == 1)
    return np.stack([a1[keep], a2[keep], a3[keep]], axis=1)


def _round_failures(triples: np.ndarray) -> List[str]:
    """First reduction round of every triple at once

    After negation a triple is a permutation of (1, 1, -2) or its f-step
    lands on a primitive triple without zeros and with smaller max|a_i|,
    which is again a row of the sweep. By induction every row reduces.
    """
    normalized = triples.copy()
    normalized[(normalized > 0).sum(axis=1) < 2] *= -1
    negative = normalized.min(axis=1)
    larger = normalized.max(axis=1)
    smaller = -negative - larger
    moving = negative != -2
    image = np.stack([larger - smaller, negative + smaller, smaller], axis=1)[moving]
    shrinks = np.abs(image).max(axis=1) < -negative[moving]
    nonzero = (image != 0).all(axis=1)
    primitive = np.gcd(np.gcd(image[:, 0], image[:, 1]), image[:, 2]) == 1
    bad = np.nonzero(~(shrinks & nonzero & primitive))[0]
    starts = triples[moving][bad]
    return [f"{start.tolist()}: first f-step gives {end.tolist()}" for start, end in zip(starts, image[bad])]


def _random_primitive_triple(rng: random.Random, bound: int) -> Signature:
    while True:
        a1, a2 = rng.randint(-bound, bound), rng.randint(-bound, bound)
        a = (a1, a2, -a1 - a2)
        if 0 not in a and abs(a[2]) <= bound and gcd(a1, a2) == 1:
            return Signature(a)


def check_signature_reduction(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    """Every triple through one round, every normalized triple
    (p, -(p+q), q) with p >= q > 0 through reduce_signature, and seeded
    triples of any shape through a full replay
    """
    failures = []
    if bound < 2:
        return _result("signature_reduction", failures, 0)
    triples = _primitive_triples(bound)
    failures.extend(_round_failures(triples))
    checked = len(triples)
    for total in range(2, bound + 1):
        for q in range(1, total // 2 + 1):
            p = total - q
            if gcd(p, q) != 1:
                continue
            checked += 1
            trace = reduce_signature((p, -total, q))
            if tuple(sorted(trace.end.entries)) != REDUCTION_BASE:
                failures.append(f"{[p, -total, q]} ends at {list(trace.end.entries)}")
            elif trace.steps.count(F_MOVE) > total:
                failures.append(f"{[p, -total, q]} takes more than {total} f-steps")
    for _ in range(samples):
        checked += 1
        a = _random_primitive_triple(rng, bound)
        failure = _trace_failure(a)
        if failure:
            failures.append(failure)
            continue
        trace = reduce_signature(a)
        prefix = next((index for index, move in enumerate(trace.steps) if move == F_MOVE), len(trace.steps))
        normalized = trace.intermediate_signatures()[prefix]
        if reduce_signature(normalized).steps != trace.steps[prefix:]:
            failures.append(f"{list(a.entries)} does not continue as the trace of {list(normalized.entries)}")
    return _result("signature_reduction", failures, checked)


def check_pullback_coherence(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    checked = 0
    for n in range(3, PULLBACK_MAX_POINTS + 1):
        for a in _nonzero_triples(bound):
            a1, a2, _ = a.entries
            checked += 1
            if pulled_back_hain_triple(n, a1, a2) != pullback(hain_class(a), n):
                failures.append(f"n={n}, ({a1}, {a2}): expansion differs from the pullback")
            if gcd(a1, a2) == 1:
                report = pulled_back_certificate(n, a1, a2)
                if report.pairing != -1 or not report.is_valid:
                    failures.append(f"n={n}, ({a1}, {a2}): certificate pairing {report.pairing}")
    return _result("pullback_coherence", failures, checked)


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-12, 12), rng.randint(1, 6))


def _expected_curve_tables(n: int) -> Dict[str, tuple]:
    tables = {"C": (0, {2: n - 1})}
    for j in range(2, n):
        tables[f"C_{j}"] = (0, {j: -(n - j), j + 1: n - j})
    tables[f"C_{n}"] = (12, {n: -1})
    return tables


def check_sym_cone(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    checked = 0
    for n in range(3, bound + 1):
        expected = _expected_curve_tables(n)
        for curve in certificate_curves(n):
            irr, pairings = expected[curve.name]
            if curve.irr_pairing != irr or curve.pairings != pairings:
                failures.append(f"n={n}: pairings of {curve.name} differ from the displayed table")
        for _ in range(samples):
            checked += 1
            # half the samples are pushed into the cone so that passing classes occur
            coordinates = [_random_rational(rng) for _ in range(n)]
            if rng.random() < 0.5:
                coordinates = [abs(value) for value in coordinates]
            divisor = SymDivisorClass.from_coordinates(n, coordinates)
            report = nonboundary_constraints_check(divisor)
            if report.all_nonnegative and any(value < 0 for value in coordinates):
                failures.append(f"{divisor.to_str()} passes every constraint with a negative coordinate")
    return _result("sym_cone", failures, checked)


def _random_signature(rng: random.Random, n: int) -> Signature:
    while True:
        entries = [rng.randint(-5, 5) for _ in range(n - 1)]
        entries.append(-sum(entries))
        if any(entries):
            return Signature(tuple(entries))


def _random_family(rng: random.Random, n: int) -> FamilyData:
    masks = boundary_masks(n)
    chosen = rng.sample(masks, rng.randint(0, len(masks)))
    return FamilyData(n, rng.randint(0, 36), {mask: rng.randint(0, 5) for mask in chosen})


def check_grr_coherence(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    if bound < 2:
        return _result("grr_coherence", failures, 0)
    for _ in range(samples):
        n = rng.randint(2, bound)
        a = _random_signature(rng, n)
        family = _random_family(rng, n)
        curve = family_curve(family)
        gap = grr_degree(a, family) - vanishing_degree(a, family)
        if gap != pair(curve, hain_class(a)):
            failures.append(f"{list(a.entries)}: degree {gap} != B·D_a on {family.to_dict()}")
        if not a.has_zero_entry and vanishing_degree(a, family) != family.count(full_mask(n)):
            failures.append(f"{list(a.entries)}: vanishing degree is not d_{{1..n}}")
        i = rng.randint(1, n)
        if family_invariants(family, i, i).psi_degree_i != pair(curve, psi_class(n, i)):
            failures.append(f"ψ_{i} degree disagrees with B·ψ_{i} on {family.to_dict()}")
    return _result("grr_coherence", failures, samples)


def check_reid_tai_fixtures(bound: int, rng: random.Random, samples: int = 0) -> CheckResult:
    failures = []
    for name, (profile, expected) in APPENDIX_FIXTURES.items():
        value = age(profile)
        if value != expected:
            failures.append(f"{name}: age {value} != {expected}")
        if is_quasi_reflection(profile) and value != Fraction(1, profile.k):
            failures.append(f"{name}: quasi-reflection of age {value} != 1/{profile.k}")
    return _result("reid_tai_fixtures", failures, len(APPENDIX_FIXTURES))


CHECKS: Dict[str, Callable[..., CheckResult]] = {
    "certificate_pairing": check_certificate_pairing,
    "ray_family": check_ray_family,
    "sigma_identity": check_sigma_identity,
    "decomposition": check_decomposition,
    "monodromy_orbits": check_monodromy_orbits,
    "automorphism_matrices": check_automorphism_matrices,
    "signature_reduction": check_signature_reduction,
    "pullback_coherence": check_pullback_coherence,
    "sym_cone": check_sym_cone,
    "grr_coherence": check_grr_coherence,
    "reid_tai_fixtures": check_reid_tai_fixtures,
}


def run_check(name: str, bound: int, samples: int, seed: int) -> CheckResult:
    rng = random.Random(f"{seed}:{name}")
    started = time.perf_counter()
    try:
        result = CHECKS[name](bound, rng, samples)
    except GenusOneDivisorsException as error:
        result = CheckResult(name, False, f"raised {type(error).__name__}: {error}")
    logger.info("%s finished in %.2fs", name, time.perf_counter() - started)
    return result


def run_suite(config: VerifyConfig) -> List[CheckResult]:
    """Run every check in DEFAULT_SWEEPS order"""
    jobs = [(name, config.get_sweep_args(name)) for name in DEFAULT_SWEEPS]
    if config.workers == 1:
        return [run_check(name, args["bound"], args["samples"], config.seed) for name, args in jobs]
    with ProcessPoolExecutor(max_workers=config.workers) as executor:
        futures = [
            executor.submit(run_check, name, args["bound"], args["samples"], config.seed)
            for name, args in jobs
        ]
        return [future.result() for future in futures]


def format_table(results: List[CheckResult]) -> str:
    width = max(len(result.name) for result in results)
    lines = [f"{result.name.ljust(width)}  {'PASS' if result.passed else 'FAIL'}  {result.detail}" for result in results]
    return "\n".join(lines)
