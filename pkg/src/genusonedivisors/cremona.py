"""The birational automorphism f of the 3-pointed space, q_3 = p_2 + p_3 - p_1.

f is an isomorphism in codimension one, so it acts on the rank-5 Picard
group. The action is fixed by its values on the basis λ, δ_{0;{1,2}},
δ_{0;{1,3}}, δ_{0;{2,3}}, δ_{0;{1,2,3}}.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import Matrix, Rational

from genusonedivisors.class_algebra import lambda_class
from genusonedivisors.errors import (
    InvalidDimensionException,
    NotPrimitiveException,
    ZeroEntryException,
)
from genusonedivisors.hain_divisor import SignatureLike, hain_class, validate_signature
from genusonedivisors.models import DivisorClass, Move, Permutation, ReductionTrace, Signature
from genusonedivisors.models.reduction_trace import F_TRANSFORM, NEGATE, PERMUTE

logger = logging.getLogger(__name__)

BASE_SIGNATURE = (-2, 1, 1)

LAMBDA = "lambda"
BASIS_ORDER = (LAMBDA, (1, 2), (1, 3), (2, 3), (1, 2, 3))


def _basis(key) -> DivisorClass:
    if key == LAMBDA:
        return lambda_class(3)
    return DivisorClass.from_subsets(3, 0, {key: 1})


def _pushforward_table() -> Dict[object, DivisorClass]:
    return {
        LAMBDA: _basis(LAMBDA),
        (1, 2): _basis((1, 2)),
        (1, 3): _basis((2, 3)),
        (2, 3): hain_class((-1, 2, -1)),
        (1, 2, 3): _basis((1, 2, 3)),
    }


def _inverse_table() -> Dict[object, DivisorClass]:
    return {
        LAMBDA: _basis(LAMBDA),
        (1, 2): _basis((1, 2)),
        (1, 3): hain_class((2, -1, -1)),
        (2, 3): _basis((1, 3)),
        (1, 2, 3): _basis((1, 2, 3)),
    }


def _check_three_points(n: int) -> None:
    if n != 3:
        raise InvalidDimensionException(f"f acts on the 3-pointed space, got a class on {n} points")


def _coordinates(divisor: DivisorClass) -> List:
    return [divisor.lambda_coeff] + [divisor.coefficient(key) for key in BASIS_ORDER[1:]]


def _apply(table: Dict[object, DivisorClass], divisor: DivisorClass) -> DivisorClass:
    _check_three_points(divisor.n)
    image = DivisorClass.zero(3)
    for key, value in zip(BASIS_ORDER, _coordinates(divisor)):
        if value:
            image = image + value * table[key]
    return image


def f_pushforward(divisor: DivisorClass) -> DivisorClass:
    """f_*D; on the basis λ ↦ λ, δ12 ↦ δ12, δ13 ↦ δ23, δ23 ↦ D_{(-1,2,-1)}, δ123 ↦ δ123"""
    return _apply(_pushforward_table(), divisor)


def f_inverse_pushforward(divisor: DivisorClass) -> DivisorClass:
    """(f⁻¹)_*D; on the basis δ13 ↦ D_{(2,-1,-1)}, δ23 ↦ δ13, the rest fixed"""
    return _apply(_inverse_table(), divisor)


def _matrix(table: Dict[object, DivisorClass]) -> Matrix:
    columns = [_coordinates(table[key]) for key in BASIS_ORDER]
    return Matrix(5, 5, lambda row, column: Rational(columns[column][row].numerator, columns[column][row].denominator))


def f_matrix() -> Matrix:
    """Matrix of f_* in the basis order λ, δ12, δ13, δ23, δ123 (columns are images)"""
    return _matrix(_pushforward_table())


def f_inverse_matrix() -> Matrix:
    return _matrix(_inverse_table())


def _check_triple(a: Signature) -> None:
    if a.n != 3:
        raise InvalidDimensionException(f"f acts on 3-pointed signatures, got {list(a.entries)}")


def f_signature(a: SignatureLike) -> Signature:
    """(a1, a2, a3) ↦ (a1 - a3, a2 + a3, a3); D_a is the image of this signature's class under f"""
    a = validate_signature(a)
    _check_triple(a)
    return Move(F_TRANSFORM).apply(a)


def f_image_signature(a: SignatureLike) -> Signature:
    """(a1, a2, a3) ↦ (a1 + a3, a2 - a3, a3), the signature of f(D_a)"""
    a = validate_signature(a)
    _check_triple(a)
    a1, a2, a3 = a.entries
    return Signature((a1 + a3, a2 - a3, a3))


IDENTITY_IMAGE = (1, 2, 3)
NEGATE_MOVE = Move(NEGATE)
F_MOVE = Move(F_TRANSFORM)
# once normalized, the negative entry stays second and only the positives trade places
SWAP_MOVE = Move(PERMUTE, Permutation((3, 2, 1)))


@lru_cache(maxsize=None)
def _permute_move(image: Tuple[int, int, int]) -> Move:
    return Move(PERMUTE, Permutation(image))


def normalizing_image(entries: Tuple[int, int, int]) -> Tuple[int, int, int]:
    """Image array putting the larger positive entry first, the negative one
    second and the smaller positive one third; ties keep label order
    """
    negative = next(index for index, value in enumerate(entries) if value < 0)
    positives = sorted((index for index in range(3) if index != negative), key=lambda index: (-entries[index], index))
    image = [0, 0, 0]
    image[positives[0]] = 1
    image[negative] = 2
    image[positives[1]] = 3
    return tuple(image)


def _reduction_moves(entries: Tuple[int, int, int]) -> Tuple[List[Move], Tuple[int, int, int], int]:
    """Moves, end triple and f-step count for a primitive triple without zeros"""
    moves: List[Move] = []
    a1, a2, a3 = entries
    if (a1 > 0) + (a2 > 0) + (a3 > 0) < 2:
        moves.append(NEGATE_MOVE)
        a1, a2, a3 = -a1, -a2, -a3
    # two positive entries summing to 2 are both 1
    if min(a1, a2, a3) == -2:
        return moves, (a1, a2, a3), 0
    image = normalizing_image((a1, a2, a3))
    if image != IDENTITY_IMAGE:
        moves.append(_permute_move(image))
        moved = [0, 0, 0]
        for value, target in zip((a1, a2, a3), image):
            moved[target - 1] = value
        a1, a2, a3 = moved
    f_steps = 0
    while True:
        # a1 >= a3 > 0 > a2: f subtracts a3 from a1 until a1 < a3, or down to (1, -2, 1)
        run = a1 - 1 if a3 == 1 else a1 // a3
        moves.extend([F_MOVE] * run)
        f_steps += run
        a1 -= run * a3
        a2 = -a1 - a3
        if a3 == 1:
            return moves, (a1, a2, a3), f_steps
        moves.append(SWAP_MOVE)
        a1, a3 = a3, a1


def reduce_signature(a: SignatureLike) -> ReductionTrace:
    """Reduce a primitive triple to a permutation of (1, 1, -2)

    Each round negates when fewer than two entries are positive, stops on
    the multiset {1, 1, -2}, and otherwise permutes to a1 >= a3 > 0 > a2
    and applies f_signature. max|a_i| drops at every f-step.

    Raises:
        ZeroEntryException: a has a zero entry
        NotPrimitiveException: gcd(a) > 1
    """
    a = validate_signature(a)
    _check_triple(a)
    if a.has_zero_entry:
        raise ZeroEntryException(f"signature {list(a.entries)} has a zero entry; it is a pullback from 2 points")
    if not a.is_primitive:
        raise NotPrimitiveException(f"signature {list(a.entries)} has gcd {a.d}")
    moves, end, f_steps = _reduction_moves(a.entries)
    logger.debug("reduced %s in %d f-steps", a.entries, f_steps)
    return ReductionTrace(a, tuple(moves), Signature(end))

