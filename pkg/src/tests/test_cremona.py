import random
import time
from math import gcd

import pytest
from sympy import eye

from genusonedivisors.class_algebra import boundary_class, lambda_class
from genusonedivisors.cremona import (
    BASE_SIGNATURE,
    f_image_signature,
    f_inverse_matrix,
    f_inverse_pushforward,
    f_matrix,
    f_pushforward,
    f_signature,
    reduce_signature,
)
from genusonedivisors.errors import (
    FailedToDeserializeException,
    InvalidDimensionException,
    NotPrimitiveException,
    ZeroEntryException,
)
from genusonedivisors.hain_divisor import hain_class
from genusonedivisors.models import Move, Permutation, ReductionTrace, Signature
from genusonedivisors.models.reduction_trace import F_TRANSFORM, NEGATE, PERMUTE

SEED = 2024


def _nonzero_triples(rng, count, size):
    produced = 0
    while produced < count:
        a1, a2 = rng.randint(-size, size), rng.randint(-size, size)
        if 0 in (a1, a2, a1 + a2):
            continue
        produced += 1
        yield Signature((a1, a2, -a1 - a2))


def test_f_signature():
    assert f_signature((3, -5, 2)) == Signature((1, -3, 2))
    assert f_image_signature((1, -3, 2)) == Signature((3, -5, 2))


def test_f_signature_rejects_other_point_counts():
    with pytest.raises(InvalidDimensionException):
        f_signature((1, 1, 1, -3))
    with pytest.raises(InvalidDimensionException):
        f_image_signature((1, -1))


def test_f_pushforward_on_basis():
    assert f_pushforward(lambda_class(3)) == lambda_class(3)
    assert f_pushforward(boundary_class(3, (1, 3))) == boundary_class(3, (2, 3))
    assert f_pushforward(boundary_class(3, (2, 3))) == hain_class((-1, 2, -1))
    assert f_inverse_pushforward(boundary_class(3, (1, 3))) == hain_class((2, -1, -1))
    assert f_inverse_pushforward(boundary_class(3, (2, 3))) == boundary_class(3, (1, 3))


def test_f_pushforward_rejects_other_point_counts():
    with pytest.raises(InvalidDimensionException):
        f_pushforward(lambda_class(4))
    with pytest.raises(InvalidDimensionException):
        f_inverse_pushforward(lambda_class(2))


def test_f_matrices_are_inverse():
    assert f_matrix() * f_inverse_matrix() == eye(5)
    assert f_inverse_matrix() * f_matrix() == eye(5)


def test_f_pushforward_moves_hain_classes():
    assert f_pushforward(hain_class((1, 1, -2))) == hain_class((-1, 3, -2))

    rng = random.Random(SEED)
    for a in _nonzero_triples(rng, 100, 15):
        image = f_image_signature(a)
        if image.has_zero_entry:
            continue
        assert f_pushforward(hain_class(a)) == hain_class(image)
        assert f_inverse_pushforward(hain_class(image)) == hain_class(a)


def test_reduce_base_signature():
    trace = reduce_signature((1, 1, -2))
    assert trace.steps == ()
    assert trace.end == Signature((1, 1, -2))


def test_reduce_negates_once():
    trace = reduce_signature((2, -1, -1))
    assert trace.steps == (Move(NEGATE),)
    assert trace.end == Signature((-2, 1, 1))


def test_reduce_signature():
    trace = reduce_signature((5, -3, -2))
    assert [move.kind for move in trace.steps] == [NEGATE, PERMUTE, F_TRANSFORM, PERMUTE, F_TRANSFORM]
    assert trace.steps[1].p == Permutation((2, 1, 3))
    assert trace.f_step_count == 2
    assert trace.end == Signature((1, -2, 1))
    assert trace.intermediate_signatures()[3] == Signature((1, -3, 2))


def test_reduce_signature_errors():
    with pytest.raises(ZeroEntryException):
        reduce_signature((2, 0, -2))
    with pytest.raises(NotPrimitiveException):
        reduce_signature((2, 2, -4))
    with pytest.raises(InvalidDimensionException):
        reduce_signature((1, 1, 1, -3))


def test_reduce_every_primitive_triple():
    bound = 30
    for a1 in range(-bound, bound + 1):
        for a2 in range(-bound, bound + 1):
            a = (a1, a2, -a1 - a2)
            if 0 in a or not Signature(a).is_primitive:
                continue
            trace = reduce_signature(a)
            assert tuple(sorted(trace.end.entries)) == BASE_SIGNATURE
            assert trace.replay() == trace.end
            assert trace.f_step_count <= max(abs(entry) for entry in a)


def test_reduction_trace_to_dict():
    trace = reduce_signature((5, -3, -2))
    data = trace.to_dict()
    assert data["start"] == [5, -3, -2]
    assert data["steps"][0] == {"move": NEGATE}
    assert data["steps"][1] == {"move": PERMUTE, "p": [2, 1, 3]}
    assert ReductionTrace.from_dict(data) == trace


def test_move_from_dict_rejects_unknown_move():
    with pytest.raises(FailedToDeserializeException):
        Move.from_dict({"move": "twist"})


def test_reduce_signature_swaps_positive_entries():
    trace = reduce_signature((5, -3, -2))
    assert trace.steps[3] == Move(PERMUTE, Permutation((3, 2, 1)))
    assert trace.intermediate_signatures()[4] == Signature((2, -3, 1))


def test_reduce_signature_long_run():
    trace = reduce_signature((999, -1000, 1))
    assert [move.kind for move in trace.steps] == [F_TRANSFORM] * 998
    assert trace.end == Signature((1, -2, 1))
    assert trace.replay() == trace.end


def test_reduce_every_normalized_triple_quickly():
    started = time.perf_counter()
    moves = 0
    for total in range(2, 1001):
        for q in range(1, total // 2 + 1):
            p = total - q
            if gcd(p, q) != 1:
                continue
            trace = reduce_signature((p, -total, q))
            assert tuple(sorted(trace.end.entries)) == BASE_SIGNATURE
            moves += len(trace.steps)
    assert moves > 0
    assert time.perf_counter() - started < 10
