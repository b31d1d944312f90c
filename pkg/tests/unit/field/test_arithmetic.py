"""
Tests for finite-field arithmetic.
"""

import itertools

import numpy as np
import numpy.typing as npt
import pytest

from eulersense.errors import (
    DivisionByZeroError,
    NotPrimePowerError,
    ParameterViolationError,
    ValueOutOfRangeError,
)
from eulersense.field import arithmetic
from eulersense.field.arithmetic import (
    eval_poly,
    factor_prime_powers,
    factorize,
    field_add,
    field_inv,
    field_mul,
    field_neg,
    find_irreducible,
    galois_field,
    is_irreducible,
    is_prime_power,
    make_field,
    prime_power,
)
from eulersense.field.models import FieldElement


def _e(idx: int) -> FieldElement:
    return FieldElement(idx=idx)


class TestFactoring:
    def test_factorize(self) -> None:
        assert factorize(360) == {2: 3, 3: 2, 5: 1}

    def test_prime_power(self) -> None:
        assert prime_power(8) == (2, 3)
        assert prime_power(7) == (7, 1)
        assert prime_power(12) is None

    @pytest.mark.parametrize(("q", "expected"), [(2, True), (9, True), (64, True), (6, False)])
    def test_is_prime_power(self, q: int, expected: bool) -> None:
        assert is_prime_power(q) is expected

    def test_factor_prime_powers(self) -> None:
        assert factor_prime_powers(20) == [4, 5]
        assert factor_prime_powers(360) == [5, 8, 9]
        assert factor_prime_powers(49) == [49]


class TestIrreducible:
    @pytest.mark.parametrize(
        ("p", "r", "expected"),
        [(2, 2, (1, 1, 1)), (2, 3, (1, 1, 0, 1)), (2, 4, (1, 1, 0, 0, 1)), (3, 2, (1, 0, 1))],
    )
    def test_smallest_irreducible(self, p: int, r: int, expected: tuple[int, ...]) -> None:
        assert find_irreducible(p, r) == expected

    def test_reducible(self) -> None:
        assert not is_irreducible((0, 0, 1), 2)

    def test_degree_one_rejected(self) -> None:
        with pytest.raises(ParameterViolationError):
            find_irreducible(2, 1)


class TestMakeField:
    def test_prime(self) -> None:
        spec = make_field(7)
        assert (spec.p, spec.r, spec.modulus) == (7, 1, ())

    def test_extension(self) -> None:
        spec = make_field(9)
        assert (spec.p, spec.r, spec.modulus) == (3, 2, (1, 0, 1))

    def test_not_prime_power(self) -> None:
        with pytest.raises(NotPrimePowerError) as exc_info:
            make_field(6)

        assert exc_info.value.value == 6

    def test_too_small(self) -> None:
        with pytest.raises(ParameterViolationError):
            make_field(1)


class TestOperations:
    def test_gf4_product(self) -> None:
        assert field_mul(make_field(4), _e(2), _e(3)) == _e(1)

    def test_gf5_inverse(self) -> None:
        assert field_inv(make_field(5), _e(2)) == _e(3)

    def test_gf8_addition_is_xor(self) -> None:
        f = make_field(8)
        assert all(
            field_add(f, _e(a), _e(b)).idx == a ^ b
            for a, b in itertools.product(range(8), repeat=2)
        )

    def test_negation(self) -> None:
        f = make_field(9)
        assert all(field_add(f, _e(a), field_neg(f, _e(a))).idx == 0 for a in range(9))

    def test_inverse_of_zero(self) -> None:
        with pytest.raises(DivisionByZeroError):
            field_inv(make_field(7), _e(0))

    def test_element_outside_field(self) -> None:
        with pytest.raises(ValueOutOfRangeError):
            field_add(make_field(4), _e(4), _e(0))

    def test_eval_poly(self) -> None:
        # 2 + 3x + x² at x = 4 over GF(5): 2 + 12 + 16 = 30 = 0
        assert eval_poly(make_field(5), [_e(2), _e(3), _e(1)], _e(4)) == _e(0)


PRIME_POWERS = [q for q in range(2, 65) if is_prime_power(q)]


def _tables(q: int) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
    gf = galois_field(make_field(q))
    assert gf.add_table is not None and gf.mul_table is not None
    return gf.add_table, gf.mul_table


def test_prime_powers_covered() -> None:
    assert {32, 49, 64} <= set(PRIME_POWERS)
    assert len(PRIME_POWERS) == 27


@pytest.mark.parametrize("q", PRIME_POWERS)
class TestFieldAxioms:
    def test_closure(self, q: int) -> None:
        add, mul = _tables(q)
        assert add.min() >= 0 and add.max() < q
        assert mul.min() >= 0 and mul.max() < q

    def test_commutative(self, q: int, monkeypatch: pytest.MonkeyPatch) -> None:
        # untabled engine, so both operand orders run the raw arithmetic
        monkeypatch.setattr(arithmetic, "TABLE_LIMIT", 0)
        gf = arithmetic.GaloisField(make_field(q))
        assert gf.add_table is None
        for a, b in itertools.combinations(range(q), 2):
            assert gf.add(a, b) == gf.add(b, a)
            assert gf.mul(a, b) == gf.mul(b, a)

    def test_associative(self, q: int) -> None:
        add, mul = _tables(q)
        elems = np.arange(q)
        x, y, z = elems[:, None, None], elems[None, :, None], elems[None, None, :]
        assert np.array_equal(add[add[x, y], z], add[x, add[y, z]])
        assert np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]])

    def test_distributive(self, q: int) -> None:
        add, mul = _tables(q)
        elems = np.arange(q)
        x, y, z = elems[:, None, None], elems[None, :, None], elems[None, None, :]
        assert np.array_equal(mul[x, add[y, z]], add[mul[x, y], mul[x, z]])

    def test_identities(self, q: int) -> None:
        add, mul = _tables(q)
        elems = np.arange(q)
        assert np.array_equal(add[:, 0], elems)
        assert np.array_equal(mul[:, 1], elems)
        assert not mul[:, 0].any()

    def test_additive_inverses(self, q: int) -> None:
        add, _ = _tables(q)
        assert ((add == 0).sum(axis=1) == 1).all()

    def test_multiplicative_inverses(self, q: int) -> None:
        gf = galois_field(make_field(q))
        assert all(gf.mul(a, gf.inv(a)) == 1 for a in range(1, q))

    def test_no_zero_divisors(self, q: int) -> None:
        _, mul = _tables(q)
        assert (mul[1:, 1:] != 0).all()
