import json

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra import numpy as hnp

from qboson.cmatrix import (
    add,
    basis,
    dag,
    dyad,
    identity,
    is_unitary,
    mat_pow,
    matrix_from_dict,
    matrix_to_dict,
    max_abs_diff,
    mul,
    scale,
    sub,
    transpose,
    vector_from_dict,
    vector_to_dict,
)

_elements = st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False)


def square_matrices(dim):
    return hnp.arrays(np.complex128, (dim, dim), elements=_elements)


@st.composite
def matrix_triples(draw, max_dim=16):
    d = draw(st.integers(min_value=1, max_value=max_dim))
    return (draw(square_matrices(d)), draw(square_matrices(d)), draw(square_matrices(d)))


class TestDyad:
    def test_entries(self):
        np.testing.assert_array_equal(dyad(0, 1, 2), np.array([[0, 1], [0, 0]], dtype=complex))

    def test_chaining(self):
        # <0|0> = 1 chains the outer products
        np.testing.assert_array_equal(mul(dyad(1, 0, 3), dyad(0, 2, 3)), dyad(1, 2, 3))

    def test_orthogonal_product_vanishes(self):
        np.testing.assert_array_equal(mul(dyad(0, 1, 3), dyad(2, 0, 3)), np.zeros((3, 3)))

    @pytest.mark.parametrize("m, n", [(-1, 0), (0, -1), (2, 0), (0, 2)])
    def test_out_of_range(self, m, n):
        with pytest.raises(IndexError):
            dyad(m, n, 2)

    def test_basis_out_of_range(self):
        with pytest.raises(IndexError):
            basis(3, 3)


class TestArithmetic:
    def test_identity_is_neutral(self):
        a = np.arange(9, dtype=complex).reshape(3, 3) * (1 + 2j)
        np.testing.assert_array_equal(mul(identity(3), a), a)
        np.testing.assert_array_equal(mul(a, identity(3)), a)

    def test_scale_by_zero(self):
        a = np.ones((3, 3), dtype=complex)
        np.testing.assert_array_equal(scale(0.0, a), np.zeros((3, 3)))

    def test_add_sub_roundtrip(self):
        a = np.full((2, 2), 1 + 1j)
        b = np.full((2, 2), 2 - 3j)
        np.testing.assert_array_equal(sub(add(a, b), b), a)

    @pytest.mark.parametrize("op", [mul, add, sub, max_abs_diff])
    def test_dimension_mismatch(self, op):
        with pytest.raises(ValueError):
            op(np.zeros((2, 2), dtype=complex), np.zeros((3, 3), dtype=complex))

    @given(matrix_triples())
    def test_mul_associative(self, triple):
        a, b, c = triple
        assert max_abs_diff(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-12


class TestAdjoint:
    def test_identity_fixed(self):
        np.testing.assert_array_equal(dag(identity(4)), identity(4))

    def test_dyad_swaps_indices(self):
        np.testing.assert_array_equal(dag(dyad(1, 2, 4)), dyad(2, 1, 4))

    def test_conjugates(self):
        np.testing.assert_array_equal(dag(1j * identity(2)), -1j * identity(2))

    def test_transpose_does_not_conjugate(self):
        a = 1j * identity(2)
        np.testing.assert_array_equal(transpose(a), a)

    @given(square_matrices(5))
    def test_involution(self, a):
        np.testing.assert_array_equal(dag(dag(a)), a)

    @given(square_matrices(5), square_matrices(5))
    def test_product_reversal(self, a, b):
        assert max_abs_diff(dag(mul(a, b)), mul(dag(b), dag(a))) < 1e-13


class TestMatPow:
    def test_zeroth_power(self):
        a = np.full((3, 3), 2 + 1j)
        np.testing.assert_array_equal(mat_pow(a, 0), identity(3))

    def test_nilpotent_dyad(self):
        np.testing.assert_array_equal(mat_pow(dyad(1, 0, 2), 2), np.zeros((2, 2)))

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            mat_pow(identity(2), -1)


class TestMaxAbsDiff:
    def test_examples(self):
        a = identity(3)
        assert max_abs_diff(a, a) == 0.0
        assert max_abs_diff(a, np.zeros((3, 3))) == 1.0
        assert max_abs_diff(2.0 * a, a) == 1.0

    @given(matrix_triples(max_dim=6))
    def test_metric_properties(self, triple):
        a, b, c = triple
        assert max_abs_diff(a, b) == max_abs_diff(b, a)
        assert max_abs_diff(a, a) == 0.0
        assert max_abs_diff(a, c) <= max_abs_diff(a, b) + max_abs_diff(b, c) + 1e-12

    @given(matrix_triples(max_dim=6))
    def test_zero_iff_equal(self, triple):
        a, b, _ = triple
        if max_abs_diff(a, b) == 0.0:
            np.testing.assert_array_equal(a, b)


class TestIsUnitary:
    def test_identity(self):
        assert is_unitary(identity(5), 1e-12)

    def test_rank_deficient_projector(self):
        assert not is_unitary(dyad(0, 0, 2), 1e-9)

    def test_phase_matrix(self):
        assert is_unitary(np.diag(np.exp(1j * np.linspace(0.0, 3.0, 7))), 1e-12)


class TestJsonFormat:
    def test_matrix_roundtrip_is_bit_exact(self):
        rng = np.random.default_rng(7)
        a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
        text = json.dumps(matrix_to_dict(a))
        np.testing.assert_array_equal(matrix_from_dict(json.loads(text)), a)

    def test_vector_roundtrip_is_bit_exact(self):
        rng = np.random.default_rng(8)
        v = rng.normal(size=6) + 1j * rng.normal(size=6)
        text = json.dumps(vector_to_dict(v))
        np.testing.assert_array_equal(vector_from_dict(json.loads(text)), v)

    def test_schema_shape(self):
        doc = matrix_to_dict(identity(2))
        assert doc == {"dim": 2, "entries": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]}

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            matrix_to_dict(np.zeros((2, 3), dtype=complex))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            matrix_to_dict(np.array([[np.inf, 0], [0, 0]], dtype=complex))
        with pytest.raises(ValueError):
            matrix_from_dict({"dim": 1, "entries": [[float("nan"), 0.0]]})

    def test_rejects_bad_dim_or_length(self):
        with pytest.raises(ValueError):
            matrix_from_dict({"dim": 0, "entries": []})
        with pytest.raises(ValueError):
            matrix_from_dict({"dim": 2, "entries": [[1.0, 0.0]]})
        with pytest.raises(ValueError):
            vector_from_dict({"dim": 3, "entries": [[1.0, 0.0]]})
