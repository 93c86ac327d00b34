import random
from fractions import Fraction as F

import pytest

from conftest import rand_frac, rand_matrix, rand_vector
from homcheck import (
    DimensionMismatch,
    Matrix,
    Tensor3,
    Tensor4,
    apply_product,
    apply_triple,
    basis_vector,
    dual_transpose,
    kernel_basis,
    mat_apply,
    rank,
    rat,
)
from homcheck.examples import ex3, ex3_flat, theta_involution, zero_algebra
from homcheck.linalg import is_zero, parse_rat, vadd, vscale, vsub, zero_vector


def test_rat_parsing():
    assert rat("3/4") == F(3, 4)
    assert rat("-5") == F(-5)
    assert rat(7) == F(7)
    assert parse_rat("  2/6 ") == F(1, 3)


@pytest.mark.parametrize("bad", ["1/0", "1/-2", "a", "1.5", "2/0"])
def test_rat_rejects_bad_literals(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_scalar_arithmetic_properties():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (rand_frac(rng, 9) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        for x in (a + b, a * b, a - b):
            assert x.denominator > 0
            from math import gcd

            assert gcd(abs(x.numerator), x.denominator) == 1


def test_vector_helpers():
    u, v = (F(1), F(2)), (F(3), F(-2))
    assert vadd(u, v) == (F(4), F(0))
    assert vsub(u, v) == (F(-2), F(4))
    assert vscale(F(-1), u) == (F(-1), F(-2))
    assert vscale(F(0), u) == zero_vector(2)
    assert is_zero(zero_vector(3))
    with pytest.raises(DimensionMismatch):
        vadd(u, (F(1),))


def test_mat_apply_identity_and_twists():
    v = (F(5), F(-1), F(2, 3))
    assert mat_apply(Matrix.identity(3), v) == v
    tw = ex3(2).twist
    assert mat_apply(tw, basis_vector(3, 1)) == (F(0), F(2), F(0))
    assert mat_apply(tw, basis_vector(3, 2)) == (F(0), F(0), F(1, 2))
    with pytest.raises(DimensionMismatch):
        mat_apply(tw, (F(1),))


def test_matrix_product_and_power():
    m = Matrix([[1, 1], [0, 1]])
    assert (m @ m).entries == ((F(1), F(2)), (F(0), F(1)))
    assert m.power(0) == Matrix.identity(2)
    assert m.power(3).entries[0][1] == F(3)


def test_rank_examples():
    assert rank(Matrix.zero(4)) == 0
    assert rank(Matrix.identity(6)) == 6
    hyperbolic = Matrix([[F(1) if abs(i - j) == 3 else F(0) for j in range(6)]
                         for i in range(6)])
    assert rank(hyperbolic) == 6
    assert rank(Matrix([[F(1, 2), F(1)], [F(1), F(2)]])) == 1


def test_rank_transpose_property():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 5)
        m = Matrix([[rand_frac(rng) for _ in range(n)] for _ in range(rng.randint(1, 5))])
        assert rank(m) == rank(m.transpose())


def test_kernel_basis():
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert is_zero(mat_apply(m, v))
    assert kernel_basis(Matrix.identity(3)) == []


def test_dual_transpose():
    assert dual_transpose(Matrix.identity(4)) == Matrix.identity(4)
    d = Matrix.diagonal([1, 2, F(1, 2)])
    assert dual_transpose(d) == d
    th = theta_involution()
    assert dual_transpose(th) == th  # symmetric matrix


def test_apply_product_examples():
    zero = zero_algebra(3)
    e = [basis_vector(3, i) for i in range(3)]
    assert is_zero(apply_product(zero.mul, e[0], e[1]))
    flat = ex3_flat()
    assert apply_product(flat.mul, e[1], e[2]) == e[0]
    s = vadd(e[1], e[2])
    assert is_zero(apply_product(flat.mul, s, s))
    with pytest.raises(DimensionMismatch):
        apply_product(flat.mul, (F(1),), e[0])


def test_apply_product_bilinear():
    rng = random.Random(23)
    flat = ex3_flat()
    for _ in range(25):
        a, b = rand_frac(rng), rand_frac(rng)
        u, w, v = (rand_vector(rng, 3) for _ in range(3))
        lhs = apply_product(flat.mul, vadd(vscale(a, u), vscale(b, w)), v)
        rhs = vadd(vscale(a, apply_product(flat.mul, u, v)),
                   vscale(b, apply_product(flat.mul, w, v)))
        assert lhs == rhs


def test_tensor_sparse_roundtrip_and_bounds():
    t = Tensor3.from_sparse(3, [(0, 1, 1, "1"), (1, 0, 1, -1)])
    assert t.row(0, 1) == (F(0), F(1), F(0))
    assert Tensor3.from_sparse(3, t.sparse_items()) == t
    with pytest.raises(IndexError):
        Tensor3.from_sparse(2, [(0, 1, 2, 1)])
    t4 = Tensor4.from_sparse(2, [(0, 1, 0, 1, "1/2")])
    assert t4.row(0, 1, 0) == (F(0), F(1, 2))
    with pytest.raises(IndexError):
        Tensor4.from_sparse(2, [(0, 1, 0, 2, 1)])


def test_tensor_symmetry_predicates():
    flat = ex3_flat()
    from homcheck import minus_algebra, plus_algebra

    assert minus_algebra(flat).mul.is_skewsymmetric()
    assert plus_algebra(flat).mul.is_symmetric()
    assert not flat.mul.is_symmetric()


def test_apply_triple_contracts():
    t = Tensor4.from_sparse(2, [(0, 1, 0, 1, 2)])
    e = [basis_vector(2, i) for i in range(2)]
    assert apply_triple(t, e[0], e[1], e[0]) == (F(0), F(2))
    assert is_zero(apply_triple(t, e[1], e[1], e[0]))
    with pytest.raises(DimensionMismatch):
        apply_triple(t, e[0], e[1], (F(1),))


def test_zero_dimension_accepted():
    z = zero_algebra(0)
    assert z.dim == 0
    assert rank(Matrix(())) == 0
