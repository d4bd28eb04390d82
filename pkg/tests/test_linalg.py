"""Exact linear algebra: worked examples plus law-level property tests.

The kernel examples are cross-checked against independent oracles:
sympy's nullspace over the rationals and exhaustive solution counting
over small prime fields.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfpi.errors import DimensionMismatch, SingularMatrix
from hopfpi.linalg import (
    Matrix,
    PrimeField,
    QQ,
    Subspace,
    flip,
    image,
    kernel,
    membership,
    quotient,
    solve,
    tensor,
    unit_vec,
    vec_kron,
)

FIELDS = [QQ, PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7), PrimeField(11)]


def field_strategy():
    return st.sampled_from(FIELDS)


def scalar_strategy(f):
    ints = st.integers(min_value=-6, max_value=6)
    return ints.map(f.from_int)


def matrix_strategy(max_dim=4):
    def build(f, rows, cols, seed):
        rng = random.Random(seed)
        entries = {}
        for i in range(rows):
            for j in range(cols):
                if rng.random() < 0.5:
                    entries[(i, j)] = f.from_int(rng.randint(-6, 6))
        return Matrix(f, rows, cols, entries)

    return st.builds(
        build,
        field_strategy(),
        st.integers(min_value=0, max_value=max_dim),
        st.integers(min_value=0, max_value=max_dim),
        st.integers(min_value=0, max_value=10**6),
    )


# -- examples ----------------------------------------------------------------


def test_kernel_of_zero_matrix_is_everything():
    k = kernel(Matrix.zero(QQ, 2, 3))
    assert k.dim == 3
    assert k == Subspace.full(QQ, 3)


def test_kernel_of_identity_is_zero():
    assert kernel(Matrix.identity(QQ, 3)).dim == 0


def test_kernel_of_group_algebra_multiplication():
    # m for k[Z/2] on basis e⊗e, e⊗u, u⊗e, u⊗u
    one = Fraction(1)
    m = Matrix(QQ, 2, 4, {(0, 0): one, (1, 1): one, (1, 2): one, (0, 3): one})
    k = kernel(m)
    assert k.basis == (
        (Fraction(1), Fraction(0), Fraction(0), Fraction(-1)),   # e⊗e − u⊗u
        (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),   # e⊗u − u⊗e
    )
    # independent oracle: sympy nullspace spans the same space
    sympy = pytest.importorskip("sympy")
    ns = sympy.Matrix([[1, 0, 0, 1], [0, 1, 1, 0]]).nullspace()
    assert len(ns) == k.dim
    for v in ns:
        vec = tuple(Fraction(x.p, x.q) for x in v)
        assert membership(vec, k)
    assert membership((Fraction(0), Fraction(1), Fraction(-1), Fraction(0)), k)


def test_quotient_examples():
    q = quotient(3, Subspace.zero_space(QQ, 3))
    assert q.projection == Matrix.identity(QQ, 3)
    q2 = quotient(3, Subspace.full(QQ, 3))
    assert q2.dim == 0
    one_dim = Subspace.from_spanning(QQ, 2, [(Fraction(1), Fraction(-1))])
    q3 = quotient(2, one_dim)
    assert q3.dim == 1
    assert q3.projection.rank() == 1
    with pytest.raises(DimensionMismatch):
        quotient(5, one_dim)


def test_tensor_and_flip_examples():
    assert tensor(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)
    # flip sends e⊗u (index 1) to u⊗e (index 2) in the 2x2 tensor square
    fl = flip(QQ, 2, 2)
    v = [Fraction(0)] * 4
    v[1] = Fraction(1)
    assert fl.apply(tuple(v)) == (Fraction(0), Fraction(0), Fraction(1), Fraction(0))


def test_inverse_and_solve():
    m = Matrix.from_rows(QQ, [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])
    inv = m.inverse()
    assert m @ inv == Matrix.identity(QQ, 2)
    assert solve(m, (Fraction(3), Fraction(2))) == (Fraction(1), Fraction(1))
    with pytest.raises(SingularMatrix):
        Matrix.from_rows(QQ, [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]).inverse()


def test_prime_field_parse_and_inverse():
    f = PrimeField(7)
    assert f.parse("3/2") == f.mul(3, f.inv(2))
    assert f.mul(f.parse("3/2"), 2) == 3
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        f.parse(1.5)


# -- properties ----------------------------------------------------------------


@settings(max_examples=120, deadline=None)
@given(matrix_strategy())
def test_rank_nullity_and_exact_kernel(m):
    k = kernel(m)
    assert m.rank() + k.dim == m.cols
    zero = (m.field.zero(),) * m.rows
    for v in k.basis:
        assert m.apply(v) == zero


@settings(max_examples=80, deadline=None)
@given(matrix_strategy(), st.integers(min_value=0, max_value=10**6))
def test_subspace_canonicity_under_respanning(m, seed):
    """Different spanning sets of the same space give bit-identical bases."""
    f = m.field
    rows = [m.row(i) for i in range(m.rows)]
    s1 = Subspace.from_spanning(f, m.cols, rows)
    rng = random.Random(seed)
    mixed = list(rows)
    rng.shuffle(mixed)
    # also throw in random combinations of the rows
    for _ in range(3):
        if not rows:
            break
        c = [f.from_int(rng.randint(-4, 4)) for _ in rows]
        combo = tuple(
            sum_scalars(f, [f.mul(ci, row[j]) for ci, row in zip(c, rows)])
            for j in range(m.cols))
        mixed.append(combo)
    s2 = Subspace.from_spanning(f, m.cols, mixed)
    assert s1 == s2
    assert s1.basis == s2.basis


def sum_scalars(f, xs):
    out = f.zero()
    for x in xs:
        out = f.add(out, x)
    return out


@st.composite
def matrix_pair_strategy(draw, max_dim=3):
    f = draw(field_strategy())
    rng = random.Random(draw(st.integers(min_value=0, max_value=10**6)))

    def rand_matrix():
        rows = rng.randint(0, max_dim)
        cols = rng.randint(0, max_dim)
        entries = {(i, j): f.from_int(rng.randint(-6, 6))
                   for i in range(rows) for j in range(cols) if rng.random() < 0.6}
        return Matrix(f, rows, cols, entries)

    a, b = rand_matrix(), rand_matrix()
    x = tuple(f.from_int(rng.randint(-4, 4)) for _ in range(a.cols))
    y = tuple(f.from_int(rng.randint(-4, 4)) for _ in range(b.cols))
    return a, b, x, y


@settings(max_examples=60, deadline=None)
@given(matrix_pair_strategy())
def test_tensor_compatible_with_vectors(data):
    a, b, x, y = data
    f = a.field
    lhs = tensor(a, b).apply(vec_kron(f, x, y))
    rhs = vec_kron(f, a.apply(x), b.apply(y))
    assert lhs == rhs


@settings(max_examples=80, deadline=None)
@given(matrix_strategy())
def test_quotient_laws(m):
    """projection ∘ section = id and projection kills exactly the kernel."""
    f = m.field
    k = kernel(m)
    q = quotient(m.cols, k)
    assert q.projection @ q.section == Matrix.identity(f, q.dim)
    for v in k.basis:
        assert all(x == f.zero() for x in q.projection.apply(v))
    assert q.projection.rank() == m.cols - k.dim
    assert kernel(q.projection) == k


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3),
       field_strategy())
def test_flip_is_involutive_swap(p, q, f):
    fl = flip(f, p, q)
    lf = flip(f, q, p)
    assert lf @ fl == Matrix.identity(f, p * q)
    for i in range(p):
        for j in range(q):
            v = vec_kron(f, unit_vec(f, p, i), unit_vec(f, q, j))
            assert fl.apply(v) == vec_kron(f, unit_vec(f, q, j), unit_vec(f, p, i))


def test_kernel_dimension_matches_bruteforce_over_f3():
    """Exhaustive solution count = p^(kernel dim), independent of RREF."""
    f = PrimeField(3)
    rng = random.Random(7)
    for _ in range(20):
        rows, cols = rng.randint(1, 3), rng.randint(1, 4)
        m = Matrix(f, rows, cols,
                   {(i, j): rng.randint(0, 2) for i in range(rows) for j in range(cols)})
        count = 0
        for idx in range(3 ** cols):
            v = []
            n = idx
            for _ in range(cols):
                v.append(n % 3)
                n //= 3
            if all(x == 0 for x in m.apply(tuple(v))):
                count += 1
        assert count == 3 ** kernel(m).dim


def test_image_and_membership():
    m = Matrix.from_rows(QQ, [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    im = image(m)
    assert im.dim == 1
    assert membership((Fraction(1), Fraction(2)), im)
    assert not membership((Fraction(1), Fraction(0)), im)


def test_storage_is_canonical_over_prime_fields():
    """Raw input through any constructor is stored in canonical residue
    form, so mathematically equal objects are bit-identical."""
    f = PrimeField(7)
    s1 = Subspace.from_spanning(f, 2, [(1, -1)])
    s2 = Subspace.from_spanning(f, 2, [(1, 6)])
    assert s1 == s2 and s1.basis == ((1, 6),)
    m1 = Matrix(f, 1, 2, {(0, 0): 8, (0, 1): -1})
    m2 = Matrix(f, 1, 2, {(0, 0): 1, (0, 1): 6})
    assert m1 == m2
    assert Matrix(f, 1, 1, {(0, 0): 7}).is_zero()
    with pytest.raises(ValueError):
        Matrix(f, 1, 1, {(0, 0): 0.5})


def test_storage_is_canonical_over_rationals():
    m = Matrix(QQ, 1, 1, {(0, 0): 3})
    assert m[(0, 0)] == Fraction(3)
    with pytest.raises(ValueError):
        Matrix(QQ, 1, 1, {(0, 0): 0.25})


def test_raw_residues_through_membership_and_solve():
    f = PrimeField(7)
    zero_sub = Subspace.zero_space(f, 2)
    assert membership((7, 14), zero_sub)          # ≡ (0, 0)
    line = Subspace.from_spanning(f, 2, [(1, 6)])
    assert membership((-1, 1), line)              # ≡ 6·(1, 6)
    assert line.coords((-1, 1)) == (6,)
    assert solve(Matrix.identity(f, 2), (-1, 9)) == (6, 2)
