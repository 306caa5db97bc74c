"""Integer Smith normal form and Laurent minors."""

import random

import pytest

from alexarr.ringkit import (
    IntMatrix,
    LaurentMatrix,
    LaurentPolynomial,
    minors,
    smith_normal_form_int,
    unit_normalize,
)
from alexarr.ringkit.matrices import _det_int


def test_snf_classic_example():
    d, u, v = smith_normal_form_int(IntMatrix([[2, 0], [0, 3]]))
    assert d.diagonal() == [1, 6]


def test_snf_zero_and_identity():
    z = IntMatrix.zero(2, 3)
    d, u, v = smith_normal_form_int(z)
    assert d.entries == z.entries
    i3 = IntMatrix.identity(3)
    d, u, v = smith_normal_form_int(i3)
    assert d.entries == i3.entries


def _is_unimodular(m: IntMatrix) -> bool:
    return abs(_det_int(m.entries)) == 1


def test_snf_random_reconstruction_and_chain():
    rng = random.Random(97)
    for _ in range(120):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = IntMatrix(
            [[rng.randint(-12, 12) for _ in range(cols)] for _ in range(rows)]
        )
        d, u, v = smith_normal_form_int(m)
        assert (u @ m @ v).entries == d.entries
        assert _is_unimodular(u)
        assert _is_unimodular(v)
        diag = d.diagonal()
        for i, x in enumerate(diag):
            assert x >= 0
            if i + 1 < len(diag):
                nxt = diag[i + 1]
                if x == 0:
                    assert nxt == 0
                else:
                    assert nxt % x == 0
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert d.entries[i][j] == 0
        if rows == cols:
            prod = 1
            for x in diag:
                prod *= x
            assert abs(_det_int(m.entries)) == prod


# ----------------------------------------------------------------------
# Laurent minors


def _vars3():
    return [LaurentPolynomial.variable(i, 3) for i in range(3)]


def test_minors_of_column_are_entries():
    t1, t2 = (LaurentPolynomial.variable(i, 2) for i in range(2))
    m = LaurentMatrix([[1 - t2], [t1 - 1]], 2)
    assert minors(m, 1) == [1 - t2, t1 - 1]


def test_minor_of_diagonal_is_product():
    t1, t2 = (LaurentPolynomial.variable(i, 2) for i in range(2))
    z = LaurentPolynomial.zero(2)
    m = LaurentMatrix([[t1, z], [z, t2 - 1]], 2)
    assert minors(m, 2) == [t1 * (t2 - 1)]


def test_minors_of_central_commutator_matrix():
    # up to sign these are the three 2x2 subdeterminants, in row-set then
    # column-set lexicographic order
    t1, t2, t3 = _vars3()
    z = LaurentPolynomial.zero(3)
    m = LaurentMatrix([[1 - t3, z], [z, 1 - t3], [t1 - 1, t2 - 1]], 3)
    got = minors(m, 2)
    expected = [
        (1 - t3) * (1 - t3),
        (1 - t3) * (t2 - 1),
        -((1 - t3) * (t1 - 1)),
    ]
    assert len(got) == 3
    for g, e in zip(got, expected):
        assert g == e or g == -e
        assert unit_normalize(g) == unit_normalize(e)


def test_minor_size_out_of_range():
    t1 = LaurentPolynomial.variable(0, 1)
    m = LaurentMatrix([[t1]], 1)
    with pytest.raises(ValueError):
        minors(m, 2)
    with pytest.raises(ValueError):
        minors(m, 0)


def test_laurent_determinant_matches_permanent_expansion():
    # cross-check the memoized cofactor expansion against an independent
    # Leibniz-formula evaluation on random small matrices
    from itertools import permutations

    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 4)
        entries = []
        for _ in range(n):
            row = []
            for _ in range(n):
                terms = {}
                for _ in range(rng.randint(0, 2)):
                    e = tuple(rng.randint(-1, 2) for _ in range(2))
                    terms[e] = terms.get(e, 0) + rng.randint(-3, 3)
                row.append(LaurentPolynomial(2, terms))
            entries.append(row)
        m = LaurentMatrix(entries, 2)
        acc = LaurentPolynomial.zero(2)
        for perm in permutations(range(n)):
            sign = 1
            seen = [False] * n
            # count inversions for the signature
            inv = sum(
                1
                for i in range(n)
                for j in range(i + 1, n)
                if perm[i] > perm[j]
            )
            sign = -1 if inv % 2 else 1
            term = LaurentPolynomial.one(2)
            for i in range(n):
                term = term * entries[i][perm[i]]
            acc = acc + term if sign > 0 else acc - term
        assert m.determinant() == acc
