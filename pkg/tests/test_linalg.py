import random

import pytest

from ffdist.field import field_make, SquareClass
from ffdist.linalg import (
    MatrixF, DiagForm, rank, gram_rank_law, diagonalize_form,
    form_equivalent, isometry_to_standard, solve, inverse,
    NotSymmetric, Degenerate, DimensionMismatch, FieldMismatch, NotIsometric,
)


def i_plus_j(f, size):
    two = f.add(f.one, f.one)
    return MatrixF(f, [[two if i == j else f.one for j in range(size)]
                       for i in range(size)])


def random_matrix(f, n, rng):
    els = list(f.elements())
    return MatrixF(f, [[rng.choice(els) for _ in range(n)] for _ in range(n)])


def random_symmetric(f, n, rng):
    els = list(f.elements())
    e = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e[i][j] = e[j][i] = rng.choice(els)
    return MatrixF(f, e)


def random_invertible(f, n, rng):
    while True:
        m = random_matrix(f, n, rng)
        if rank(m) == n:
            return m


def test_rank_examples():
    f3 = field_make(3)
    # size-2 I+J over F_3: det = 3 = 0 but matrix nonzero, so rank 1
    assert rank(i_plus_j(f3, 2)) == 1
    assert rank(i_plus_j(f3, 4)) == 4
    for d in (1, 3, 5):
        assert rank(MatrixF.identity(f3, d)) == d
    assert rank(MatrixF.zeros(f3, 3, 3)) == 0


def test_rank_rectangular():
    f5 = field_make(5)
    m = MatrixF(f5, [[1, 2, 3], [2, 4, 2]])
    assert rank(m) == 2
    m2 = MatrixF(f5, [[1, 2, 3], [2, 4, 1]])  # second row = 2 * first mod 5
    assert rank(m2) == 1


def test_gram_rank_law_examples():
    f3, f5 = field_make(3), field_make(5)
    assert gram_rank_law(3, f3) == 1
    assert gram_rank_law(6, f3) == 4
    assert gram_rank_law(7, f5) == 6


def test_gram_rank_law_closed_form_grid():
    for p in (3, 5, 7, 11):
        f = field_make(p)
        for n in range(2, 41):
            expected = n - 2 if n % p == 0 else n - 1
            assert gram_rank_law(n, f) == expected


def test_rank_invariance():
    rng = random.Random(7)
    for f in (field_make(3), field_make(5), field_make(3, 2)):
        for _ in range(20):
            n = rng.randint(1, 4)
            m = random_matrix(f, n, rng)
            r = rank(m)
            perm = list(range(n))
            rng.shuffle(perm)
            assert rank(MatrixF(f, [m.entries[i] for i in perm])) == r
            t = random_invertible(f, n, rng)
            assert rank(t.mul(m)) == r
            assert rank(m.mul(t)) == r


def test_diagonalize_already_diagonal():
    f5 = field_make(5)
    g = MatrixF(f5, [[2, 0], [0, 3]])
    d = diagonalize_form(g)
    assert d.entries == [2, 3]
    assert d.basis == MatrixF.identity(f5, 2)


def test_diagonalize_hyperbolic_plane():
    f5 = field_make(5)
    g = MatrixF(f5, [[0, 1], [1, 0]])
    d = diagonalize_form(g)
    b = d.basis
    prod = b.transpose().mul(g).mul(b)
    assert prod == MatrixF(f5, [[d.entries[0], 0], [0, d.entries[1]]])
    # discriminant of the hyperbolic plane is the class of -1
    assert f5.square_class(d.determinant()) == f5.square_class(f5.neg(f5.one))


def test_diagonalize_hyperplane_gram():
    # Gram of the basis {e1-e2, e2-e3, e3-e4} of the sum-zero
    # hyperplane in F_5^4; integer determinant 4, a square mod 5
    f5 = field_make(5)
    g = MatrixF(f5, [[2, 4, 0], [4, 2, 4], [0, 4, 2]])
    d = diagonalize_form(g)
    assert f5.square_class(d.determinant()) is SquareClass.SQUARE


def test_diagonalize_random_congruence():
    rng = random.Random(99)
    for f in (field_make(3), field_make(5), field_make(7), field_make(3, 2)):
        for _ in range(25):
            n = rng.randint(1, 4)
            g = random_symmetric(f, n, rng)
            d = diagonalize_form(g)
            b = d.basis
            assert rank(b) == n  # invertible basis
            prod = b.transpose().mul(g).mul(b)
            expect = MatrixF(f, [[d.entries[i] if i == j else f.zero
                                  for j in range(n)] for i in range(n)])
            assert prod == expect


def test_diagonalize_rejects_asymmetric():
    f3 = field_make(3)
    with pytest.raises(NotSymmetric):
        diagonalize_form(MatrixF(f3, [[0, 1], [2, 0]]))


def test_form_equivalent():
    f5 = field_make(5)
    i2 = MatrixF.identity(f5, 2)

    def diag(entries):
        return DiagForm(f5, entries, i2)

    assert form_equivalent(diag([1, 1]), diag([4, 4]))
    assert not form_equivalent(DiagForm(f5, [1], i2), DiagForm(f5, [2], i2))
    # W-form of F_5^4 has square discriminant, so it matches diag(1,1,1)
    g = MatrixF(f5, [[2, 4, 0], [4, 2, 4], [0, 4, 2]])
    d = diagonalize_form(g)
    assert form_equivalent(d, DiagForm(f5, [1, 1, 1], MatrixF.identity(f5, 3)))


def test_form_equivalent_errors():
    f5, f3 = field_make(5), field_make(3)
    i1 = MatrixF.identity(f5, 1)
    with pytest.raises(Degenerate):
        form_equivalent(DiagForm(f5, [0], i1), DiagForm(f5, [1], i1))
    with pytest.raises(DimensionMismatch):
        form_equivalent(DiagForm(f5, [1], i1), DiagForm(f5, [1, 1], i1))
    with pytest.raises(FieldMismatch):
        form_equivalent(DiagForm(f5, [1], i1),
                        DiagForm(f3, [1], MatrixF.identity(f3, 1)))


def test_isometry_identity():
    f5 = field_make(5)
    g = MatrixF.identity(f5, 3)
    assert isometry_to_standard(g) == g


def test_isometry_hyperplane_form_f5():
    f5 = field_make(5)
    g = MatrixF(f5, [[2, 4, 0], [4, 2, 4], [0, 4, 2]])
    t = isometry_to_standard(g)
    assert t.transpose().mul(g).mul(t) == MatrixF.identity(f5, 3)


def test_isometry_obstruction_f3():
    # tridiagonal Gram of the sum-zero hyperplane basis in F_3^5:
    # integer determinant 5 = 2 mod 3, a nonsquare
    f3 = field_make(3)
    g = MatrixF(f3, [[2, 2, 0, 0], [2, 2, 2, 0], [0, 2, 2, 2], [0, 0, 2, 2]])
    with pytest.raises(NotIsometric) as exc:
        isometry_to_standard(g)
    assert exc.value.witness == 2
    assert exc.value.witness_class is SquareClass.NONSQUARE


def test_isometry_random_success_or_obstruction():
    rng = random.Random(4242)
    for f in (field_make(3), field_make(5), field_make(7)):
        for _ in range(30):
            n = rng.randint(1, 4)
            g = random_symmetric(f, n, rng)
            d = diagonalize_form(g)
            if d.is_degenerate():
                with pytest.raises(Degenerate):
                    isometry_to_standard(g)
                continue
            try:
                t = isometry_to_standard(g)
            except NotIsometric:
                assert f.square_class(d.determinant()) is SquareClass.NONSQUARE
            else:
                assert t.transpose().mul(g).mul(t) == MatrixF.identity(f, n)
                assert f.square_class(d.determinant()) is SquareClass.SQUARE


def test_solve_and_inverse():
    rng = random.Random(5)
    f7 = field_make(7)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = random_invertible(f7, n, rng)
        x = [rng.randrange(7) for _ in range(n)]
        rhs = [sum(m.entries[i][j] * x[j] for j in range(n)) % 7
               for i in range(n)]
        assert solve(m, rhs) == x
        assert m.mul(inverse(m)) == MatrixF.identity(f7, n)


def test_solve_inconsistent():
    f3 = field_make(3)
    m = MatrixF(f3, [[1, 1], [1, 1]])
    assert solve(m, [0, 1]) is None
