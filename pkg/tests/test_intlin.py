import random
from fractions import Fraction

from gkzranks.intlin import (
    IntMatrix,
    fm_solve,
    hermite_form,
    in_rational_span,
    integer_rank,
    integer_row_solve,
    invert_unimodular,
    kernel_lattice,
    mat_mul,
    positive_functional,
    rational_rank,
    smith_form,
    validate_matrix,
    xgcd,
)

A1 = IntMatrix.from_rows([[1, 1, 1, 1], [0, 1, 3, 4]])
A2 = IntMatrix.from_rows([[2, 1, 0, 1, 0], [0, 1, 1, 0, 1], [0, 0, 0, 1, 1]])
A3 = IntMatrix.from_rows([[1, 1, 1, 1], [0, 1, 2, 3]])


def det(rows):
    # independent exact determinant for unimodularity checks
    mat = [[Fraction(x) for x in r] for r in rows]
    n = len(mat)
    sign = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            sign = -sign
        for r in range(col + 1, n):
            f = mat[r][col] / mat[col][col]
            mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    out = Fraction(sign)
    for i in range(n):
        out *= mat[i][i]
    return out


def in_lattice(basis, v):
    if not basis.vectors:
        return all(x == 0 for x in v)
    return integer_row_solve(IntMatrix.from_rows(basis.vectors), v) is not None


def test_xgcd():
    for a, b in [(12, 18), (-4, 6), (0, 0), (0, -5), (37, 1)]:
        g, x, y = xgcd(a, b)
        assert g >= 0
        assert x * a + y * b == g
    assert xgcd(12, 18)[0] == 6


def test_hermite_small():
    m = IntMatrix.from_rows([[2, 4], [1, 3]])
    res = hermite_form(m)
    assert res.matrix.entries[0][0] == 1
    assert res.rank == 2
    assert mat_mul(res.left.entries, m.entries) == [list(r) for r in res.matrix.entries]
    # frozen expected form: pivots 1 and 2, entry above second pivot reduced
    assert res.matrix.entries == ((1, 1), (0, 2))


def test_hermite_shape_invariants():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randrange(1, 5)
        c = rng.randrange(1, 5)
        m = IntMatrix.from_rows(
            [[rng.randrange(-6, 7) for _ in range(c)] for _ in range(n)]
        )
        res = hermite_form(m)
        assert mat_mul(res.left.entries, m.entries) == [
            list(r) for r in res.matrix.entries
        ]
        assert det(res.left.entries) in (1, -1)
        h = res.matrix.entries
        for i, col in enumerate(res.pivots):
            assert h[i][col] > 0
            for r in range(i):
                assert 0 <= h[r][col] < h[i][col]
            for r in range(i + 1, n):
                assert h[r][col] == 0
        for r in range(res.rank, n):
            assert all(x == 0 for x in h[r])


def test_smith_divisors():
    res = smith_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert res.divisors == (1, 6)


def test_smith_invariants():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randrange(1, 5)
        c = rng.randrange(1, 5)
        m = IntMatrix.from_rows(
            [[rng.randrange(-6, 7) for _ in range(c)] for _ in range(n)]
        )
        res = smith_form(m)
        prod = mat_mul(mat_mul(res.left.entries, m.entries), res.right.entries)
        assert prod == [list(r) for r in res.matrix.entries]
        assert det(res.left.entries) in (1, -1)
        assert det(res.right.entries) in (1, -1)
        for i in range(len(res.divisors) - 1):
            assert res.divisors[i] > 0
            assert res.divisors[i + 1] % res.divisors[i] == 0
        s = res.matrix.entries
        for i in range(n):
            for j in range(c):
                if i != j:
                    assert s[i][j] == 0


def test_kernel_a1():
    basis = kernel_lattice(A1)
    assert len(basis.vectors) == 2
    for v in basis.vectors:
        assert A1.mul_vec(v) == (0, 0)
    assert in_lattice(basis, (1, -1, -1, 1))


def test_kernel_single_row():
    basis = kernel_lattice(IntMatrix.from_rows([[1, 1]]))
    assert len(basis.vectors) == 1
    v = basis.vectors[0]
    assert sorted(v) == [-1, 1]


def test_kernel_saturated():
    # kernel of [[2, 4]] must contain the primitive (2, -1), not only (4, -2)
    basis = kernel_lattice(IntMatrix.from_rows([[2, 4]]))
    assert in_lattice(basis, (2, -1))


def test_kernel_random():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randrange(1, 4)
        c = rng.randrange(1, 6)
        m = IntMatrix.from_rows(
            [[rng.randrange(-5, 6) for _ in range(c)] for _ in range(n)]
        )
        basis = kernel_lattice(m)
        for v in basis.vectors:
            assert all(x == 0 for x in m.mul_vec(v))
        assert len(basis.vectors) == c - hermite_form(m).rank
        if basis.vectors:
            assert integer_rank(basis.vectors) == len(basis.vectors)


def test_validate_a1():
    flags = validate_matrix(A1)
    assert flags.pointed and flags.full_rank and flags.minors_gcd_one
    assert flags.homogeneous
    w = flags.witness
    for col in A1.columns():
        assert sum(a * b for a, b in zip(w, col)) >= 1


def test_validate_a2():
    flags = validate_matrix(A2)
    assert flags.pointed and flags.full_rank and flags.minors_gcd_one
    assert not flags.homogeneous
    w = flags.witness
    for col in A2.columns():
        assert sum(a * b for a, b in zip(w, col)) >= 1


def test_validate_a3():
    flags = validate_matrix(A3)
    assert flags.pointed and flags.full_rank and flags.minors_gcd_one
    assert flags.homogeneous


def test_validate_negatives():
    assert not validate_matrix(IntMatrix.from_rows([[1, -1]])).pointed
    assert not validate_matrix(IntMatrix.from_rows([[1, 1], [1, 1]])).full_rank
    assert not validate_matrix(IntMatrix.from_rows([[2, 0], [0, 1]])).minors_gcd_one
    assert positive_functional(IntMatrix.from_rows([[1, 0], [0, 1]])) is not None
    # 0 column kills pointedness
    assert positive_functional(IntMatrix.from_rows([[1, 0], [1, 0]])) is None


def test_fm_feasible_point_satisfies_system():
    rows = [((1, 0), 1), ((0, 1), 1), ((-1, -1), -5)]
    res = fm_solve(rows)
    assert res.feasible
    for coeffs, rhs in rows:
        assert sum(c * x for c, x in zip(coeffs, res.point)) >= rhs


def test_fm_infeasible_certificate():
    rows = [((1, 1), 3), ((-1, -1), -2)]
    res = fm_solve(rows)
    assert not res.feasible
    lam = res.certificate
    assert all(v >= 0 for v in lam)
    for j in range(2):
        assert sum(l * rows[i][0][j] for i, l in enumerate(lam)) == 0
    assert sum(l * rows[i][1] for i, l in enumerate(lam)) > 0


def test_fm_random_certificates():
    rng = random.Random(5)
    for _ in range(80):
        nv = rng.randrange(1, 4)
        nr = rng.randrange(1, 6)
        rows = [
            (tuple(rng.randrange(-4, 5) for _ in range(nv)), rng.randrange(-4, 5))
            for _ in range(nr)
        ]
        res = fm_solve(rows)
        if res.feasible:
            for coeffs, rhs in rows:
                assert sum(c * x for c, x in zip(coeffs, res.point)) >= rhs
        else:
            lam = res.certificate
            assert all(v >= 0 for v in lam)
            for j in range(nv):
                assert sum(l * rows[i][0][j] for i, l in enumerate(lam)) == 0
            assert sum(l * rows[i][1] for i, l in enumerate(lam)) > 0


def test_integer_row_solve():
    y = integer_row_solve(A1, (1, 1, 1, 1))
    assert y is not None
    prod = tuple(
        sum(y[i] * A1.entries[i][j] for i in range(2)) for j in range(4)
    )
    assert prod == (1, 1, 1, 1)
    # homogeneous over Q but not over Z
    assert integer_row_solve(IntMatrix.from_rows([[2, 2], [0, 1]]), (1, 1)) is None


def test_invert_unimodular():
    m = IntMatrix.from_rows([[1, 2], [0, 1]])
    inv = invert_unimodular(m)
    assert mat_mul(m.entries, inv.entries) == [[1, 0], [0, 1]]


def test_ranks_agree():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randrange(1, 5)
        c = rng.randrange(1, 5)
        rows = [[rng.randrange(-6, 7) for _ in range(c)] for _ in range(n)]
        assert integer_rank(rows) == rational_rank(rows)
        assert integer_rank(rows) == hermite_form(IntMatrix.from_rows(rows)).rank


def test_rational_span():
    assert in_rational_span([(2, 2), (0, 1)], (1, 1))
    assert not in_rational_span([(1, 0, 0)], (0, 1, 0))
    assert in_rational_span([], (0, 0))
    assert not in_rational_span([], (1, 0))


def test_column_sum():
    assert A1.column_sum() == (4, 8)
    assert A3.column_sum() == (4, 6)
