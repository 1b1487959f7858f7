"""Exact integer and rational linear algebra on small dense matrices.

Everything downstream (cones, semigroup membership, cohomology ranks) sits on
the routines here: row-style Hermite and Smith normal forms with unimodular
transforms, saturated kernel lattices, rational rank, and Fourier-Motzkin
elimination with Farkas infeasibility certificates.  Matrices are tuples of
row tuples of Python ints; nothing here ever rounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotPointed


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; hashable so per-matrix caches can key on it."""

    entries: tuple

    @staticmethod
    def from_rows(rows):
        ent = tuple(tuple(int(x) for x in row) for row in rows)
        if not ent:
            raise ValueError("matrix needs at least one row")
        width = len(ent[0])
        if width == 0 or any(len(r) != width for r in ent):
            raise ValueError("rows must be nonempty and of equal length")
        return IntMatrix(ent)

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0])

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def column_sum(self):
        """Sum of all columns (the degree of the product of all variables)."""
        return tuple(sum(r) for r in self.entries)

    def mul_vec(self, u):
        if len(u) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, u)) for row in self.entries)

    def transpose(self):
        return IntMatrix(tuple(zip(*self.entries)))


def as_matrix(m):
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


def mat_mul(a, b):
    """Product of two matrices given as sequences of rows."""
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


@dataclass(frozen=True)
class LatticeBasis:
    """Basis of a sublattice of Z^ambient; rows of ``vectors`` are the basis."""

    ambient: int
    vectors: tuple


@dataclass(frozen=True)
class NormalFormResult:
    """Normal form plus transforms.

    Hermite: left * input == matrix, right is None, divisors is None.
    Smith:   left * input * right == matrix, divisors = nonzero diagonal.
    """

    matrix: IntMatrix
    left: IntMatrix
    right: IntMatrix | None
    rank: int
    divisors: tuple | None
    pivots: tuple | None = None


def _combine_rows(rows, i, j, x, y, a, b):
    # (row_i, row_j) <- (x*row_i + y*row_j, -b*row_i + a*row_j); det = x*a + y*b = 1
    ri, rj = rows[i], rows[j]
    rows[i] = [x * p + y * q for p, q in zip(ri, rj)]
    rows[j] = [-b * p + a * q for p, q in zip(ri, rj)]


def hermite_form(m):
    """Row-style Hermite normal form.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), and left is unimodular with left * m == matrix.
    """
    m = as_matrix(m)
    h = [list(r) for r in m.entries]
    n, c = m.nrows, m.ncols
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    piv = 0
    pivots = []
    for col in range(c):
        if piv == n:
            break
        sel = None
        for r in range(piv, n):
            if h[r][col]:
                sel = r
                break
        if sel is None:
            continue
        if sel != piv:
            h[piv], h[sel] = h[sel], h[piv]
            u[piv], u[sel] = u[sel], u[piv]
        for r in range(piv + 1, n):
            if h[r][col] == 0:
                continue
            g, x, y = xgcd(h[piv][col], h[r][col])
            a, b = h[piv][col] // g, h[r][col] // g
            _combine_rows(h, piv, r, x, y, a, b)
            _combine_rows(u, piv, r, x, y, a, b)
        if h[piv][col] < 0:
            h[piv] = [-v for v in h[piv]]
            u[piv] = [-v for v in u[piv]]
        for r in range(piv):
            q = h[r][col] // h[piv][col]
            if q:
                h[r] = [p - q * v for p, v in zip(h[r], h[piv])]
                u[r] = [p - q * v for p, v in zip(u[r], u[piv])]
        pivots.append(col)
        piv += 1
    return NormalFormResult(
        matrix=IntMatrix(tuple(tuple(r) for r in h)),
        left=IntMatrix(tuple(tuple(r) for r in u)),
        right=None,
        rank=piv,
        divisors=None,
        pivots=tuple(pivots),
    )


def smith_form(m):
    """Smith normal form with transforms: left * m * right == matrix.

    Diagonal entries are nonnegative and each divides the next.
    """
    m = as_matrix(m)
    d = [list(r) for r in m.entries]
    n, c = m.nrows, m.ncols
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    q = [[int(i == j) for j in range(c)] for i in range(c)]

    def clear_at(k):
        # Alternate row and column clearing until the cross at (k, k) is clean.
        # When the pivot divides the offender, plain elimination keeps the pivot
        # row/column fixed; otherwise the gcd combination strictly shrinks the
        # pivot, so the loop terminates.
        while True:
            dirty = False
            for r in range(k + 1, n):
                if d[r][k]:
                    dirty = True
                    if d[k][k] and d[r][k] % d[k][k] == 0:
                        f = d[r][k] // d[k][k]
                        d[r] = [v - f * w for v, w in zip(d[r], d[k])]
                        p[r] = [v - f * w for v, w in zip(p[r], p[k])]
                    else:
                        g, x, y = xgcd(d[k][k], d[r][k])
                        a, b = d[k][k] // g, d[r][k] // g
                        _combine_rows(d, k, r, x, y, a, b)
                        _combine_rows(p, k, r, x, y, a, b)
            for s in range(k + 1, c):
                if d[k][s]:
                    dirty = True
                    if d[k][k] and d[k][s] % d[k][k] == 0:
                        f = d[k][s] // d[k][k]
                        for row in d:
                            row[s] -= f * row[k]
                        for row in q:
                            row[s] -= f * row[k]
                    else:
                        g, x, y = xgcd(d[k][k], d[k][s])
                        a, b = d[k][k] // g, d[k][s] // g
                        # same unimodular combination acting on columns k and s
                        for row in d:
                            vk, vs = row[k], row[s]
                            row[k] = x * vk + y * vs
                            row[s] = -b * vk + a * vs
                        for row in q:
                            vk, vs = row[k], row[s]
                            row[k] = x * vk + y * vs
                            row[s] = -b * vk + a * vs
            if not dirty:
                return

    k = 0
    while k < min(n, c):
        found = None
        for i in range(k, n):
            for j in range(k, c):
                if d[i][j]:
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            break
        i, j = found
        if i != k:
            d[k], d[i] = d[i], d[k]
            p[k], p[i] = p[i], p[k]
        if j != k:
            for row in d:
                row[k], row[j] = row[j], row[k]
            for row in q:
                row[k], row[j] = row[j], row[k]
        clear_at(k)
        k += 1
    rank = k

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = d[i][i], d[i + 1][i + 1]
            if b % a != 0:
                for row in d:
                    row[i] += row[i + 1]
                for row in q:
                    row[i] += row[i + 1]
                clear_at(i)
                changed = True
    for i in range(rank):
        if d[i][i] < 0:
            d[i] = [-v for v in d[i]]
            p[i] = [-v for v in p[i]]

    divisors = tuple(d[i][i] for i in range(rank))
    return NormalFormResult(
        matrix=IntMatrix(tuple(tuple(r) for r in d)),
        left=IntMatrix(tuple(tuple(r) for r in p)),
        right=IntMatrix(tuple(tuple(r) for r in q)),
        rank=rank,
        divisors=divisors,
    )


def kernel_lattice(m):
    """Basis of the saturated lattice { v : m v = 0 }, v integer column.

    Rows of the Hermite transform of the transpose that map to zero rows form
    a basis; since the transform is unimodular the kernel comes out saturated
    (basis size = ncols - rank).
    """
    m = as_matrix(m)
    res = hermite_form(m.transpose())
    vectors = tuple(res.left.entries[i] for i in range(res.rank, m.ncols))
    return LatticeBasis(ambient=m.ncols, vectors=vectors)


def integer_rank(rows):
    """Rank of an integer matrix, fraction-free (Bareiss elimination)."""
    mat = [list(r) for r in rows]
    n = len(mat)
    c = len(mat[0]) if n else 0
    rank = 0
    prev = 1
    for col in range(c):
        if rank == n:
            break
        piv = None
        for r in range(rank, n):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        for r in range(rank + 1, n):
            f = mat[r][col]
            row = mat[r]
            top = mat[rank]
            for cc in range(col + 1, c):
                row[cc] = (row[cc] * pv - f * top[cc]) // prev
            row[col] = 0
        prev = pv
        rank += 1
    return rank


def rational_rank(rows):
    """Rank over Q of a list of row vectors with int or Fraction entries."""
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return 0
    cols = len(mat[0])
    rank = 0
    for col in range(cols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = Fraction(1, 1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def in_rational_span(vectors, target):
    """Whether target lies in the Q-span of the given row vectors."""
    vs = [list(v) for v in vectors]
    base = rational_rank(vs) if vs else 0
    return rational_rank(vs + [list(target)]) == base


def invert_unimodular(m):
    """Exact inverse of a unimodular integer matrix, returned over Z."""
    m = as_matrix(m)
    n = m.nrows
    if n != m.ncols:
        raise ValueError("square matrix required")
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m.entries)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [p - f * v for p, v in zip(a[r], a[col])]
    out = []
    for row in a:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(v) for v in vals))
    return IntMatrix(tuple(out))


def integer_row_solve(m, target):
    """Solve y * m == target over Z (y a row vector); None if no solution."""
    m = as_matrix(m)
    res = hermite_form(m)
    h = res.matrix.entries
    z = [0] * m.nrows
    target = list(target)
    pivots = list(res.pivots)
    # forward substitution against the echelon rows, exactness required
    for i, col in enumerate(pivots):
        acc = target[col] - sum(z[k] * h[k][col] for k in range(i))
        if acc % h[i][col] != 0:
            return None
        z[i] = acc // h[i][col]
    for col in range(m.ncols):
        if sum(z[k] * h[k][col] for k in range(len(pivots))) != target[col]:
            return None
    u = res.left.entries
    return tuple(sum(z[k] * u[k][j] for k in range(m.nrows)) for j in range(m.nrows))


@dataclass(frozen=True)
class FMResult:
    """Outcome of Fourier-Motzkin elimination on { x : coeffs . x >= rhs }."""

    feasible: bool
    point: tuple | None
    certificate: tuple | None


def fm_solve(rows):
    """Exact feasibility of a system of linear inequalities coeffs . x >= rhs.

    rows: sequence of (coeffs, rhs) with integer entries.  Feasible systems
    yield a rational point.  Infeasible systems yield a Farkas certificate:
    nonnegative rational multipliers lam over the input rows with
    sum lam_i * coeffs_i = 0 and sum lam_i * rhs_i > 0.
    """
    nvars = len(rows[0][0]) if rows else 0
    nrows = len(rows)
    # internal rows: (coeffs list, rhs, multipliers over the original system)
    system = []
    for i, (coeffs, rhs) in enumerate(rows):
        mult = [Fraction(0)] * nrows
        mult[i] = Fraction(1)
        system.append(([int(x) for x in coeffs], int(rhs), mult))

    def normalized(coeffs, rhs, mult):
        g = 0
        for v in coeffs:
            g = gcd(g, v)
        g = gcd(g, rhs)
        if g > 1:
            coeffs = [v // g for v in coeffs]
            rhs = rhs // g
            mult = [v / g for v in mult]
        return coeffs, rhs, mult

    def contradiction(sys_rows):
        for coeffs, rhs, mult in sys_rows:
            if all(v == 0 for v in coeffs) and rhs > 0:
                return mult
        return None

    levels = [system]
    for var in range(nvars - 1, -1, -1):
        bad = contradiction(levels[-1])
        if bad is not None:
            return FMResult(False, None, tuple(bad))
        pos, neg, zero = [], [], []
        for row in levels[-1]:
            cv = row[0][var]
            (pos if cv > 0 else neg if cv < 0 else zero).append(row)
        nxt = []
        seen = set()
        for coeffs, rhs, mult in zero:
            key = (tuple(coeffs[:var]), rhs)
            if key not in seen:
                seen.add(key)
                nxt.append((coeffs, rhs, mult))
        for pc, pr, pm in pos:
            for nc, nr, nm in neg:
                a, b = pc[var], -nc[var]
                coeffs = [b * x + a * y for x, y in zip(pc, nc)]
                rhs = b * pr + a * nr
                mult = [b * x + a * y for x, y in zip(pm, nm)]
                coeffs, rhs, mult = normalized(coeffs, rhs, mult)
                key = (tuple(coeffs[:var]), rhs)
                if key not in seen:
                    seen.add(key)
                    nxt.append((coeffs, rhs, mult))
        levels.append(nxt)

    bad = contradiction(levels[-1])
    if bad is not None:
        return FMResult(False, None, tuple(bad))

    # back-substitute, assigning variables in increasing index order
    point = [Fraction(0)] * nvars
    for var in range(nvars):
        sys_rows = levels[nvars - 1 - var]
        lower, upper = None, None
        for coeffs, rhs, _ in sys_rows:
            cv = coeffs[var]
            if cv == 0:
                continue
            rest = rhs - sum(coeffs[j] * point[j] for j in range(var))
            bound = Fraction(rest, cv)
            if cv > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is not None and upper is not None:
            point[var] = (lower + upper) / 2
        elif lower is not None:
            point[var] = lower
        elif upper is not None:
            point[var] = upper
    return FMResult(True, tuple(point), None)


@dataclass(frozen=True)
class MatrixFlags:
    """validate_matrix verdicts; witness is an integer functional w with
    w . a_j >= 1 for every column a_j when pointed."""

    pointed: bool
    witness: tuple | None
    full_rank: bool
    minors_gcd_one: bool
    homogeneous: bool


def positive_functional(m):
    """Integer w with w . a_j >= 1 for all columns, or None if not pointed."""
    m = as_matrix(m)
    rows = [(col, 1) for col in m.columns()]
    res = fm_solve(rows)
    if not res.feasible:
        return None
    scale = 1
    for v in res.point:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    return tuple(int(v * scale) for v in res.point)


def validate_matrix(m):
    """Pointedness (with witness), full rank, maximal-minor gcd, homogeneity."""
    m = as_matrix(m)
    herm = hermite_form(m)
    full_rank = herm.rank == m.nrows
    divisors = smith_form(m).divisors
    minors_gcd_one = full_rank and all(d == 1 for d in divisors)
    ones = [tuple([1] * m.ncols)]
    homogeneous = hermite_form(IntMatrix(m.entries + (ones[0],))).rank == herm.rank
    witness = positive_functional(m)
    return MatrixFlags(
        pointed=witness is not None,
        witness=witness,
        full_rank=full_rank,
        minors_gcd_one=minors_gcd_one,
        homogeneous=homogeneous,
    )


def require_pointed(m):
    w = positive_functional(m)
    if w is None:
        raise NotPointed("semigroup is not pointed: no strictly positive functional")
    return w
