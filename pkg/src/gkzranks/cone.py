"""Cone combinatorics of a pointed integer matrix.

Facet functionals and the face lattice of the cone spanned by the columns,
interiority tests, the homogeneous shape normalization (first row all ones,
first column e_1), and exact normalized volumes of lattice polytopes.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .errors import NotHomogeneous, NotPointed
from .intlin import (
    IntMatrix,
    as_matrix,
    hermite_form,
    in_rational_span,
    integer_rank,
    integer_row_solve,
    invert_unimodular,
    kernel_lattice,
    mat_mul,
    positive_functional,
    validate_matrix,
)


@dataclass(frozen=True)
class Cone:
    """Facet description of the column cone.

    facet_normals: primitive integer functionals h with h . x >= 0 on the cone,
    each vanishing on a facet.  extreme_ray_indices: columns generating the
    extreme rays (duplicates of the same ray are all listed).
    """

    matrix: IntMatrix
    facet_normals: tuple
    extreme_ray_indices: tuple


@dataclass(frozen=True)
class Face:
    """A face given by the set tau of column indices lying on it."""

    tau: tuple
    dim: int
    vanishing_facets: tuple


@dataclass(frozen=True)
class HomogeneousShape:
    """Unimodular row normalization: transform * input has first row all ones
    and the pivot column equal to e_1; b_matrix is the lower-right block."""

    transformed: IntMatrix
    transform: IntMatrix
    b_matrix: tuple
    pivot_column: int


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        v = tuple(x // g for x in v)
    return tuple(v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def facets(m):
    """Facet functionals and extreme rays of the column cone.

    Requires a pointed matrix of full row rank.  Brute force over
    (nrows - 1)-subsets of columns: every facet of a full-dimensional pointed
    cone is spanned by columns, so its normal shows up as the kernel of such
    a subset.
    """
    m = as_matrix(m)
    if positive_functional(m) is None:
        raise NotPointed("cone is not pointed")
    d1 = m.nrows
    cols = m.columns()
    if integer_rank(cols) != d1:
        raise ValueError("matrix must have full row rank")

    normals = set()
    if d1 == 1:
        # the only proper face is the apex; its functional is the orientation
        sign = 1 if cols[0][0] > 0 else -1
        normals.add((sign,))
    else:
        for subset in combinations(range(len(cols)), d1 - 1):
            chosen = [cols[j] for j in subset]
            if integer_rank(chosen) != d1 - 1:
                continue
            ker = kernel_lattice(IntMatrix.from_rows(chosen))
            h = _primitive(ker.vectors[0])
            vals = [_dot(h, c) for c in cols]
            if all(v >= 0 for v in vals):
                pass
            elif all(v <= 0 for v in vals):
                h = tuple(-x for x in h)
                vals = [-v for v in vals]
            else:
                continue
            # supporting hyperplane is a facet iff its columns span dim-1
            on = [cols[j] for j, v in enumerate(vals) if v == 0]
            if on and integer_rank(on) == d1 - 1:
                normals.add(h)
    normal_list = tuple(sorted(normals))

    extreme = []
    for j, c in enumerate(cols):
        vanishing = [h for h in normal_list if _dot(h, c) == 0]
        need = d1 - 1
        got = integer_rank(vanishing) if vanishing else 0
        if got == need:
            extreme.append(j)
    return Cone(matrix=m, facet_normals=normal_list, extreme_ray_indices=tuple(extreme))


def face_lattice(m):
    """All faces as column index sets, closed under intersection.

    Includes the apex (empty tau) and the full cone; ordered by
    (dimension, lexicographic tau).
    """
    m = as_matrix(m)
    cone = facets(m)
    cols = m.columns()
    full = frozenset(range(len(cols)))
    seeds = [full]
    for h in cone.facet_normals:
        seeds.append(frozenset(j for j in full if _dot(h, cols[j]) == 0))
    faces = set(seeds)
    work = list(seeds)
    while work:
        cur = work.pop()
        for other in list(faces):
            inter = cur & other
            if inter not in faces:
                faces.add(inter)
                work.append(inter)
    # a pointed cone always has the apex; intersection closure reaches it
    out = []
    for tau in faces:
        members = [cols[j] for j in sorted(tau)]
        dim = integer_rank(members) if members else 0
        vanishing = tuple(
            h for h in cone.facet_normals
            if all(_dot(h, cols[j]) == 0 for j in tau)
        )
        out.append(Face(tau=tuple(sorted(tau)), dim=dim, vanishing_facets=vanishing))
    out.sort(key=lambda f: (f.dim, f.tau))
    return out


def is_interior(m, alpha):
    """Whether alpha lies strictly inside the column cone (all facets > 0)."""
    m = as_matrix(m)
    cone = facets(m)
    return all(_dot(h, alpha) > 0 for h in cone.facet_normals)


def homogeneous_shape(m):
    """Normalize by a unimodular row transform to first row (1, ..., 1).

    The pivot column is then cleared to e_1 by elementary row operations
    (possible because every column has first entry 1 after the row step).
    Raises NotHomogeneous when (1, ..., 1) is not in the rational row span,
    or when it is rational-only so no unimodular normalization exists.
    """
    m = as_matrix(m)
    ones = tuple([1] * m.ncols)
    if not in_rational_span(m.entries, ones):
        raise NotHomogeneous("(1, ..., 1) is not in the row span")
    y = integer_row_solve(m, ones)
    if y is None:
        raise NotHomogeneous(
            "(1, ..., 1) lies in the rational row span only; "
            "no unimodular normalization (row lattice is not saturated)"
        )
    # complete the primitive row y to a unimodular matrix with first row y:
    # if u * y_col = e_1 then (u^T)^{-1} has first row y
    n = m.nrows
    col = IntMatrix.from_rows([[v] for v in y])
    u = hermite_form(col).left
    r = invert_unimodular(u.transpose())
    assert r.entries[0] == tuple(y)
    work = mat_mul(r.entries, m.entries)
    rmat = [list(row) for row in r.entries]
    for i in range(1, n):
        f = work[i][0]
        if f:
            work[i] = [a - f * b for a, b in zip(work[i], work[0])]
            rmat[i] = [a - f * b for a, b in zip(rmat[i], rmat[0])]
    transformed = IntMatrix(tuple(tuple(row) for row in work))
    b_matrix = tuple(tuple(row[1:]) for row in transformed.entries[1:])
    return HomogeneousShape(
        transformed=transformed,
        transform=IntMatrix(tuple(tuple(row) for row in rmat)),
        b_matrix=b_matrix,
        pivot_column=0,
    )


def polytope_facets(points):
    """Supporting hyperplanes (h, c) with h . p <= c for all points, each
    containing a full-dimensional face of the hull.  Points must affinely
    span the ambient space."""
    dim = len(points[0])
    pts = [tuple(p) for p in points]
    if dim == 0:
        return []
    found = {}
    base = pts[0]
    for subset in combinations(range(len(pts)), dim):
        rel = [tuple(a - b for a, b in zip(pts[j], pts[subset[0]])) for j in subset[1:]]
        if rel and integer_rank(rel) != dim - 1:
            continue
        if dim == 1:
            h = (1,)
        else:
            ker = kernel_lattice(IntMatrix.from_rows(rel)) if rel else None
            h = _primitive(ker.vectors[0])
        c = _dot(h, pts[subset[0]])
        vals = [_dot(h, p) for p in pts]
        if all(v <= c for v in vals):
            pass
        elif all(v >= c for v in vals):
            h = tuple(-x for x in h)
            c = -c
            vals = [-v for v in vals]
        else:
            continue
        on = [pts[j] for j, v in enumerate(vals) if v == c]
        rel_on = [tuple(a - b for a, b in zip(p, on[0])) for p in on[1:]]
        if len(on) >= dim and (dim == 1 or integer_rank(rel_on) == dim - 1):
            found[(h, c)] = tuple(j for j, v in enumerate(vals) if v == c)
    return sorted((h, c, idx) for (h, c), idx in found.items())


def _project_to_hyperplane(points, h):
    """Exact coordinates of points of the affine hyperplane h . x = c in a
    lattice basis of the direction space { x : h . x = 0 }."""
    hmat = IntMatrix.from_rows([h])
    basis = kernel_lattice(hmat).vectors
    base = points[0]
    out = []
    for p in points:
        diff = tuple(a - b for a, b in zip(p, base))
        sol = integer_row_solve(IntMatrix.from_rows(basis), diff)
        assert sol is not None, "hyperplane point not in direction lattice"
        out.append(sol)
    return out


def normalized_volume(points):
    """Lattice-normalized volume of conv(points) in its ambient space.

    Zero when the hull is lower-dimensional.  Computed by the pyramid
    recursion: pick an apex, then sum lattice-height times facet volume over
    the facets avoiding the apex, recursing into facet hyperplanes.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    dim = len(pts[0])
    if dim == 0:
        return 0
    rel = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
    if not rel or integer_rank(rel) < dim:
        return 0
    if dim == 1:
        vals = [p[0] for p in pts]
        return max(vals) - min(vals)
    apex = pts[0]
    total = 0
    for h, c, idx in polytope_facets(pts):
        height = c - _dot(h, apex)
        if height == 0:
            continue
        face_pts = [pts[j] for j in idx]
        total += abs(height) * normalized_volume(_project_to_hyperplane(face_pts, h))
    return total


def cone_volume(m):
    """Normalized volume of conv({0} union columns); the generic holonomic
    rank of the associated hypergeometric system at desk scale."""
    m = as_matrix(m)
    pts = [tuple([0] * m.nrows)] + m.columns()
    return normalized_volume(pts)
