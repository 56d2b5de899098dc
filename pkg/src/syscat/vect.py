"""Finite-dimensional vector spaces over Q with exact linear maps.

Matrices are tuples of row tuples of ``fractions.Fraction``, ``cod.dim`` rows
by ``dom.dim`` columns, so a map's columns are the images of the domain basis
vectors. Floats are rejected at construction; nothing in this module rounds.
Computed subobjects (kernels, images, pullback objects) come back with
generated ``k<i>`` coordinate names and reduced row-echelon bases, which makes
subspace equality a plain ``==`` on representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MismatchError

Vec = tuple[Fraction, ...]
Rows = tuple[Vec, ...]


def frac(x) -> Fraction:
    if isinstance(x, float):
        raise MismatchError("floating point values are not accepted; use int or 'p/q'")
    return Fraction(x)


def _kernel_names(n: int) -> tuple[str, ...]:
    return tuple(f"k{i}" for i in range(n))


@dataclass(frozen=True)
class VectObj:
    vars: tuple[str, ...]

    def __post_init__(self):
        names = tuple(str(v) for v in self.vars)
        if len(set(names)) != len(names):
            raise MismatchError(f"duplicate variable names in {names!r}")
        object.__setattr__(self, "vars", names)

    @property
    def dim(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise MismatchError(f"unknown variable {name!r}") from None


ZERO_SPACE = VectObj(())


@dataclass(frozen=True)
class LinMap:
    dom: VectObj
    cod: VectObj
    matrix: Rows

    def __post_init__(self):
        rows = tuple(tuple(frac(x) for x in row) for row in self.matrix)
        if len(rows) != self.cod.dim:
            raise MismatchError(
                f"matrix has {len(rows)} rows, codomain dimension is {self.cod.dim}"
            )
        for row in rows:
            if len(row) != self.dom.dim:
                raise MismatchError(
                    f"matrix row length {len(row)} != domain dimension {self.dom.dim}"
                )
        object.__setattr__(self, "matrix", rows)

    def apply(self, vec) -> Vec:
        v = tuple(frac(x) for x in vec)
        if len(v) != self.dom.dim:
            raise MismatchError("vector length does not match the domain dimension")
        return tuple(sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in self.matrix)

    def column(self, j: int) -> Vec:
        return tuple(row[j] for row in self.matrix)

    def to_json(self) -> dict:
        return {
            "dom": list(self.dom.vars),
            "cod": list(self.cod.vars),
            "matrix": [[str(x) for x in row] for row in self.matrix],
        }


# -- exact matrix kernels ---------------------------------------------------

def rref(rows, ncols: int) -> tuple[Rows, tuple[int, ...]]:
    """Reduced row-echelon form; returns the nonzero rows and pivot columns."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank_of(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def kernel_basis(rows, ncols: int) -> Rows:
    """Canonical basis of the right kernel (itself in row-echelon form)."""
    rr, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for fc in (c for c in range(ncols) if c not in pivot_set):
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rr[i][fc]
        basis.append(tuple(v))
    canon, _ = rref(basis, ncols)
    return canon


def solve_matrix(a_rows, ncols: int, b_rows, bcols: int):
    """One exact solution X of A @ X = B, or None if inconsistent.

    Free coordinates are set to zero, so the solution is unique exactly when A
    has full column rank (the only case the callers rely on).
    """
    aug = [tuple(ar) + tuple(br) for ar, br in zip(a_rows, b_rows)]
    rr, pivots = rref(aug, ncols + bcols)
    if any(p >= ncols for p in pivots):
        return None
    x = [[Fraction(0)] * bcols for _ in range(ncols)]
    for i, p in enumerate(pivots):
        for j in range(bcols):
            x[p][j] = rr[i][ncols + j]
    return tuple(tuple(row) for row in x)


def mat_mul(a_rows, b_rows, inner: int) -> Rows:
    # inner >= 1; callers special-case degenerate shapes.
    bt = list(zip(*b_rows))
    return tuple(
        tuple(sum((row[k] * col[k] for k in range(inner)), Fraction(0)) for col in bt)
        for row in a_rows
    )


def mat_identity(n: int) -> Rows:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def mat_transpose(rows, ncols: int) -> Rows:
    return tuple(tuple(row[j] for row in rows) for j in range(ncols))


# -- categorical operations -------------------------------------------------

def identity(obj: VectObj) -> LinMap:
    return LinMap(obj, obj, mat_identity(obj.dim))


def zero_map(dom: VectObj, cod: VectObj) -> LinMap:
    return LinMap(dom, cod, tuple(tuple(Fraction(0) for _ in range(dom.dim)) for _ in range(cod.dim)))


def compose(g: LinMap, f: LinMap) -> LinMap:
    if f.cod != g.dom:
        raise MismatchError("compose: codomain of f must equal domain of g")
    if f.cod.dim == 0 or f.dom.dim == 0 or g.cod.dim == 0:
        return zero_map(f.dom, g.cod)
    return LinMap(f.dom, g.cod, mat_mul(g.matrix, f.matrix, f.cod.dim))


def is_mono(f: LinMap) -> bool:
    return rank_of(f.matrix, f.dom.dim) == f.dom.dim


def is_epi(f: LinMap) -> bool:
    return rank_of(f.matrix, f.dom.dim) == f.cod.dim


def product(x: VectObj, y: VectObj) -> tuple[VectObj, LinMap, LinMap]:
    # Side tags keep the disjoint union of names collision-free.
    obj = VectObj(tuple("L." + v for v in x.vars) + tuple("R." + v for v in y.vars))
    p1 = tuple(
        tuple(Fraction(1) if j == i else Fraction(0) for j in range(obj.dim)) for i in range(x.dim)
    )
    p2 = tuple(
        tuple(Fraction(1) if j == x.dim + i else Fraction(0) for j in range(obj.dim))
        for i in range(y.dim)
    )
    return obj, LinMap(obj, x, p1), LinMap(obj, y, p2)


def product_map(f: LinMap, g: LinMap) -> LinMap:
    dom, _, _ = product(f.dom, g.dom)
    cod, _, _ = product(f.cod, g.cod)
    rows = []
    for row in f.matrix:
        rows.append(tuple(row) + tuple(Fraction(0) for _ in range(g.dom.dim)))
    for row in g.matrix:
        rows.append(tuple(Fraction(0) for _ in range(f.dom.dim)) + tuple(row))
    return LinMap(dom, cod, tuple(rows))


def pair_into_product(q1: LinMap, q2: LinMap) -> LinMap:
    """The pairing <q1, q2> : H -> cod(q1) x cod(q2)."""
    if q1.dom != q2.dom:
        raise MismatchError("pairing requires a common domain")
    cod, _, _ = product(q1.cod, q2.cod)
    return LinMap(q1.dom, cod, tuple(q1.matrix) + tuple(q2.matrix))


def pullback(f1: LinMap, f2: LinMap) -> tuple[VectObj, LinMap, LinMap]:
    if f1.cod != f2.cod:
        raise MismatchError("pullback: maps must share their codomain")
    d1, d2 = f1.dom.dim, f2.dom.dim
    rows = [tuple(r1) + tuple(-x for x in r2) for r1, r2 in zip(f1.matrix, f2.matrix)]
    basis = kernel_basis(rows, d1 + d2)
    obj = VectObj(_kernel_names(len(basis)))
    p1 = LinMap(obj, f1.dom, tuple(tuple(b[i] for b in basis) for i in range(d1)))
    p2 = LinMap(obj, f2.dom, tuple(tuple(b[d1 + i] for b in basis) for i in range(d2)))
    return obj, p1, p2


def equalizer(f: LinMap, g: LinMap) -> tuple[VectObj, LinMap]:
    if f.dom != g.dom or f.cod != g.cod:
        raise MismatchError("equalizer: maps must be a parallel pair")
    rows = [tuple(a - b for a, b in zip(rf, rg)) for rf, rg in zip(f.matrix, g.matrix)]
    basis = kernel_basis(rows, f.dom.dim)
    obj = VectObj(_kernel_names(len(basis)))
    arrow = LinMap(obj, f.dom, tuple(tuple(b[i] for b in basis) for i in range(f.dom.dim)))
    return obj, arrow


def image_factorize(f: LinMap) -> tuple[LinMap, LinMap]:
    cols_as_rows = mat_transpose(f.matrix, f.dom.dim)
    basis, pivots = rref(cols_as_rows, f.cod.dim)
    mid = VectObj(_kernel_names(len(basis)))
    inj = LinMap(mid, f.cod, tuple(tuple(b[i] for b in basis) for i in range(f.cod.dim)))
    surj_rows = []
    for i, p in enumerate(pivots):
        # RREF pivots are unit coordinates, so the i-th image coordinate of a
        # column is just its entry at pivot p.
        surj_rows.append(tuple(f.matrix[p][j] for j in range(f.dom.dim)))
    surj = LinMap(f.dom, mid, tuple(surj_rows))
    return surj, inj


def coordinate_map(dom: VectObj, cod: VectObj, assignment: dict[str, str]) -> LinMap:
    """Send each assigned domain variable to its codomain variable, the rest to 0."""
    for k, v in assignment.items():
        dom.index(k)
        cod.index(v)
    rows = [[Fraction(0)] * dom.dim for _ in range(cod.dim)]
    for k, v in assignment.items():
        rows[cod.index(v)][dom.index(k)] = Fraction(1)
    return LinMap(dom, cod, tuple(tuple(r) for r in rows))


def projection_onto(dom: VectObj, names) -> LinMap:
    obs = VectObj(tuple(names))
    return coordinate_map(dom, obs, {n: n for n in obs.vars})


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    ambient: VectObj
    basis: Rows

    def __post_init__(self):
        rows = tuple(tuple(frac(x) for x in row) for row in self.basis)
        for row in rows:
            if len(row) != self.ambient.dim:
                raise MismatchError("basis row length does not match the ambient dimension")
        canon, _ = rref(rows, self.ambient.dim)
        object.__setattr__(self, "basis", canon)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, vec):
        """Coordinates of vec in the canonical basis, or None if outside."""
        v = [frac(x) for x in vec]
        if len(v) != self.ambient.dim:
            raise MismatchError("vector length does not match the ambient dimension")
        cs = []
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x != 0)
            c = v[p]
            cs.append(c)
            v = [a - c * b for a, b in zip(v, row)]
        if any(x != 0 for x in v):
            return None
        return tuple(cs)

    def contains(self, vec) -> bool:
        return self.coords(vec) is not None

    def leq(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(other.contains(row) for row in self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ambient, ())
        a, b = self.basis, other.basis
        n = self.ambient.dim
        # columns of [A^T | -B^T]; kernel vectors give coefficients of common points
        rows = tuple(
            tuple(a[i][r] for i in range(len(a))) + tuple(-b[j][r] for j in range(len(b)))
            for r in range(n)
        )
        span = []
        for lam in kernel_basis(rows, len(a) + len(b)):
            vec = [Fraction(0)] * n
            for i in range(len(a)):
                for r in range(n):
                    vec[r] += lam[i] * a[i][r]
            span.append(tuple(vec))
        return Subspace(self.ambient, tuple(span))

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(self.ambient, self.basis + other.basis)

    def _check_ambient(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise MismatchError("subspaces live in different ambient spaces")

    def to_json(self) -> dict:
        return {
            "ambient": list(self.ambient.vars),
            "dim": self.dim,
            "basis": [[str(x) for x in row] for row in self.basis],
        }


def full_subspace(ambient: VectObj) -> Subspace:
    return Subspace(ambient, mat_identity(ambient.dim))


def zero_subspace(ambient: VectObj) -> Subspace:
    return Subspace(ambient, ())


def column_space(f: LinMap) -> Subspace:
    return Subspace(f.cod, mat_transpose(f.matrix, f.dom.dim))
