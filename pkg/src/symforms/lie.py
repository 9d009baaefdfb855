"""Semisimple Lie algebras over exact rationals.

An algebra is given by sparse structure constants on a finite basis; all
scalars are `fractions.Fraction`.  Involutions split the algebra into the
fixed subalgebra h and its Killing complement m, and the compact dual is
realized by the sign twist of the m x m structure constants (the rational
shadow of h + i*m), so no complex arithmetic is ever needed.

All objects are immutable after construction and every operation is a pure
function, so concurrent reads are safe.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (
    DegenerateRestriction,
    DimensionMismatch,
    DualNotCompact,
    JacobiError,
    NotAutomorphism,
    NotInvolution,
    NotSemisimple,
)

Scalar = Fraction


def _sparse(vecdict):
    return {k: v for k, v in vecdict.items() if v != 0}


def _dense(sparse, n):
    out = [Fraction(0)] * n
    for k, c in sparse.items():
        out[k] = c
    return tuple(out)


class LieAlgebra:
    """Finite-dimensional Lie algebra with exact sparse structure constants.

    `brackets` maps (i, j) with i < j to a sparse vector {k: c} meaning
    [x_i, x_j] = sum_k c * x_k.  Antisymmetry is enforced by storage;
    the Jacobi identity is checked on every basis triple at construction.
    """

    def __init__(self, dim, labels, brackets, name="g", check_jacobi=True,
                 check_semisimple=True):
        if len(labels) != dim:
            raise DimensionMismatch(f"{len(labels)} labels for dimension {dim}")
        self.dim = dim
        self.labels = list(labels)
        self.name = name
        table = {}
        for (i, j), terms in brackets.items():
            if not 0 <= i < j < dim:
                raise DimensionMismatch(f"bracket index pair {(i, j)} out of range (need i < j < {dim})")
            entry = _sparse({int(k): Fraction(c) for k, c in terms.items()})
            for k in entry:
                if not 0 <= k < dim:
                    raise DimensionMismatch(f"bracket target index {k} out of range")
            if entry:
                table[(i, j)] = entry
        self.brackets = table
        self._killing = None
        self._ad = {}
        if check_jacobi:
            self._check_jacobi()
        if check_semisimple and not linalg.is_nondegenerate(self.killing()):
            raise NotSemisimple(f"Killing form of {name} is degenerate")

    def bracket_basis(self, i, j):
        """[x_i, x_j] as a sparse vector."""
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x, y):
        """Bilinear extension of the structure constants to vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length does not match algebra dimension")
        acc = {}
        xs = [(i, Fraction(c)) for i, c in enumerate(x) if c]
        ys = [(j, Fraction(c)) for j, c in enumerate(y) if c]
        for i, xi in xs:
            for j, yj in ys:
                if i == j:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    acc[k] = acc.get(k, Fraction(0)) + xi * yj * c
        out = [Fraction(0)] * self.dim
        for k, c in acc.items():
            out[k] = c
        return tuple(out)

    def ad(self, i):
        """Matrix of ad_{x_i} (columns are [x_i, x_j])."""
        if i not in self._ad:
            cols = [self.bracket_basis(i, j) for j in range(self.dim)]
            self._ad[i] = [[cols[j].get(r, Fraction(0)) for j in range(self.dim)] for r in range(self.dim)]
        return self._ad[i]

    def killing(self):
        """Killing form matrix B_ij = trace(ad_i ad_j)."""
        if self._killing is None:
            n = self.dim
            ads = [self.ad(i) for i in range(n)]
            b = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    t = sum((ads[i][a][c] * ads[j][c][a]
                             for a in range(n) for c in range(n)
                             if ads[i][a][c] and ads[j][c][a]), Fraction(0))
                    b[i][j] = b[j][i] = t
            self._killing = b
        return self._killing

    def killing_eval(self, x, y):
        return linalg.dot(linalg.mat_vec(self.killing(), y), x)

    def basis_vector(self, i):
        return tuple(Fraction(k == i) for k in range(self.dim))

    def _check_jacobi(self):
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc = {}
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for l, u in self.bracket_basis(a, b).items():
                            for m, v in self.bracket_basis(l, c).items():
                                acc[m] = acc.get(m, Fraction(0)) + u * v
                    if any(v != 0 for v in acc.values()):
                        raise JacobiError((i, j, k))


class LinearEndo:
    """Linear endomorphism of an algebra's underlying space, as an exact matrix."""

    def __init__(self, matrix):
        self.matrix = [[Fraction(x) for x in row] for row in matrix]
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise DimensionMismatch("endomorphism matrix must be square")
        self.dim = n

    def apply(self, v):
        return linalg.mat_vec(self.matrix, v)

    def is_involution(self):
        n = self.dim
        sq = linalg.mat_mul(self.matrix, self.matrix)
        return all(sq[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def is_automorphism(self, g: LieAlgebra):
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = self.apply(_dense(g.bracket_basis(i, j), g.dim))
                rhs = g.bracket(self.apply(g.basis_vector(i)), self.apply(g.basis_vector(j)))
                if lhs != rhs:
                    return False
        return True


class ReductiveSplit:
    """A vector-space split g = h + m with [h,h] in h and [h,m] in m.

    This is the minimal structure the form machinery needs: it fixes the
    m-basis that alternating forms are written over and makes h act on m.
    It does NOT require [m,m] in h, so deliberately non-symmetric splits
    can be built to exercise the closedness check.
    """

    def __init__(self, algebra: LieAlgebra, h_basis, m_basis, name=None):
        self.algebra = algebra
        self.h_basis = [tuple(Fraction(x) for x in v) for v in h_basis]
        self.m_basis = [tuple(Fraction(x) for x in v) for v in m_basis]
        self.name = name or f"{algebra.name}:split"
        n = algebra.dim
        if self.dim_h + self.dim_m != n:
            raise DimensionMismatch("h and m do not span the algebra")
        cols = [list(col) for col in zip(*(self.h_basis + self.m_basis))] if n else []
        self._basis_cols = cols
        try:
            cinv = linalg.invert(cols) if n else []
        except ValueError:
            raise DimensionMismatch("h and m overlap: combined basis is singular") from None
        self._basis_cols_inv = cinv
        d_h = [[Fraction(i == j and i < self.dim_h) for j in range(n)] for i in range(n)]
        d_m = [[Fraction(i == j and i >= self.dim_h) for j in range(n)] for i in range(n)]
        self.proj_h = LinearEndo(linalg.mat_mul(linalg.mat_mul(cols, d_h), cinv)) if n else LinearEndo([])
        self.proj_m = LinearEndo(linalg.mat_mul(linalg.mat_mul(cols, d_m), cinv)) if n else LinearEndo([])
        self._h_algebra = None
        zero = (Fraction(0),) * n
        for u in self.h_basis:
            for v in self.h_basis:
                if self.proj_m.apply(algebra.bracket(u, v)) != zero:
                    raise NotAutomorphism(f"[h,h] not contained in h for {self.name}")
        for u in self.h_basis:
            for x in self.m_basis:
                if self.proj_h.apply(algebra.bracket(u, x)) != zero:
                    raise NotAutomorphism(f"[h,m] not contained in m for {self.name}")

    @property
    def dim_h(self):
        return len(self.h_basis)

    @property
    def dim_m(self):
        return len(self.m_basis)

    def coords(self, v):
        """Coordinates of v over the combined basis h_basis + m_basis."""
        if len(v) != self.algebra.dim:
            raise DimensionMismatch("vector length does not match algebra dimension")
        return linalg.mat_vec(self._basis_cols_inv, v)

    def h_coords(self, v):
        c = self.coords(v)
        if any(x != 0 for x in c[self.dim_h:]):
            raise DimensionMismatch("vector has a nonzero m component")
        return c[: self.dim_h]

    def m_coords(self, v):
        c = self.coords(v)
        if any(x != 0 for x in c[: self.dim_h]):
            raise DimensionMismatch("vector has a nonzero h component")
        return c[self.dim_h:]

    def h_algebra(self):
        """The subalgebra h as a standalone algebra on h_basis.

        h need not be semisimple (it often has a center), so only the
        Jacobi check runs.
        """
        if self._h_algebra is None:
            p = self.dim_h
            table = {}
            for i in range(p):
                for j in range(i + 1, p):
                    w = self.algebra.bracket(self.h_basis[i], self.h_basis[j])
                    coords = self.coords(w)
                    entry = _sparse({k: coords[k] for k in range(p)})
                    if entry:
                        table[(i, j)] = entry
            self._h_algebra = LieAlgebra(p, [f"u{i}" for i in range(p)], table,
                                         name=f"h({self.name})", check_semisimple=False)
        return self._h_algebra


class SymmetricPair(ReductiveSplit):
    """Eigenspace decomposition g = h + m of an involutive automorphism.

    On top of the reductive-split checks this verifies [m,m] in h, Killing
    orthogonality of h and m, nondegeneracy of both restrictions, and (on
    demand) negative definiteness of the compact dual's Killing form.
    """

    def __init__(self, algebra, sigma, h_basis, m_basis, name=None):
        self.sigma = sigma
        super().__init__(algebra, h_basis, m_basis, name=name or f"{algebra.name}:pair")
        self._dual = None
        self._dual_pair = None
        self._validate_symmetric()

    def compact_dual(self):
        """Sign twist of the m x m structure constants on the basis h_basis + m_basis."""
        if self._dual is None:
            p, q = self.dim_h, self.dim_m
            basis = self.h_basis + self.m_basis
            labels = [f"h{i}" for i in range(p)] + [f"m{i}" for i in range(q)]
            table = {}
            for i in range(p + q):
                for j in range(i + 1, p + q):
                    w = self.algebra.bracket(basis[i], basis[j])
                    coords = self.coords(w)
                    if i >= p and j >= p:
                        coords = tuple(-x for x in coords)
                    entry = _sparse(dict(enumerate(coords)))
                    if entry:
                        table[(i, j)] = entry
            dual = LieAlgebra(p + q, labels, table, name=f"dual({self.name})")
            if not linalg.is_negative_definite(dual.killing()):
                raise DualNotCompact(f"compact dual of {self.name} has indefinite Killing form")
            self._dual = dual
        return self._dual

    def dual_pair(self):
        """The same pair presented over the compact dual in split coordinates.

        h occupies the first dim_h coordinates and m the rest; the dual
        involution is the diagonal sign matrix.
        """
        if self._dual_pair is None:
            dual = self.compact_dual()
            p = self.dim_h
            sig = LinearEndo([[Fraction((1 if i < p else -1) if i == j else 0)
                               for j in range(dual.dim)] for i in range(dual.dim)])
            self._dual_pair = cartan_decompose(dual, sig, name=f"dual({self.name})")
        return self._dual_pair

    def _validate_symmetric(self):
        g, n = self.algebra, self.algebra.dim
        if not self.sigma.is_involution():
            raise NotInvolution(f"sigma of {self.name} does not square to the identity")
        ident = linalg.identity(n)
        for v, ev in [(u, 1) for u in self.h_basis] + [(x, -1) for x in self.m_basis]:
            if self.sigma.apply(v) != tuple(linalg.scale_vec(ev, v)):
                raise NotInvolution(f"basis of {self.name} is not an eigenbasis of sigma")
        del ident
        zero = (Fraction(0),) * n
        for x in self.m_basis:
            for y in self.m_basis:
                if self.proj_m.apply(g.bracket(x, y)) != zero:
                    raise NotAutomorphism(f"[m,m] not contained in h for {self.name}")
        b = g.killing()
        for u in self.h_basis:
            for x in self.m_basis:
                if linalg.dot(linalg.mat_vec(b, x), u) != 0:
                    raise DegenerateRestriction(f"h and m are not Killing-orthogonal for {self.name}")
        gram_h = [[g.killing_eval(u, v) for v in self.h_basis] for u in self.h_basis]
        gram_m = [[g.killing_eval(x, y) for y in self.m_basis] for x in self.m_basis]
        if self.dim_h and not linalg.is_nondegenerate(gram_h):
            raise DegenerateRestriction(f"Killing form degenerate on h for {self.name}")
        if self.dim_m and not linalg.is_nondegenerate(gram_m):
            raise DegenerateRestriction(f"Killing form degenerate on m for {self.name}")


def bracket(g: LieAlgebra, x, y):
    return g.bracket(x, y)


def killing_form(g: LieAlgebra):
    return [row[:] for row in g.killing()]


def cartan_decompose(g: LieAlgebra, sigma: LinearEndo, name=None) -> SymmetricPair:
    """Split g into exact +1/-1 eigenspaces of an involutive automorphism."""
    if sigma.dim != g.dim:
        raise DimensionMismatch("involution size does not match algebra dimension")
    if not sigma.is_involution():
        raise NotInvolution("sigma does not square to the identity")
    if not sigma.is_automorphism(g):
        raise NotAutomorphism("sigma does not preserve the bracket")
    ident = linalg.identity(g.dim)
    minus = [[sigma.matrix[i][j] - ident[i][j] for j in range(g.dim)] for i in range(g.dim)]
    plus = [[sigma.matrix[i][j] + ident[i][j] for j in range(g.dim)] for i in range(g.dim)]
    _, h_basis = linalg.rank_and_kernel(minus, g.dim)
    _, m_basis = linalg.rank_and_kernel(plus, g.dim)
    return SymmetricPair(g, sigma, h_basis, m_basis, name=name or f"{g.name}:pair")


def compact_dual(pair: SymmetricPair) -> LieAlgebra:
    return pair.compact_dual()


def direct_sum(g1: LieAlgebra, g2: LieAlgebra, name=None) -> LieAlgebra:
    """Block-diagonal sum; cross-block brackets vanish."""
    n1 = g1.dim
    table = {}
    for (i, j), terms in g1.brackets.items():
        table[(i, j)] = dict(terms)
    for (i, j), terms in g2.brackets.items():
        table[(i + n1, j + n1)] = {k + n1: c for k, c in terms.items()}
    labels = [f"{l}_1" for l in g1.labels] + [f"{l}_2" for l in g2.labels]
    return LieAlgebra(n1 + g2.dim, labels, table, name=name or f"{g1.name}+{g2.name}")


def group_pair(g: LieAlgebra) -> SymmetricPair:
    """The pair (g + g, swap); m is the antidiagonal copy of g."""
    gg = direct_sum(g, g, name=f"{g.name}+{g.name}")
    n = g.dim
    mat = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        mat[i][i + n] = Fraction(1)
        mat[i + n][i] = Fraction(1)
    return cartan_decompose(gg, LinearEndo(mat), name=f"group:{g.name}")
