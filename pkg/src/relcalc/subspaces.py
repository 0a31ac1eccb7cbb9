"""Canonical subspaces of F^n (F = Q(i)) and their lattice operations.

A subspace is stored as the unique RREF basis of its row space, encoded in
integer rows; two values are equal as sets exactly when the stored bases are
identical.  The inner product is conjugate-linear in the second argument:
<x, y> = sum_k x_k * conj(y_k).
"""

from __future__ import annotations

import weakref

from . import _rowops
from .errors import DimensionError
from .matrices import ExactMatrix, ints_to_row, row_to_ints

# Canonical interning: equal subspaces are the same object, so derived
# caches (orthogonal complements, relation parts) are shared globally.
_interned: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()


class Subspace:
    """A linear subspace of F^ambient_dim in canonical form."""

    __slots__ = ("ambient_dim", "_pivots", "_rows", "_perp", "_hash", "__weakref__")

    def __init__(self, ambient_dim: int, pivots, rows, _internal=False):
        if not _internal:
            raise TypeError("use Subspace.span / Subspace.zero / Subspace.full")
        self.ambient_dim = ambient_dim
        self._pivots = tuple(pivots)
        self._rows = tuple(rows)
        self._perp = None
        self._hash = None

    # -- construction ----------------------------------------------------

    @classmethod
    def _from_rref(cls, ambient_dim, pivots, rows) -> "Subspace":
        rows = tuple(rows)
        key = (ambient_dim, rows)
        got = _interned.get(key)
        if got is not None:
            return got
        obj = cls(ambient_dim, pivots, rows, _internal=True)
        _interned[key] = obj
        return obj

    @classmethod
    def from_int_rows(cls, int_rows, ambient_dim: int) -> "Subspace":
        pivots, rows = _rowops.rref(int_rows, ambient_dim)
        return cls._from_rref(ambient_dim, pivots, rows)

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        """Span of exact vectors; the empty list gives the zero subspace."""
        int_rows = []
        for v in vectors:
            v = tuple(v)
            if len(v) != ambient_dim:
                raise DimensionError(
                    f"vector length {len(v)} != ambient {ambient_dim}"
                )
            int_rows.append(row_to_ints(v))
        return cls.from_int_rows(int_rows, ambient_dim)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls._from_rref(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        rows = []
        for i in range(ambient_dim):
            re = [0] * ambient_dim
            re[i] = 1
            rows.append((1, tuple(re), None))
        return cls._from_rref(ambient_dim, tuple(range(ambient_dim)), rows)

    # -- basic queries ----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._rows)

    def is_zero(self) -> bool:
        return not self._rows

    @property
    def basis(self) -> ExactMatrix:
        """Canonical RREF basis, one row per dimension (0 rows when zero)."""
        entries = []
        for row in self._rows:
            entries.extend(ints_to_row(row))
        return ExactMatrix(self.dim, self.ambient_dim, entries)

    def basis_vectors(self):
        return [ints_to_row(row) for row in self._rows]

    def key(self):
        """Hashable canonical identity of the subspace."""
        return (self.ambient_dim, self._rows)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self) -> str:
        vecs = ", ".join(
            "(" + ", ".join(str(e) for e in v) + ")" for v in self.basis_vectors()
        )
        return f"Subspace({self.ambient_dim}-dim ambient; span{{{vecs}}})"

    def _require_same_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient mismatch: {self.ambient_dim} != {other.ambient_dim}"
            )

    # -- lattice operations ------------------------------------------------

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return Subspace.from_int_rows(
            list(self._rows) + list(other._rows), self.ambient_dim
        )

    __add__ = sum_with

    def perp(self) -> "Subspace":
        """Orthogonal complement under <x, y> = sum x_k conj(y_k)."""
        if self._perp is None:
            # x is orthogonal to every basis row s iff conj(s) . x = 0;
            # conjugating a canonical basis keeps it canonical.
            conj_rows = [_rowops.conjugate_row(r) for r in self._rows]
            rows = _rowops.nullspace(self._pivots, conj_rows, self.ambient_dim)
            pivots = [next(k for k, _ in _iter_nonzero(r)) for r in rows]
            out = Subspace._from_rref(self.ambient_dim, pivots, rows)
            self._perp = out
            out._perp = self
        return self._perp

    def intersect(self, other: "Subspace") -> "Subspace":
        """Exact intersection via duality: (S1^perp + S2^perp)^perp."""
        self._require_same_ambient(other)
        return self.perp().sum_with(other.perp()).perp()

    def __and__(self, other):
        return self.intersect(other)

    def contains_vector(self, int_row) -> bool:
        return _rowops.member(self._pivots, self._rows, int_row)

    def contains(self, other: "Subspace") -> bool:
        """True when other is a subset of self."""
        self._require_same_ambient(other)
        if other.dim > self.dim:
            return False
        return all(
            _rowops.member(self._pivots, self._rows, r) for r in other._rows
        )

    def __ge__(self, other):
        return self.contains(other)

    def __le__(self, other):
        return other.contains(self)

    def relative_complement(self, other: "Subspace") -> "Subspace":
        """S minus (S meet T): the part of S orthogonal to S intersect T."""
        self._require_same_ambient(other)
        meet = self.intersect(other)
        if meet.is_zero():
            return self
        return self.intersect(meet.perp())

    def is_direct_sum_with(self, other: "Subspace") -> bool:
        self._require_same_ambient(other)
        return self.sum_with(other).dim == self.dim + other.dim


def _iter_nonzero(row):
    den, re, im = row
    for k, x in enumerate(re):
        if x or (im is not None and im[k]):
            yield k, x


# -- module-level conveniences mirroring the mathematical vocabulary ------


def span(vectors, ambient_dim: int) -> Subspace:
    return Subspace.span(vectors, ambient_dim)


def sum_of(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.sum_with(s2)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.intersect(s2)


def ortho_complement(s: Subspace) -> Subspace:
    return s.perp()


def contains(s1: Subspace, s2: Subspace) -> bool:
    return s1.contains(s2)


def equals(s1: Subspace, s2: Subspace) -> bool:
    s1._require_same_ambient(s2)
    return s1 == s2


def relative_complement(s: Subspace, t: Subspace) -> Subspace:
    return s.relative_complement(t)


def is_direct_sum(s1: Subspace, s2: Subspace) -> bool:
    return s1.is_direct_sum_with(s2)


def intersect_by_stacking(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection via the direct stacked-coefficient system.

    Independent of the duality route; solves for coefficient pairs (a, b)
    with a . B1 = b . B2 and returns the span of the common vectors.
    """
    s1._require_same_ambient(s2)
    n = s1.ambient_dim
    d1, d2 = s1.dim, s2.dim
    if d1 == 0 or d2 == 0:
        return Subspace.zero(n)
    # Unknowns (a_1..a_d1, b_1..b_d2); one equation per ambient coordinate.
    width = d1 + d2
    eq_rows = []
    b1 = s1.basis_vectors()
    b2 = s2.basis_vectors()
    for coord in range(n):
        row = [b1[i][coord] for i in range(d1)] + [-b2[j][coord] for j in range(d2)]
        eq_rows.append(row_to_ints(row))
    pivots, rows = _rowops.rref(eq_rows, width)
    coeffs = _rowops.nullspace(pivots, rows, width)
    from .scalars import GaussianRational

    vectors = []
    for row in coeffs:
        scal = ints_to_row(row)
        combo = []
        for coord in range(n):
            acc = GaussianRational(0)
            for i in range(d1):
                acc = acc + scal[i] * b1[i][coord]
            combo.append(acc)
        vectors.append(combo)
    return Subspace.span(vectors, n)
