"""Exact integer linear algebra for the symplectic representation.

Coordinates on first homology are ordered alpha_1..alpha_g, beta_1..beta_g.
The form is <alpha_i, beta_i> = +1 (all other basis pairings zero), i.e.
J = [[0, I], [-I, 0]] in g x g blocks.  A left-hand twist along a class c
acts by x -> x + <x, c> c, which gives the matrix I - c c^T J; at genus 1
the twist along alpha is [[1, -1], [0, 1]].

All arithmetic is over Python ints, so every result is exact and overflow
cannot occur.  Matrices and classes are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def _as_int_tuple(seq):
    return tuple(int(x) for x in seq)


@dataclass(frozen=True)
class HomologyClass:
    """Integer homology class of an oriented simple closed curve."""

    coords: tuple
    genus: int

    def __post_init__(self):
        object.__setattr__(self, "coords", _as_int_tuple(self.coords))
        if self.genus < 1:
            raise ValueError(f"genus must be positive, got {self.genus}")
        if len(self.coords) != 2 * self.genus:
            raise ValueError(
                f"expected {2 * self.genus} coordinates for genus {self.genus}, "
                f"got {len(self.coords)}"
            )

    @property
    def is_zero(self):
        return all(x == 0 for x in self.coords)

    @property
    def is_primitive(self):
        g = 0
        for x in self.coords:
            g = gcd(g, x)
        return g == 1

    def __neg__(self):
        return HomologyClass(tuple(-x for x in self.coords), self.genus)

    def canonical(self):
        """Representative up to sign: first nonzero coordinate positive."""
        for x in self.coords:
            if x > 0:
                return self
            if x < 0:
                return -self
        return self


def zero_class(g):
    return HomologyClass((0,) * (2 * g), g)


def alpha(i, g):
    """Class alpha_i, 1-based handle index."""
    if not 1 <= i <= g:
        raise ValueError(f"alpha index {i} out of range for genus {g}")
    return HomologyClass(tuple(1 if k == i - 1 else 0 for k in range(2 * g)), g)


def beta(i, g):
    """Class beta_i, 1-based handle index."""
    if not 1 <= i <= g:
        raise ValueError(f"beta index {i} out of range for genus {g}")
    return HomologyClass(tuple(1 if k == g + i - 1 else 0 for k in range(2 * g)), g)


def symplectic_form(x, y):
    """x^T J y.  Antisymmetric and bilinear."""
    if x.genus != y.genus:
        raise ValueError(f"genus mismatch: {x.genus} vs {y.genus}")
    g = x.genus
    a, b = x.coords, y.coords
    return sum(a[i] * b[g + i] - a[g + i] * b[i] for i in range(g))


# Raw helpers on tuple-of-tuples rows (no symplectic checking).  The public
# SympMatrix wrapper asserts the symplectic condition on construction.

def identity_rows(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mul_rows(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def j_rows(g):
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[i][g + i] = 1
        rows[g + i][i] = -1
    return tuple(tuple(r) for r in rows)


def _form_coords(a, b, g):
    return sum(a[i] * b[g + i] - a[g + i] * b[i] for i in range(g))


def is_symplectic_rows(rows, g):
    """M^T J M = J, checked column against column."""
    n = 2 * g
    cols = tuple(zip(*rows))
    for i in range(n):
        for j in range(i + 1, n):
            want = 1 if j == i + g else 0
            if _form_coords(cols[i], cols[j], g) != want:
                return False
    return True


class SympMatrix:
    """Immutable 2g x 2g integer matrix with M^T J M = J."""

    __slots__ = ("rows", "genus", "_hash")

    def __init__(self, rows, genus=None):
        rows = tuple(_as_int_tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or n % 2 != 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square of even dimension")
        g = n // 2
        if genus is not None and genus != g:
            raise ValueError(f"genus mismatch: matrix is {n}x{n} but genus={genus}")
        if not is_symplectic_rows(rows, g):
            raise ValueError("matrix does not preserve the symplectic form")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "genus", g)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SympMatrix is immutable")

    @property
    def dim(self):
        return 2 * self.genus

    def __eq__(self, other):
        return isinstance(other, SympMatrix) and self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def __matmul__(self, other):
        if self.genus != other.genus:
            raise ValueError(f"genus mismatch: {self.genus} vs {other.genus}")
        return SympMatrix(mul_rows(self.rows, other.rows))

    def __mul__(self, other):
        return self.__matmul__(other)

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        result = identity(self.genus)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def inv(self):
        """J^T M^T J, exact integer inverse of a symplectic matrix."""
        j = j_rows(self.genus)
        jt = tuple(zip(*j))
        mt = tuple(zip(*self.rows))
        return SympMatrix(mul_rows(mul_rows(jt, mt), j))

    def transpose_rows(self):
        return tuple(zip(*self.rows))

    @property
    def is_identity(self):
        return self.rows == identity_rows(self.dim)

    def apply(self, x):
        """Image of a HomologyClass (or coordinate tuple) under the matrix."""
        coords = x.coords if isinstance(x, HomologyClass) else _as_int_tuple(x)
        if len(coords) != self.dim:
            raise ValueError("dimension mismatch")
        out = tuple(sum(r[k] * coords[k] for k in range(self.dim)) for r in self.rows)
        if isinstance(x, HomologyClass):
            return HomologyClass(out, self.genus)
        return out

    def col(self, k):
        return tuple(r[k] for r in self.rows)

    def to_lists(self):
        """Row-major nested lists, for serialization."""
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"SympMatrix(genus={self.genus}, rows={self.rows})"


def identity(g):
    return SympMatrix(identity_rows(2 * g))


def transvection(c):
    """Twist matrix of a class: x -> x + <x, c> c.

    The zero class (a separating curve) gives the identity.
    """
    g = c.genus
    n = 2 * g
    cc = c.coords
    # w = J c, so <x, c> = w . x
    w = tuple(cc[g + i] for i in range(g)) + tuple(-cc[i] for i in range(g))
    rows = tuple(
        tuple((1 if i == k else 0) + cc[i] * w[k] for k in range(n)) for i in range(n)
    )
    return SympMatrix(rows)


def mat_mul(a, b):
    return a @ b


def mat_inv(m):
    return m.inv()


def element_order(m, bound):
    """Smallest k <= bound with M^k = I, or None when every power misses.

    Uses plain repeated multiplication; no eigenvalue shortcuts.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    power = m
    for k in range(1, bound + 1):
        if power.is_identity:
            return k
        if k < bound:
            power = power @ m
    return None


def reduce_mod_p(m, p):
    """Entrywise reduction of a SympMatrix to tuples over F_p.

    Only small primes are supported; the result satisfies the symplectic
    condition mod p (asserted).
    """
    if p not in SMALL_PRIMES:
        raise ValueError(f"p must be one of {SMALL_PRIMES}, got {p}")
    rows = tuple(tuple(x % p for x in r) for r in m.rows)
    g = m.genus
    j = j_rows(g)
    jp = tuple(tuple(x % p for x in r) for r in j)
    prod = mul_rows(mul_rows(tuple(zip(*rows)), jp), rows)
    if tuple(tuple(x % p for x in r) for r in prod) != jp:
        raise AssertionError("reduction lost the symplectic condition")
    return rows
