"""Kernel selection: compiled closure when available, pure Python otherwise.

Set MCGTORSION_PURE=1 to force the pure backend regardless of what was
built.  Both backends share BFS order, key encodings and cap semantics,
so their outputs are interchangeable (and tested to be equal).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _kernels_py
from ._kernels_py import encode_key, key_regime
from .symplectic import SMALL_PRIMES

if os.environ.get("MCGTORSION_PURE"):
    _speedups = None
else:
    try:
        from . import _speedups
    except ImportError:
        _speedups = None

BACKEND = "compiled" if _speedups is not None else "pure"


@dataclass
class ClosureResult:
    """Result of a mod-p closure: its size, key set and optional parents."""

    p: int
    n: int
    size: int
    exceeded: bool
    keys: set
    parents: dict | None = None

    def contains(self, mat):
        return encode_key(mat, self.p, self.n) in self.keys

    def witness(self, mat):
        """Generator-index word producing mat, from the BFS parent links."""
        if self.parents is None:
            raise ValueError("closure was computed without parents")
        key = encode_key(mat, self.p, self.n)
        if key not in self.parents:
            return None
        word = []
        while self.parents[key] is not None:
            key, gi = self.parents[key]
            word.append(gi)
        word.reverse()
        return tuple(word)


def _normalize(gens, p):
    if p not in SMALL_PRIMES:
        raise ValueError(f"p must be one of {SMALL_PRIMES}, got {p}")
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    norm = []
    for g in gens:
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError("generators must be square matrices of equal size")
        norm.append(tuple(tuple(x % p for x in row) for row in g))
    return norm, n


def _run_pure(gens, p, n, cap, with_parents):
    return _kernels_py.modp_closure(gens, p, n, cap, with_parents)


def _run_compiled(gens, p, n, cap, with_parents):
    if key_regime(p, n) == "u64":
        keys = [encode_key(g, p, n) for g in gens]
        return _speedups.closure_p2_small(keys, n, cap, with_parents)
    blobs = [encode_key(g, p, n) for g in gens]  # bytes in this regime
    return _speedups.closure_bytes(blobs, p, n, cap, with_parents)


def modp_closure(gens, p, cap=2_000_000, with_parents=False, backend=None):
    """BFS closure of the group generated by gens inside GL(n, F_p).

    cap bounds the number of stored elements; when it is hit the result is
    flagged exceeded and size is the partial count.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    norm, n = _normalize(gens, p)
    if backend is None:
        backend = BACKEND
    if backend == "compiled":
        if _speedups is None:
            raise RuntimeError("compiled kernels are not available")
        keys, exceeded, parents = _run_compiled(norm, p, n, cap, with_parents)
    elif backend == "pure":
        keys, exceeded, parents = _run_pure(norm, p, n, cap, with_parents)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return ClosureResult(p, n, len(keys), exceeded, keys, parents)
