"""Permutations of {0..n-1} stored as image tuples.

Products are read left to right: ``p * q`` maps ``i`` to ``q[p[i]]``.
``Permutation`` subclasses ``tuple`` so the group machinery can mix it with
raw image tuples without conversion.
"""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Sequence

from .errors import InputError

_CYCLE_RE = re.compile(r"\(\s*([^()]*?)\s*\)")


def mul(p: tuple, q: tuple) -> tuple:
    """Raw composite of two image tuples, ``p`` first."""
    return tuple([q[i] for i in p])


def inv(p: tuple) -> tuple:
    r = [0] * len(p)
    for i, j in enumerate(p):
        r[j] = i
    return tuple(r)


def conj(p: tuple, g: tuple) -> tuple:
    """``g^-1 p g``."""
    # (g^-1 p g)[g[i]] = g[p[i]]
    r = [0] * len(p)
    for i, j in enumerate(p):
        r[g[i]] = g[j]
    return tuple(r)


def comm(p: tuple, q: tuple) -> tuple:
    """``[p, q] = p^-1 q^-1 p q``."""
    return mul(mul(inv(p), inv(q)), mul(p, q))


def identity_tuple(n: int) -> tuple:
    return tuple(range(n))


def is_identity(p: tuple) -> bool:
    return all(i == j for i, j in enumerate(p))


class Permutation(tuple):
    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation of 0..{len(images) - 1}: {images}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(range(n))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int | None = None):
        top = max((max(c) for c in cycles if len(c)), default=-1) + 1
        n = top if degree is None else degree
        if n < top:
            raise InputError(f"cycle point {top - 1} exceeds degree {n}")
        img = list(range(n))
        seen = set()
        for c in cycles:
            if len(set(c)) != len(c) or seen & set(c):
                raise InputError(f"cycles are not disjoint: {cycles}")
            seen.update(c)
            for a, b in zip(c, c[1:] + c[:1]):
                img[a] = b
        return cls._raw(img)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity."""
        stripped = text.strip()
        if not stripped:
            raise InputError("empty permutation text")
        if _CYCLE_RE.sub("", stripped).strip():
            raise InputError(f"could not parse permutation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(stripped):
            parts = body.replace(",", " ").split()
            try:
                cycle = [int(x) for x in parts]
            except ValueError:
                raise InputError(f"could not parse permutation {text!r}") from None
            if any(x < 0 for x in cycle):
                raise InputError(f"negative point in {text!r}")
            if len(cycle) > 1:
                cycles.append(cycle)
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self)

    def _check(self, other):
        if len(other) != len(self):
            raise InputError(f"degree mismatch: {len(self)} vs {len(other)}")

    def __mul__(self, other):
        self._check(other)
        return Permutation._raw(mul(self, other))

    def __invert__(self):
        return Permutation._raw(inv(self))

    def inverse(self) -> "Permutation":
        return ~self

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else ~self
        k = abs(k)
        result = identity_tuple(len(self))
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return Permutation._raw(result)

    def __xor__(self, other) -> "Permutation":
        """Conjugate ``other^-1 * self * other``."""
        self._check(other)
        return Permutation._raw(conj(self, other))

    def is_identity(self) -> bool:
        return is_identity(self)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self) if i != j]

    def extended(self, n: int) -> "Permutation":
        if n < len(self):
            raise InputError(f"cannot shrink degree {len(self)} to {n}")
        return Permutation._raw(tuple(self) + tuple(range(len(self), n)))

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation.parse({str(self)!r}, {len(self)})"


def as_perm(p, degree: int | None = None) -> Permutation:
    """Coerce cycle text, an image sequence or a Permutation."""
    if isinstance(p, str):
        return Permutation.parse(p, degree)
    q = p if isinstance(p, Permutation) else Permutation(p)
    if degree is not None and len(q) != degree:
        if len(q) < degree:
            return q.extended(degree)
        raise InputError(f"permutation of degree {len(q)} given where {degree} expected")
    return q


def compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


def inverse(p: Permutation) -> Permutation:
    return ~p


def power(p: Permutation, k: int) -> Permutation:
    return p**k
