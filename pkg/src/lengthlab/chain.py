"""Deterministic Schreier-Sims: base and strong generating set construction.

New base points are always the smallest point moved by the strong generator
that forced the new level, so a given generator list always produces the
same base and the same transversals.
"""

from __future__ import annotations

import random
from math import prod

from .perm import identity_tuple, inv, is_identity, mul


class _Level:
    __slots__ = ("point", "gens", "trans", "itrans")

    def __init__(self, point, gens=None, trans=None, itrans=None):
        self.point = point
        self.gens = gens if gens is not None else []
        self.trans = trans if trans is not None else {}
        self.itrans = itrans if itrans is not None else {}

    def copy(self):
        return _Level(self.point, list(self.gens), dict(self.trans), dict(self.itrans))

    def grow_orbit(self, degree):
        if not self.trans:
            e = identity_tuple(degree)
            self.trans[self.point] = e
            self.itrans[self.point] = e
        queue = list(self.trans)
        trans, itrans, gens = self.trans, self.itrans, self.gens
        k = 0
        while k < len(queue):
            beta = queue[k]
            k += 1
            u = trans[beta]
            for s in gens:
                gamma = s[beta]
                if gamma not in trans:
                    v = mul(u, s)
                    trans[gamma] = v
                    itrans[gamma] = inv(v)
                    queue.append(gamma)


class StabilizerChain:
    """Base, strong generators per level and orbit transversals.

    Treat instances as immutable; :meth:`extended` returns a new chain.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.levels: list[_Level] = []

    @classmethod
    def build(cls, generators, degree: int) -> "StabilizerChain":
        chain = cls(degree)
        for g in generators:
            chain._add(tuple(g))
        return chain

    def extended(self, generators) -> "StabilizerChain":
        chain = StabilizerChain(self.degree)
        chain.levels = [lev.copy() for lev in self.levels]
        for g in generators:
            chain._add(tuple(g))
        return chain

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self.levels]

    @property
    def strong_generators(self) -> list[tuple]:
        return list(self.levels[0].gens) if self.levels else []

    def orbit_sizes(self) -> list[int]:
        return [len(lev.trans) for lev in self.levels]

    def order(self) -> int:
        return prod(self.orbit_sizes())

    def sift(self, g, start: int = 0):
        """Return ``(residue, level)``; ``level == len(levels)`` when sifting ran through."""
        levels = self.levels
        for i in range(start, len(levels)):
            lev = levels[i]
            beta = g[lev.point]
            u = lev.itrans.get(beta)
            if u is None:
                return g, i
            if beta != lev.point:
                g = mul(g, u)
        return g, len(levels)

    def contains(self, g) -> bool:
        res, i = self.sift(g)
        return i == len(self.levels) and is_identity(res)

    def elements(self) -> list[tuple]:
        elems = [identity_tuple(self.degree)]
        for lev in reversed(self.levels):
            us = list(lev.trans.values())
            elems = [mul(x, u) for x in elems for u in us]
        return elems

    def random_element(self, rng: random.Random) -> tuple:
        g = identity_tuple(self.degree)
        for lev in reversed(self.levels):
            g = mul(g, rng.choice(list(lev.trans.values())))
        return g

    # -- construction ------------------------------------------------------

    def _add(self, g) -> bool:
        res, j = self.sift(g)
        if is_identity(res):
            return False
        self._insert(res, 0, j)
        self._complete(j)
        return True

    def _insert(self, h, lo, hi):
        if hi == len(self.levels):
            point = next(i for i, x in enumerate(h) if i != x)
            self.levels.append(_Level(point))
        for lev in self.levels[lo : hi + 1]:
            lev.gens.append(h)
            lev.grow_orbit(self.degree)

    def _complete(self, i):
        while i >= 0:
            lev = self.levels[i]
            jump = None
            for beta, u in list(lev.trans.items()):
                for s in list(lev.gens):
                    h = mul(mul(u, s), lev.itrans[s[beta]])
                    if is_identity(h):
                        continue
                    res, j = self.sift(h, i + 1)
                    if not is_identity(res):
                        self._insert(res, i + 1, j)
                        jump = j
                        break
                if jump is not None:
                    break
            if jump is None:
                i -= 1
            else:
                i = jump

    def verify(self, generators) -> bool:
        """Every generator sifts to identity and level generators fix earlier base points."""
        for k, lev in enumerate(self.levels):
            for s in lev.gens:
                if any(s[b] != b for b in self.base[:k]):
                    return False
        return all(self.contains(tuple(g)) for g in generators)
