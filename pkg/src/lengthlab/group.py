"""Permutation group container with a lazily built stabilizer chain."""

from __future__ import annotations

import random
import threading
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace

from .chain import StabilizerChain
from .errors import CapacityError, InputError
from .perm import Permutation, as_perm, conj

DEFAULT_ENUMERATION_LIMIT = 200_000
DEFAULT_QUOTIENT_LIMIT = 20_000


@dataclass(frozen=True)
class Limits:
    enumeration: int = DEFAULT_ENUMERATION_LIMIT
    quotient: int = DEFAULT_QUOTIENT_LIMIT


_limits: ContextVar[Limits] = ContextVar("lengthlab_limits", default=Limits())


def get_limits() -> Limits:
    return _limits.get()


@contextmanager
def limits(enumeration: int | None = None, quotient: int | None = None):
    """Temporarily override the enumeration and quotient-degree limits."""
    cur = _limits.get()
    new = replace(
        cur,
        **{k: v for k, v in (("enumeration", enumeration), ("quotient", quotient)) if v is not None},
    )
    token = _limits.set(new)
    try:
        yield new
    finally:
        _limits.reset(token)


class PermGroup:
    """A permutation group given by generators on ``degree`` points.

    Subgroups are ``PermGroup`` values whose ``parent`` points at the
    containing group. The chain and element cache are built on first use
    under a lock, after which the value is read-only.
    """

    def __init__(self, generators=(), degree: int | None = None, *, parent=None, name=None,
                 chain: StabilizerChain | None = None, check: bool = True):
        gens = [as_perm(g) for g in generators]
        if degree is None:
            if parent is not None:
                degree = parent.degree
            elif gens:
                degree = len(gens[0])
            else:
                degree = 1
        fixed = []
        for g in gens:
            if len(g) != degree:
                if len(g) < degree:
                    g = g.extended(degree)
                else:
                    raise InputError(f"generator of degree {len(g)} in a group of degree {degree}")
            if not g.is_identity():
                fixed.append(g)
        self.degree = degree
        self.generators: list[Permutation] = fixed
        self.parent = parent
        self.name = name
        self._chain = chain
        self._elements = None
        self._element_set = None
        self._lock = threading.RLock()
        self.cache: dict = {}
        if check and parent is not None:
            for g in fixed:
                if not parent.contains(g):
                    raise InputError(f"generator {g} is not in the parent group")

    # -- chain-backed queries ---------------------------------------------

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabilizerChain.build(self.generators, self.degree)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def is_trivial(self) -> bool:
        return not self.generators

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p) -> bool:
        if len(p) != self.degree:
            raise InputError(f"degree mismatch: permutation on {len(p)} points, group on {self.degree}")
        if self._element_set is not None:
            return tuple(p) in self._element_set
        return self.chain.contains(tuple(p))

    __contains__ = contains

    def element_list(self, limit: int | None = None) -> list[tuple]:
        """All elements as raw image tuples; cached after the first call."""
        if self._elements is None:
            lim = get_limits().enumeration if limit is None else limit
            n = self.order()
            if n > lim:
                raise CapacityError(
                    f"group of order {n} exceeds the enumeration limit {lim}; "
                    f"rerun with an enumeration limit of at least {n}",
                    required=n,
                )
            with self._lock:
                if self._elements is None:
                    elems = self.chain.elements()
                    self._element_set = frozenset(elems)
                    self._elements = elems
        return self._elements

    def element_set(self, limit: int | None = None) -> frozenset:
        self.element_list(limit)
        return self._element_set

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._raw(self.chain.random_element(rng))

    # -- subgroup helpers ---------------------------------------------------

    def subgroup(self, generators, *, check: bool = True, chain=None) -> "PermGroup":
        return PermGroup(generators, self.degree, parent=self, check=check, chain=chain)

    def is_subgroup(self, other: "PermGroup") -> bool:
        """True when every generator of ``self`` lies in ``other``."""
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def equals(self, other: "PermGroup") -> bool:
        return self.is_subgroup(other) and self.order() == other.order()

    def join(self, *others, parent=None) -> "PermGroup":
        """Subgroup generated by ``self`` and the given groups or elements."""
        extra = []
        for o in others:
            extra.extend(o.generators if isinstance(o, PermGroup) else [as_perm(o, self.degree)])
        new = [g for g in extra if not self.contains(g)]
        if not new:
            return PermGroup(self.generators, self.degree, parent=parent or self.parent,
                             chain=self.chain, check=False)
        return PermGroup(self.generators + new, self.degree, parent=parent or self.parent,
                         chain=self.chain.extended(new), check=False)

    def normalizes(self, other: "PermGroup") -> bool:
        """True when conjugation by each generator of ``self`` preserves ``other``."""
        return all(other.contains(conj(h, g)) for h in other.generators for g in self.generators)

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            seen[start] = True
            orb = [start]
            k = 0
            while k < len(orb):
                x = orb[k]
                k += 1
                for g in self.generators:
                    y = g[x]
                    if not seen[y]:
                        seen[y] = True
                        orb.append(y)
            out.append(sorted(orb))
        return out

    def restriction(self, points) -> "PermGroup":
        """Action on an invariant set of points, relabelled ``0..len(points)-1``."""
        points = sorted(points)
        index = {p: i for i, p in enumerate(points)}
        gens = []
        for g in self.generators:
            try:
                gens.append(Permutation([index[g[p]] for p in points]))
            except KeyError:
                raise InputError("point set is not invariant under the group") from None
        return PermGroup(gens, len(points))

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"<{gens}>"


def trivial_group(degree: int) -> PermGroup:
    return PermGroup([], degree)


def build_stabilizer_chain(G: PermGroup) -> StabilizerChain:
    return G.chain


def order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p) -> bool:
    return G.contains(as_perm(p))


def enumerate_elements(G: PermGroup, limit: int | None = None) -> frozenset:
    """Complete element set of ``G`` as a frozenset of :class:`Permutation`."""
    return frozenset(Permutation._raw(x) for x in G.element_list(limit))


def orbits(G: PermGroup) -> list[list[int]]:
    return G.orbits()
