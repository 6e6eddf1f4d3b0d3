"""Subgroup algebra: closures, commutators, series, classes, centralizers.

Everything that needs classes or centralizers works by enumeration and is
bounded by the active enumeration limit. Functions with a ``modulo``
argument work in ``H/N`` without building the quotient: a normal subgroup
``N`` is carried along and "trivial" means "contained in ``N``".
"""

from __future__ import annotations

from .chain import StabilizerChain
from .errors import InputError
from .group import PermGroup
from .perm import Permutation, comm, conj, is_identity, mul
from .records import NILPOTENT, SOLUBLE, UNCLASSIFIED, SeriesRecord


def _raw_gens(S, degree):
    out = []
    for s in S:
        if isinstance(s, PermGroup):
            out.extend(tuple(g) for g in s.generators)
        else:
            if len(s) != degree:
                raise InputError(f"degree mismatch: {len(s)} vs {degree}")
            if not is_identity(s):
                out.append(tuple(s))
    return out


def normal_closure(G: PermGroup, S, *, start: PermGroup | None = None, check: bool = True,
                   bound: PermGroup | None = None) -> PermGroup:
    """Smallest subgroup of ``G`` containing ``S`` (and ``start``) normalised by ``G``.

    ``start`` must already be normal in ``G``. If ``bound`` is given it must be a
    normal subgroup of ``G`` containing the result; the iteration stops as soon
    as the closure reaches its order.
    """
    new = _raw_gens(S, G.degree)
    if check:
        for s in new:
            if not G.contains(s):
                raise InputError(f"{Permutation._raw(s)} is not an element of the group")
    if start is not None:
        chain = StabilizerChain.build((), G.degree) if start.is_trivial() else start.chain.extended(())
        gens = [tuple(g) for g in start.generators]
    else:
        chain = StabilizerChain(G.degree)
        gens = []
    target = bound.order() if bound is not None else None
    queue = []
    for s in new:
        if chain._add(s):
            gens.append(s)
            queue.append(s)
    k = 0
    while k < len(queue):
        if target is not None and chain.order() == target:
            return G.subgroup(bound.generators, check=False, chain=bound.chain)
        h = queue[k]
        k += 1
        for g in G.generators:
            c = conj(h, g)
            if chain._add(c):
                gens.append(c)
                queue.append(c)
    return G.subgroup([Permutation._raw(x) for x in gens], check=False, chain=chain)


def _parent_of(H: PermGroup, K: PermGroup):
    if H.degree != K.degree:
        raise InputError("subgroups act on different point sets")
    if H.parent is not None and K.parent is not None and H.parent is not K.parent:
        if not H.parent.equals(K.parent):
            raise InputError("subgroups have different parent groups")
    return H.parent or K.parent


def commutator_subgroup(H: PermGroup, K: PermGroup, *, modulo: PermGroup | None = None) -> PermGroup:
    """``[H, K]`` (times ``modulo`` if given), as a subgroup of ``<H, K>``."""
    parent = _parent_of(H, K)
    ambient = PermGroup(list(H.generators) + list(K.generators), H.degree, parent=parent, check=False)
    comms = [comm(tuple(h), tuple(k)) for h in H.generators for k in K.generators]
    result = normal_closure(ambient, comms, start=modulo, check=False)
    result.parent = parent
    return result


def derived_subgroup(H: PermGroup, *, modulo: PermGroup | None = None) -> PermGroup:
    return commutator_subgroup(H, H, modulo=modulo)


def derived_series(H: PermGroup, *, modulo: PermGroup | None = None) -> SeriesRecord:
    """``H >= H' >= H'' ...`` until it stabilises (or falls into ``modulo``)."""
    floor = 1 if modulo is None else modulo.order()
    terms = [H]
    cur = H if modulo is None else H.join(modulo)
    while cur.order() > floor:
        nxt = derived_subgroup(cur, modulo=modulo)
        if nxt.order() == cur.order():
            break
        terms.append(nxt)
        cur = nxt
    tags = [SOLUBLE] * (len(terms) - 1)
    return SeriesRecord("derived", H.parent or H, terms, tags)


def perfect_residual(H: PermGroup) -> PermGroup:
    return derived_series(H).terms[-1]


def lower_central_series(H: PermGroup, *, modulo: PermGroup | None = None) -> SeriesRecord:
    floor = 1 if modulo is None else modulo.order()
    top = H if modulo is None else H.join(modulo)
    terms = [H]
    cur = top
    while cur.order() > floor:
        nxt = commutator_subgroup(cur, top, modulo=modulo)
        if nxt.order() == cur.order():
            break
        terms.append(nxt)
        cur = nxt
    return SeriesRecord("lower-central", H.parent or H, terms, [NILPOTENT] * (len(terms) - 1))


def _reaches_floor(series: SeriesRecord, H: PermGroup, modulo) -> bool:
    floor = 1 if modulo is None else modulo.order()
    last = series.terms[-1]
    if len(series.terms) == 1:
        top = H if modulo is None else H.join(modulo)
        return top.order() == floor
    return last.order() == floor


def is_soluble(H: PermGroup, *, modulo: PermGroup | None = None) -> bool:
    return _reaches_floor(derived_series(H, modulo=modulo), H, modulo)


def is_nilpotent(H: PermGroup, *, modulo: PermGroup | None = None) -> bool:
    return _reaches_floor(lower_central_series(H, modulo=modulo), H, modulo)


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    return G.normalizes(N)


def is_perfect(H: PermGroup) -> bool:
    return derived_subgroup(H).order() == H.order()


def is_abelian(H: PermGroup) -> bool:
    gens = [tuple(g) for g in H.generators]
    return all(mul(a, b) == mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


# -- enumeration-based ---------------------------------------------------------


def conjugacy_classes(G: PermGroup) -> list[list[tuple]]:
    """Classes as lists of raw tuples, sorted by size then representative."""
    cached = G.cache.get("classes")
    if cached is not None:
        return cached
    elems = G.element_list()
    gens = [tuple(g) for g in G.generators]
    seen = set()
    classes = []
    for x in elems:
        if x in seen:
            continue
        seen.add(x)
        cls = [x]
        k = 0
        while k < len(cls):
            y = cls[k]
            k += 1
            for g in gens:
                z = conj(y, g)
                if z not in seen:
                    seen.add(z)
                    cls.append(z)
        classes.append(cls)
    classes.sort(key=lambda c: (len(c), c[0]))
    G.cache["classes"] = classes
    return classes


def conjugacy_class_representatives(G: PermGroup) -> list[Permutation]:
    return [Permutation._raw(c[0]) for c in conjugacy_classes(G)]


def subgroup_from_elements(G: PermGroup, elements) -> PermGroup:
    """Subgroup of ``G`` generated by ``elements``; stops once it has ``len(elements)`` members
    when the elements are known to form a subgroup."""
    elements = list(elements)
    chain = StabilizerChain(G.degree)
    gens = []
    for x in elements:
        if chain._add(tuple(x)):
            gens.append(Permutation._raw(x))
            if chain.order() == len(elements):
                break
    return G.subgroup(gens, check=False, chain=chain)


def centralizer(G: PermGroup, S) -> PermGroup:
    """``C_G(S)`` by filtering the element cache."""
    ss = _raw_gens(S, G.degree)
    elems = [x for x in G.element_list() if all(mul(x, s) == mul(s, x) for s in ss)]
    return subgroup_from_elements(G, elems)


def center(G: PermGroup) -> PermGroup:
    if "center" not in G.cache:
        G.cache["center"] = centralizer(G, G.generators)
    return G.cache["center"]


def intersection(G: PermGroup, H: PermGroup, K: PermGroup) -> PermGroup:
    """``H ∩ K`` inside enumerable ``G`` (iterates the smaller subgroup)."""
    small, big = (H, K) if H.order() <= K.order() else (K, H)
    return subgroup_from_elements(G, [x for x in small.element_list() if big.contains(x)])


def class_of(G: PermGroup, x) -> list[tuple]:
    x = tuple(x)
    for c in conjugacy_classes(G):
        if x in set(c):
            return c
    raise InputError("element not in group")


__all__ = [
    "normal_closure", "commutator_subgroup", "derived_subgroup", "derived_series", "perfect_residual",
    "is_soluble", "lower_central_series", "is_nilpotent", "is_normal", "is_perfect", "is_abelian",
    "conjugacy_classes", "conjugacy_class_representatives", "subgroup_from_elements", "centralizer",
    "center", "intersection", "UNCLASSIFIED",
]
