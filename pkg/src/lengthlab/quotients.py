"""Quotient groups ``G/N`` as the regular action on the right cosets of ``N``."""

from __future__ import annotations

from .errors import CapacityError, InputError
from .group import PermGroup, get_limits
from .perm import Permutation, inv, mul


class QuotientGroup:
    """``G/N`` with projection and preimage maps.

    Coset ``0`` is ``N`` itself; the others are numbered in breadth-first
    order over the generators of ``G``. When ``N`` is trivial the quotient is
    ``G`` itself on its own points and both maps are the identity.
    """

    def __init__(self, base: PermGroup, kernel: PermGroup, *, check: bool = True):
        if kernel.degree != base.degree:
            raise InputError("kernel acts on a different point set")
        if check and not (kernel.is_subgroup(base) and base.normalizes(kernel)):
            raise InputError("kernel is not a normal subgroup of the base group")
        self.base = base
        self.kernel = kernel
        self.trivial_kernel = kernel.is_trivial()
        if self.trivial_kernel:
            self.coset_reps = None
            self._label = None
            self.rep = PermGroup(base.generators, base.degree, chain=base.chain, name=base.name)
            return
        index = base.order() // kernel.order()
        lim = get_limits().quotient
        if index > lim:
            raise CapacityError(
                f"quotient of index {index} exceeds the quotient-degree limit {lim}", required=index)
        self.index = index
        self._use_cache = base.order() <= get_limits().enumeration
        self._label: dict = {}
        self._kernel_elems = kernel.element_list() if self._use_cache else None
        e = tuple(range(base.degree))
        self.coset_reps: list[tuple] = []
        self._new_coset(e)
        gens = [tuple(g) for g in base.generators]
        k = 0
        while k < len(self.coset_reps):
            r = self.coset_reps[k]
            k += 1
            for s in gens:
                x = mul(r, s)
                if self._find(x) is None:
                    self._new_coset(x)
        if len(self.coset_reps) != index:
            raise InputError("coset enumeration did not close; is the kernel normal?")
        self.rep = PermGroup([self._act(s) for s in gens], index, check=False)

    def _new_coset(self, x):
        idx = len(self.coset_reps)
        self.coset_reps.append(x)
        if self._use_cache:
            for n in self._kernel_elems:
                self._label[mul(n, x)] = idx
        return idx

    def _find(self, x):
        if self._use_cache:
            return self._label.get(x)
        for j, r in enumerate(self.coset_reps):
            if self.kernel.contains(mul(x, inv(r))):
                return j
        return None

    def _act(self, g) -> Permutation:
        return Permutation([self._find(mul(r, g)) for r in self.coset_reps])

    @property
    def coset_table(self) -> dict[int, Permutation]:
        if self.trivial_kernel:
            return {}
        return {i: Permutation._raw(r) for i, r in enumerate(self.coset_reps)}

    def project(self, g) -> Permutation:
        g = tuple(g)
        if not self.base.contains(g):
            raise InputError(f"{Permutation._raw(g)} is not an element of the base group")
        if self.trivial_kernel:
            return Permutation._raw(g)
        return self._act(g)

    def lift(self, h) -> Permutation:
        """One element of the base group projecting onto ``h``."""
        if self.trivial_kernel:
            return Permutation._raw(tuple(h))
        return Permutation._raw(self.coset_reps[h[0]])

    def preimage(self, Hbar: PermGroup) -> PermGroup:
        if not Hbar.is_subgroup(self.rep):
            raise InputError("subgroup is not contained in the quotient")
        lifts = [self.lift(h) for h in Hbar.generators]
        return self.kernel.join(*lifts, parent=self.base) if lifts else self.base.subgroup(
            self.kernel.generators, check=False, chain=self.kernel.chain)

    def image(self, H: PermGroup) -> PermGroup:
        return self.rep.subgroup([self.project(h) for h in H.generators], check=False)

    def __repr__(self):
        return f"<QuotientGroup order={self.rep.order()} degree={self.rep.degree}>"


def quotient(G: PermGroup, N: PermGroup) -> QuotientGroup:
    return QuotientGroup(G, N)


def project(Q: QuotientGroup, g) -> Permutation:
    return Q.project(g)


def preimage(Q: QuotientGroup, Hbar: PermGroup) -> PermGroup:
    return Q.preimage(Hbar)


def induced_subgroup_image(Q: QuotientGroup, H: PermGroup) -> PermGroup:
    return Q.image(H)
