"""Builders for corpus groups.

Field elements of GF(p^f) are encoded as integers ``sum(c_i * p**i)`` over
the coefficient vector in the polynomial basis, so the integer order is the
lexicographic order on ``(c_{f-1}, ..., c_0)``. The projective line lists
infinity first, then the field elements in that order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .errors import DomainError, FieldError, InputError, NormalizationError
from .group import PermGroup
from .perm import Permutation, conj

PINNED_POLYNOMIALS = {
    8: (2, 3, (1, 1, 0, 1)),  # x^3 + x + 1
    32: (2, 5, (1, 0, 1, 0, 0, 1)),  # x^5 + x^2 + 1
}


def _factor_prime_power(q: int):
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    f, r = 0, q
    while r % p == 0:
        r //= p
        f += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, f


def _poly_mod(a, b, p):
    """Remainder of ``a`` by monic-normalised ``b`` (coefficient lists, low degree first)."""
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible(coeffs, p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg < 1 or coeffs[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(coeffs, list(low) + [1], p):
                return False
    return True


def parse_polynomial(text: str, p: int) -> tuple[int, ...]:
    """Parse e.g. ``"x^5+x^2+1"`` into coefficients, lowest degree first."""
    terms = re.sub(r"\s+", "", text).replace("-", "+-").split("+")
    coeffs: dict[int, int] = {}
    for t in terms:
        if not t:
            continue
        m = re.fullmatch(r"(-?\d*)\*?(x(?:\^(\d+))?)?", t)
        if m is None or (not m.group(1) and not m.group(2)):
            raise FieldError(f"cannot parse polynomial term {t!r}")
        c = m.group(1)
        c = int(c) if c not in ("", "-") else (-1 if c == "-" else 1)
        e = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
        coeffs[e] = (coeffs.get(e, 0) + c) % p
    deg = max((e for e, c in coeffs.items() if c), default=0)
    return tuple(coeffs.get(i, 0) for i in range(deg + 1))


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^f) with a pinned irreducible polynomial; arithmetic via lookup tables."""

    p: int
    f: int
    poly: tuple[int, ...]
    _add: tuple = field(init=False, repr=False, compare=False)
    _mul: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.poly) != self.f + 1 or not is_irreducible(self.poly, self.p):
            raise FieldError(f"polynomial {self.poly} is not irreducible of degree {self.f} over GF({self.p})")
        q = self.q
        vecs = [self.to_coeffs(a) for a in range(q)]
        add = tuple(tuple(self.from_coeffs([(x + y) % self.p for x, y in zip(vecs[a], vecs[b])])
                          for b in range(q)) for a in range(q))
        mul = []
        for a in range(q):
            row = []
            for b in range(q):
                prodc = [0] * (2 * self.f - 1)
                for i, x in enumerate(vecs[a]):
                    if x:
                        for j, y in enumerate(vecs[b]):
                            prodc[i + j] = (prodc[i + j] + x * y) % self.p
                r = _poly_mod(prodc, self.poly, self.p)
                row.append(self.from_coeffs(r + [0] * (self.f - len(r))))
            mul.append(tuple(row))
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_mul", tuple(mul))

    @property
    def q(self) -> int:
        return self.p**self.f

    def to_coeffs(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.f)]

    def from_coeffs(self, c) -> int:
        return sum(x * self.p**i for i, x in enumerate(c))

    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._add[a].index(0)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._mul[a].index(1)

    def power(self, a, k):
        r = 1
        for _ in range(k):
            r = self.mul(r, a)
        return r

    def frobenius(self, a):
        return self.power(a, self.p)

    def primitive_element(self) -> int:
        for a in range(2, self.q) if self.q > 2 else [1]:
            x, k = a, 1
            while x != 1:
                x = self.mul(x, a)
                k += 1
            if k == self.q - 1:
                return a
        return 1

    def __str__(self):
        return f"GF({self.q})"


def field(q: int, poly: str | tuple | None = None) -> FieldSpec:
    """GF(q). Prime fields need no polynomial; GF(8) and GF(32) use pinned ones."""
    p, f = _factor_prime_power(q)
    if poly is None:
        if f == 1:
            coeffs = (0, 1)
        elif q in PINNED_POLYNOMIALS:
            coeffs = PINNED_POLYNOMIALS[q][2]
        else:
            raise FieldError(f"no pinned polynomial for GF({q}); supply one explicitly")
    elif isinstance(poly, str):
        coeffs = parse_polynomial(poly, p)
    else:
        coeffs = tuple(poly)
    return FieldSpec(p, f, tuple(coeffs))


def _as_field(q) -> FieldSpec:
    return q if isinstance(q, FieldSpec) else field(q)


# -- classical families -------------------------------------------------------


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise InputError("cyclic(n) needs n >= 1")
    gens = [Permutation(list(range(1, n)) + [0])] if n > 1 else []
    return PermGroup(gens, n, name=f"C{n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise InputError("symmetric(n) needs n >= 1")
    gens = []
    if n > 1:
        gens = [Permutation(list(range(1, n)) + [0]), Permutation.from_cycles([[0, 1]], n)]
    return PermGroup(gens, n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        raise InputError("alternating(n) needs n >= 3")
    gens = [Permutation.from_cycles([[0, 1, 2]], n)]
    if n > 3:
        cyc = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(Permutation.from_cycles([cyc], n))
    return PermGroup(gens, n, name=f"A{n}")


def dihedral(m: int) -> PermGroup:
    """Dihedral group of order ``m`` acting on ``m/2`` points."""
    if m % 2 or m < 6:
        raise InputError("dihedral(m) needs an even order m >= 6")
    n = m // 2
    rot = Permutation(list(range(1, n)) + [0])
    ref = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, ref], n, name=f"D{m}")


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    n, m = G.degree, H.degree
    gens = [Permutation(tuple(g) + tuple(range(n, n + m))) for g in G.generators]
    gens += [Permutation(tuple(range(n)) + tuple(n + x for x in h)) for h in H.generators]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return PermGroup(gens, n + m, name=name)


def wreath_product(S: PermGroup, T: PermGroup) -> PermGroup:
    """``S wr T``: ``T.degree`` blocks of ``S.degree`` points, block ``j`` holding ``j*e .. j*e+e-1``."""
    e, d = S.degree, T.degree
    gens = []
    for j in range(d):
        for s in S.generators:
            img = list(range(d * e))
            for i in range(e):
                img[j * e + i] = j * e + s[i]
            gens.append(Permutation(img))
    for t in T.generators:
        gens.append(Permutation([t[j] * e + i for j in range(d) for i in range(e)]))
    name = f"{S.name}wr{T.name}" if S.name and T.name else None
    return PermGroup(gens, d * e, name=name)


def base_subgroup(W: PermGroup, S: PermGroup, T: PermGroup) -> PermGroup:
    """The base ``S^d`` of ``wreath_product(S, T)`` as a subgroup of ``W``."""
    n_base = len(S.generators) * T.degree
    return W.subgroup(W.generators[:n_base], check=False)


# -- groups over finite fields ------------------------------------------------


def _sl2_generators(F: FieldSpec):
    w = F.primitive_element()
    one, zero = 1, 0
    mone = F.neg(1)
    return [
        (one, one, zero, one),  # [[1,1],[0,1]]
        (zero, one, mone, zero),  # [[0,1],[-1,0]]
        (w, zero, zero, F.inv(w)),
    ]


def _projective_perm(F: FieldSpec, m):
    a, b, c, d = m
    q = F.q
    img = [0] * (q + 1)
    # [x 1] * [[a, b], [c, d]] = [a x + c, b x + d]; infinity is [1 0] -> [a, b]
    img[0] = 0 if b == 0 else 1 + F.mul(a, F.inv(b))
    for x in range(q):
        num = F.add(F.mul(a, x), c)
        den = F.add(F.mul(b, x), d)
        img[1 + x] = 0 if den == 0 else 1 + F.mul(num, F.inv(den))
    return Permutation(img)


def _vector_perm(F: FieldSpec, m):
    a, b, c, d = m
    q = F.q
    img = []
    for v in range(1, q * q):
        x, y = divmod(v, q)
        nx = F.add(F.mul(x, a), F.mul(y, c))
        ny = F.add(F.mul(x, b), F.mul(y, d))
        img.append(nx * q + ny - 1)
    return Permutation(img)


def psl2(q) -> PermGroup:
    F = _as_field(q)
    gens = [_projective_perm(F, m) for m in _sl2_generators(F)]
    return PermGroup(gens, F.q + 1, name=f"PSL2({F.q})")


def agl1(q) -> PermGroup:
    F = _as_field(q)
    w = F.primitive_element()
    gens = [Permutation([F.mul(w, x) for x in range(F.q)]), Permutation([F.add(x, 1) for x in range(F.q)])]
    return PermGroup(gens, F.q, name=f"AGL1({F.q})")


def translations(q) -> PermGroup:
    """The regular normal subgroup ``x -> x + b`` of ``agl1(q)``."""
    F = _as_field(q)
    gens = []
    for i in range(F.f):
        b = F.p**i
        gens.append(Permutation([F.add(x, b) for x in range(F.q)]))
    return PermGroup(gens, F.q)


def sl2_vectors(q) -> PermGroup:
    F = _as_field(q)
    return PermGroup([_vector_perm(F, m) for m in _sl2_generators(F)], F.q**2 - 1, name=f"SL2({F.q})")


def gl2_vectors(q) -> PermGroup:
    F = _as_field(q)
    w = F.primitive_element()
    mats = _sl2_generators(F) + [(w, 0, 0, 1)]
    return PermGroup([_vector_perm(F, m) for m in mats], F.q**2 - 1, name=f"GL2({F.q})")


def frobenius_automorphism(q, target: str = "psl2", power: int = 1) -> Permutation:
    """Permutation induced by ``x -> x^(p^power)`` on the point set of ``target``."""
    F = _as_field(q)
    if F.f == 1:
        raise DomainError(f"GF({F.q}) is a prime field; its Frobenius map is trivial")
    fr = list(range(F.q))
    for _ in range(power % F.f):
        fr = [F.frobenius(x) for x in fr]
    if target == "psl2":
        return Permutation([0] + [1 + fr[x] for x in range(F.q)])
    if target == "agl1":
        return Permutation(fr)
    if target in ("gl2", "sl2"):
        return Permutation([fr[v // F.q] * F.q + fr[v % F.q] - 1 for v in range(1, F.q**2)])
    raise InputError(f"unknown Frobenius target {target!r}")


def extend_by(G: PermGroup, phi) -> PermGroup:
    """Ambient group ``<G, phi>`` for a permutation ``phi`` normalising ``G``."""
    phi = Permutation(phi) if not isinstance(phi, Permutation) else phi
    if len(phi) != G.degree:
        raise InputError(f"automorphism on {len(phi)} points, group on {G.degree}")
    for g in G.generators:
        if not G.contains(conj(tuple(g), tuple(phi))):
            raise NormalizationError(f"{phi} does not normalise the group")
    if phi.is_identity():
        return PermGroup(G.generators, G.degree, name=G.name)
    return G.join(phi, parent=None)


def inner_extension(G: PermGroup, x) -> tuple[PermGroup, PermGroup, Permutation]:
    """Realise conjugation by ``x in G`` as an external automorphism.

    Returns ``(ambient, G_copy, a)`` on ``2n`` points where ``G`` acts on the
    first copy only and ``a = (x, x)``, so ``<a>`` meets ``G`` trivially and
    induces the inner automorphism of ``x`` on ``G``.
    """
    n = G.degree
    x = Permutation(x) if not isinstance(x, Permutation) else x
    if not G.contains(x):
        raise InputError(f"{x} is not an element of the group")
    Gc = PermGroup([Permutation(tuple(g) + tuple(range(n, 2 * n))) for g in G.generators], 2 * n, name=G.name)
    a = Permutation(tuple(x) + tuple(n + i for i in x))
    return Gc.join(a), Gc, a
