"""Soluble radical, Fitting and generalized Fitting subgroups, and the series built from them.

All radical-type subgroups are computed "modulo" a normal subgroup ``N``:
the result is the full inverse image in ``G`` of the corresponding subgroup
of ``G/N``. Classes of ``G`` map onto classes of ``G/N``, so the class
representatives of ``G`` suffice and no quotient group is ever built here.

``F*`` is computed from its elementwise description: ``x`` lies in ``F*`` iff
it induces an inner automorphism on every chief factor. The layer ``E`` is
then the perfect residual of ``F*``. Since ``F* = F E`` with ``F`` nilpotent
and ``[F, E] = 1``, the derived series of ``F*`` ends in ``E``; the
decomposition is recomputed and cross-checked rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    center,
    conjugacy_classes,
    derived_subgroup,
    is_nilpotent,
    is_soluble,
    normal_closure,
    perfect_residual,
    subgroup_from_elements,
)
from .errors import CapacityError, CertificateError, DomainError, InputError, InternalConsistencyError
from .group import PermGroup, get_limits
from .perm import comm, conj, inv, is_identity, mul
from .quotients import QuotientGroup
from .records import NILPOTENT, SEMISIMPLE, SOLUBLE, UNCLASSIFIED, SeriesRecord


def _trivial(G: PermGroup) -> PermGroup:
    return G.subgroup([], check=False)


def _key(N: PermGroup | None):
    if N is None or N.is_trivial():
        return ()
    return (N.order(), tuple(sorted(tuple(g) for g in N.generators)))


def _memo(G: PermGroup, key, compute):
    if key not in G.cache:
        G.cache[key] = compute()
    return G.cache[key]


def _reps(G: PermGroup) -> list[tuple]:
    return [c[0] for c in conjugacy_classes(G)[1:]]


def _closure(G: PermGroup, x, N: PermGroup, bound=None) -> PermGroup:
    """``<x^G> N``."""
    key = ("closure", x, _key(N))
    hit = G.cache.get(key)
    if hit is not None:
        return hit
    X = normal_closure(G, [x], start=N, check=False, bound=bound)
    G.cache[key] = X
    return X


def _modulo(G: PermGroup, modulo: PermGroup | None) -> PermGroup:
    if modulo is None:
        return _trivial(G)
    if not modulo.is_subgroup(G):
        raise InputError("modulo subgroup is not contained in the group")
    if modulo.parent is not G:
        modulo = G.subgroup(modulo.generators, check=False, chain=modulo.chain)
    return modulo


def _grow(G: PermGroup, N: PermGroup, test) -> PermGroup:
    """Normal closure of ``N`` and every class representative passing ``test``."""
    R = N
    for x in _reps(G):
        if R.contains(x):
            continue
        if test(x):
            R = normal_closure(G, [x], start=R, check=False)
    return R


# -- radicals -------------------------------------------------------------------


def soluble_radical(G: PermGroup, modulo: PermGroup | None = None) -> PermGroup:
    """Largest soluble normal subgroup (full preimage of ``S(G/N)`` when ``modulo=N``)."""
    N = _modulo(G, modulo)

    def compute():
        return _grow(G, N, lambda x: is_soluble(_closure(G, x, N), modulo=N))

    return _memo(G, ("radical", _key(N)), compute)


def fitting_subgroup(G: PermGroup, modulo: PermGroup | None = None) -> PermGroup:
    """``F(G)``: by Baer, ``x`` lies in it iff its normal closure is nilpotent."""
    N = _modulo(G, modulo)

    def compute():
        return _grow(G, N, lambda x: is_nilpotent(_closure(G, x, N), modulo=N))

    return _memo(G, ("fitting", _key(N)), compute)


def _abelian_mod(H: PermGroup, K: PermGroup) -> bool:
    gens = [tuple(g) for g in H.generators]
    return all(K.contains(comm(a, b)) for i, a in enumerate(gens) for b in gens[i + 1:])


def minimal_normal_subgroups(G: PermGroup, modulo: PermGroup | None = None) -> list[PermGroup]:
    """Inclusion-minimal members of ``{<x^G> N : x not in N}``."""
    N = _modulo(G, modulo)
    closures = []
    for x in _reps(G):
        if N.contains(x):
            continue
        X = _closure(G, x, N)
        if not any(Y.equals(X) for Y in closures):
            closures.append(X)
    closures.sort(key=lambda X: X.order())
    minimal = []
    for X in closures:
        if not any(M.order() < X.order() and M.is_subgroup(X) for M in closures):
            minimal.append(X)
    return minimal


def _one_minimal_normal(G: PermGroup, K: PermGroup) -> PermGroup:
    """One minimal normal subgroup of ``G/K`` (as a preimage), by descent."""
    M = None
    for x in _reps(G):
        if K.contains(x):
            continue
        if M is None:
            M = _closure(G, x, K)
        elif M.contains(x):
            X = normal_closure(G, [x], start=K, check=False, bound=M)
            if X.order() < M.order():
                M = X
    return M


def chief_series(G: PermGroup, start: PermGroup | None = None) -> SeriesRecord:
    """``start = K_0 < K_1 < ... < G`` with each ``K_{i+1}/K_i`` minimal normal in ``G/K_i``.

    Abelian chief factors are tagged soluble, nonabelian ones semisimple.
    """
    K = _modulo(G, start)

    def compute():
        terms, tags = [K], []
        cur = K
        while cur.order() < G.order():
            M = _one_minimal_normal(G, cur)
            if M is None or M.order() <= cur.order():
                raise InternalConsistencyError("chief series failed to ascend")
            tags.append(SOLUBLE if _abelian_mod(M, cur) else SEMISIMPLE)
            terms.append(M)
            cur = M
        return SeriesRecord("chief", G, terms, tags)

    return _memo(G, ("chief", _key(K)), compute)


def right_transversal(H: PermGroup, K: PermGroup) -> list[tuple]:
    """One representative per right coset ``K h`` of ``K`` in enumerable ``H``."""
    kel = K.element_list()
    seen = set()
    reps = []
    for h in H.element_list():
        if h in seen:
            continue
        reps.append(h)
        for k in kel:
            seen.add(mul(k, h))
    return reps


def induces_inner_automorphism(x, H: PermGroup, K: PermGroup, abelian: bool | None = None,
                               transversal=None) -> bool:
    """Does conjugation by ``x`` act on ``H/K`` as conjugation by an element of ``H``?

    On an abelian section inner automorphisms are trivial, so the test
    becomes "``x`` centralises ``H/K``".
    """
    x = tuple(x)
    if H.contains(x):
        return True
    hg = [tuple(y) for y in H.generators]
    if abelian is None:
        abelian = _abelian_mod(H, K)
    if abelian:
        return all(K.contains(comm(x, y)) for y in hg)
    for h in transversal if transversal is not None else right_transversal(H, K):
        z = mul(x, inv(h))
        if all(K.contains(comm(z, y)) for y in hg):
            return True
    return False


def generalized_fitting_preimage(G: PermGroup, modulo: PermGroup | None = None) -> PermGroup:
    """Full preimage of ``F*(G/N)``: elements inducing inner automorphisms on every
    chief factor of ``G`` above ``N``."""
    N = _modulo(G, modulo)

    def compute():
        cs = chief_series(G, N)
        factors = []
        for i in range(cs.length):
            H, K = cs.terms[i + 1], cs.terms[i]
            factors.append([H, K, cs.factor_tags[i] == SOLUBLE, None])

        def passes(x):
            for f in factors:
                H, K, ab, tr = f
                if H.contains(x):
                    continue
                if not ab and tr is None:
                    tr = f[3] = right_transversal(H, K)
                if not induces_inner_automorphism(x, H, K, ab, tr):
                    return False
            return True

        return _grow(G, N, passes)

    return _memo(G, ("fstar", _key(N)), compute)


@dataclass
class ComponentsReport:
    fitting: PermGroup
    layer: PermGroup
    fstar: PermGroup
    components: list[PermGroup]
    layer_center: PermGroup

    def check(self) -> list[str]:
        """Names of violated structural identities (empty when consistent)."""
        bad = []
        if not self.fstar.equals(self.fitting.join(self.layer)):
            bad.append("F* != F E")
        if any(not is_identity(comm(tuple(a), tuple(b)))
               for a in self.fitting.generators for b in self.layer.generators):
            bad.append("[F, E] != 1")
        for Q in self.components:
            if derived_subgroup(Q).order() != Q.order():
                bad.append("component not perfect")
            Z = center(Q)
            mins = minimal_normal_subgroups(Q, Z) if Z.order() < Q.order() else []
            if len(mins) != 1 or not mins[0].equals(Q):
                bad.append("component not quasisimple")
        return bad


def generalized_fitting_subgroup(G: PermGroup) -> ComponentsReport:
    def compute():
        Fs = generalized_fitting_preimage(G)
        F = fitting_subgroup(G)
        E = perfect_residual(Fs)
        E = G.subgroup(E.generators, check=False, chain=E.chain)
        if E.is_trivial() or E.order() == 1:
            Z = _trivial(G)
            comps = []
        else:
            Z = center(E)
            comps = []
            for M in minimal_normal_subgroups(E, Z):
                Q = perfect_residual(M)
                comps.append(G.subgroup(Q.generators, check=False, chain=Q.chain))
        report = ComponentsReport(F, E, Fs, comps, G.subgroup(Z.generators, check=False, chain=Z.chain))
        bad = report.check()
        if bad:
            raise InternalConsistencyError("generalized Fitting decomposition: " + ", ".join(bad))
        return report

    return _memo(G, ("components",), compute)


# -- ascending series --------------------------------------------------------------


def _ascend(G: PermGroup, step, kind: str, tagger) -> SeriesRecord:
    terms = [_trivial(G)]
    tags = []
    while terms[-1].order() < G.order():
        nxt = step(terms[-1])
        if nxt.order() <= terms[-1].order():
            raise InternalConsistencyError(
                f"{kind} series stalled at order {terms[-1].order()} below {G.order()}")
        tags.append(tagger(nxt, terms[-1]))
        terms.append(nxt)
    return SeriesRecord(kind, G, terms, tags)


def generalized_fitting_series(G: PermGroup) -> SeriesRecord:
    def tag(H, K):
        return NILPOTENT if is_nilpotent(H, modulo=K) else UNCLASSIFIED

    return _memo(G, ("gfitting-series",),
                 lambda: _ascend(G, lambda K: generalized_fitting_preimage(G, K), "generalized-fitting", tag))


def h_star(G: PermGroup) -> int:
    return generalized_fitting_series(G).length


def fitting_series(G: PermGroup) -> SeriesRecord:
    if not is_soluble(G):
        raise DomainError("the Fitting series only reaches the group when it is soluble")
    return _memo(G, ("fitting-series",),
                 lambda: _ascend(G, lambda K: fitting_subgroup(G, K), "fitting", lambda H, K: NILPOTENT))


def fitting_height(G: PermGroup) -> int:
    return fitting_series(G).length


def upper_nonsoluble_series(G: PermGroup) -> SeriesRecord:
    """``1 <= M_1 <= L_1 <= M_2 <= ... <= M_{m+1} = G``.

    ``M_k`` is the preimage of the soluble radical of ``G/L_{k-1}``; ``L_k`` the
    preimage of ``F*(G/M_k)``. Every ``L_k/M_k`` is checked to be a nontrivial
    direct product of nonabelian simple groups.
    """

    def compute():
        terms = [_trivial(G)]
        tags = []
        M = soluble_radical(G)
        terms.append(M)
        tags.append(SOLUBLE)
        while M.order() < G.order():
            L = generalized_fitting_preimage(G, M)
            if L.order() <= M.order():
                raise InternalConsistencyError("F* of a nontrivial quotient with trivial radical is trivial")
            try:
                semisimple_factor_decomposition(G, M, L)
            except DomainError as exc:
                raise InternalConsistencyError(f"upper series factor not semisimple: {exc}") from exc
            terms.append(L)
            tags.append(SEMISIMPLE)
            M2 = soluble_radical(G, L)
            terms.append(M2)
            tags.append(SOLUBLE)
            M = M2
        return SeriesRecord("nonsoluble-upper", G, terms, tags)

    return _memo(G, ("upper-series",), compute)


def nonsoluble_length(G: PermGroup) -> int:
    return upper_nonsoluble_series(G).factor_tags.count(SEMISIMPLE)


def semisimple_factor_decomposition(G: PermGroup, M: PermGroup, L: PermGroup) -> list[PermGroup]:
    """Preimages ``X_i`` with ``L/M = X_1/M x ... x X_t/M``, each ``X_i/M`` nonabelian simple."""
    if not M.is_subgroup(L) or not L.normalizes(M):
        raise InputError("M must be a normal subgroup of L")
    if L.order() == M.order():
        raise DomainError("trivial factor is not a nonempty product of simple groups")
    Lp = L if L.parent is None else PermGroup(L.generators, L.degree, chain=L.chain)
    Mp = Lp.subgroup(M.generators, check=False, chain=M.chain)
    mins = minimal_normal_subgroups(Lp, Mp)
    index = L.order() // M.order()
    prod = 1
    for X in mins:
        if _abelian_mod(X, Mp):
            raise DomainError("factor has an abelian minimal normal subgroup; not semisimple")
        prod *= X.order() // M.order()
    if prod != index:
        raise DomainError("minimal normal subgroups do not fill the factor; not semisimple")
    return [G.subgroup(X.generators, check=False, chain=X.chain) for X in mins]


@dataclass
class ComponentAction:
    kernel: PermGroup
    layer: PermGroup
    factors: list[PermGroup]
    passed: bool


def action_kernel_on_components(G: PermGroup) -> ComponentAction:
    """Kernel ``K`` of the action of ``G`` on the simple factors of ``L/S(G)`` and the
    verdict that ``K/L`` is soluble."""
    if is_soluble(G):
        raise DomainError("the group is soluble; there are no nonabelian components")
    S = soluble_radical(G)
    L = generalized_fitting_preimage(G, S)
    factors = semisimple_factor_decomposition(G, S, L)
    if len(factors) == 1:
        K = G.subgroup(G.generators, check=False, chain=G.chain)
    else:
        fg = [[tuple(y) for y in X.generators] for X in factors]

        def fixes_all(g):
            return all(X.contains(conj(y, g)) for X, ys in zip(factors, fg) for y in ys)

        K = subgroup_from_elements(G, [g for g in G.element_list() if fixes_all(g)])
    return ComponentAction(K, L, factors, is_soluble(K, modulo=L))


# -- counting and bounds -------------------------------------------------------------


def alpha(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    if n < 1:
        raise InputError("alpha needs a positive integer")
    count, d = 0, 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    return count + (1 if n > 1 else 0)


def bound_h_star(a: int, h: int) -> int:
    return 9**a * h + (9**a - 1) // 8


def bound_lambda(a: int, l: int) -> int:
    return 2**a * (l + 1) - 1


def bound_thompson(a: int, h: int) -> int:
    return 5**a * max(h, 1)


# -- certificates ---------------------------------------------------------------------


@dataclass
class FactorCheck:
    index: int
    tag: str
    status: str  # verified | failed | unverified
    method: str
    order: int


@dataclass
class CertificateVerdict:
    status: str  # verified | partial | rejected
    witnessed_bound: int | None
    factors: list[FactorCheck] = field(default_factory=list)
    message: str = ""


def _semisimple_enumerable(R: PermGroup) -> bool:
    if R.order() == 1:
        return False
    return soluble_radical(R).order() == 1 and generalized_fitting_preimage(R).order() == R.order()


def _check_semisimple_factor(H: PermGroup, K: PermGroup) -> tuple[str, str]:
    lim = get_limits()
    index = H.order() // K.order()
    if index == 1:
        return "failed", "trivial factor"
    if index <= lim.enumeration and (K.order() == 1 or index <= lim.quotient):
        R = QuotientGroup(H, K, check=False).rep if K.order() > 1 else H
        R = PermGroup(R.generators, R.degree, chain=R.chain)
        return ("verified" if _semisimple_enumerable(R) else "failed"), f"quotient of order {index}"
    if K.order() == 1:
        parts = [H.restriction(o) for o in H.orbits() if len(o) > 1]
        total = 1
        for P in parts:
            total *= P.order()
        if total == H.order() and all(P.order() <= lim.enumeration for P in parts):
            ok = all(_semisimple_enumerable(P) for P in parts)
            return ("verified" if ok else "failed"), f"direct product over {len(parts)} orbits"
    return "unverified", "factor beyond enumeration"


def verify_series_certificate(G: PermGroup, claimed) -> CertificateVerdict:
    """Check a claimed normal series with soluble/semisimple factor tags.

    ``claimed`` is a :class:`SeriesRecord` (terms from the trivial group up to
    ``G``) or a list of ``(tag, subgroup)`` pairs whose first factor starts at
    the trivial group. Non-normal or non-ascending terms raise
    :class:`CertificateError` naming the index.
    """
    if isinstance(claimed, SeriesRecord):
        terms, tags = list(claimed.terms), list(claimed.factor_tags)
    else:
        terms = [_trivial(G)] + [t for _, t in claimed]
        tags = [tag for tag, _ in claimed]
    if terms[0].order() != 1:
        raise CertificateError("series must start at the trivial group", 0)
    for i, T in enumerate(terms):
        if T.degree != G.degree or not T.is_subgroup(G):
            raise CertificateError(f"term {i} is not a subgroup of the group", i)
        if not G.normalizes(T):
            raise CertificateError(f"term {i} is not normal in the group", i)
        if i and not terms[i - 1].is_subgroup(T):
            raise CertificateError(f"term {i} does not contain term {i - 1}", i)
    if terms[-1].order() != G.order():
        raise CertificateError("series does not reach the whole group", len(terms) - 1)
    checks = []
    for i, tag in enumerate(tags):
        H, K = terms[i + 1], terms[i]
        if tag == SOLUBLE:
            ok = is_soluble(H, modulo=K)
            checks.append(FactorCheck(i, tag, "verified" if ok else "failed", "derived series", H.order() // K.order()))
        elif tag == SEMISIMPLE:
            try:
                status, method = _check_semisimple_factor(H, K)
            except CapacityError as exc:
                status, method = "unverified", str(exc)
            checks.append(FactorCheck(i, tag, status, method, H.order() // K.order()))
        else:
            raise CertificateError(f"unknown factor tag {tag!r}", i + 1)
    statuses = {c.status for c in checks}
    if "failed" in statuses:
        return CertificateVerdict("rejected", None, checks, "a factor failed its check")
    bound = tags.count(SEMISIMPLE)
    status = "verified" if statuses <= {"verified"} else "partial"
    return CertificateVerdict(status, bound, checks, f"nonsoluble length <= {bound}")
