"""Coprime automorphism actions realised inside an ambient permutation group,
their fixed-point subgroups, and the theorem checkers."""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd

from .algebra import is_nilpotent, is_soluble, normal_closure, subgroup_from_elements
from .errors import CoprimalityError, DomainError, InputError, NormalizationError, NotSemidirectError
from .group import PermGroup
from .perm import conj, inv, mul
from .quotients import QuotientGroup
from .report import NOT_MET, TheoremReport
from .series import (
    alpha,
    bound_h_star,
    bound_lambda,
    bound_thompson,
    chief_series,
    fitting_series,
    fitting_subgroup,
    generalized_fitting_preimage,
    generalized_fitting_series,
    fitting_height,
    h_star,
    nonsoluble_length,
)
from .records import SEMISIMPLE


@dataclass
class CoprimeAction:
    ambient: PermGroup
    g_part: PermGroup
    a_part: PermGroup
    a_order: int
    coprime: bool
    semidirect: bool
    name: str = ""

    @property
    def prime_order(self) -> bool:
        return alpha(self.a_order) == 1


def make_action(ambient: PermGroup, g_gens, a_gens, *, require_coprime: bool = True, name: str = "") -> CoprimeAction:
    """Validate ``A`` normalising ``G`` inside ``ambient = G A`` with ``G ∩ A = 1``."""
    G = ambient.subgroup(g_gens)
    A = ambient.subgroup(a_gens)
    if not A.normalizes(G):
        raise NormalizationError("A does not normalise G")
    if ambient.order() != G.order() * A.order():
        raise NotSemidirectError(
            f"|ambient| = {ambient.order()} but |G||A| = {G.order() * A.order()}")
    coprime = gcd(G.order(), A.order()) == 1
    if require_coprime and not coprime:
        raise CoprimalityError(f"gcd(|G|, |A|) = {gcd(G.order(), A.order())}")
    # standalone copies so invariants of G and A are cached on them
    G0 = PermGroup(G.generators, G.degree, chain=G.chain, name=name or None)
    A0 = PermGroup(A.generators, A.degree, chain=A.chain)
    return CoprimeAction(ambient, G0, A0, A.order(), coprime, True, name)


def action_from_automorphism(G: PermGroup, phi, *, require_coprime: bool = True, name: str = "") -> CoprimeAction:
    from .constructions import extend_by

    ambient = extend_by(G, phi)
    return make_action(ambient, G.generators, [phi] if any(i != x for i, x in enumerate(phi)) else [],
                       require_coprime=require_coprime, name=name)


def fixed_point_subgroup(act: CoprimeAction) -> PermGroup:
    """``C_G(A)`` by filtering the element cache of ``G``."""
    G = act.g_part
    if "fixed" not in G.cache:
        ags = [tuple(a) for a in act.a_part.generators]
        elems = [g for g in G.element_list() if all(conj(g, a) == g for a in ags)]
        C = subgroup_from_elements(G, elems)
        G.cache["fixed"] = PermGroup(C.generators, G.degree, chain=C.chain)
    return G.cache["fixed"]


def commutator_with_action(act: CoprimeAction) -> PermGroup:
    """``[G, A]``: normal closure in ``G`` of ``g^-1 g^a`` over generators."""
    G = act.g_part
    comms = [mul(inv(tuple(g)), conj(tuple(g), tuple(a))) for g in G.generators for a in act.a_part.generators]
    return normal_closure(G, comms, check=False)


@dataclass
class QuotientLemmaVerdict:
    lhs_order: int
    rhs_order: int
    passed: bool


def check_coprime_quotient_lemma(act: CoprimeAction, N: PermGroup) -> QuotientLemmaVerdict:
    """Compare ``C_{G/N}(A)`` with ``C_G(A) N / N`` inside the coset representation."""
    G = act.g_part
    if not (N.is_subgroup(G) and G.normalizes(N)):
        raise InputError("N is not a normal subgroup of G")
    if not act.a_part.normalizes(N):
        raise InputError("N is not A-invariant")
    C = fixed_point_subgroup(act)
    Q = QuotientGroup(G, N, check=False)
    ags = [tuple(a) for a in act.a_part.generators]
    if Q.trivial_kernel:
        lhs = Q.rep.subgroup(C.generators, check=False)
    else:
        fixed = [j for j, r in enumerate(Q.coset_reps)
                 if all(Q._find(conj(r, a)) == j for a in ags)]
        lhs = Q.rep.subgroup([Q.project(Q.coset_reps[j]) for j in fixed], check=False)
    rhs = Q.image(C)
    ok = lhs.is_subgroup(rhs) and rhs.is_subgroup(lhs)
    return QuotientLemmaVerdict(lhs.order(), rhs.order(), ok)


def _not_met(act, checker, reason, t0):
    return TheoremReport.skipped(act.name, checker, NOT_MET, reason, time.perf_counter() - t0)


def containment_depth(H: PermGroup, series_terms, limit: int) -> int | None:
    """Least ``i >= 1`` with ``H`` inside term ``i``; terms past the end equal the top."""
    for i in range(1, limit + 1):
        T = series_terms[min(i, len(series_terms) - 1)]
        if H.is_subgroup(T):
            return i
    return None


def check_theorem2(act: CoprimeAction) -> TheoremReport:
    """``F*(C_G(phi))`` lies in ``F*_9(G)``; records the least such index as the depth."""
    t0 = time.perf_counter()
    if not act.prime_order:
        raise DomainError(f"|A| = {act.a_order} is not prime")
    if not act.coprime:
        return _not_met(act, "fstar-depth", "action is not coprime", t0)
    C = fixed_point_subgroup(act)
    FC = generalized_fitting_preimage(C)
    terms = generalized_fitting_series(act.g_part).terms
    depth = containment_depth(FC, terms, 9)
    lhs = depth if depth is not None else 10
    return TheoremReport.compare(act.name, "fstar-depth", lhs, 9, detail=f"|F*(C)| = {FC.order()}",
                                 timing=time.perf_counter() - t0)


def check_theorem1(act: CoprimeAction) -> TheoremReport:
    t0 = time.perf_counter()
    if not act.coprime:
        return _not_met(act, "hstar-bound", "action is not coprime", t0)
    if not is_soluble(act.a_part):
        return _not_met(act, "hstar-bound", "A is not soluble", t0)
    a = alpha(act.a_order)
    hc = h_star(fixed_point_subgroup(act))
    return TheoremReport.compare(act.name, "hstar-bound", h_star(act.g_part), bound_h_star(a, hc),
                                 detail=f"alpha={a}, h*(C)={hc}", timing=time.perf_counter() - t0)


def check_theorem3(act: CoprimeAction) -> TheoremReport:
    t0 = time.perf_counter()
    if not act.coprime:
        return _not_met(act, "lambda-bound", "action is not coprime", t0)
    a = alpha(act.a_order)
    lc = nonsoluble_length(fixed_point_subgroup(act))
    return TheoremReport.compare(act.name, "lambda-bound", nonsoluble_length(act.g_part), bound_lambda(a, lc),
                                 detail=f"alpha={a}, lambda(C)={lc}", timing=time.perf_counter() - t0)


def check_proposition(act: CoprimeAction) -> TheoremReport:
    """``lambda(G) <= lambda(C_G(phi)) + 1`` when ``[G, phi] = G``."""
    t0 = time.perf_counter()
    if not act.coprime:
        return _not_met(act, "lambda-step", "action is not coprime", t0)
    if not act.prime_order:
        return _not_met(act, "lambda-step", f"|A| = {act.a_order} is not prime", t0)
    GA = commutator_with_action(act)
    if GA.order() != act.g_part.order():
        return _not_met(act, "lambda-step", f"[G, A] has order {GA.order()} < |G|", t0)
    lc = nonsoluble_length(fixed_point_subgroup(act))
    return TheoremReport.compare(act.name, "lambda-step", nonsoluble_length(act.g_part), lc + 1,
                                 detail=f"lambda(C)={lc}", timing=time.perf_counter() - t0)


def check_thompson(act: CoprimeAction) -> list[TheoremReport]:
    """Soluble case: ``h(G) <= 5^alpha h(C)`` and, for prime ``|A|``, ``F(C) <= F_4(G)``."""
    t0 = time.perf_counter()
    G = act.g_part
    if not is_soluble(G):
        raise DomainError("Thompson's bounds need a soluble group")
    if not act.coprime:
        return [_not_met(act, "thompson.height", "action is not coprime", t0),
                _not_met(act, "thompson.fitting", "action is not coprime", t0)]
    a = alpha(act.a_order)
    C = fixed_point_subgroup(act)
    hc = fitting_height(C)
    out = [TheoremReport.compare(act.name, "thompson.height", fitting_height(G), bound_thompson(a, hc),
                                 detail=f"alpha={a}, h(C)={hc}", timing=time.perf_counter() - t0)]
    t1 = time.perf_counter()
    if not act.prime_order:
        out.append(_not_met(act, "thompson.fitting", f"|A| = {act.a_order} is not prime", t1))
    else:
        FC = fitting_subgroup(C)
        depth = containment_depth(FC, fitting_series(G).terms, 4)
        out.append(TheoremReport.compare(act.name, "thompson.fitting", depth if depth else 5, 4,
                                         detail=f"|F(C)| = {FC.order()}", timing=time.perf_counter() - t1))
    return out


def is_nonabelian_simple(G: PermGroup) -> bool:
    cs = chief_series(G)
    return cs.length == 1 and cs.factor_tags[0] == SEMISIMPLE


def check_wang_chen(act: CoprimeAction) -> TheoremReport:
    """Fixed points of a coprime automorphism of a nonabelian simple group are not nilpotent."""
    t0 = time.perf_counter()
    if not is_nonabelian_simple(act.g_part):
        raise DomainError("G is not a nonabelian simple group")
    if not act.coprime or act.a_order == 1:
        return _not_met(act, "simple-fixed-points", "needs a nontrivial coprime A", t0)
    C = fixed_point_subgroup(act)
    nil = is_nilpotent(C)
    return TheoremReport.compare(act.name, "simple-fixed-points", int(nil), 0,
                                 detail=f"|C| = {C.order()}, {'nilpotent' if nil else 'not nilpotent'}",
                                 timing=time.perf_counter() - t0)


def check_fixed_point_decomposition(act: CoprimeAction) -> TheoremReport:
    """``[G, A]`` is normal and A-invariant, and for prime ``|A|`` ``<C_G(A), [G, A]> = G``."""
    t0 = time.perf_counter()
    if not act.coprime:
        return _not_met(act, "decomposition", "action is not coprime", t0)
    G = act.g_part
    GA = commutator_with_action(act)
    C = fixed_point_subgroup(act)
    bad = 0
    bad += not G.normalizes(GA)
    bad += not act.a_part.normalizes(GA)
    bad += GA.join(C).order() != G.order()
    return TheoremReport.compare(act.name, "decomposition", bad, 0,
                                 detail=f"|[G,A]| = {GA.order()}, |C| = {C.order()}",
                                 timing=time.perf_counter() - t0)
