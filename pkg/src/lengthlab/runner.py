"""Run every applicable checker over corpus entries."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import series as S
from .algebra import centralizer, conjugacy_class_representatives, is_soluble, normal_closure
from .coprime import (
    CoprimeAction,
    check_coprime_quotient_lemma,
    check_fixed_point_decomposition,
    check_proposition,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_thompson,
    check_wang_chen,
    containment_depth,
    fixed_point_subgroup,
    is_nonabelian_simple,
)
from .corpus import CorpusEntry, elaborate
from .errors import CapacityError, LengthLabError
from .group import DEFAULT_ENUMERATION_LIMIT, DEFAULT_QUOTIENT_LIMIT, PermGroup, limits
from .report import CAPACITY, ERROR, NOT_MET, TheoremReport

CHECKERS = (
    "expect", "structure.fstar", "structure.series", "structure.soluble", "component-kernel",
    "coprime-quotient", "decomposition", "hstar-bound", "fstar-depth", "lambda-bound", "lambda-step",
    "thompson", "simple-fixed-points",
)


@dataclass
class SuiteOptions:
    only: tuple[str, ...] | None = None
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT
    quotient_limit: int = DEFAULT_QUOTIENT_LIMIT
    quotient_samples: int = 6
    jobs: int = 1

    def wants(self, checker: str) -> bool:
        if not self.only:
            return True
        return any(checker == o or checker.startswith(o + ".") for o in self.only)


def invariant(G: PermGroup, act: CoprimeAction | None, key: str):
    if key == "order":
        return G.order()
    if key == "radical":
        return S.soluble_radical(G).order()
    if key == "fitting":
        return S.fitting_subgroup(G).order()
    if key == "fstar":
        return S.generalized_fitting_preimage(G).order()
    if key == "layer":
        return S.generalized_fitting_subgroup(G).layer.order()
    if key == "components":
        return sorted(Q.order() for Q in S.generalized_fitting_subgroup(G).components)
    if key == "h":
        return S.fitting_height(G)
    if key == "hstar":
        return S.h_star(G)
    if key == "lambda":
        return S.nonsoluble_length(G)
    if key == "chief":
        return S.chief_series(G).length
    if act is None:
        raise LengthLabError(f"{key!r} needs an automorphism")
    if key == "fixed":
        return fixed_point_subgroup(act).order()
    if key == "coprime":
        return int(act.coprime)
    if key == "depth":
        FC = S.generalized_fitting_preimage(fixed_point_subgroup(act))
        return containment_depth(FC, S.generalized_fitting_series(G).terms, 9)
    raise LengthLabError(f"unknown invariant {key!r}")


def _guard(entry, checker, fn):
    t0 = time.perf_counter()
    try:
        out = fn()
    except CapacityError as exc:
        return [TheoremReport.skipped(entry, checker, CAPACITY, str(exc), time.perf_counter() - t0)]
    except LengthLabError as exc:
        return [TheoremReport.skipped(entry, checker, ERROR, f"{type(exc).__name__}: {exc}",
                                      time.perf_counter() - t0)]
    return out if isinstance(out, list) else [out]


def _expect(name, G, act, key, want):
    def run():
        t0 = time.perf_counter()
        got = invariant(G, act, key)
        if isinstance(want, list) or isinstance(got, list):
            bad = int(got != want)
            return TheoremReport.compare(name, f"expect.{key}", bad, 0, relation="==",
                                         detail=f"computed {got}, expected {want}",
                                         timing=time.perf_counter() - t0)
        return TheoremReport.compare(name, f"expect.{key}", got, want, relation="==",
                                     timing=time.perf_counter() - t0)

    return _guard(name, f"expect.{key}", run)


def _structure_fstar(name, G):
    t0 = time.perf_counter()
    rep = S.generalized_fitting_subgroup(G)
    bad = list(rep.check())
    if not rep.fitting.is_subgroup(rep.fstar):
        bad.append("F not in F*")
    if not centralizer(G, rep.fstar.generators).is_subgroup(rep.fitting):
        bad.append("C(F*) not in F")
    return TheoremReport.compare(name, "structure.fstar", len(bad), 0,
                                 detail="; ".join(bad) or f"|F|={rep.fitting.order()} |F*|={rep.fstar.order()}",
                                 timing=time.perf_counter() - t0)


def _structure_series(name, G):
    t0 = time.perf_counter()
    rec = S.upper_nonsoluble_series(G)
    bad = 0
    for i, tag in enumerate(rec.factor_tags):
        H, K = rec.terms[i + 1], rec.terms[i]
        if tag == "soluble":
            bad += not is_soluble(H, modulo=K)
        else:
            try:
                S.semisimple_factor_decomposition(G, K, H)
            except LengthLabError:
                bad += 1
    return TheoremReport.compare(name, "structure.series", bad, 0,
                                 detail=f"lambda={rec.factor_tags.count('semisimple')}",
                                 timing=time.perf_counter() - t0)


def _structure_soluble(name, G):
    t0 = time.perf_counter()
    h, hs, lam = S.fitting_height(G), S.h_star(G), S.nonsoluble_length(G)
    bad = (h != hs) + (lam != 0)
    return TheoremReport.compare(name, "structure.soluble", bad, 0, detail=f"h={h} h*={hs} lambda={lam}",
                                 timing=time.perf_counter() - t0)


def _lemma21(name, G):
    t0 = time.perf_counter()
    res = S.action_kernel_on_components(G)
    return TheoremReport.compare(name, "component-kernel", int(not res.passed), 0,
                                 detail=f"{len(res.factors)} factor(s), |K/L| = {res.kernel.order() // res.layer.order()}",
                                 timing=time.perf_counter() - t0)


def invariant_normal_subgroups(act: CoprimeAction, samples: int) -> list[PermGroup]:
    """``1``, ``G`` and normal closures in ``G A`` of class representatives of ``G``."""
    G = act.g_part
    found = [G.subgroup([], check=False), G]
    for x in conjugacy_class_representatives(G)[1:]:
        if len(found) >= samples + 2:
            break
        N = normal_closure(act.ambient, [x], check=False)
        N = G.subgroup(N.generators, check=False, chain=N.chain)
        if not any(M.equals(N) for M in found):
            found.append(N)
    return found


def _quotient_lemma(name, act, samples):
    t0 = time.perf_counter()
    if not act.coprime:
        return TheoremReport.skipped(name, "coprime-quotient", NOT_MET, "action is not coprime")
    Ns = invariant_normal_subgroups(act, samples)
    bad = sum(not check_coprime_quotient_lemma(act, N).passed for N in Ns)
    return TheoremReport.compare(name, "coprime-quotient", bad, 0, detail=f"{len(Ns)} subgroup(s) checked",
                                 timing=time.perf_counter() - t0)


def run_entry(entry: CorpusEntry, options: SuiteOptions) -> list[TheoremReport]:
    name = entry.name
    out: list[TheoremReport] = []
    with limits(options.enumeration_limit, options.quotient_limit):
        built = _guard(name, "construct", lambda: [elaborate(entry)])
        if isinstance(built[0], TheoremReport):
            return built
        G, act = built[0]
        if options.wants("expect"):
            for key, want in entry.expected.items():
                out += _expect(name, G, act, key, want)
        if G.order() > options.enumeration_limit:
            for chk in ("structure.fstar", "structure.series"):
                if options.wants(chk):
                    out.append(TheoremReport.skipped(name, chk, CAPACITY,
                                                     f"order {G.order()} exceeds the enumeration limit"))
            return out
        soluble = is_soluble(G)
        if options.wants("structure.fstar"):
            out += _guard(name, "structure.fstar", lambda: _structure_fstar(name, G))
        if options.wants("structure.series"):
            out += _guard(name, "structure.series", lambda: _structure_series(name, G))
        if soluble and options.wants("structure.soluble"):
            out += _guard(name, "structure.soluble", lambda: _structure_soluble(name, G))
        if not soluble and options.wants("component-kernel"):
            out += _guard(name, "component-kernel", lambda: _lemma21(name, G))
        if act is None:
            return out
        if options.wants("coprime-quotient"):
            out += _guard(name, "coprime-quotient", lambda: _quotient_lemma(name, act, options.quotient_samples))
        if options.wants("decomposition"):
            out += _guard(name, "decomposition", lambda: check_fixed_point_decomposition(act))
        if options.wants("hstar-bound"):
            out += _guard(name, "hstar-bound", lambda: check_theorem1(act))
        if options.wants("fstar-depth"):
            if act.prime_order:
                out += _guard(name, "fstar-depth", lambda: check_theorem2(act))
            else:
                out.append(TheoremReport.skipped(name, "fstar-depth", NOT_MET, f"|A| = {act.a_order} is not prime"))
        if options.wants("lambda-bound"):
            out += _guard(name, "lambda-bound", lambda: check_theorem3(act))
        if options.wants("lambda-step"):
            out += _guard(name, "lambda-step", lambda: check_proposition(act))
        if soluble and options.wants("thompson"):
            out += _guard(name, "thompson", lambda: check_thompson(act))
        if options.wants("simple-fixed-points") and not soluble and is_nonabelian_simple(G):
            out += _guard(name, "simple-fixed-points", lambda: check_wang_chen(act))
    return out


def run_suite(entries, options: SuiteOptions | None = None) -> list[TheoremReport]:
    """Reports for every entry, in corpus order then checker id."""
    options = options or SuiteOptions()
    entries = list(entries)
    if options.jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(options.jobs) as pool:
            chunks = list(pool.map(run_entry, entries, [options] * len(entries)))
    else:
        chunks = [run_entry(e, options) for e in entries]
    return [r for chunk in chunks for r in sorted(chunk, key=lambda r: r.checker)]


def suite_passed(reports) -> bool:
    return not any(r.failed for r in reports)
