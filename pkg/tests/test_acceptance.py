"""Acceptance criteria 1-11, one PASS/FAIL line each.

Lines are printed as each test runs (visible with ``-s``) and repeated in the
terminal summary by ``conftest.py``.
"""

import glob
import os
from functools import lru_cache

import pytest

from lengthlab.algebra import is_soluble
from lengthlab.cli import parse_certificate
from lengthlab.corpus import build_group, elaborate, load_corpus
from lengthlab.coprime import (
    check_coprime_quotient_lemma,
    check_proposition,
    check_theorem2,
    check_theorem3,
    check_thompson,
    check_wang_chen,
    fixed_point_subgroup,
)
from lengthlab.errors import CorpusSyntaxError
from lengthlab.report import emit_report, parse_json_report
from lengthlab.runner import invariant_normal_subgroups, run_suite, suite_passed
from lengthlab.series import (
    action_kernel_on_components,
    bound_lambda,
    bound_thompson,
    fitting_height,
    fitting_subgroup,
    generalized_fitting_preimage,
    generalized_fitting_subgroup,
    h_star,
    nonsoluble_length,
    soluble_radical,
    verify_series_certificate,
)
from oracle import Oracle

ROOT = os.path.dirname(os.path.dirname(__file__))
CORPUS = os.path.join(ROOT, "corpus")
FIXTURES = os.path.join(ROOT, "tests", "fixtures")
ENUMERABLE = 200000

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str):
    RESULTS[n] = (ok, detail)
    print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@lru_cache(maxsize=None)
def entries():
    out = []
    for path in sorted(glob.glob(os.path.join(CORPUS, "*.lab"))):
        out.extend(load_corpus(path))
    return tuple(out)


@lru_cache(maxsize=None)
def built(name):
    [e] = [e for e in entries() if e.name == name]
    return elaborate(e)


def test_criterion_01_structural_goldens():
    S4, _ = built("S4")
    SL25, _ = built("SL25")
    S5, _ = built("S5")
    GL25, _ = built("GL25")
    W, _ = built("A5wrC2")
    rep = generalized_fitting_subgroup(GL25)
    checks = {
        "F(S4)=V4, h(S4)=3": fitting_subgroup(S4).order() == 4 and fitting_height(S4) == 3,
        "|S(SL2(5))|=2": soluble_radical(SL25).order() == 2,
        "F*(S5)=A5, h*=2, lambda=1": generalized_fitting_preimage(S5).order() == 60
        and h_star(S5) == 2 and nonsoluble_length(S5) == 1,
        "|F*(GL2(5))|=240, one component of order 120": rep.fstar.order() == 240
        and [Q.order() for Q in rep.components] == [120],
        "lambda(A5 wr C2)=1, h*=2": nonsoluble_length(W) == 1 and h_star(W) == 2,
    }
    soluble = []
    for e in entries():
        G, _ = built(e.name)
        if G.order() <= ENUMERABLE and is_soluble(G):
            soluble.append((e.name, nonsoluble_length(G)))
    checks[f"lambda=0 on {len(soluble)} soluble groups"] = len(soluble) >= 8 and all(l == 0 for _, l in soluble)
    bad = [k for k, v in checks.items() if not v]
    record(1, not bad, "; ".join(bad) if bad else f"{len(checks) - 1} goldens match; lambda=0 on {len(soluble)} soluble groups")


def test_criterion_02_oracle_equivalence():
    compared, bad = 0, []
    for e in entries():
        G, _ = built(e.name)
        if G.order() > 2000:
            continue
        o = Oracle(G.generators, G.degree)
        for label, ours, theirs in (("S", soluble_radical(G), o.soluble_radical),
                                    ("F", fitting_subgroup(G), o.fitting),
                                    ("F*", generalized_fitting_preimage(G), o.generalized_fitting)):
            if frozenset(ours.element_list()) != theirs:
                bad.append(f"{e.name}:{label}")
        compared += 1
    record(2, not bad and compared > 0, f"{compared} groups of order <= 2000" + (f"; mismatches {bad}" if bad else ""))


def test_criterion_03_fstar_depth():
    depths = {}
    for e in entries():
        G, act = built(e.name)
        if act is None or not act.coprime or not act.prime_order or G.order() > ENUMERABLE:
            continue
        r = check_theorem2(act)
        depths[e.name] = (r.lhs, r.passed)
    listed = {n: depths.get(n, (None, False))[0] for n in ("PSL32", "C5inv", "AGL8")}
    ok = all(p for _, p in depths.values()) and all(d == 1 for d in listed.values())
    record(3, ok, f"{len(depths)} prime-order actions, listed depths {listed}")


def test_criterion_04_lambda_tightness():
    G, act = built("PSL32")
    lg, lc = nonsoluble_length(G), nonsoluble_length(fixed_point_subgroup(act))
    r3, rp = check_theorem3(act), check_proposition(act)
    ok = (lg, lc) == (1, 0) and lg == lc + 1 == bound_lambda(1, 0) and r3.slack == 0 and rp.slack == 0 \
        and r3.passed and rp.passed
    record(4, ok, f"lambda(G)={lg}, lambda(C)={lc}, bound={bound_lambda(1, 0)}, slack={r3.slack}")


def test_criterion_05_thompson():
    G, act = built("AGL8")
    height, fit = check_thompson(act)
    ok = (height.lhs, height.rhs) == (2, 5) == (fitting_height(G), bound_thompson(1, 1)) and height.passed \
        and fit.passed
    record(5, ok, f"h(G)={height.lhs} <= {height.rhs}; F(C) at depth {fit.lhs} <= 4")


def test_criterion_06_coprime_quotient_lemma():
    pairs, bad = 0, []
    for e in entries():
        G, act = built(e.name)
        if act is None or not act.coprime or G.order() > ENUMERABLE:
            continue
        for N in invariant_normal_subgroups(act, 6):
            pairs += 1
            if not check_coprime_quotient_lemma(act, N).passed:
                bad.append((e.name, N.order()))
    record(6, pairs >= 10 and not bad, f"{pairs} (action, N) pairs" + (f"; failures {bad}" if bad else ""))


def test_criterion_07_component_kernel():
    checked, bad = 0, []
    for e in entries():
        G, _ = built(e.name)
        if G.order() > ENUMERABLE or is_soluble(G):
            continue
        checked += 1
        if not action_kernel_on_components(G).passed:
            bad.append(e.name)
    record(7, checked > 0 and not bad, f"{checked} nonsoluble groups" + (f"; failures {bad}" if bad else ""))


def test_criterion_08_simple_fixed_points():
    _, act = built("PSL32")
    r = check_wang_chen(act)
    record(8, r.passed, r.detail)


def test_criterion_09_certificate():
    G, _ = built("A5wrA5")
    path = os.path.join(CORPUS, "a5wra5.cert")
    with open(path, encoding="utf-8") as fh:
        claimed = parse_certificate(fh.read(), G, path)
    v = verify_series_certificate(G, claimed)
    top = v.factors[-1]
    ok = G.order() == 60 ** 6 and v.status == "verified" and v.witnessed_bound == 2 \
        and top.method == "quotient of order 60"
    record(9, ok, f"{v.status}, lambda <= {v.witnessed_bound}, top factor: {top.method}")


def test_criterion_10_direct_product_laws():
    pairs, bad = 0, []
    for e in entries():
        if e.construction.name != "direct" or len(e.construction.args) != 2:
            continue
        G, _ = built(e.name)
        A, B = (build_group(c) for c in e.construction.args)
        pairs += 1
        if h_star(G) != max(h_star(A), h_star(B)) or nonsoluble_length(G) != max(nonsoluble_length(A),
                                                                                  nonsoluble_length(B)):
            bad.append(e.name)
    record(10, pairs >= 5 and not bad, f"{pairs} product pairs" + (f"; failures {bad}" if bad else ""))


def test_criterion_11_parser_and_reports():
    files = sorted(glob.glob(os.path.join(CORPUS, "*.lab")))
    parsed = all(load_corpus(p) for p in files)
    located = []
    for name in ("arity.lab", "unknown.lab", "syntax.lab"):
        try:
            load_corpus(os.path.join(FIXTURES, name))
        except CorpusSyntaxError as err:
            located.append(err.line >= 1 and err.column >= 1)
    core = [e for e in entries() if e.name in ("S5", "C5inv", "AGL8", "A5wrA5")]
    text = emit_report(run_suite(core), "json")
    stable = emit_report(parse_json_report(text), "json") == text
    ok = parsed and len(located) == 3 and all(located) and stable
    record(11, ok, f"{len(files)} corpus files parse; {sum(located)}/3 located errors; json round-trip stable={stable}")


@pytest.mark.slow
def test_shipped_corpus_suite_passes():
    reports = run_suite(entries())
    assert suite_passed(reports), emit_report([r for r in reports if r.failed])
