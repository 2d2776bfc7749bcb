import dataclasses

import pytest
from hypothesis import given, settings

import effectkit as ek
from effectkit.lemmas import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    SUITE_ORDER,
    check_C1,
    check_L14,
    check_L14_L15,
    check_L15,
    check_L20,
    check_L22,
    check_L30,
    check_L30_L31_L32,
    check_L31,
    check_L32,
    check_L33,
    check_T36,
    check_T36_L33_C1,
    has_trivial_sharps,
    homogeneity_witness,
    is_homogeneous,
    is_homogeneous_alt,
    lemma_suite,
    render_reports,
    verify_homogeneity_witness,
)

from conftest import small_algebras


def hsum(*lengths):
    return ek.horizontal_sum([ek.chain(l) for l in lengths])


def test_homogeneous_examples():
    assert is_homogeneous(ek.chain(5))
    assert is_homogeneous(ek.boolean_diamond())
    assert is_homogeneous(hsum(2, 2))
    assert is_homogeneous(ek.direct_product(ek.chain(2), ek.chain(3)))


def test_non_homogeneous_witness(e6):
    w = homogeneity_witness(e6)
    assert w == ek.HomogeneityWitness(u=1, v1=2, v2=2)
    assert verify_homogeneity_witness(e6, w)
    assert not is_homogeneous(e6)
    # a genuine witness must stop re-verifying on a homogeneous algebra
    assert not verify_homogeneity_witness(ek.chain(5), ek.HomogeneityWitness(1, 1, 1))


@settings(max_examples=50, deadline=None)
@given(small_algebras())
def test_homogeneity_differential_variants(e):
    assert is_homogeneous(e) == is_homogeneous_alt(e)


def test_homogeneity_differential_on_non_homogeneous(e6):
    assert not is_homogeneous_alt(e6)


def test_L14_examples():
    assert check_L14(ek.boolean_diamond()).verdict == PASS
    assert check_L14(ek.direct_product(ek.chain(2), ek.chain(2))).verdict == PASS
    assert check_L14(ek.chain(6)).verdict == PASS


def test_L15_examples():
    for e in (ek.boolean_diamond(), ek.chain(4), hsum(2, 3, 4)):
        assert check_L15(e).verdict == PASS


def test_L20_examples():
    assert check_L20(hsum(3, 3)).verdict == PASS
    assert check_L20(ek.boolean_diamond()).verdict == NOT_APPLICABLE
    assert check_L20(ek.chain(2)).verdict == PASS


def test_L22_examples():
    assert check_L22(ek.chain(4)).verdict == PASS
    assert check_L22(hsum(2, 3)).verdict == PASS
    # the diamond is homogeneous, so the oracle applies; no atom sits below
    # its orthosupplement and the statement passes vacuously
    assert check_L22(ek.boolean_diamond()).verdict == PASS


def test_L22_not_applicable_on_non_homogeneous(e6):
    assert check_L22(e6).verdict == NOT_APPLICABLE


def test_L30_L31_L32_examples():
    h = hsum(2, 4)
    for r in check_L30_L31_L32(h):
        assert r.verdict == PASS
    b = h.atoms[1]
    assert h.isotropy_index(b) == 4
    assert h.multiple(b, 3) == h.ortho[b]
    for r in check_L30_L31_L32(ek.chain(7)):
        assert r.verdict == PASS
    for r in check_L30_L31_L32(ek.boolean_diamond()):
        assert r.verdict == NOT_APPLICABLE


def test_L32_covers_two_element_algebra():
    # the unit is the only atom and its orthosupplement is the 0-fold multiple
    assert check_L32(ek.chain(1)).verdict == PASS


def test_T36_L33_C1_examples():
    h = hsum(3, 5)
    reports = check_T36_L33_C1(h)
    assert [r.verdict for r in reports] == [PASS, PASS, PASS]
    a, b = h.atoms
    ia = set(h.interval(a, h.ortho[a]))
    ib = set(h.interval(b, h.ortho[b]))
    interior = set(h.carrier) - {0, h.one}
    assert ia | ib == interior and not ia & ib
    assert check_T36(ek.chain(4)).verdict == PASS
    p = ek.direct_product(ek.chain(2), ek.chain(3))
    assert len(p.sharp_set) == 4
    for r in check_T36_L33_C1(p):
        assert r.verdict == NOT_APPLICABLE


def test_lemma_suite_order_and_verdicts():
    reports = lemma_suite(ek.chain(5))
    assert tuple(r.lemma_id for r in reports) == SUITE_ORDER
    assert all(r.verdict == PASS for r in reports)
    d_reports = lemma_suite(ek.boolean_diamond())
    assert {r.verdict for r in d_reports} == {PASS, NOT_APPLICABLE}
    assert not any(r.verdict == FAIL for r in d_reports)


def test_render_reports_format():
    text = render_reports(lemma_suite(ek.chain(3)))
    lines = text.splitlines()
    assert lines[0] == "L14 Pass"
    assert len(lines) == len(SUITE_ORDER)
    bad = ek.LemmaReport("L20", FAIL, (3,))
    assert bad.render() == "L20 Fail witness=(3,)"


@settings(max_examples=40, deadline=None)
@given(small_algebras())
def test_applicability_is_monotone(e):
    # the triple-hypothesis oracles imply the weaker trivial-sharp one applies
    if check_L30(e).verdict != NOT_APPLICABLE:
        assert check_L20(e).verdict != NOT_APPLICABLE


@settings(max_examples=40, deadline=None)
@given(small_algebras())
def test_no_failures_on_valid_corpus(e):
    assert not any(r.verdict == FAIL for r in lemma_suite(e))


def _doctored(e, **overrides):
    return dataclasses.replace(e, **overrides)


def test_fail_paths_on_doctored_algebra():
    # dropping an atom from the cached atom set breaks the covering oracle,
    # exercising Fail reporting and witness soundness plumbing
    h = hsum(2, 2)
    bad = _doctored(h, atoms=(1,))
    r = check_L20(bad)
    assert r.verdict == FAIL
    assert r.witness == (2,)
    assert 2 not in {x for a in bad.atoms for x in bad.interval(a, bad.ortho[a])}


def test_C1_fail_on_doctored_algebra():
    # pretending a multiple is an atom makes the intervals overlap
    c = ek.chain(4)
    bad = _doctored(c, atoms=(1, 2))
    r = check_C1(bad)
    assert r.verdict == FAIL
    assert r.witness is not None


def test_analysis_report_examples():
    rep = ek.analyze(hsum(2, 3))
    assert rep.homogeneous and rep.lattice
    assert rep.sharp == (0, 4)
    assert rep.isotropy == (2, 3)
    d = ek.analyze(ek.boolean_diamond())
    assert d.sharp == (0, 1, 2, 3)
    assert d.homogeneous
    p = ek.analyze(ek.from_spec("prod:chain:2,chain:2"))
    assert len(p.sharp) == 4
    assert rep.as_dict()["atoms"] == [1, 2]
