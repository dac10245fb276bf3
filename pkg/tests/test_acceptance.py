"""Acceptance criteria: one test and one pass/fail line per criterion.

Each criterion is decided at exact equality by the verification suites;
the suites are computed once per session and shared across criteria.
"""

import time

import pytest

from greenring.verify import SUITES, run_suites

_TIMINGS = {}


@pytest.fixture(scope="session")
def suites():
    out = {}
    for name, fn in SUITES.items():
        start = time.monotonic()
        out[name] = fn()
        _TIMINGS[name] = time.monotonic() - start
    return out


def _passed(suite, fragment):
    """The unique check line containing the fragment, as a boolean."""
    hits = [l for l in suite.lines if fragment in l and l.lstrip()[0] == "["]
    assert hits, f"no check line matches {fragment!r}"
    return all(l.lstrip().startswith("[pass]") for l in hits)


def _report(number, title, ok):
    print(f"criterion {number:02d} ({title}): {'PASS' if ok else 'FAIL'}")
    assert ok


def test_criterion_01_hopf_axioms(suites):
    ok = suites["hopf"].ok and _TIMINGS["hopf"] < 1.0
    _report(1, "Hopf axioms for K1..K3 and DK1, under 1s", ok)


def test_criterion_02_fusion_oracle_agreement(suites):
    s = suites["fusion"]
    ok = (_passed(s, "K2 products")
          and _passed(s, "M-family products over the full eta set")
          and _passed(s, "recorded parity witness")
          and _TIMINGS["fusion"] < 30.0)
    _report(2, "closed-form fusion = oracle, s,n <= 4, six etas, "
            "under 30s", ok)


def test_criterion_03_projective_subtable(suites):
    s = suites["fusion"]
    ok = all(_passed(s, f"K{m}: P(i) x P(j)") for m in (1, 2, 3))
    _report(3, "P(i) x P(j) = 2^(m-1)(P(0)+P(1)) over K1..K3", ok)


def test_criterion_04_presentations(suites):
    s = suites["greenring"]
    ok = _passed(s, "over DK1") and _passed(s, "over K2")
    _report(4, "presentation relations vanish in both Green rings", ok)


def test_criterion_05_r0_correspondence(suites):
    s = suites["fusion"]
    ok = (_passed(s, "in_r0 accepts")
          and _passed(s, "r0 products agree"))
    _report(5, "the r0 subring matches the K2 Green ring", ok)


def test_criterion_06_resolutions(suites):
    s = suites["fusion"]
    ok = (_passed(s, "minimal resolution")
          and _passed(s, "dim Omega"))
    _report(6, "resolution multiplicities (k+1) and dims 2s+1", ok)


def test_criterion_07_auslander(suites):
    s = suites["auslander"]
    ok = all(_passed(s, f"over K{m}") for m in (1, 2, 3))
    _report(7, "Auslander algebra of K_m is K_m, m = 1..3", ok)


def test_criterion_08_ideal_lattice(suites):
    s = suites["ideals"]
    ok = (_passed(s, "20 sampled ideal specs")
          and _passed(s, "improper ideal")
          and _passed(s, "stable under tensoring"))
    _report(8, "ideal specs distinguished, improper closures, "
            "tensor stability", ok)


def test_criterion_09_negligibility(suites):
    s = suites["ideals"]
    ok = (_passed(s, "negligible exactly")
          and _passed(s, "qdim values"))
    _report(9, "negligibles are projectives, M family and Steinberg; "
            "qdim values", ok)


def test_criterion_10_quasi_domination(suites):
    ok = _passed(suites["ideals"], "50 random direct sums")
    _report(10, "quasi-domination on 50 deterministic random sums", ok)


def test_criterion_11_simple_image_lemma(suites):
    ok = suites["lemma"].ok
    _report(11, "both simple-image implementations agree exhaustively", ok)


def test_criterion_12_deterministic_verify():
    first = run_suites(list(SUITES))
    second = run_suites(list(SUITES))
    ok = first[0] and second[0] and first[1] == second[1]
    _report(12, "two full verify runs are byte-identical", ok)
