"""Tensor ideals, quantum traces, negligibility, quasi-domination."""

import math

import pytest

from greenring.errors import NegativeCoefficient, NotEndomorphism
from greenring.green import GreenElement, green_mul_labels
from greenring.ideal import (IdealSpec, ideal_closure, ideal_contains,
                             is_negligible, is_quasi_dominated, qdim,
                             quantum_trace)
from greenring.indec import EtaPoint, IndecLabel, realize
from greenring.ratlin import RatMatrix, ZERO
from greenring.rep import direct_sum, hom_basis

ETA0 = EtaPoint.finite(0, 1)
ETA1 = EtaPoint.finite(1, 1)


def test_spec_membership():
    spec = IdealSpec(True, {ETA0: 3, ETA1: math.inf}, default=1)
    assert spec.member_label(IndecLabel.proj(1))
    assert spec.member_label(IndecLabel.mtype(2, 0, ETA0))
    assert not spec.member_label(IndecLabel.mtype(3, 0, ETA0))
    assert spec.member_label(IndecLabel.mtype(5, 1, ETA1))
    assert not spec.member_label(IndecLabel.mtype(1, 0, EtaPoint.infinity()))
    assert not spec.member_label(IndecLabel.simple(0))
    assert not spec.member_label(IndecLabel.syz_pos(1, 1))


def test_spec_json_roundtrip():
    for spec in (IdealSpec.improper(), IdealSpec.projective(),
                 IdealSpec(True, {ETA0: math.inf}, default=2)):
        assert IdealSpec.from_json_dict(spec.to_json_dict()) == spec


def test_spec_rejects_bad_bounds():
    with pytest.raises(ValueError):
        IdealSpec(True, {ETA0: 0})
    with pytest.raises(ValueError):
        IdealSpec(True, default=-1)


def test_closure_rules():
    assert not ideal_closure([IndecLabel.simple(0)]).proper
    assert not ideal_closure([IndecLabel.syz_neg(2, 1)]).proper
    assert ideal_closure([IndecLabel.proj(0)]) == IdealSpec.projective()
    spec = ideal_closure([IndecLabel.mtype(2, 0, ETA0),
                          IndecLabel.mtype(1, 1, ETA0)])
    assert spec.bound(ETA0) == 3 and spec.bound(ETA1) == 1


def test_ideal_contains_green_elements():
    spec = ideal_closure([IndecLabel.mtype(1, 0, ETA0)])
    x = (GreenElement.from_label(IndecLabel.mtype(1, 1, ETA0))
         + GreenElement.from_label(IndecLabel.proj(0)).scale(3))
    assert ideal_contains(spec, x)
    y = x + GreenElement.from_label(IndecLabel.mtype(2, 0, ETA0))
    assert not ideal_contains(spec, y)
    with pytest.raises(NegativeCoefficient):
        ideal_contains(spec, x - GreenElement.from_label(
            IndecLabel.proj(0)).scale(5))


def test_closure_is_tensor_stable_spot_check():
    spec = ideal_closure([IndecLabel.mtype(2, 0, ETA1)])
    member = IndecLabel.mtype(1, 1, ETA1)
    for other in (IndecLabel.syz_pos(2, 0), IndecLabel.proj(1),
                  IndecLabel.mtype(2, 0, ETA0)):
        prod = green_mul_labels(member, other)
        assert ideal_contains(spec, prod)


def test_quantum_trace_of_identity_is_qdim():
    for text in ("V(0)", "V(1)", "P(0)", "O(+1,0)", "M(2,0,1)"):
        m = realize(IndecLabel.parse(text), "K2")
        assert quantum_trace(m, RatMatrix.identity(m.dim)) == qdim(m)


def test_quantum_trace_rejects_non_endomorphisms():
    m = realize(IndecLabel.simple(0), "K2")
    p = realize(IndecLabel.proj(0), "K2")
    with pytest.raises(NotEndomorphism):
        quantum_trace(p, RatMatrix.zeros(2, 4))
    with pytest.raises(NotEndomorphism):
        # right shape but not an intertwiner
        quantum_trace(p, RatMatrix(4, 4, {(0, 1): qdim(m)}))


def test_qdim_values():
    assert qdim(realize(IndecLabel.simple(0), "K2")) == 1
    assert qdim(realize(IndecLabel.simple(1), "K2")) == -1
    assert qdim(realize(IndecLabel.proj(0), "K2")) == ZERO
    assert qdim(realize(IndecLabel.syz_pos(2, 0), "K2")) == 1
    assert qdim(realize(IndecLabel.syz_neg(1, 1), "K2")) == 1
    assert qdim(realize(IndecLabel.mtype(3, 0, ETA1), "K2")) == ZERO
    assert qdim(realize(IndecLabel.steinberg(0), "DK1")) == ZERO


def test_negligible_classification():
    negligible = ("P(0)", "P(1)", "M(1,0,0)", "M(2,1,inf)")
    not_negligible = ("V(0)", "V(1)", "O(+1,0)", "O(-2,1)")
    for text in negligible:
        assert is_negligible(realize(IndecLabel.parse(text), "K2")), text
    for text in not_negligible:
        assert not is_negligible(realize(IndecLabel.parse(text), "K2")), text
    assert is_negligible(realize(IndecLabel.steinberg(1), "DK1"))


def test_negligible_means_all_traces_vanish():
    m = realize(IndecLabel.mtype(2, 0, ETA0), "K2")
    for t in hom_basis(m, m):
        assert quantum_trace(m, t) == ZERO


def test_quasi_dominated():
    yes = direct_sum([realize(IndecLabel.simple(1), "K2"),
                      realize(IndecLabel.mtype(1, 0, ETA1), "K2"),
                      realize(IndecLabel.proj(0), "K2")])
    assert is_quasi_dominated(yes)
    no = direct_sum([realize(IndecLabel.simple(0), "K2"),
                     realize(IndecLabel.syz_pos(1, 0), "K2")])
    assert not is_quasi_dominated(no)
    assert is_quasi_dominated(realize(IndecLabel.steinberg(0), "DK1"))
    assert not is_quasi_dominated(realize(IndecLabel.syz_neg(1, 0), "DK1"))
