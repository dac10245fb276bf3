"""Tensor ideals of the K2 module category, and negligibility.

A proper additive tensor ideal is determined by a function f from the
rational projective line to the positive integers extended by infinity:
the ideal contains M_k(r,eta) exactly when f(eta) > k, and always
contains the projectives.  IdealSpec stores f as a finite support map
plus a default value.  Negligibility is detected by the pivotal quantum
trace tr(rho(pivot) . T) over an endomorphism basis; the pivot is the
group-like K (the generator b over DK1).
"""

from __future__ import annotations

from math import inf

from .errors import (InvalidLabel, NegativeCoefficient, NotEndomorphism)
from .indec import EtaPoint, identify
from .rep import hom_basis
from .ratlin import ZERO


class IdealSpec:
    """Improper, or Proper with membership bound f: EtaPoint -> Z+ u {inf}.

    support maps EtaPoint to a bound (int >= 1 or math.inf); default is
    the bound applied to every eta not in the support.
    """

    def __init__(self, proper, support=None, default=1):
        self.proper = bool(proper)
        self.support = {}
        self.default = default
        if self.proper:
            if not _valid_bound(default):
                raise ValueError(f"bad default bound {default!r}")
            for eta, bound in (support or {}).items():
                if not isinstance(eta, EtaPoint):
                    raise ValueError("support keys must be EtaPoints")
                if not _valid_bound(bound):
                    raise ValueError(f"bad bound {bound!r}")
                if bound != default:
                    self.support[eta] = bound

    @classmethod
    def improper(cls):
        return cls(False)

    @classmethod
    def projective(cls):
        """The smallest tensor ideal: projectives only (f identically 1)."""
        return cls(True)

    def bound(self, eta):
        return self.support.get(eta, self.default)

    def member_label(self, label):
        """Is a single indecomposable label in the ideal?"""
        if not self.proper:
            return True
        if label.kind == "P":
            return True
        if label.kind == "M":
            return self.bound(label.eta) > label.n
        if label.kind == "St":
            raise InvalidLabel("ideal membership is defined over K2 labels")
        return False

    def __eq__(self, other):
        if not isinstance(other, IdealSpec):
            return NotImplemented
        if self.proper != other.proper:
            return False
        if not self.proper:
            return True
        return self.default == other.default and self.support == other.support

    def __repr__(self):
        if not self.proper:
            return "IdealSpec(improper)"
        sup = ", ".join(f"{e}:{_bound_str(b)}"
                        for e, b in sorted(self.support.items(),
                                           key=lambda kv: kv[0].sort_key()))
        return f"IdealSpec(default={_bound_str(self.default)}, {{{sup}}})"

    def to_json_dict(self):
        if not self.proper:
            return {"proper": False}
        return {
            "proper": True,
            "default": _bound_str(self.default),
            "support": [{"eta": str(e), "bound": _bound_str(b)}
                        for e, b in sorted(self.support.items(),
                                           key=lambda kv: kv[0].sort_key())],
        }

    @classmethod
    def from_json_dict(cls, d):
        if not d.get("proper", True):
            return cls.improper()
        return cls(True,
                   {EtaPoint.parse(e["eta"]): _parse_bound(e["bound"])
                    for e in d.get("support", [])},
                   _parse_bound(d.get("default", "1")))


def _valid_bound(b):
    return b == inf or (isinstance(b, int) and b >= 1)


def _bound_str(b):
    return "inf" if b == inf else str(b)


def _parse_bound(text):
    text = str(text).strip()
    if text == "inf":
        return inf
    b = int(text)
    if b < 1:
        raise ValueError("bounds must be positive")
    return b


def ideal_closure(generators):
    """Smallest additive tensor ideal of K2 containing the generators.

    Simples and syzygy modules tensor-generate the unit, so any such
    generator makes the ideal improper; M_n(r,eta) forces the bound at
    eta up to n+1; projective generators add nothing.
    """
    support = {}
    for lbl in generators:
        if lbl.kind in ("V", "O+", "O-"):
            return IdealSpec.improper()
        if lbl.kind == "St":
            raise InvalidLabel("ideal_closure takes K2 labels")
        if lbl.kind == "M":
            cur = support.get(lbl.eta, 1)
            support[lbl.eta] = max(cur, lbl.n + 1)
    return IdealSpec(True, support, 1)


def ideal_contains(spec, x):
    """Membership of a nonnegative GreenElement, summand by summand."""
    for lbl, c in x.coeffs.items():
        if c < 0:
            raise NegativeCoefficient(
                f"membership undefined for virtual class {c}*{lbl}")
    return all(spec.member_label(lbl) for lbl in x.coeffs)


# ---------------------------------------------------------------------
# negligibility via the pivotal quantum trace


def _pivot_matrix(m):
    return m.actions["K" if m.algebra.name != "DK1" else "b"]


def quantum_trace(m, t):
    """tr(rho(pivot) . T) for an endomorphism T of M."""
    if not (t.rows == m.dim and t.cols == m.dim):
        raise NotEndomorphism("shape mismatch")
    for lbl, _ in m.algebra.generators:
        act = m.actions[lbl]
        if t * act != act * t:
            raise NotEndomorphism(f"does not commute with {lbl}")
    return (_pivot_matrix(m) * t).trace()


def qdim(m):
    """Quantum dimension: quantum trace of the identity."""
    return _pivot_matrix(m).trace()


def is_negligible(m):
    """True iff the quantum trace vanishes on all of End(M)."""
    piv = _pivot_matrix(m)
    return all((piv * t).trace() == ZERO for t in hom_basis(m, m))


def is_quasi_dominated(m):
    """True iff every indecomposable summand is simple or negligible.

    Labels the summands and applies the classification: simples and
    negligible indecomposables (projectives and the M-family; Steinberg
    modules over DK1 are projective) qualify.
    """
    for lbl in identify(m):
        if lbl.kind in ("V", "P", "M", "St"):
            continue
        return False
    return True
