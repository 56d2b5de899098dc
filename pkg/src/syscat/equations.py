"""The syntax category: parallel pairs whose equalizer is a behavior.

An equation representation is a pair f1, f2 : U -> E; the system it describes
has the equalizer of the pair as its inclusion. Pullbacks here stack equations
while identifying shared variables, and the interpretation into systems
preserves them — `check_preservation` computes both routes and compares.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import carriers, vect
from .carriers import CarrierMap
from .errors import MismatchError
from .systems import System, SystemMorphism, pullback_systems, systems_equal
from .vect import LinMap


@dataclass(frozen=True)
class EquationRep:
    f1: CarrierMap
    f2: CarrierMap

    def __post_init__(self):
        if carriers.carrier_of(self.f1) != carriers.carrier_of(self.f2):
            raise MismatchError("equation maps live in different carriers")
        if self.f1.dom != self.f2.dom or self.f1.cod != self.f2.cod:
            raise MismatchError("equation maps must be a parallel pair")

    @property
    def universum(self):
        return self.f1.dom

    @property
    def codomain(self):
        return self.f1.cod

    def to_json(self) -> dict:
        return {"f1": self.f1.to_json(), "f2": self.f2.to_json()}


def make_equation_rep(f1: CarrierMap, f2: CarrierMap) -> EquationRep:
    return EquationRep(f1, f2)


def kernel_rep(f: LinMap) -> EquationRep:
    """The pair (f, 0); its behavior is the kernel of f."""
    if not isinstance(f, LinMap):
        raise MismatchError("kernel representations require the vector-space carrier")
    return EquationRep(f, vect.zero_map(f.dom, f.cod))


def arr_eq(rep: EquationRep) -> System:
    """Interpret a representation as the system its equalizer carves out."""
    eq = carriers.equalizer(rep.f1, rep.f2)
    return System(eq.arrow)


@dataclass(frozen=True)
class EquationMorphism:
    src: EquationRep
    dst: EquationRep
    psi_u: CarrierMap
    psi_e: CarrierMap

    def __post_init__(self):
        if self.psi_u.dom != self.src.universum or self.psi_u.cod != self.dst.universum:
            raise MismatchError("psi_u does not match the representations")
        if self.psi_e.dom != self.src.codomain or self.psi_e.cod != self.dst.codomain:
            raise MismatchError("psi_e does not match the representations")
        for f, g in ((self.src.f1, self.dst.f1), (self.src.f2, self.dst.f2)):
            if carriers.compose(self.psi_e, f) != carriers.compose(g, self.psi_u):
                raise MismatchError("equation morphism square does not commute")


def identity_equation_morphism(rep: EquationRep) -> EquationMorphism:
    return EquationMorphism(
        rep, rep, carriers.identity(rep.universum), carriers.identity(rep.codomain)
    )


def compose_equation_morphisms(b: EquationMorphism, a: EquationMorphism) -> EquationMorphism:
    if a.dst != b.src:
        raise MismatchError("equation morphisms are not composable")
    return EquationMorphism(
        a.src, b.dst, carriers.compose(b.psi_u, a.psi_u), carriers.compose(b.psi_e, a.psi_e)
    )


def arr_eq_morphism(m: EquationMorphism) -> SystemMorphism:
    """The unique system morphism whose universum component is psi_u."""
    src_sys = arr_eq(m.src)
    dst_eq = carriers.equalizer(m.dst.f1, m.dst.f2)
    dst_sys = System(dst_eq.arrow)
    # psi_u . e equalizes the target pair, so it factors through the equalizer.
    phi_b = carriers.equalizer_mediate(dst_eq, carriers.compose(m.psi_u, src_sys.inclusion))
    return SystemMorphism(src_sys, dst_sys, phi_b, m.psi_u)


@dataclass(frozen=True)
class EquationPullback:
    rep: EquationRep
    proj1: EquationMorphism
    proj2: EquationMorphism


def pullback_equations(m: EquationMorphism, n: EquationMorphism) -> EquationPullback:
    """Stack two representations over a common one, identifying shared variables."""
    if m.dst != n.dst:
        raise MismatchError("pullback requires morphisms into the same representation")
    upb = carriers.pullback(m.psi_u, n.psi_u)
    epb = carriers.pullback(m.psi_e, n.psi_e)
    f1 = carriers.pullback_mediate(
        epb,
        carriers.compose(m.src.f1, upb.proj1),
        carriers.compose(n.src.f1, upb.proj2),
    )
    f2 = carriers.pullback_mediate(
        epb,
        carriers.compose(m.src.f2, upb.proj1),
        carriers.compose(n.src.f2, upb.proj2),
    )
    rep = EquationRep(f1, f2)
    proj1 = EquationMorphism(rep, m.src, upb.proj1, epb.proj1)
    proj2 = EquationMorphism(rep, n.src, upb.proj2, epb.proj2)
    return EquationPullback(rep, proj1, proj2)


@dataclass(frozen=True)
class PreservationReport:
    syntax_system: System
    semantics_system: System
    equal: bool

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "syntax": self.syntax_system.to_json(),
            "semantics": self.semantics_system.to_json(),
        }


def check_preservation(m: EquationMorphism, n: EquationMorphism) -> PreservationReport:
    """Interpret-then-pull-back versus pull-back-then-interpret, compared exactly."""
    syntax_side = arr_eq(pullback_equations(m, n).rep)
    semantics_side = pullback_systems(arr_eq_morphism(m), arr_eq_morphism(n)).system
    return PreservationReport(
        syntax_side, semantics_side, systems_equal(syntax_side, semantics_side)
    )
