"""The semantics category: behaviors included in universa.

A system is a mono carrier map from its behavior object into its universum.
Morphisms are commuting squares; the taxonomy (controlled / subsystem /
quasi-subsystem) is computed from the mono/epi classification of the two
components, never asserted by callers. Interconnection is a pullback over a
common quasi-subsystem.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import carriers, finset, vect
from .carriers import CarrierMap, CarrierObj, EqualizerResult, PullbackResult
from .errors import BehaviorEscapes, MismatchError, NonInjectiveInclusion, NotEpi
from .finset import FinMap, FinObj
from .vect import LinMap, Subspace, VectObj


@dataclass(frozen=True)
class System:
    inclusion: CarrierMap

    def __post_init__(self):
        if not carriers.classify_map(self.inclusion).mono:
            raise NonInjectiveInclusion("a system's inclusion must be injective")

    @property
    def behavior(self) -> CarrierObj:
        return self.inclusion.dom

    @property
    def universum(self) -> CarrierObj:
        return self.inclusion.cod

    @property
    def carrier(self) -> str:
        return carriers.carrier_of(self.inclusion)

    def to_json(self) -> dict:
        if self.carrier == carriers.FINSET:
            return {
                "carrier": "finset",
                "universum": list(self.universum.elements),
                "behavior": sorted(behavior_image(self)),
            }
        sub = behavior_image(self)
        return {
            "carrier": "vect",
            "universum": list(self.universum.vars),
            "behavior": {"dim": sub.dim, "basis": [[str(x) for x in row] for row in sub.basis]},
        }


def make_system(inclusion: CarrierMap) -> System:
    return System(inclusion)


def full_system(universum: CarrierObj) -> System:
    return System(carriers.identity(universum))


def terminal_system(carrier: str) -> System:
    return full_system(carriers.terminal_obj(carrier))


def behavior_image(s: System):
    """The behavior as a subobject of the universum.

    FinSet systems yield a frozenset of labels, Vect systems a Subspace in
    canonical form; either way equality of behaviors is equality of values.
    """
    if s.carrier == carriers.FINSET:
        return frozenset(s.inclusion.table.values())
    return vect.column_space(s.inclusion)


def system_from_behavior(universum: CarrierObj, behavior) -> System:
    """Canonical system for a subset (FinSet) or Subspace (Vect) of a universum."""
    if isinstance(universum, FinObj):
        labels = tuple(behavior)
        for lab in labels:
            if lab not in universum:
                raise MismatchError(f"{lab!r} is not in the universum")
        obj = FinObj(labels)
        return System(FinMap(obj, universum, {e: e for e in obj}))
    sub = behavior
    if sub.ambient != universum:
        raise MismatchError("subspace ambient differs from the universum")
    obj = VectObj(tuple(f"b{i}" for i in range(sub.dim)))
    matrix = tuple(tuple(row[i] for row in sub.basis) for i in range(universum.dim))
    return System(LinMap(obj, universum, matrix))


def canonical(s: System) -> System:
    return system_from_behavior(s.universum, behavior_image(s))


def systems_equal(s1: System, s2: System) -> bool:
    if s1.carrier != s2.carrier or s1.universum != s2.universum:
        return False
    return behavior_image(s1) == behavior_image(s2)


@dataclass(frozen=True)
class SystemMorphism:
    src: System
    dst: System
    phi_b: CarrierMap
    phi_u: CarrierMap

    def __post_init__(self):
        if self.phi_b.dom != self.src.behavior or self.phi_b.cod != self.dst.behavior:
            raise MismatchError("behavior component does not match the systems")
        if self.phi_u.dom != self.src.universum or self.phi_u.cod != self.dst.universum:
            raise MismatchError("universum component does not match the systems")
        left = carriers.compose(self.phi_u, self.src.inclusion)
        right = carriers.compose(self.dst.inclusion, self.phi_b)
        if left != right:
            raise MismatchError("morphism square does not commute")


@dataclass(frozen=True)
class MorphismClass:
    controlled: bool
    subsystem: bool
    quasi_subsystem: bool

    @property
    def plain(self) -> bool:
        return not (self.controlled or self.subsystem or self.quasi_subsystem)


def classify_morphism(m: SystemMorphism) -> MorphismClass:
    b = carriers.classify_map(m.phi_b)
    u = carriers.classify_map(m.phi_u)
    return MorphismClass(
        controlled=b.mono and u.mono,
        subsystem=b.epi and u.epi,
        quasi_subsystem=u.epi,
    )


def identity_morphism(s: System) -> SystemMorphism:
    return SystemMorphism(s, s, carriers.identity(s.behavior), carriers.identity(s.universum))


def compose_morphisms(b: SystemMorphism, a: SystemMorphism) -> SystemMorphism:
    if a.dst != b.src:
        raise MismatchError("morphisms are not composable")
    return SystemMorphism(
        a.src, b.dst, carriers.compose(b.phi_b, a.phi_b), carriers.compose(b.phi_u, a.phi_u)
    )


def make_morphism(src: System, dst: System, phi_u: CarrierMap) -> SystemMorphism:
    """Restrict phi_u to the behaviors; fails if the image escapes dst's behavior."""
    if phi_u.dom != src.universum or phi_u.cod != dst.universum:
        raise MismatchError("phi_u must map the source universum to the target universum")
    if isinstance(phi_u, FinMap):
        reverse = {dst.inclusion(b): b for b in dst.behavior}
        table = {}
        for b in src.behavior:
            v = phi_u(src.inclusion(b))
            if v not in reverse:
                raise BehaviorEscapes(f"image of behavior point {b!r} lies outside the target behavior")
            table[b] = reverse[v]
        phi_b = FinMap(src.behavior, dst.behavior, table)
    else:
        target = carriers.compose(phi_u, src.inclusion)
        sol = vect.solve_matrix(
            dst.inclusion.matrix, dst.behavior.dim, target.matrix, src.behavior.dim
        )
        if sol is None:
            raise BehaviorEscapes("image of the behavior lies outside the target behavior")
        phi_b = LinMap(src.behavior, dst.behavior, sol)
    return SystemMorphism(src, dst, phi_b, phi_u)


@dataclass(frozen=True)
class SystemPullback:
    system: System
    proj1: SystemMorphism
    proj2: SystemMorphism


def pullback_systems(phi: SystemMorphism, psi: SystemMorphism) -> SystemPullback:
    """Glue phi.src and psi.src over their common codomain system."""
    if phi.dst != psi.dst:
        raise MismatchError("pullback requires morphisms into the same system")
    bpb = carriers.pullback(phi.phi_b, psi.phi_b)
    upb = carriers.pullback(phi.phi_u, psi.phi_u)
    q1 = carriers.compose(phi.src.inclusion, bpb.proj1)
    q2 = carriers.compose(psi.src.inclusion, bpb.proj2)
    inclusion = carriers.pullback_mediate(upb, q1, q2)
    k = System(inclusion)
    proj1 = SystemMorphism(k, phi.src, bpb.proj1, upb.proj1)
    proj2 = SystemMorphism(k, psi.src, bpb.proj2, upb.proj2)
    return SystemPullback(k, proj1, proj2)


def product_systems(s: System, t: System) -> SystemPullback:
    """The product system with its projections (pullback over the terminal system)."""
    pu = carriers.product(s.universum, t.universum)
    pb = carriers.product(s.behavior, t.behavior)
    inclusion = carriers.product_map(s.inclusion, t.inclusion)
    prod = System(inclusion)
    proj1 = SystemMorphism(prod, s, pb.proj1, pu.proj1)
    proj2 = SystemMorphism(prod, t, pb.proj2, pu.proj2)
    return SystemPullback(prod, proj1, proj2)


def span_into_product(pb: SystemPullback) -> SystemMorphism:
    """The canonical morphism from a pullback into the product of its feet."""
    prod = product_systems(pb.proj1.dst, pb.proj2.dst)
    pu = carriers.product(pb.proj1.dst.universum, pb.proj2.dst.universum)
    pbeh = carriers.product(pb.proj1.dst.behavior, pb.proj2.dst.behavior)
    phi_u = carriers.product_mediate(pu, pb.proj1.phi_u, pb.proj2.phi_u)
    phi_b = carriers.product_mediate(pbeh, pb.proj1.phi_b, pb.proj2.phi_b)
    return SystemMorphism(pb.system, prod.system, phi_b, phi_u)


def interconnect_shared(s: System, t: System, p: CarrierMap, q: CarrierMap) -> SystemPullback:
    """Share the variables designated by the surjections p and q onto a common block.

    Both systems are sent onto the full system of the shared block by the
    canonical quasi-subsystem morphisms and then pulled back; the result does
    not depend on the choice of common quasi-subsystem.
    """
    if p.dom != s.universum or q.dom != t.universum:
        raise MismatchError("shared-block projections must start at the universa")
    if p.cod != q.cod:
        raise MismatchError("shared blocks disagree")
    if not carriers.classify_map(p).epi or not carriers.classify_map(q).epi:
        raise NotEpi("shared-block projections must be surjective")
    sc = full_system(p.cod)
    return pullback_systems(make_morphism(s, sc, p), make_morphism(t, sc, q))


def project_latent(s: System, pi: CarrierMap) -> tuple[SystemMorphism, System]:
    """Eliminate latent variables along a surjection of universa.

    Image-factorizes pi . inclusion; returns the induced subsystem morphism and
    the manifest system it lands on.
    """
    if pi.dom != s.universum:
        raise MismatchError("projection must start at the universum")
    if not carriers.classify_map(pi).epi:
        raise NotEpi("latent-variable projection must be surjective")
    fact = carriers.image_factorize(carriers.compose(pi, s.inclusion))
    manifest = System(fact.inj)
    morphism = SystemMorphism(s, manifest, fact.surj, pi)
    return morphism, manifest


def factors_through(s: System, t: System):
    """The unique witness h with s = t . h, or None if behavior(s) is not contained."""
    if s.universum != t.universum:
        raise MismatchError("systems must share their universum")
    if s.carrier == carriers.FINSET:
        reverse = {t.inclusion(b): b for b in t.behavior}
        table = {}
        for b in s.behavior:
            v = s.inclusion(b)
            if v not in reverse:
                return None
            table[b] = reverse[v]
        return FinMap(s.behavior, t.behavior, table)
    sol = vect.solve_matrix(t.inclusion.matrix, t.behavior.dim, s.inclusion.matrix, s.behavior.dim)
    if sol is None:
        return None
    return LinMap(s.behavior, t.behavior, sol)


@dataclass(frozen=True)
class BehaviorLattice:
    """Behaviors over a fixed universum, ordered by inclusion."""

    universum: CarrierObj

    def _check(self, b):
        if isinstance(self.universum, FinObj):
            for x in b:
                if x not in self.universum:
                    raise MismatchError(f"{x!r} is not in the universum")
            return frozenset(b)
        if b.ambient != self.universum:
            raise MismatchError("subspace ambient differs from the lattice universum")
        return b

    def meet(self, b1, b2):
        b1, b2 = self._check(b1), self._check(b2)
        if isinstance(self.universum, FinObj):
            return b1 & b2
        return b1.intersect(b2)

    def join(self, b1, b2):
        b1, b2 = self._check(b1), self._check(b2)
        if isinstance(self.universum, FinObj):
            return b1 | b2
        return b1.sum(b2)
