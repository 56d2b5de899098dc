"""Generalized systems: arbitrary carrier maps, their equations, and the adjunction.

Dropping injectivity of the structure map gives a category where every object
has a universal description: the componentwise equalizer functor out of the
category of morphism-pairs is right adjoint to the diagonal. The adjunction is
verified extensionally here — hom-sets are enumerated on the finite-set
carrier and matched by an explicit bijection.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import carriers, finset
from .carriers import CarrierMap
from .equations import EquationMorphism, EquationRep
from .errors import DomainError, MismatchError
from .finset import FinObj
from .systems import System, SystemMorphism, make_morphism

ENUM_BOUND = 3


@dataclass(frozen=True)
class GeneralizedSystem:
    arrow: CarrierMap

    @property
    def domain(self):
        return self.arrow.dom

    @property
    def codomain(self):
        return self.arrow.cod

    @property
    def carrier(self) -> str:
        return carriers.carrier_of(self.arrow)


@dataclass(frozen=True)
class GenSystemMorphism:
    src: GeneralizedSystem
    dst: GeneralizedSystem
    phi_c: CarrierMap
    phi_u: CarrierMap

    def __post_init__(self):
        if self.phi_c.dom != self.src.domain or self.phi_c.cod != self.dst.domain:
            raise MismatchError("phi_c does not match the generalized systems")
        if self.phi_u.dom != self.src.codomain or self.phi_u.cod != self.dst.codomain:
            raise MismatchError("phi_u does not match the generalized systems")
        left = carriers.compose(self.phi_u, self.src.arrow)
        right = carriers.compose(self.dst.arrow, self.phi_c)
        if left != right:
            raise MismatchError("generalized-system morphism square does not commute")


def identity_gen_morphism(g: GeneralizedSystem) -> GenSystemMorphism:
    return GenSystemMorphism(
        g, g, carriers.identity(g.domain), carriers.identity(g.codomain)
    )


def compose_gen_morphisms(b: GenSystemMorphism, a: GenSystemMorphism) -> GenSystemMorphism:
    if a.dst != b.src:
        raise MismatchError("generalized morphisms are not composable")
    return GenSystemMorphism(
        a.src, b.dst, carriers.compose(b.phi_c, a.phi_c), carriers.compose(b.phi_u, a.phi_u)
    )


@dataclass(frozen=True)
class GenEquation:
    phi1: GenSystemMorphism
    phi2: GenSystemMorphism

    def __post_init__(self):
        if self.phi1.src != self.phi2.src or self.phi1.dst != self.phi2.dst:
            raise MismatchError("an equation needs a parallel pair of morphisms")

    @property
    def src(self) -> GeneralizedSystem:
        return self.phi1.src

    @property
    def dst(self) -> GeneralizedSystem:
        return self.phi1.dst


@dataclass(frozen=True)
class GenEquationMorphism:
    """Four component maps making the prism over both members of the pairs commute."""

    src: GenEquation
    dst: GenEquation
    tau1: CarrierMap  # src domain-of-systems  -> dst domain-of-systems
    tau2: CarrierMap  # src codomain-of-systems -> dst codomain-of-systems
    tau3: CarrierMap  # src target domain      -> dst target domain
    tau4: CarrierMap  # src target codomain    -> dst target codomain

    def __post_init__(self):
        g, gp = self.src.src.arrow, self.src.dst.arrow
        h, hp = self.dst.src.arrow, self.dst.dst.arrow
        checks = [
            (carriers.compose(h, self.tau1), carriers.compose(self.tau2, g), "top"),
            (carriers.compose(hp, self.tau3), carriers.compose(self.tau4, gp), "bottom"),
        ]
        for i, (sm, dm) in enumerate(
            ((self.src.phi1, self.dst.phi1), (self.src.phi2, self.dst.phi2)), start=1
        ):
            checks.append(
                (carriers.compose(dm.phi_c, self.tau1), carriers.compose(self.tau3, sm.phi_c), f"left{i}")
            )
            checks.append(
                (carriers.compose(dm.phi_u, self.tau2), carriers.compose(self.tau4, sm.phi_u), f"right{i}")
            )
        for left, right, face in checks:
            if left != right:
                raise MismatchError(f"equation morphism face {face} does not commute")


def image_system(g: GeneralizedSystem) -> System:
    """Read a generalized system as a plain system by taking its image."""
    return System(carriers.image_factorize(g.arrow).inj)


def image_system_morphism(m: GenSystemMorphism) -> SystemMorphism:
    return make_morphism(image_system(m.src), image_system(m.dst), m.phi_u)


def obj_eq(e: GenEquation) -> GeneralizedSystem:
    """Componentwise equalizer of a parallel pair of morphisms."""
    ec = carriers.equalizer(e.phi1.phi_c, e.phi2.phi_c)
    eu = carriers.equalizer(e.phi1.phi_u, e.phi2.phi_u)
    # the structure map carries agreeing points to agreeing points
    induced = carriers.equalizer_mediate(eu, carriers.compose(e.src.arrow, ec.arrow))
    return GeneralizedSystem(induced)


def obj_eq_projections(e: GenEquation) -> GenSystemMorphism:
    """The canonical morphism from obj_eq(e) into the pair's source."""
    ec = carriers.equalizer(e.phi1.phi_c, e.phi2.phi_c)
    eu = carriers.equalizer(e.phi1.phi_u, e.phi2.phi_u)
    return GenSystemMorphism(obj_eq(e), e.src, ec.arrow, eu.arrow)


def obj_eq_morphism(t: GenEquationMorphism) -> GenSystemMorphism:
    """Functor action on equation morphisms, by mediation into the equalizers."""
    src_sys = obj_eq(t.src)
    dst_ec = carriers.equalizer(t.dst.phi1.phi_c, t.dst.phi2.phi_c)
    dst_eu = carriers.equalizer(t.dst.phi1.phi_u, t.dst.phi2.phi_u)
    src_ec = carriers.equalizer(t.src.phi1.phi_c, t.src.phi2.phi_c)
    src_eu = carriers.equalizer(t.src.phi1.phi_u, t.src.phi2.phi_u)
    phi_c = carriers.equalizer_mediate(dst_ec, carriers.compose(t.tau1, src_ec.arrow))
    phi_u = carriers.equalizer_mediate(dst_eu, carriers.compose(t.tau2, src_eu.arrow))
    return GenSystemMorphism(src_sys, obj_eq(t.dst), phi_c, phi_u)


def diagonal(g: GeneralizedSystem) -> GenEquation:
    i = identity_gen_morphism(g)
    return GenEquation(i, i)


def diagonal_morphism(m: GenSystemMorphism) -> GenEquationMorphism:
    return GenEquationMorphism(diagonal(m.src), diagonal(m.dst), m.phi_c, m.phi_u, m.phi_c, m.phi_u)


def embed_equation(rep: EquationRep) -> GenEquation:
    """A plain representation as a pair of morphisms into the terminal system."""
    u = rep.universum
    carrier = carriers.carrier_of(rep.f1)
    top = GeneralizedSystem(carriers.identity(u))
    point = carriers.terminal_obj(carrier)
    bottom = GeneralizedSystem(carriers.terminal_map(rep.codomain))
    bang_u = carriers.terminal_map(u)
    phi1 = GenSystemMorphism(top, bottom, rep.f1, bang_u)
    phi2 = GenSystemMorphism(top, bottom, rep.f2, bang_u)
    return GenEquation(phi1, phi2)


def embed_equation_morphism(m: EquationMorphism) -> GenEquationMorphism:
    src, dst = embed_equation(m.src), embed_equation(m.dst)
    point_id = carriers.identity(carriers.terminal_obj(carriers.carrier_of(m.psi_u)))
    return GenEquationMorphism(src, dst, m.psi_u, m.psi_u, m.psi_e, point_id)


def pullback_gen_systems(
    phi: GenSystemMorphism, psi: GenSystemMorphism
) -> tuple[GeneralizedSystem, GenSystemMorphism, GenSystemMorphism]:
    if phi.dst != psi.dst:
        raise MismatchError("pullback requires morphisms into the same generalized system")
    cpb = carriers.pullback(phi.phi_c, psi.phi_c)
    upb = carriers.pullback(phi.phi_u, psi.phi_u)
    arrow = carriers.pullback_mediate(
        upb,
        carriers.compose(phi.src.arrow, cpb.proj1),
        carriers.compose(psi.src.arrow, cpb.proj2),
    )
    k = GeneralizedSystem(arrow)
    return (
        k,
        GenSystemMorphism(k, phi.src, cpb.proj1, upb.proj1),
        GenSystemMorphism(k, psi.src, cpb.proj2, upb.proj2),
    )


def pullback_gen_equations(
    m: GenEquationMorphism, n: GenEquationMorphism
) -> tuple[GenEquation, GenEquationMorphism, GenEquationMorphism]:
    """Cornerwise pullback of equations over a common one."""
    if m.dst != n.dst:
        raise MismatchError("pullback requires morphisms into the same equation")
    k_src, p_src, q_src = pullback_gen_systems(
        GenSystemMorphism(m.src.src, m.dst.src, m.tau1, m.tau2),
        GenSystemMorphism(n.src.src, n.dst.src, n.tau1, n.tau2),
    )
    k_dst, p_dst, q_dst = pullback_gen_systems(
        GenSystemMorphism(m.src.dst, m.dst.dst, m.tau3, m.tau4),
        GenSystemMorphism(n.src.dst, n.dst.dst, n.tau3, n.tau4),
    )
    cpb = carriers.PullbackResult(k_src.domain, p_src.phi_c, q_src.phi_c)
    upb = carriers.PullbackResult(k_src.codomain, p_src.phi_u, q_src.phi_u)
    cpb_t = carriers.PullbackResult(k_dst.domain, p_dst.phi_c, q_dst.phi_c)
    upb_t = carriers.PullbackResult(k_dst.codomain, p_dst.phi_u, q_dst.phi_u)

    def induced(sel):
        phi_c = carriers.pullback_mediate(
            cpb_t,
            carriers.compose(sel(m.src).phi_c, cpb.proj1),
            carriers.compose(sel(n.src).phi_c, cpb.proj2),
        )
        phi_u = carriers.pullback_mediate(
            upb_t,
            carriers.compose(sel(m.src).phi_u, upb.proj1),
            carriers.compose(sel(n.src).phi_u, upb.proj2),
        )
        return GenSystemMorphism(k_src, k_dst, phi_c, phi_u)

    eq = GenEquation(induced(lambda e: e.phi1), induced(lambda e: e.phi2))
    proj_m = GenEquationMorphism(eq, m.src, p_src.phi_c, p_src.phi_u, p_dst.phi_c, p_dst.phi_u)
    proj_n = GenEquationMorphism(eq, n.src, q_src.phi_c, q_src.phi_u, q_dst.phi_c, q_dst.phi_u)
    return eq, proj_m, proj_n


# -- hom-set enumeration and the adjunction ----------------------------------

def _require_finset_small(*objs: FinObj):
    for obj in objs:
        if not isinstance(obj, FinObj):
            raise DomainError("enumeration requires the finite-set carrier")
        if len(obj) > ENUM_BOUND:
            raise DomainError(f"size bound exceeded: enumeration is capped at {ENUM_BOUND} elements")


def gen_system_homs(g: GeneralizedSystem, h: GeneralizedSystem) -> list[GenSystemMorphism]:
    """All morphisms g => h (finite-set carrier, small objects)."""
    homs = []
    for phi_c in finset.all_maps(g.domain, h.domain):
        lhs = None
        for phi_u in finset.all_maps(g.codomain, h.codomain):
            if lhs is None:
                lhs = carriers.compose(h.arrow, phi_c)
            if carriers.compose(phi_u, g.arrow) == lhs:
                homs.append(GenSystemMorphism(g, h, phi_c, phi_u))
    return homs


def homs_from_diagonal(g: GeneralizedSystem, e: GenEquation) -> list[GenEquationMorphism]:
    """All equation morphisms diagonal(g) => e (finite-set carrier, small objects).

    For a diagonal source the two lower component maps are forced by the side
    faces, so only the top square is searched.
    """
    dg = diagonal(g)
    h = e.src.arrow
    out = []
    for tau1 in finset.all_maps(g.domain, e.src.domain):
        for tau2 in finset.all_maps(g.codomain, e.src.codomain):
            if carriers.compose(h, tau1) != carriers.compose(tau2, g.arrow):
                continue
            tau3 = carriers.compose(e.phi1.phi_c, tau1)
            tau4 = carriers.compose(e.phi1.phi_u, tau2)
            if tau3 != carriers.compose(e.phi2.phi_c, tau1):
                continue
            if tau4 != carriers.compose(e.phi2.phi_u, tau2):
                continue
            try:
                out.append(GenEquationMorphism(dg, e, tau1, tau2, tau3, tau4))
            except MismatchError:
                continue
    return out


@dataclass(frozen=True)
class AdjunctionReport:
    diagonal_homs: int
    objeq_homs: int
    bijection_ok: bool
    naturality_ok: bool

    @property
    def ok(self) -> bool:
        return self.diagonal_homs == self.objeq_homs and self.bijection_ok and self.naturality_ok


def _transpose_to_objeq(t: GenEquationMorphism, e: GenEquation, g: GeneralizedSystem) -> GenSystemMorphism:
    ec = carriers.equalizer(e.phi1.phi_c, e.phi2.phi_c)
    eu = carriers.equalizer(e.phi1.phi_u, e.phi2.phi_u)
    alpha = carriers.equalizer_mediate(ec, t.tau1)
    beta = carriers.equalizer_mediate(eu, t.tau2)
    return GenSystemMorphism(g, obj_eq(e), alpha, beta)


def _transpose_to_diagonal(m: GenSystemMorphism, e: GenEquation, g: GeneralizedSystem) -> GenEquationMorphism:
    ec = carriers.equalizer(e.phi1.phi_c, e.phi2.phi_c)
    eu = carriers.equalizer(e.phi1.phi_u, e.phi2.phi_u)
    tau1 = carriers.compose(ec.arrow, m.phi_c)
    tau2 = carriers.compose(eu.arrow, m.phi_u)
    tau3 = carriers.compose(e.phi1.phi_c, tau1)
    tau4 = carriers.compose(e.phi1.phi_u, tau2)
    return GenEquationMorphism(diagonal(g), e, tau1, tau2, tau3, tau4)


def adjunction_check(
    g: GeneralizedSystem, e: GenEquation, probe: GenSystemMorphism | None = None
) -> AdjunctionReport:
    """Compare Hom(diagonal(g), e) with Hom(g, obj_eq(e)) by explicit bijection.

    Both hom-sets are enumerated exhaustively; the transposition maps are then
    checked to be mutually inverse. A probe morphism into g (default: a
    canonical endomorphism) spot-checks naturality under precomposition.
    """
    _require_finset_small(g.domain, g.codomain, e.src.domain, e.src.codomain,
                          e.dst.domain, e.dst.codomain)
    lhs = homs_from_diagonal(g, e)
    rhs = gen_system_homs(g, obj_eq(e))
    bijection_ok = len(lhs) == len(rhs)
    seen = []
    for t in lhs:
        m = _transpose_to_objeq(t, e, g)
        back = _transpose_to_diagonal(m, e, g)
        if back != t:
            bijection_ok = False
        seen.append(m)
    for m in rhs:
        if m not in seen:
            bijection_ok = False
        t = _transpose_to_diagonal(m, e, g)
        if _transpose_to_objeq(t, e, g) != m:
            bijection_ok = False

    if probe is None:
        probe = _default_probe(g)
    naturality_ok = True
    for t in lhs:
        precomposed = _compose_equation_with_diagonal(t, probe)
        direct = _transpose_to_objeq(precomposed, e, probe.src)
        expected = compose_gen_morphisms(_transpose_to_objeq(t, e, g), probe)
        if direct != expected:
            naturality_ok = False
    return AdjunctionReport(len(lhs), len(rhs), bijection_ok, naturality_ok)


def _default_probe(g: GeneralizedSystem) -> GenSystemMorphism:
    for m in gen_system_homs(g, g):
        if m != identity_gen_morphism(g):
            return m
    return identity_gen_morphism(g)


def _compose_equation_with_diagonal(
    t: GenEquationMorphism, probe: GenSystemMorphism
) -> GenEquationMorphism:
    d = diagonal_morphism(probe)
    return GenEquationMorphism(
        d.src,
        t.dst,
        carriers.compose(t.tau1, d.tau1),
        carriers.compose(t.tau2, d.tau2),
        carriers.compose(t.tau3, d.tau3),
        carriers.compose(t.tau4, d.tau4),
    )
