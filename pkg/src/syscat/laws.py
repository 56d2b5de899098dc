"""Randomized and exhaustive law suites behind the ``check`` CLI command.

Each suite builds desk-sized instances, runs the construction under test, and
counts failures. Everything is driven by a seeded ``random.Random`` so runs
are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _iterproduct

from . import booldual, carriers, finset, generalized, vect
from .equations import EquationMorphism, EquationRep, check_preservation
from .finset import FinMap, FinObj
from .generalized import GenEquation, GeneralizedSystem, GenSystemMorphism, adjunction_check
from .systems import (
    BehaviorLattice,
    System,
    behavior_image,
    interconnect_shared,
    system_from_behavior,
)
from .vect import LinMap, Subspace, VectObj


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, detail: str = ""):
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(detail or f"trial {self.total}")

    @property
    def ok(self) -> bool:
        return self.passed == self.total


@dataclass
class LawReport:
    law: str
    suites: list[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "ok": self.ok,
            "suites": [
                {
                    "name": s.name,
                    "passed": s.passed,
                    "total": s.total,
                    "failures": s.failures[:10],
                }
                for s in self.suites
            ],
        }


# -- random generators --------------------------------------------------------

def _obj(rng: random.Random, prefix: str, lo: int, hi: int) -> FinObj:
    return FinObj(tuple(f"{prefix}{i}" for i in range(rng.randint(lo, hi))))


def _finmap(rng: random.Random, dom: FinObj, cod: FinObj) -> FinMap:
    return FinMap(dom, cod, {x: rng.choice(cod.elements) for x in dom})


def _epi_finmap(rng: random.Random, dom: FinObj, cod: FinObj) -> FinMap:
    # assumes len(dom) >= len(cod) >= 1
    slots = list(dom.elements)
    rng.shuffle(slots)
    table = {}
    for label, target in zip(slots, cod.elements):
        table[label] = target
    for label in slots[len(cod) :]:
        table[label] = rng.choice(cod.elements)
    return FinMap(dom, cod, table)


def _finset_equation_cospan(rng: random.Random) -> tuple[EquationMorphism, EquationMorphism]:
    """A random cospan in the syntax category, built so every square commutes.

    The shared representation is drawn first; each leg picks a surjective
    codomain component so a compatible pair of equation maps always exists.
    """
    uc = _obj(rng, "uc", 1, 3)
    ec = _obj(rng, "ec", 1, 2)
    shared = EquationRep(_finmap(rng, uc, ec), _finmap(rng, uc, ec))

    def leg(side: str) -> EquationMorphism:
        u = _obj(rng, f"u{side}", 1, 4)
        e = _obj(rng, f"e{side}", len(ec), 4)
        psi_u = _finmap(rng, u, uc)
        psi_e = _epi_finmap(rng, e, ec)
        preimages = {t: [x for x in e if psi_e(x) == t] for t in ec}
        tables = []
        for h in (shared.f1, shared.f2):
            tables.append({x: rng.choice(preimages[h(psi_u(x))]) for x in u})
        rep = EquationRep(FinMap(u, e, tables[0]), FinMap(u, e, tables[1]))
        return EquationMorphism(rep, shared, psi_u, psi_e)

    return leg("a"), leg("b")


def _vect_obj(rng: random.Random, prefix: str, lo: int, hi: int) -> VectObj:
    return VectObj(tuple(f"{prefix}{i}" for i in range(rng.randint(lo, hi))))


def _matrix(rng: random.Random, rows: int, cols: int, span: int = 2):
    return tuple(
        tuple(Fraction(rng.randint(-span, span)) for _ in range(cols)) for _ in range(rows)
    )


def _linmap(rng: random.Random, dom: VectObj, cod: VectObj) -> LinMap:
    return LinMap(dom, cod, _matrix(rng, cod.dim, dom.dim))


def _epi_linmap(rng: random.Random, dom: VectObj, cod: VectObj) -> LinMap:
    # assumes dom.dim >= cod.dim; resamples until full row rank
    while True:
        m = _matrix(rng, cod.dim, dom.dim)
        if vect.rank_of(m, dom.dim) == cod.dim:
            return LinMap(dom, cod, m)


def _vect_equation_cospan(rng: random.Random) -> tuple[EquationMorphism, EquationMorphism]:
    uc = _vect_obj(rng, "uc", 1, 2)
    ec = _vect_obj(rng, "ec", 1, 2)
    shared = EquationRep(_linmap(rng, uc, ec), _linmap(rng, uc, ec))

    def leg(side: str) -> EquationMorphism:
        u = _vect_obj(rng, f"u{side}", 1, 4)
        e = _vect_obj(rng, f"e{side}", ec.dim, 4)
        psi_u = _linmap(rng, u, uc)
        psi_e = _epi_linmap(rng, e, ec)
        right_inv = vect.solve_matrix(
            psi_e.matrix, e.dim, vect.mat_identity(ec.dim), ec.dim
        )
        kernel = vect.kernel_basis(psi_e.matrix, e.dim)
        maps = []
        for h in (shared.f1, shared.f2):
            target = carriers.compose(h, psi_u)  # u -> ec
            base = vect.mat_mul(right_inv, target.matrix, ec.dim)
            rows = [list(r) for r in base]
            for kvec in kernel:
                coeffs = [Fraction(rng.randint(-1, 1)) for _ in range(u.dim)]
                for i in range(e.dim):
                    for j in range(u.dim):
                        rows[i][j] += kvec[i] * coeffs[j]
            maps.append(LinMap(u, e, tuple(tuple(r) for r in rows)))
        rep = EquationRep(maps[0], maps[1])
        return EquationMorphism(rep, shared, psi_u, psi_e)

    return leg("a"), leg("b")


def _subspace(rng: random.Random, ambient: VectObj, max_rank: int | None = None) -> Subspace:
    k = rng.randint(0, max_rank if max_rank is not None else ambient.dim)
    return Subspace(ambient, _matrix(rng, k, ambient.dim))


def _gen_system(rng: random.Random, dom: FinObj, cod: FinObj) -> GeneralizedSystem:
    return GeneralizedSystem(_finmap(rng, dom, cod))


def _gen_equation(rng: random.Random) -> GenEquation:
    """A random parallel pair g => g' with a surjective target structure map."""
    c = _obj(rng, "c", 1, 3)
    u = _obj(rng, "u", 1, 3)
    up = _obj(rng, "w", 1, 2)
    cp = _obj(rng, "d", len(up), 3)
    g = GeneralizedSystem(_finmap(rng, c, u))
    gp = GeneralizedSystem(_epi_finmap(rng, cp, up))
    preimages = {y: [x for x in cp if gp.arrow(x) == y] for y in up}

    def morphism() -> GenSystemMorphism:
        phi_u = _finmap(rng, u, up)
        phi_c = FinMap(
            c, cp, {x: rng.choice(preimages[phi_u(g.arrow(x))]) for x in c}
        )
        return GenSystemMorphism(g, gp, phi_c, phi_u)

    return GenEquation(morphism(), morphism())


# -- suites --------------------------------------------------------------------

def preservation_suite(seed: int, finset_trials: int = 200, vect_trials: int = 50) -> LawReport:
    rng = random.Random(seed)
    fs = SuiteResult("finset")
    for _ in range(finset_trials):
        m, n = _finset_equation_cospan(rng)
        fs.record(check_preservation(m, n).equal)
    vs = SuiteResult("vect")
    for _ in range(vect_trials):
        m, n = _vect_equation_cospan(rng)
        vs.record(check_preservation(m, n).equal)
    return LawReport("preservation", [fs, vs])


def duality_suite(
    seed: int, exhaustive_max: int = 4, random_trials: int = 500, random_max: int = 6
) -> LawReport:
    rng = random.Random(seed)
    gf = SuiteResult("G.F=id (exhaustive)")
    cl = SuiteResult("mono/epi swap (exhaustive)")
    for ns in range(exhaustive_max + 1):
        for nt in range(exhaustive_max + 1):
            s = FinObj(tuple(f"s{i}" for i in range(ns)))
            t = FinObj(tuple(f"t{i}" for i in range(nt)))
            for f in finset.all_maps(s, t):
                gf.record(booldual.functor_G(booldual.functor_F(f)) == f)
                cl.record(booldual.duality_classify(f).consistent)
    fg = SuiteResult("F.G=id (exhaustive homs)")
    for ns in range(exhaustive_max + 1):
        for nt in range(exhaustive_max + 1):
            src = booldual.PowerLattice(FinObj(tuple(f"t{i}" for i in range(nt))))
            dst = booldual.PowerLattice(FinObj(tuple(f"s{i}" for i in range(ns))))
            for phi in booldual.all_homs(src, dst):
                fg.record(booldual.functor_F(booldual.functor_G(phi)) == phi)
    rnd = SuiteResult("roundtrip (randomized)")
    for _ in range(random_trials):
        s = _obj(rng, "s", 0, random_max)
        t = _obj(rng, "t", 1, random_max)
        f = _finmap(rng, s, t)
        phi = booldual.functor_F(f)
        rnd.record(
            booldual.functor_G(phi) == f
            and booldual.functor_F(booldual.functor_G(phi)) == phi
            and booldual.duality_classify(f).consistent
        )
    return LawReport("duality", [gf, cl, fg, rnd])


def adjunction_suite(seed: int, instances: int = 50) -> LawReport:
    rng = random.Random(seed)
    suite = SuiteResult("hom-set bijection")
    for _ in range(instances):
        e = _gen_equation(rng)
        dom = _obj(rng, "g", 1, 3)
        cod = _obj(rng, "h", 1, 3)
        g = _gen_system(rng, dom, cod)
        report = adjunction_check(g, e)
        suite.record(
            report.ok,
            f"|Hom(diag g, e)|={report.diagonal_homs} |Hom(g, ObjEq e)|={report.objeq_homs}",
        )
    return LawReport("adjunction", [suite])


def lattice_suite(seed: int, trials: int = 100) -> LawReport:
    rng = random.Random(seed)
    meet = SuiteResult("meet = interconnection")
    for i in range(trials):
        if i % 2 == 0:
            u = _obj(rng, "u", 1, 4)
            b1 = frozenset(x for x in u if rng.random() < 0.6)
            b2 = frozenset(x for x in u if rng.random() < 0.6)
            s1, s2 = system_from_behavior(u, b1), system_from_behavior(u, b2)
            p = finset.identity(u)
        else:
            u = _vect_obj(rng, "u", 1, 4)
            b1, b2 = _subspace(rng, u), _subspace(rng, u)
            s1, s2 = system_from_behavior(u, b1), system_from_behavior(u, b2)
            p = vect.identity(u)
        pb = interconnect_shared(s1, s2, p, p)
        via_pullback = behavior_image(
            System(carriers.compose(pb.proj1.phi_u, pb.system.inclusion))
        )
        expected = BehaviorLattice(u).meet(b1, b2)
        meet.record(via_pullback == expected)
    modular = SuiteResult("modular law")
    for _ in range(trials):
        u = _vect_obj(rng, "u", 1, 6)
        a, b = _subspace(rng, u), _subspace(rng, u)
        lat = BehaviorLattice(u)
        modular.record(
            a.dim + b.dim == lat.join(a, b).dim + lat.meet(a, b).dim
        )
    return LawReport("lattice", [meet, modular])


LAWS = {
    "preservation": preservation_suite,
    "duality": duality_suite,
    "adjunction": adjunction_suite,
    "lattice": lattice_suite,
}


def run_law(law: str, seed: int, trials: int | None = None) -> LawReport:
    if law == "preservation":
        if trials is None:
            return preservation_suite(seed)
        return preservation_suite(seed, trials, max(1, trials // 4))
    if law == "duality":
        return duality_suite(seed) if trials is None else duality_suite(seed, random_trials=trials)
    if law == "adjunction":
        return adjunction_suite(seed) if trials is None else adjunction_suite(seed, trials)
    if law == "lattice":
        return lattice_suite(seed) if trials is None else lattice_suite(seed, trials)
    raise KeyError(law)
