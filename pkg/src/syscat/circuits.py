"""Resistive-circuit netlists compiled to exact linear behavior models.

Netlist format (line oriented, ``#`` starts a comment)::

    circuit <name>
    node <id> [<id> ...]
    terminal <id> [<id> ...]
    resistor <id> <n1> <n2> <rational: int | p/q>
    wire <id> <n1> <n2>

Glue format::

    glue <name>
    identify <leftVar> = <rightVar>
    option close_dangling

Compilation produces a kernel representation over the free rational space on
one voltage variable ``v_<node>`` per node and one oriented current variable
``i_<element>`` per element. Equation rows are Ohm's law / wire equality per
element and a current-balance row at every internal (non-terminal) node that
touches an element; terminals are left open to the environment.

Gluing identifies variables across two circuits. It computes the
interconnection three ways — stacked equations over the merged names, the
syntax-side pullback, and the semantics-side pullback — and reports whether
interpretation commuted with the gluing (it must, up to a bug). With
``close_dangling`` the glued circuit's degree-<=1 terminals get
zero-external-current rows before the result is reported.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import carriers, vect
from .equations import (
    EquationMorphism,
    EquationRep,
    arr_eq,
    arr_eq_morphism,
    kernel_rep,
    pullback_equations,
)
from .errors import GlueError, MismatchError, ParseError
from .systems import System, behavior_image, project_latent, pullback_systems, systems_equal
from .vect import LinMap, Subspace, VectObj

_NAME = re.compile(r"^[A-Za-z0-9_.\-]+$")


@dataclass(frozen=True)
class Resistor:
    ident: str
    n1: str
    n2: str
    resistance: Fraction


@dataclass(frozen=True)
class Wire:
    ident: str
    n1: str
    n2: str


Element = Resistor | Wire


@dataclass(frozen=True)
class Circuit:
    name: str
    nodes: tuple[str, ...]
    terminals: tuple[str, ...]
    elements: tuple[Element, ...]

    def __post_init__(self):
        nodes = set(self.nodes)
        if len(nodes) != len(self.nodes):
            raise ParseError("duplicate node declaration")
        for t in self.terminals:
            if t not in nodes:
                raise ParseError(f"terminal {t!r} is not a declared node")
        seen = set()
        for e in self.elements:
            if e.ident in seen:
                raise ParseError(f"duplicate element id {e.ident!r}")
            seen.add(e.ident)
            if e.n1 not in nodes or e.n2 not in nodes:
                raise ParseError(f"element {e.ident!r} references an undeclared node")
            if e.n1 == e.n2:
                raise ParseError(f"element {e.ident!r} is a self-loop")
            if isinstance(e, Resistor) and e.resistance <= 0:
                raise ParseError(f"resistor {e.ident!r} must have positive resistance")


def voltage_var(node: str) -> str:
    return f"v_{node}"


def current_var(ident: str) -> str:
    return f"i_{ident}"


def _check_name(tok: str, what: str, line: int) -> str:
    if not _NAME.match(tok):
        raise ParseError(f"invalid {what} {tok!r}", line)
    return tok


def _parse_rational(tok: str, line: int) -> Fraction:
    if not re.match(r"^[+-]?\d+(/\d+)?$", tok):
        raise ParseError(f"expected an exact rational (int or p/q), got {tok!r}", line)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", line) from None


def _directive_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            yield lineno, stripped.split()


def parse_netlist(text: str) -> Circuit:
    name = None
    nodes: list[str] = []
    terminals: list[str] = []
    elements: list[Element] = []
    for lineno, toks in _directive_lines(text):
        kind, args = toks[0], toks[1:]
        if kind == "circuit":
            if name is not None:
                raise ParseError("duplicate circuit header", lineno)
            if len(args) != 1:
                raise ParseError("circuit header takes exactly one name", lineno)
            name = _check_name(args[0], "circuit name", lineno)
            continue
        if name is None:
            raise ParseError("the first directive must be 'circuit <name>'", lineno)
        if kind == "node":
            if not args:
                raise ParseError("node directive needs at least one id", lineno)
            nodes.extend(_check_name(a, "node id", lineno) for a in args)
        elif kind == "terminal":
            if not args:
                raise ParseError("terminal directive needs at least one id", lineno)
            terminals.extend(_check_name(a, "node id", lineno) for a in args)
        elif kind == "resistor":
            if len(args) != 4:
                raise ParseError("resistor takes: id n1 n2 value", lineno)
            ident, n1, n2 = (_check_name(a, "id", lineno) for a in args[:3])
            elements.append(Resistor(ident, n1, n2, _parse_rational(args[3], lineno)))
        elif kind == "wire":
            if len(args) != 3:
                raise ParseError("wire takes: id n1 n2", lineno)
            ident, n1, n2 = (_check_name(a, "id", lineno) for a in args)
            elements.append(Wire(ident, n1, n2))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if name is None:
        raise ParseError("missing circuit header")
    if not nodes:
        raise ParseError("circuit declares no nodes")
    return Circuit(name, tuple(nodes), tuple(dict.fromkeys(terminals)), tuple(elements))


@dataclass(frozen=True)
class GlueSpec:
    name: str
    identifications: tuple[tuple[str, str], ...]
    close_dangling: bool = False


def parse_glue(text: str) -> GlueSpec:
    name = None
    idents: list[tuple[str, str]] = []
    close = False
    for lineno, toks in _directive_lines(text):
        kind = toks[0]
        if kind == "glue":
            if name is not None:
                raise ParseError("duplicate glue header", lineno)
            if len(toks) != 2:
                raise ParseError("glue header takes exactly one name", lineno)
            name = toks[1]
            continue
        if name is None:
            raise ParseError("the first directive must be 'glue <name>'", lineno)
        if kind == "identify":
            rest = " ".join(toks[1:])
            sides = [s.strip() for s in rest.split("=")]
            if len(sides) != 2 or not all(sides):
                raise ParseError("identify takes: <leftVar> = <rightVar>", lineno)
            if any(" " in s for s in sides):
                raise ParseError("identified variables must be single names", lineno)
            idents.append((sides[0], sides[1]))
        elif kind == "option":
            if toks[1:] != ["close_dangling"]:
                raise ParseError(f"unknown option {' '.join(toks[1:])!r}", lineno)
            close = True
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if name is None:
        raise ParseError("missing glue header")
    return GlueSpec(name, tuple(idents), close)


# -- compilation --------------------------------------------------------------

@dataclass(frozen=True)
class CompiledCircuit:
    circuit: Circuit
    rep: EquationRep
    system: System

    @property
    def universum(self) -> VectObj:
        return self.rep.universum


def _equation_rows(circuit: Circuit, universum: VectObj):
    idx = {v: i for i, v in enumerate(universum.vars)}
    names, rows = [], []

    def blank():
        return [Fraction(0)] * universum.dim

    for e in circuit.elements:
        row = blank()
        row[idx[voltage_var(e.n1)]] = Fraction(1)
        row[idx[voltage_var(e.n2)]] = Fraction(-1)
        if isinstance(e, Resistor):
            row[idx[current_var(e.ident)]] = -e.resistance
        names.append(f"law:{e.ident}")
        rows.append(tuple(row))
    internal = [n for n in circuit.nodes if n not in set(circuit.terminals)]
    for n in internal:
        row = blank()
        touched = False
        for e in circuit.elements:
            if e.n1 == n:
                row[idx[current_var(e.ident)]] += Fraction(1)
                touched = True
            if e.n2 == n:
                row[idx[current_var(e.ident)]] -= Fraction(1)
                touched = True
        if touched:
            names.append(f"kcl:{n}")
            rows.append(tuple(row))
    return tuple(names), tuple(rows)


def compile_circuit(circuit: Circuit) -> CompiledCircuit:
    """Deterministic translation of a circuit into a kernel representation."""
    universum = VectObj(
        tuple(voltage_var(n) for n in circuit.nodes)
        + tuple(current_var(e.ident) for e in circuit.elements)
    )
    names, rows = _equation_rows(circuit, universum)
    f = LinMap(universum, VectObj(names), rows)
    rep = kernel_rep(f)
    return CompiledCircuit(circuit, rep, arr_eq(rep))


# -- gluing -------------------------------------------------------------------

def _var_kind(name: str) -> str:
    if name.startswith("v_"):
        return "voltage"
    if name.startswith("i_"):
        return "current"
    return "other"


@dataclass(frozen=True)
class GlueResult:
    rep: EquationRep
    system: System
    universum: VectObj
    merged: tuple[tuple[str, str, str], ...]  # (left, right, merged name)
    syntax_system: System
    semantics_system: System
    preservation_equal: bool
    close_dangling: bool
    closed_terminals: tuple[str, ...]

    @property
    def behavior(self) -> Subspace:
        return behavior_image(self.system)


def _merged_names(spec: GlueSpec, left: VectObj, right: VectObj):
    pairs = []
    seen_left, seen_right = set(), set()
    for l, r in spec.identifications:
        if l not in left.vars:
            raise GlueError(f"{l!r} is not a variable of the left circuit")
        if r not in right.vars:
            raise GlueError(f"{r!r} is not a variable of the right circuit")
        if _var_kind(l) != _var_kind(r):
            raise GlueError(f"cannot identify {l!r} with {r!r}: different kinds")
        if l in seen_left or r in seen_right:
            raise GlueError(f"variable identified twice in {l!r} = {r!r}")
        seen_left.add(l)
        seen_right.add(r)
        pairs.append((l, r, l if l == r else f"{l}={r}"))
    glued: list[str] = []
    by_left = {l: m for l, _, m in pairs}
    for v in left.vars:
        glued.append(by_left.get(v, v))
    for v in right.vars:
        if v not in seen_right:
            glued.append(v)
    if len(set(glued)) != len(glued):
        dupes = sorted({v for v in glued if glued.count(v) > 1})
        raise GlueError(f"name collision after merge: {', '.join(dupes)}")
    return tuple(pairs), VectObj(tuple(glued))


def _close_rows(c1: Circuit, c2: Circuit, pairs, universum: VectObj):
    """Zero-external-current rows at the glued circuit's dangling terminals."""
    parent: dict[tuple[str, str], tuple[str, str]] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    sides = (("L", c1), ("R", c2))
    for tag, c in sides:
        for n in c.nodes:
            parent.setdefault((tag, n), (tag, n))
    for l, r, _ in pairs:
        if _var_kind(l) == "voltage":
            union(("L", l[2:]), ("R", r[2:]))

    # current variable of each element, after merging
    merged_of_left = {l: m for l, _, m in pairs}
    merged_of_right = {r: m for _, r, m in pairs}
    def cur_var(tag, ident):
        name = current_var(ident)
        if tag == "L":
            return merged_of_left.get(name, name)
        return merged_of_right.get(name, name)

    degree: dict[tuple[str, str], int] = {}
    incident: dict[tuple[str, str], list[tuple[str, int]]] = {}
    terminal: dict[tuple[str, str], bool] = {}
    for tag, c in sides:
        terms = set(c.terminals)
        for n in c.nodes:
            root = find((tag, n))
            terminal[root] = terminal.get(root, False) or n in terms
            degree.setdefault(root, 0)
            incident.setdefault(root, [])
        for e in c.elements:
            for node, sign in ((e.n1, 1), (e.n2, -1)):
                root = find((tag, node))
                degree[root] = degree.get(root, 0) + 1
                incident.setdefault(root, []).append((cur_var(tag, e.ident), sign))

    idx = {v: i for i, v in enumerate(universum.vars)}
    names, rows, closed = [], [], []
    for root in sorted(set(find(k) for k in parent)):
        if not terminal.get(root, False) or degree.get(root, 0) > 1:
            continue
        row = [Fraction(0)] * universum.dim
        for var, sign in incident.get(root, []):
            row[idx[var]] += Fraction(sign)
        label = f"{root[0]}.{root[1]}"
        names.append(f"ext:{label}")
        rows.append(tuple(row))
        closed.append(label)
    return tuple(names), tuple(rows), tuple(closed)


def glue(
    c1: Circuit, c2: Circuit, spec: GlueSpec, close_dangling: bool | None = None
) -> GlueResult:
    """Interconnect two circuits by identifying variables.

    Returns the stacked representation and system over the merged-name
    universum, together with the syntax- and semantics-side pullbacks and the
    verdict of comparing them.
    """
    close = spec.close_dangling if close_dangling is None else close_dangling
    k1, k2 = compile_circuit(c1), compile_circuit(c2)
    pairs, glued = _merged_names(spec, k1.universum, k2.universum)

    lift1 = vect.coordinate_map(
        glued, k1.universum, {m: l for l, _, m in pairs} | {
            v: v for v in k1.universum.vars if v not in {l for l, _, _ in pairs}
        }
    )
    lift2 = vect.coordinate_map(
        glued, k2.universum, {m: r for _, r, m in pairs} | {
            v: v for v in k2.universum.vars if v not in {r for _, r, _ in pairs}
        }
    )
    f1, f2 = k1.rep.f1, k2.rep.f1
    row_names = tuple(f"L:{n}" for n in f1.cod.vars) + tuple(f"R:{n}" for n in f2.cod.vars)
    stacked = LinMap(
        glued,
        VectObj(row_names),
        tuple(carriers.compose(f1, lift1).matrix) + tuple(carriers.compose(f2, lift2).matrix),
    )

    shared = VectObj(tuple(m for _, _, m in pairs))
    psi1 = vect.coordinate_map(k1.universum, shared, {l: m for l, _, m in pairs})
    psi2 = vect.coordinate_map(k2.universum, shared, {r: m for _, r, m in pairs})
    e_shared = EquationRep(
        vect.zero_map(shared, vect.ZERO_SPACE), vect.zero_map(shared, vect.ZERO_SPACE)
    )
    m1 = EquationMorphism(k1.rep, e_shared, psi1, vect.zero_map(f1.cod, vect.ZERO_SPACE))
    m2 = EquationMorphism(k2.rep, e_shared, psi2, vect.zero_map(f2.cod, vect.ZERO_SPACE))

    epb = pullback_equations(m1, m2)
    syntax_system = arr_eq(epb.rep)
    semantics_system = pullback_systems(arr_eq_morphism(m1), arr_eq_morphism(m2)).system
    preserved = systems_equal(syntax_system, semantics_system)

    # transport the pullback behavior onto the merged names and cross-check
    # against the stacked equations
    iota = vect.pair_into_product(lift1, lift2)
    estar = vect.pair_into_product(
        epb.proj1.psi_u, epb.proj2.psi_u
    )
    alpha_matrix = vect.solve_matrix(
        iota.matrix, glued.dim, estar.matrix, syntax_system.universum.dim
    )
    if alpha_matrix is None:
        raise MismatchError("pullback universum does not match the merged universum")
    alpha = LinMap(syntax_system.universum, glued, alpha_matrix)
    transported = vect.column_space(carriers.compose(alpha, syntax_system.inclusion))
    direct = behavior_image(arr_eq(kernel_rep(stacked)))
    if transported != direct:
        raise MismatchError("stacked equations disagree with the pullback route")

    closed_names: tuple[str, ...] = ()
    if close:
        ext_names, ext_rows, closed_names = _close_rows(c1, c2, pairs, glued)
        stacked = LinMap(
            glued,
            VectObj(tuple(stacked.cod.vars) + ext_names),
            tuple(stacked.matrix) + ext_rows,
        )
    rep = kernel_rep(stacked)
    return GlueResult(
        rep=rep,
        system=arr_eq(rep),
        universum=glued,
        merged=pairs,
        syntax_system=syntax_system,
        semantics_system=semantics_system,
        preservation_equal=preserved,
        close_dangling=close,
        closed_terminals=closed_names,
    )


# -- phenomes and emergence ---------------------------------------------------

@dataclass(frozen=True)
class Phenome:
    vars: tuple[str, ...]
    system: System

    @property
    def dim(self) -> int:
        return behavior_image(self.system).dim


def phenome(s: System, names) -> Phenome:
    """Restrict a system to the named variables by projecting its behavior."""
    obs = tuple(names)
    for n in obs:
        if n not in s.universum.vars:
            raise MismatchError(f"unknown observable variable {n!r}")
    pi = vect.projection_onto(s.universum, obs)
    _, manifest = project_latent(s, pi)
    return Phenome(obs, manifest)


@dataclass(frozen=True)
class EmergenceReport:
    observed: tuple[str, ...]
    parts_dim: int
    whole_dim: int
    emergent: bool
    close_dangling: bool

    def to_json(self) -> dict:
        return {
            "observe": list(self.observed),
            "parts_dim": self.parts_dim,
            "whole_dim": self.whole_dim,
            "emergent": self.emergent,
            "close_dangling": self.close_dangling,
        }


def emergence_report(
    c1: Circuit, c2: Circuit, spec: GlueSpec, names, close_dangling: bool | None = None
) -> EmergenceReport:
    """Compare the interconnection of phenomes with the phenome of the interconnection."""
    obs = tuple(names)
    k1, k2 = compile_circuit(c1), compile_circuit(c2)
    ph1 = phenome(k1.system, obs)
    ph2 = phenome(k2.system, obs)
    parts = behavior_image(ph1.system).intersect(behavior_image(ph2.system))
    glued = glue(c1, c2, spec, close_dangling)
    whole = behavior_image(phenome(glued.system, obs).system)
    return EmergenceReport(
        observed=obs,
        parts_dim=parts.dim,
        whole_dim=whole.dim,
        emergent=whole != parts,
        close_dangling=glued.close_dangling,
    )
