"""Finite sets and total functions, one of the two exact carriers.

Element labels are plain strings and objects keep them sorted, so equality of
objects (and of computed subobjects such as equalizers, images, and pullbacks)
is ordinary ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iterproduct
from typing import Iterator

from .errors import MismatchError


def pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


@dataclass(frozen=True)
class FinObj:
    elements: tuple[str, ...]

    def __post_init__(self):
        elems = tuple(sorted(str(e) for e in self.elements))
        if len(set(elems)) != len(elems):
            raise MismatchError(f"duplicate element labels in {elems!r}")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label) -> bool:
        return label in self.elements


@dataclass(frozen=True)
class FinMap:
    dom: FinObj
    cod: FinObj
    table: dict[str, str]

    def __post_init__(self):
        table = {str(k): str(v) for k, v in self.table.items()}
        if set(table) != set(self.dom.elements):
            raise MismatchError("map table must be defined on exactly the domain")
        for k, v in table.items():
            if v not in self.cod:
                raise MismatchError(f"image {v!r} of {k!r} is not in the codomain")
        object.__setattr__(self, "table", table)

    def __call__(self, x: str) -> str:
        try:
            return self.table[x]
        except KeyError:
            raise MismatchError(f"{x!r} is not in the domain") from None

    def to_json(self) -> dict:
        return {
            "dom": list(self.dom.elements),
            "cod": list(self.cod.elements),
            "map": {k: self.table[k] for k in self.dom.elements},
        }


def identity(obj: FinObj) -> FinMap:
    return FinMap(obj, obj, {e: e for e in obj})


def compose(g: FinMap, f: FinMap) -> FinMap:
    if f.cod != g.dom:
        raise MismatchError("compose: codomain of f must equal domain of g")
    return FinMap(f.dom, g.cod, {x: g.table[f.table[x]] for x in f.dom})


def terminal_obj() -> FinObj:
    return FinObj(("*",))


def terminal_map(obj: FinObj) -> FinMap:
    point = terminal_obj()
    return FinMap(obj, point, {e: "*" for e in obj})


def is_injective(f: FinMap) -> bool:
    return len(set(f.table.values())) == len(f.dom)


def is_surjective(f: FinMap) -> bool:
    return set(f.table.values()) == set(f.cod.elements)


def product(x: FinObj, y: FinObj) -> tuple[FinObj, FinMap, FinMap]:
    labels, t1, t2 = [], {}, {}
    for a in x:
        for b in y:
            lab = pair_label(a, b)
            labels.append(lab)
            t1[lab] = a
            t2[lab] = b
    obj = FinObj(tuple(labels))
    return obj, FinMap(obj, x, t1), FinMap(obj, y, t2)


def product_map(f: FinMap, g: FinMap) -> FinMap:
    dom, pd1, pd2 = product(f.dom, g.dom)
    cod, _, _ = product(f.cod, g.cod)
    table = {p: pair_label(f(pd1(p)), g(pd2(p))) for p in dom}
    return FinMap(dom, cod, table)


def pullback(f1: FinMap, f2: FinMap) -> tuple[FinObj, FinMap, FinMap]:
    if f1.cod != f2.cod:
        raise MismatchError("pullback: maps must share their codomain")
    labels, t1, t2 = [], {}, {}
    for a1 in f1.dom:
        for a2 in f2.dom:
            if f1(a1) == f2(a2):
                lab = pair_label(a1, a2)
                labels.append(lab)
                t1[lab] = a1
                t2[lab] = a2
    obj = FinObj(tuple(labels))
    return obj, FinMap(obj, f1.dom, t1), FinMap(obj, f2.dom, t2)


def equalizer(f: FinMap, g: FinMap) -> tuple[FinObj, FinMap]:
    if f.dom != g.dom or f.cod != g.cod:
        raise MismatchError("equalizer: maps must be a parallel pair")
    agree = tuple(x for x in f.dom if f(x) == g(x))
    obj = FinObj(agree)
    return obj, FinMap(obj, f.dom, {x: x for x in agree})


def image_factorize(f: FinMap) -> tuple[FinMap, FinMap]:
    image = FinObj(tuple(set(f.table.values())))
    surj = FinMap(f.dom, image, dict(f.table))
    inj = FinMap(image, f.cod, {v: v for v in image})
    return surj, inj


def all_maps(dom: FinObj, cod: FinObj) -> Iterator[FinMap]:
    """Every total function dom -> cod. Exponential; keep domains small."""
    if len(dom) == 0:
        yield FinMap(dom, cod, {})
        return
    if len(cod) == 0:
        return
    for images in _iterproduct(cod.elements, repeat=len(dom)):
        yield FinMap(dom, cod, dict(zip(dom.elements, images)))
