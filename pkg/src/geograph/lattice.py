"""Intersection lattices and the catalog of 4-dimensional building blocks.

Lattices are integer Gram matrices on a labelled basis of H_2.  Classes in
H^2 are written in the Poincare-dual basis, so cup products are evaluated
as ``u^T G v``.

Catalog entries:

========  =====================  ======  =====
name      description            c1^2    c2
========  =====================  ======  =====
E(n)      elliptic surface       0       12n
Q         T^4 # 2 CP2-bar        -2      2
Q*        T^4 # 3 CP2-bar        -3      3
P         CP^2 # 16 CP2-bar      -7      19
S         genus-1/genus-2 block  1       23
X(n)      Q* fibre-summed E(n)   -3      3+12n
========  =====================  ======  =====
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .errors import DimensionMismatch, UnknownBlock
from .exact import bareiss_det

__all__ = [
    "IntersectionLattice",
    "LineClass",
    "FourManifoldData",
    "pair",
    "neg_e8",
    "elliptic_surface",
    "building_block",
    "bundle_on_Xn",
    "line_bundle_on_Xn",
    "catalog",
    "E8_EDGES",
]

# Dynkin edges of E8 on nodes 1..8: the chain 1-2-3-4-5-6-7 with node 8 hung
# off node 5.  Nodes 1,2,3 form a chain and 8 touches none of them; the
# square of the line bundle on X(n) depends on this labelling.
E8_EDGES = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8))


@dataclass(frozen=True)
class IntersectionLattice:
    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise DimensionMismatch("Gram matrix is not square")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix is not symmetric")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i}" for i in range(n)))
        elif len(self.labels) != n:
            raise DimensionMismatch("need one label per basis element")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return bareiss_det(self.gram)

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def basis_class(self, label: str) -> "LineClass":
        i = self.index(label)
        return LineClass(tuple(1 if r == i else 0 for r in range(self.rank)))

    def class_from(self, coeffs: dict[str, int]) -> "LineClass":
        v = [0] * self.rank
        for lab, c in coeffs.items():
            v[self.index(lab)] += c
        return LineClass(tuple(v))


@dataclass(frozen=True)
class LineClass:
    """A class in H^2 (equivalently H_2 via Poincare duality), by coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __add__(self, other: "LineClass") -> "LineClass":
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionMismatch("classes live in lattices of different rank")
        return LineClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, c: int) -> "LineClass":
        return LineClass(tuple(c * x for x in self.coeffs))

    def __neg__(self) -> "LineClass":
        return LineClass(tuple(-x for x in self.coeffs))


def _coeffs(u) -> Sequence[int]:
    return u.coeffs if isinstance(u, LineClass) else tuple(u)


def pair(lattice: IntersectionLattice, u, v) -> int:
    """Cup product ``u^T G v``; accepts :class:`LineClass` or plain sequences."""
    cu, cv = _coeffs(u), _coeffs(v)
    n = lattice.rank
    if len(cu) != n or len(cv) != n:
        raise DimensionMismatch(f"expected vectors of length {n}, got {len(cu)} and {len(cv)}")
    g = lattice.gram
    total = 0
    for i, x in enumerate(cu):
        if x:
            row = g[i]
            total += x * sum(row[j] * y for j, y in enumerate(cv) if y)
    return total


@dataclass(frozen=True)
class FourManifoldData:
    """Characteristic data of a closed symplectic 4-manifold.

    ``lattice`` is the full intersection form when ``closed`` is true.  For
    X(n) only the sublattice of tau classes is modelled (``closed=False``),
    and ``c1`` is replaced by ``c1_pairings``: the values of c1 on each
    sublattice basis element.  Entries that the planner never reads set
    ``used_by_planner=False``.
    """

    name: str
    c1sq: int
    c2: int
    lattice: Optional[IntersectionLattice] = None
    c1: Optional[LineClass] = None
    closed: bool = True
    c1_pairings: Optional[tuple[int, ...]] = None
    used_by_planner: bool = True
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.c1 is not None:
            if self.lattice is None or not self.closed:
                raise ValueError("an explicit c1 needs the full lattice")
            if len(self.c1.coeffs) != self.lattice.rank:
                raise DimensionMismatch("c1 has the wrong length")
            if pair(self.lattice, self.c1, self.c1) != self.c1sq:
                raise ValueError(f"{self.name}: c1sq disagrees with c1^T G c1")

    @property
    def explicit(self) -> bool:
        return self.lattice is not None and self.closed and self.c1 is not None

    def c1_dot(self, u) -> int:
        """Pair c1 with a class ``u`` of the modelled lattice."""
        cu = _coeffs(u)
        if self.explicit:
            return pair(self.lattice, self.c1, cu)
        if self.c1_pairings is None:
            raise ValueError(f"{self.name}: c1 is not known on this lattice")
        if len(cu) != len(self.c1_pairings):
            raise DimensionMismatch("class has the wrong length")
        return sum(x * y for x, y in zip(self.c1_pairings, cu))


def _direct_sum(*blocks: tuple[Sequence[Sequence[int]], Sequence[str]]) -> IntersectionLattice:
    n = sum(len(g) for g, _ in blocks)
    gram = [[0] * n for _ in range(n)]
    labels: list[str] = []
    off = 0
    for g, labs in blocks:
        for i, row in enumerate(g):
            for j, x in enumerate(row):
                gram[off + i][off + j] = x
        labels.extend(labs)
        off += len(g)
    return IntersectionLattice(tuple(map(tuple, gram)), tuple(labels))


def neg_e8() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of -E8: diagonal -2, entry -1 on each Dynkin edge."""
    g = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for a, b in E8_EDGES:
        g[a - 1][b - 1] = g[b - 1][a - 1] = -1
    return tuple(map(tuple, g))


def _tau_labels(i: int) -> list[str]:
    return [f"tau{i},{j}" for j in range(1, 9)]


@lru_cache(maxsize=None)
def elliptic_surface(n: int) -> FourManifoldData:
    """E(n) with the basis tau_ij, alpha_k, beta_k, f, sigma."""
    if n < 1:
        raise ValueError("E(n) needs n >= 1")
    blocks = [(neg_e8(), _tau_labels(i)) for i in range(1, n + 1)]
    blocks += [(((0, 1), (1, -2)), [f"alpha{k}", f"beta{k}"]) for k in range(1, 2 * (n - 1) + 1)]
    blocks.append((((0, 1), (1, -n)), ["f", "sigma"]))
    lat = _direct_sum(*blocks)
    c1 = (2 - n) * lat.basis_class("f")
    return FourManifoldData(name=f"E({n})", c1sq=pair(lat, c1, c1), c2=12 * n, lattice=lat, c1=c1)


def _torus_blown_up(name: str, points: int, notes: tuple[str, ...]) -> FourManifoldData:
    # T^4 has intersection form 3H; each blow-up adds <-1> and subtracts e_i from c1
    hyper = ((0, 1), (1, 0))
    blocks = [(hyper, [f"t{2 * i + 1}", f"t{2 * i + 2}"]) for i in range(3)]
    blocks += [(((-1,),), [f"e{i}"]) for i in range(1, points + 1)]
    lat = _direct_sum(*blocks)
    c1 = lat.class_from({f"e{i}": -1 for i in range(1, points + 1)})
    return FourManifoldData(name=name, c1sq=pair(lat, c1, c1), c2=points, lattice=lat, c1=c1, notes=notes)


def _rational_surface(points: int) -> FourManifoldData:
    blocks = [(((1,),), ["h"])] + [(((-1,),), [f"e{i}"]) for i in range(1, points + 1)]
    lat = _direct_sum(*blocks)
    c1 = lat.class_from({"h": 3, **{f"e{i}": -1 for i in range(1, points + 1)}})
    return FourManifoldData(
        name="P",
        c1sq=pair(lat, c1, c1),
        c2=3 + points,
        lattice=lat,
        c1=c1,
        used_by_planner=False,
        notes=("simply connected", "contains a genus-2 surface of square 0"),
    )


@lru_cache(maxsize=None)
def _xn(n: int) -> FourManifoldData:
    if n < 1:
        raise ValueError("X(n) needs n >= 1")
    en = elliptic_surface(n)
    q_star = building_block("Q*")
    tau = [lab for lab in en.lattice.labels if lab.startswith("tau")]
    sub = IntersectionLattice(
        tuple(tuple(en.lattice.gram[en.lattice.index(a)][en.lattice.index(b)] for b in tau) for a in tau),
        tuple(tau),
    )
    # c1(X_n) = c1(Q*) + c1(E(n)) - 2 PD(F); the tau classes avoid Q* and the
    # nucleus, so only the E(n) part can pair with them
    c1_en = en.c1 + (-2) * en.lattice.basis_class("f")
    pairings = tuple(pair(en.lattice, c1_en, en.lattice.basis_class(lab)) for lab in tau)
    return FourManifoldData(
        name=f"X({n})",
        c1sq=q_star.c1sq + en.c1sq,
        c2=q_star.c2 + en.c2,
        lattice=sub,
        closed=False,
        c1_pairings=pairings,
        notes=("fibre sum Q* #_F E(n)", "only the tau sublattice is modelled"),
    )


_PARAM = re.compile(r"^([EX])\((\d+)\)$")


@lru_cache(maxsize=None)
def building_block(name: str) -> FourManifoldData:
    name = name.strip()
    if name == "Q":
        return _torus_blown_up("Q", 2, ("contains a genus-2 surface F2 of square 0", "contains a torus F disjoint from F2"))
    if name == "Q*":
        return _torus_blown_up("Q*", 3, ("Q blown up once more, away from F",))
    if name == "P":
        return _rational_surface(16)
    if name == "S":
        return FourManifoldData(
            name="S",
            # T^4 # 17 CP2-bar = (-17, 17), summed with two CP^2 along cubics
            c1sq=1,
            c2=23,
            used_by_planner=False,
            notes=("simply connected", "contains disjoint square-0 surfaces of genus 1 and 2"),
        )
    match = _PARAM.match(name)
    if match:
        kind, n = match.group(1), int(match.group(2))
        if n >= 1:
            return elliptic_surface(n) if kind == "E" else _xn(n)
    raise UnknownBlock(f"unknown building block {name!r}")


def line_bundle_on_Xn(n: int) -> LineClass:
    """c1(L) = sum_{i<n} 2 tau_i1 + tau_n1 + tau_n2 + tau_n3 + tau_n8."""
    xn = building_block(f"X({n})")
    coeffs = {f"tau{i},1": 2 for i in range(1, n)}
    coeffs.update({f"tau{n},{j}": 1 for j in (1, 2, 3, 8)})
    return xn.lattice.class_from(coeffs)


def bundle_on_Xn(n: int) -> tuple[int, int]:
    """Return ``(<c1(L)^2, [X_n]>, <c1(L) c1(X_n), [X_n]>)`` from the lattice."""
    if n < 1:
        raise ValueError("X(n) needs n >= 1")
    xn = building_block(f"X({n})")
    c1e = line_bundle_on_Xn(n)
    return pair(xn.lattice, c1e, c1e), xn.c1_dot(c1e)


def catalog(ns: Sequence[int] = (1, 2, 3)) -> list[FourManifoldData]:
    names = ["Q", "Q*", "P", "S"] + [f"E({n})" for n in ns] + [f"X({n})" for n in ns]
    return [building_block(nm) for nm in names]
