"""Integral lattices with labelled bases, discriminant forms and overlattices.

Vectors are coordinate lists over a lattice's basis; glue vectors have
rational coordinates and are always normalised to lie in [0, 1).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import isqrt, prod
from typing import Iterable, Sequence

from .dynkin import CurveGraph, DynkinType, ade_graph
from .exact import (det, divisors, format_fraction, hermite_row_basis, integer_kernel,
                    matmul, smith_normal_form, symmetric_signature, transpose)


@dataclass(frozen=True)
class Lattice:
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "gram", gram)
        n = len(self.labels)
        if len(gram) != n or any(len(row) != n for row in gram):
            raise ValueError("gram size does not match labels")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(i)):
            raise ValueError("gram is not symmetric")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def indices(self, labels: Iterable[str]) -> list[int]:
        return [self.index(x) for x in labels]

    def pair(self, x: Sequence, y: Sequence):
        return sum(x[i] * sum(g * yj for g, yj in zip(row, y))
                   for i, row in enumerate(self.gram) if x[i])

    def norm(self, x: Sequence):
        return self.pair(x, x)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @cached_property
    def determinant(self) -> int:
        return det([list(r) for r in self.gram])

    def signature(self) -> tuple[int, int]:
        pos, neg, zero = symmetric_signature([list(r) for r in self.gram])
        if zero:
            raise ValueError("degenerate lattice")
        return pos, neg

    def curve_graph(self) -> CurveGraph:
        """Intersection graph, for lattices spanned by disjoint-or-meeting (-2)-curves."""
        n = self.rank
        if any(self.gram[i][i] != -2 for i in range(n)):
            raise ValueError("not a lattice of (-2)-curves")
        edges = []
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] not in (0, 1):
                    raise ValueError("curves meet with multiplicity > 1")
                if self.gram[i][j]:
                    edges.append(frozenset((self.labels[i], self.labels[j])))
        return CurveGraph(self.labels, frozenset(edges))

    def sublattice(self, labels: Iterable[str]) -> Lattice:
        idx = self.indices(labels)
        return Lattice(tuple(self.labels[i] for i in idx),
                       tuple(tuple(self.gram[i][j] for j in idx) for i in idx))


def direct_sum(*lattices: Lattice) -> Lattice:
    labels = [x for l in lattices for x in l.labels]
    if len(set(labels)) != len(labels):
        raise ValueError("labels collide in direct sum")
    n = len(labels)
    gram = [[0] * n for _ in range(n)]
    off = 0
    for l in lattices:
        for i in range(l.rank):
            for j in range(l.rank):
                gram[off + i][off + j] = l.gram[i][j]
        off += l.rank
    return Lattice(tuple(labels), tuple(map(tuple, gram)))


def ade_lattice(dtype: DynkinType | str, prefixes: Iterable[str] | None = None,
                fork: str = "high") -> Lattice:
    """Negative-definite root lattice of an ADE type on numbered curves."""
    g = ade_graph(dtype, prefixes, fork)
    return Lattice(g.vertices, tuple(map(tuple, g.gram())))


def lattice_of_graph(g: CurveGraph) -> Lattice:
    return Lattice(g.vertices, tuple(map(tuple, g.gram())))


def rank_one(label: str, square: int) -> Lattice:
    return Lattice((label,), ((square,),))


def discriminant(l: Lattice) -> int:
    d = abs(l.determinant)
    if d == 0:
        raise ValueError("degenerate gram matrix")
    return d


def mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def mod2(x: Fraction) -> Fraction:
    return x - 2 * ((x.numerator // x.denominator) // 2)


def reduce_glue(v: Sequence) -> tuple[Fraction, ...]:
    return tuple(mod1(Fraction(x)) for x in v)


# ---------------------------------------------------------------------------
# discriminant groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GlueVector:
    """A dual-lattice vector, kept reduced modulo the lattice."""

    lattice: Lattice = field(repr=False, compare=False)
    coords: tuple[Fraction, ...]

    @classmethod
    def make(cls, lattice: Lattice, coords: Sequence) -> GlueVector:
        v = cls(lattice, reduce_glue(coords))
        if not v.in_dual():
            raise ValueError("vector is not in the dual lattice")
        return v

    def in_dual(self) -> bool:
        return all(Fraction(sum(g * x for g, x in zip(row, self.coords))).denominator == 1
                   for row in self.lattice.gram)

    @property
    def q(self) -> Fraction:
        return mod2(Fraction(self.lattice.norm(self.coords)))

    def b(self, other: GlueVector) -> Fraction:
        return mod1(Fraction(self.lattice.pair(self.coords, other.coords)))

    def __add__(self, other: GlueVector) -> GlueVector:
        return GlueVector(self.lattice, reduce_glue(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GlueVector:
        return GlueVector(self.lattice, reduce_glue(-a for a in self.coords))

    def scale(self, k: int) -> GlueVector:
        return GlueVector(self.lattice, reduce_glue(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def order(self) -> int:
        o = 1
        for x in self.coords:
            o = o * x.denominator // _gcd(o, x.denominator)
        return o

    def support(self) -> list[str]:
        return [self.lattice.labels[i] for i, x in enumerate(self.coords) if x]

    def __str__(self) -> str:
        by_coeff: dict[Fraction, list[str]] = {}
        for label, x in zip(self.lattice.labels, self.coords):
            if x:
                by_coeff.setdefault(x, []).append(label)
        if not by_coeff:
            return "0"
        parts = [f"{format_fraction(c)}({' + '.join(ls)})" for c, ls in sorted(by_coeff.items())]
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {lab: format_fraction(x) for lab, x in zip(self.lattice.labels, self.coords) if x}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class DiscriminantGroup:
    """L*/L for a nondegenerate lattice L, computed from its Smith form."""

    def __init__(self, lattice: Lattice):
        g = [list(r) for r in lattice.gram]
        if discriminant(lattice) == 0:
            raise ValueError("degenerate gram matrix")
        u, d, v = smith_normal_form(g)
        n = lattice.rank
        self.lattice = lattice
        self._u = u
        self._g = g
        self._slots = [i for i in range(n) if d[i][i] > 1]
        self.invariant_factors = [d[i][i] for i in self._slots]
        self.generators = [GlueVector.make(lattice, [Fraction(v[r][i], d[i][i]) for r in range(n)])
                           for i in self._slots]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        e = 1
        for d in self.invariant_factors:
            e = e * d // _gcd(e, d)
        return e

    def coords_of(self, x: GlueVector | Sequence) -> tuple[int, ...]:
        """Coordinates of a dual vector on ``generators``."""
        c = x.coords if isinstance(x, GlueVector) else x
        gx = [sum(Fraction(a) * b for a, b in zip(row, c)) for row in self._g]
        out = []
        for slot, d in zip(self._slots, self.invariant_factors):
            k = sum(uv * y for uv, y in zip(self._u[slot], gx))
            if Fraction(k).denominator != 1:
                raise ValueError("vector is not in the dual lattice")
            out.append(int(k) % d)
        return tuple(out)

    def element(self, k: Sequence[int]) -> GlueVector:
        coords = [Fraction(0)] * self.lattice.rank
        for ki, gen in zip(k, self.generators):
            coords = [a + ki * b for a, b in zip(coords, gen.coords)]
        return GlueVector(self.lattice, reduce_glue(coords))

    def elements(self) -> list[GlueVector]:
        els = [self.element(k) for k in product(*(range(d) for d in self.invariant_factors))]
        return sorted(els, key=lambda e: e.coords)

    def q(self, x: GlueVector) -> Fraction:
        return x.q

    def b(self, x: GlueVector, y: GlueVector) -> Fraction:
        return x.b(y)


def discriminant_group(l: Lattice) -> DiscriminantGroup:
    return DiscriminantGroup(l)


# ---------------------------------------------------------------------------
# isotropic subgroups and overlattices
# ---------------------------------------------------------------------------

def span(gens: Iterable[GlueVector], lattice: Lattice) -> frozenset:
    """Coordinate tuples of the subgroup generated by ``gens``."""
    zero = GlueVector(lattice, tuple(Fraction(0) for _ in range(lattice.rank)))
    group = {zero.coords: zero}
    frontier = [zero]
    gens = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y.coords not in group:
                    group[y.coords] = y
                    new.append(y)
        frontier = new
    return frozenset(group)


def _minimal_generators(members: frozenset, lattice: Lattice) -> list[GlueVector]:
    gens: list[GlueVector] = []
    current = span([], lattice)
    for c in sorted(members):
        if c not in current:
            gens.append(GlueVector(lattice, c))
            current = span(gens, lattice)
    return gens


@dataclass(frozen=True)
class Overlattice:
    base: Lattice
    generators: tuple[GlueVector, ...]
    members: frozenset = field(repr=False)

    @property
    def index(self) -> int:
        return len(self.members)

    @property
    def discriminant(self) -> int:
        return discriminant(self.base) // self.index ** 2

    def basis(self) -> list[list[Fraction]]:
        return overlattice_basis(self.base, [g.coords for g in self.generators])

    def lattice(self, prefix: str = "b") -> Lattice:
        return gram_of_basis(self.base, self.basis(), prefix)


def overlattice_basis(base: Lattice, glue: Sequence[Sequence]) -> list[list[Fraction]]:
    """Z-basis of base + span(glue), in base coordinates."""
    n = base.rank
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows += [[Fraction(x) for x in g] for g in glue]
    den = 1
    for r in rows:
        for x in r:
            den = den * x.denominator // _gcd(den, x.denominator)
    basis = hermite_row_basis([[int(x * den) for x in r] for r in rows])
    return [[Fraction(x, den) for x in r] for r in basis]


def gram_of_basis(base: Lattice, basis: Sequence[Sequence], prefix: str = "b") -> Lattice:
    """Lattice spanned by rational vectors of ``base``; raises if not integral."""
    g = [list(r) for r in base.gram]
    bg = matmul(basis, g)
    gram = matmul(bg, transpose(basis))
    if any(Fraction(x).denominator != 1 for r in gram for x in r):
        raise ValueError("vectors do not span an integral lattice")
    labels = tuple(f"{prefix}{i + 1}" for i in range(len(basis)))
    return Lattice(labels, tuple(tuple(int(x) for x in r) for r in gram))


def isotropic_subgroups(group: DiscriminantGroup) -> list[frozenset]:
    """All subgroups on which q vanishes mod 2 (hence b vanishes mod 1)."""
    lat = group.lattice
    elements = [e for e in group.elements() if e.q == 0]
    start = span([], lat)
    seen = {start}
    queue = [start]
    while queue:
        sub = queue.pop(0)
        for x in elements:
            if x.coords in sub:
                continue
            if any(mod1(Fraction(lat.pair(x.coords, y))) for y in sub):
                continue
            bigger = span([GlueVector(lat, c) for c in sub] + [x], lat)
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def enumerate_overlattices(l: Lattice) -> list[Overlattice]:
    """Every even overlattice of an even lattice, one per isotropic subgroup."""
    if not l.is_even():
        raise ValueError("lattice is not even")
    group = discriminant_group(l)
    return [Overlattice(l, tuple(_minimal_generators(s, l)), s)
            for s in isotropic_subgroups(group)]


# ---------------------------------------------------------------------------
# Nikulin's parity test
# ---------------------------------------------------------------------------

class Nikulin(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INAPPLICABLE = "inapplicable"


def nikulin_filter(curves: Iterable[str], graph: CurveGraph) -> Nikulin:
    """Half the sum of disjoint (-2)-curves can be integral only for 0, 8 or 16 curves."""
    curves = list(dict.fromkeys(curves))
    for i, a in enumerate(curves):
        for b in curves[i + 1:]:
            if graph.adjacent(a, b):
                return Nikulin.INAPPLICABLE
    return Nikulin.PASS if len(curves) in (0, 8, 16) else Nikulin.FAIL


def nikulin_subgroup(members: frozenset, lattice: Lattice,
                     graph: CurveGraph | None = None) -> tuple[Nikulin, list[str]]:
    """Apply the parity test to every element of order 2 of a glue subgroup.

    Returns FAIL with the offending curves if any applicable element fails,
    otherwise PASS (INAPPLICABLE if no element of order 2 was testable).
    """
    graph = graph or lattice.curve_graph()
    tested = False
    for c in sorted(members):
        v = GlueVector(lattice, c)
        if v.order != 2:
            continue
        verdict = nikulin_filter(v.support(), graph)
        if verdict is Nikulin.FAIL:
            return Nikulin.FAIL, v.support()
        tested = tested or verdict is Nikulin.PASS
    return (Nikulin.PASS if tested else Nikulin.INAPPLICABLE), []


# ---------------------------------------------------------------------------
# rank-20 Picard extensions
# ---------------------------------------------------------------------------

H_LABEL = "H"


@dataclass(frozen=True)
class PicardExtension:
    """Δ̄ ⊕ Z·H glued along a cyclic group of order n.

    ``glue`` lists every x in disc(Δ̄) of order n with q(x) = -H²/n² mod 2;
    each gives the extension vector h = H/n - x.
    """

    delta: Lattice
    closure: Overlattice
    h_square: int
    n: int
    glue: tuple[GlueVector, ...]

    @property
    def delta_bar_discriminant(self) -> int:
        return self.closure.discriminant

    @cached_property
    def ambient(self) -> Lattice:
        return direct_sum(self.delta, rank_one(H_LABEL, self.h_square))

    def extension_vector(self, x: GlueVector) -> tuple[Fraction, ...]:
        return tuple([-c for c in x.coords] + [Fraction(1, self.n)])

    def extension_vectors(self) -> list[tuple[Fraction, ...]]:
        return [self.extension_vector(x) for x in self.glue]

    def picard_basis(self, x: GlueVector | None = None) -> list[list[Fraction]]:
        x = x if x is not None else self.glue[0]
        glue = [list(g.coords) + [Fraction(0)] for g in self.closure.generators]
        glue.append(list(self.extension_vector(x)))
        return overlattice_basis(self.ambient, glue)

    def picard_lattice(self, x: GlueVector | None = None) -> Lattice:
        return gram_of_basis(self.ambient, self.picard_basis(x), "p")


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def picard_extension_search(delta: Lattice, target_disc: int, hsq_bound: int = 200,
                            graph: CurveGraph | None = None) -> list[PicardExtension]:
    """Rank-20 even lattices of discriminant ``target_disc`` containing ``delta``
    with primitive closure Δ̄ and Δ̄^⊥ = Z·H, H² even and at most ``hsq_bound``.

    The closure runs over isotropic subgroups passing the parity test.  An
    empty result excludes the type.
    """
    graph = graph or delta.curve_graph()
    out = []
    for closure in enumerate_overlattices(delta):
        verdict, _ = nikulin_subgroup(closure.members, delta, graph)
        if verdict is Nikulin.FAIL:
            continue
        out.extend(_extensions_over(delta, closure, target_disc, hsq_bound))
    return out


def perp_quotient(delta: Lattice, closure: Overlattice) -> list[GlueVector]:
    """Representatives of Γ^⊥/Γ, one per coset, as elements of disc(Δ)."""
    group = discriminant_group(delta)
    gamma = [GlueVector(delta, c) for c in closure.members]
    perp = [x for x in group.elements() if all(x.b(y) == 0 for y in gamma)]
    reps, covered = [], set()
    for x in perp:
        if x.coords in covered:
            continue
        reps.append(x)
        covered.update((x + y).coords for y in gamma)
    return reps


def _extensions_over(delta, closure, target_disc, hsq_bound):
    disc_bar = closure.discriminant
    reps = perp_quotient(delta, closure)
    gamma = [GlueVector(delta, c) for c in closure.members]

    def coset_order(x):
        k = 1
        y = x
        while y.coords not in closure.members:
            y = y + x
            k += 1
        return k

    orders = {x.coords: coset_order(x) for x in reps}
    exponent = 1
    for o in orders.values():
        exponent = exponent * o // _gcd(exponent, o)
    found = []
    for n in divisors(exponent):
        hsq, rem = divmod(target_disc * n * n, disc_bar)
        if rem or hsq <= 0 or hsq % 2 or hsq > hsq_bound or hsq % n:
            continue
        want = mod2(Fraction(-hsq, n * n))
        glue = []
        for x in reps:
            if orders[x.coords] != n:
                continue
            # q is only defined on Γ^⊥/Γ; pick the lexicographically least
            # coset member as representative
            cos = min((x + y for y in gamma), key=lambda v: v.coords)
            if cos.q == want:
                glue.append(cos)
        if glue:
            glue.sort(key=lambda v: v.coords)
            found.append(PicardExtension(delta, closure, hsq, n, tuple(glue)))
    return found


def orthogonal_complement(ambient: Lattice, sub: Sequence) -> Lattice:
    """Orthogonal complement of a sublattice, given by basis labels/indices or vectors."""
    n = ambient.rank
    vecs = []
    for s in sub:
        if isinstance(s, (str, int)):
            i = ambient.index(s) if isinstance(s, str) else s
            vecs.append([int(j == i) for j in range(n)])
        else:
            vecs.append(list(s))
    if vecs:
        sub_gram = [[ambient.pair(a, b) for b in vecs] for a in vecs]
        if det(sub_gram) == 0:
            raise ValueError("degenerate sublattice")
    g = [list(r) for r in ambient.gram]
    rows = matmul(vecs, g) if vecs else [[0] * n]
    den = 1
    for r in rows:
        for x in r:
            den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
    rows = [[int(Fraction(x) * den) for x in r] for r in rows]
    kernel = integer_kernel(rows)
    kernel = hermite_row_basis(kernel)
    return gram_of_basis(ambient, kernel, "h")


def certify_picard(lat: Lattice, target_disc: int) -> dict:
    """Integrality is implicit in Lattice; report evenness, |det| and signature."""
    return {
        "even": lat.is_even(),
        "abs_det": abs(lat.determinant),
        "signature": lat.signature(),
        "ok": lat.is_even() and abs(lat.determinant) == target_disc
        and lat.signature() == (1, lat.rank - 1),
    }


__all__ = [
    "Lattice", "direct_sum", "ade_lattice", "lattice_of_graph", "rank_one",
    "discriminant", "DiscriminantGroup", "discriminant_group", "GlueVector",
    "Overlattice", "enumerate_overlattices", "isotropic_subgroups",
    "Nikulin", "nikulin_filter", "nikulin_subgroup", "PicardExtension",
    "picard_extension_search", "orthogonal_complement", "perp_quotient",
    "overlattice_basis", "gram_of_basis", "certify_picard",
]
