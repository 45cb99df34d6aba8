"""Dynkin types, (-2)-curve incidence graphs and fixed/stable labelings.

A labeling marks every curve of a graph as ``"f"`` (pointwise fixed by an
automorphism) or ``"s"`` (stable but not fixed).  All curves are assumed
stable.  The local rules differ for automorphisms of order 2 and 3; both are
implemented as constraints and enumerated exhaustively per component.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, NamedTuple

_TYPE_ORDER = {"D": 0, "A": 1, "E": 2}
DEFAULT_PREFIXES = "CEFGJKLMNPQRSTUVWXYZ"


def _valid(letter: str, rank: int) -> bool:
    if letter == "A":
        return rank >= 1
    if letter == "D":
        return rank >= 4
    if letter == "E":
        return rank in (6, 7, 8)
    return False


class DynkinType:
    """A multiset of ADE components, e.g. ``DynkinType.parse("D16+A3")``.

    Display order is the order given; equality ignores it.
    """

    _token = re.compile(r"^([ADE])(\d+)(?:\^(\d+))?$")

    def __init__(self, components: Iterable[tuple[str, int]]):
        comps = tuple((str(l).upper(), int(r)) for l, r in components)
        for letter, rank in comps:
            if not _valid(letter, rank):
                raise ValueError(f"invalid Dynkin component {letter}{rank}")
        if not comps:
            raise ValueError("empty Dynkin type")
        self.components = comps

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        comps = []
        for token in text.replace(" ", "").split("+"):
            m = cls._token.match(token.upper())
            if not m:
                raise ValueError(f"cannot parse Dynkin component {token!r}")
            comps += [(m.group(1), int(m.group(2)))] * int(m.group(3) or 1)
        return cls(comps)

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    def key(self) -> tuple:
        return tuple(sorted(self.components, key=lambda c: (_TYPE_ORDER[c[0]], c[1])))

    def __eq__(self, other):
        return isinstance(other, DynkinType) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return "+".join(f"{l}{r}" for l, r in self.components)

    def __repr__(self):
        return f"DynkinType.parse({str(self)!r})"

    def canonical(self) -> DynkinType:
        return DynkinType(self.key())


@dataclass(frozen=True)
class CurveGraph:
    """Simple graph of smooth rational (-2)-curves; edges mean C.C' = 1."""

    vertices: tuple[str, ...]
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        edges = frozenset(frozenset(e) for e in self.edges)
        names = set(self.vertices)
        if len(names) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        for e in edges:
            if len(e) != 2 or not e <= names:
                raise ValueError(f"bad edge {sorted(e)}")
        object.__setattr__(self, "edges", edges)

    @property
    def adjacency(self) -> dict[str, tuple[str, ...]]:
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].append(b)
            adj[b].append(a)
        order = {v: i for i, v in enumerate(self.vertices)}
        return {v: tuple(sorted(n, key=order.__getitem__)) for v, n in adj.items()}

    def adjacent(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edges

    def induced(self, subset: Iterable[str]) -> CurveGraph:
        keep = list(dict.fromkeys(subset))
        missing = set(keep) - set(self.vertices)
        if missing:
            raise KeyError(f"unknown curves {sorted(missing)}")
        ks = set(keep)
        return CurveGraph(tuple(keep), frozenset(e for e in self.edges if e <= ks))

    def components(self) -> list[CurveGraph]:
        adj = self.adjacency
        seen, comps = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            order = {u: i for i, u in enumerate(self.vertices)}
            comps.append(self.induced(sorted(comp, key=order.__getitem__)))
        return comps

    def gram(self) -> list[list[int]]:
        idx = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
        for e in self.edges:
            a, b = (idx[x] for x in e)
            g[a][b] = g[b][a] = 1
        return g

    def to_text(self) -> str:
        """One line per edge (``name name``); isolated vertices alone on a line."""
        order = {v: i for i, v in enumerate(self.vertices)}
        lines = [" ".join(sorted(e, key=order.__getitem__)) for e in self.edges]
        lines.sort(key=lambda s: tuple(order[x] for x in s.split()))
        touched = {v for e in self.edges for v in e}
        lines += [v for v in self.vertices if v not in touched]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> CurveGraph:
        vertices, edges = [], []
        for line in text.splitlines():
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if len(parts) > 2:
                raise ValueError(f"bad adjacency line {line!r}")
            for p in parts:
                if p not in vertices:
                    vertices.append(p)
            if len(parts) == 2:
                edges.append(frozenset(parts))
        return cls(tuple(vertices), frozenset(edges))

    def dynkin_type(self) -> DynkinType | None:
        """ADE type of the graph, or None if some component is not ADE."""
        comps = []
        for comp in self.components():
            t = _component_type(comp)
            if t is None:
                return None
            comps.append(t)
        return DynkinType(comps)


def _component_type(comp: CurveGraph) -> tuple[str, int] | None:
    n = len(comp.vertices)
    if len(comp.edges) != n - 1:
        return None  # not a tree
    adj = comp.adjacency
    degrees = sorted(len(a) for a in adj.values())
    if n == 1 or degrees[-1] <= 2:
        return ("A", n)
    branch = [v for v, a in adj.items() if len(a) == 3]
    if degrees[-1] > 3 or len(branch) != 1:
        return None
    centre = branch[0]
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while len(adj[cur]) == 2:
            nxt = next(x for x in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    return None


def ade_graph(dtype: DynkinType | str, prefixes: Iterable[str] | None = None,
              fork: str = "high") -> CurveGraph:
    """Incidence graph of an ADE configuration with numbered curves.

    Component ``k`` uses ``prefixes[k]`` followed by 1..rank.  ``A_n`` is the
    chain 1-2-...-n.  For ``D_n`` with ``fork="high"`` curves n-1 and n both
    meet n-2; with ``fork="low"`` curves 1 and 2 both meet 3 and the chain
    continues 3-4-...-n.  ``E_n`` is the chain 1..n-1 with n attached to 3.
    """
    if isinstance(dtype, str):
        dtype = DynkinType.parse(dtype)
    prefixes = list(prefixes) if prefixes is not None else list(DEFAULT_PREFIXES)
    if len(prefixes) < len(dtype.components):
        raise ValueError("not enough label prefixes")
    if fork not in ("high", "low"):
        raise ValueError("fork must be 'high' or 'low'")
    vertices, edges = [], []
    for (letter, rank), prefix in zip(dtype.components, prefixes):
        names = [f"{prefix}{i}" for i in range(1, rank + 1)]
        vertices += names

        def link(i, j):
            edges.append(frozenset((names[i - 1], names[j - 1])))

        if letter == "A":
            for i in range(1, rank):
                link(i, i + 1)
        elif letter == "D" and fork == "high":
            for i in range(1, rank - 1):
                link(i, i + 1)
            link(rank, rank - 2)
        elif letter == "D":
            link(1, 3)
            link(2, 3)
            for i in range(3, rank):
                link(i, i + 1)
        else:
            for i in range(1, rank - 1):
                link(i, i + 1)
            link(rank, 3)
    return CurveGraph(tuple(vertices), frozenset(edges))


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

def graph_automorphisms(g: CurveGraph) -> list[dict[str, str]]:
    """All adjacency-preserving vertex permutations, by backtracking."""
    adj = g.adjacency
    verts = list(g.vertices)
    # assign high-degree, well-connected vertices first so pruning bites early
    order = []
    remaining = set(verts)
    while remaining:
        start = max(sorted(remaining, key=verts.index), key=lambda v: len(adj[v]))
        queue = [start]
        remaining.discard(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in adj[v]:
                if w in remaining:
                    remaining.discard(w)
                    queue.append(w)
    degree = {v: len(adj[v]) for v in verts}
    results = []
    image: dict[str, str] = {}
    used: set[str] = set()

    def extend(k):
        if k == len(order):
            results.append(dict(image))
            return
        v = order[k]
        for w in verts:
            if w in used or degree[w] != degree[v]:
                continue
            if all(g.adjacent(w, image[u]) == g.adjacent(v, u) for u in image):
                image[v] = w
                used.add(w)
                extend(k + 1)
                del image[v]
                used.discard(w)

    extend(0)
    results.sort(key=lambda p: tuple(verts.index(p[v]) for v in verts))
    return results


def compose(p: Mapping[str, str], q: Mapping[str, str]) -> dict[str, str]:
    """``p after q``."""
    return {v: p[q[v]] for v in q}


def invert(p: Mapping[str, str]) -> dict[str, str]:
    return {w: v for v, w in p.items()}


# ---------------------------------------------------------------------------
# fixed / stable labelings
# ---------------------------------------------------------------------------

class FixedProfile(NamedTuple):
    n_curves: int
    n_isolated: int


def _three_paths(adj):
    for mid, nbrs in adj.items():
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                yield (a, mid, b)


def _violations(g: CurveGraph, lab: Mapping[str, str], order: int, partial=False):
    """Yield a description of every local rule broken by ``lab``.

    With ``partial`` set, rules whose curves are not all labelled yet are
    skipped.
    """
    adj = g.adjacency
    for e in g.edges:
        a, b = tuple(e)
        if a in lab and b in lab:
            if lab[a] == lab[b] == "f":
                yield f"adjacent fixed curves {a}, {b}"
            if order == 2 and lab[a] == lab[b] == "s":
                yield f"adjacent stable curves {a}, {b} with neither fixed"
    for v, nbrs in adj.items():
        if lab.get(v) != "s" or (partial and any(n not in lab for n in nbrs)):
            continue
        n_fixed = sum(1 for n in nbrs if lab[n] == "f")
        if len(nbrs) > 2:
            yield f"{v} is not fixed but meets {len(nbrs)} stable curves"
        if order == 2 and n_fixed != 2:
            yield f"{v}: both fixed points must lie on fixed curves"
        if order == 3 and n_fixed == 0:
            yield f"{v} meets no fixed curve"
    if order == 3:
        for path in _three_paths(adj):
            if partial and any(x not in lab for x in path):
                continue
            if sum(lab[x] == "f" for x in path) != 1:
                yield f"chain {'-'.join(path)} does not have exactly one fixed curve"


def is_admissible(g: CurveGraph, lab: Mapping[str, str], order: int) -> bool:
    return next(_violations(g, lab, order), None) is None


def _component_labelings(comp: CurveGraph, order: int) -> list[dict[str, str]]:
    adj = comp.adjacency
    # depth-first vertex order keeps every partial assignment connected
    order_v, seen, stack = [], set(), [comp.vertices[0]]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        order_v.append(v)
        stack.extend(reversed([w for w in adj[v] if w not in seen]))
    out = []
    lab: dict[str, str] = {}

    def extend(k):
        if k == len(order_v):
            if is_admissible(comp, lab, order):
                out.append({v: lab[v] for v in comp.vertices})
            return
        for tag in ("f", "s"):
            lab[order_v[k]] = tag
            if next(_violations(comp, lab, order, partial=True), None) is None:
                extend(k + 1)
            del lab[order_v[k]]

    extend(0)
    out.sort(key=lambda l: "".join(l[v] for v in comp.vertices))
    return out


def admissible_labelings(g: CurveGraph, order: int) -> list[dict[str, str]]:
    """Every f/s labeling of ``g`` obeying the local rules for ``order``.

    Order 2: every edge joins a fixed and a non-fixed curve, and each
    non-fixed curve meets exactly two fixed curves.  Order 3: no two fixed
    curves meet, every path of three curves contains exactly one fixed curve,
    each non-fixed curve meets at most two curves and at least one fixed one.
    A component admitting no labeling makes the result empty.
    """
    if order not in (2, 3):
        raise ValueError("order must be 2 or 3")
    per_comp = []
    for comp in g.components():
        labs = _component_labelings(comp, order)
        if not labs:
            return []
        per_comp.append(labs)
    result = []
    for combo in product(*per_comp):
        merged = {}
        for part in combo:
            merged.update(part)
        result.append({v: merged[v] for v in g.vertices})
    return result


def count_profile(g: CurveGraph, lab: Mapping[str, str], order: int) -> FixedProfile:
    """Fixed curves N and isolated fixed points M of an admissible labeling.

    A non-fixed curve has two fixed points.  A fixed point where it meets a
    fixed curve is not isolated; every other fixed point is, and a point
    where two non-fixed curves meet is counted once.  ``M`` is only
    meaningful for order 3 (an involution's fixed locus here has no isolated
    points on stable curves); for order 2 it is reported as 0.
    """
    problems = list(_violations(g, lab, order))
    if problems:
        raise ValueError(f"inadmissible labeling: {problems[0]}")
    adj = g.adjacency
    n_fixed = sum(1 for v in g.vertices if lab[v] == "f")
    if order == 2:
        return FixedProfile(n_fixed, 0)
    isolated = 0
    for v in g.vertices:
        if lab[v] == "s":
            isolated += 2 - len(adj[v])  # fixed points not on any neighbour
    isolated += sum(1 for e in g.edges if all(lab[x] == "s" for x in e))
    return FixedProfile(n_fixed, isolated)


def format_labeling(g: CurveGraph, lab: Mapping[str, str]) -> str:
    return "-".join(lab[v] for v in g.vertices)


@lru_cache(maxsize=None)
def component_profiles(letter: str, rank: int, order: int) -> tuple[FixedProfile, ...]:
    """Distinct fixed profiles over all admissible labelings of one component."""
    g = ade_graph(DynkinType([(letter, rank)]))
    return tuple(sorted({count_profile(g, lab, order)
                         for lab in admissible_labelings(g, order)}))


def catalog_row(letter: str, rank: int, order: int) -> FixedProfile | None:
    """Closed-form (N, M) table for one component; None when no labeling exists."""
    if order == 2:
        if letter == "A" and rank % 2 == 1:
            return FixedProfile((rank + 1) // 2, 0)
        return None
    if order != 3:
        raise ValueError("order must be 2 or 3")
    if letter == "A":
        p, r = divmod(rank + 2, 3)
        return FixedProfile(p, p + 1 if r == 2 else p if r == 1 else p - 1)
    if letter == "D":
        if rank % 3 == 0:
            return FixedProfile(rank // 3, rank // 3 + 1)
        if rank % 3 == 1:
            q = rank // 3
            return FixedProfile(q, q + 2)
    return None


# ---------------------------------------------------------------------------
# the two 24-curve configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Configuration:
    """A 24-curve configuration with the fixed/stable tags of its automorphism."""

    name: str
    order: int
    graph: CurveGraph
    labeling: Mapping[str, str]
    unverified: tuple[str, ...] = ()

    @property
    def fixed_curves(self) -> list[str]:
        return [v for v in self.graph.vertices if self.labeling[v] == "f"]


def _s3_configuration() -> Configuration:
    idx = (1, 2, 3)
    verts = ([f"F{i}" for i in idx] + [f"G{j}" for j in idx]
             + [f"E{i}{j}" for i in idx for j in idx]
             + [f"E{i}{j}'" for i in idx for j in idx])
    edges = set()
    for i in idx:
        for j in idx:
            edges.add(frozenset((f"E{i}{j}", f"E{i}{j}'")))
            edges.add(frozenset((f"G{j}", f"E{i}{j}")))
            edges.add(frozenset((f"F{i}", f"E{i}{j}'")))
    graph = CurveGraph(tuple(verts), frozenset(edges))
    lab = {v: "f" if v[0] in "FG" else "s" for v in verts}
    return Configuration("S3", 3, graph, lab)


def _s2_configuration() -> Configuration:
    idx = (1, 2, 3)
    corners = [(i, j) for i in (1, 3) for j in (1, 3)]
    verts = ([f"F{i}" for i in idx] + [f"G{j}" for j in idx]
             + [c for i, j in corners for c in (f"E{i}{j}'", f"H{i}{j}", f"E{i}{j}")]
             + ["E12", "E22", "E32", "E21'", "E22'", "E23'"])
    edges = set()
    for i, j in corners:
        edges.add(frozenset((f"E{i}{j}'", f"H{i}{j}")))
        edges.add(frozenset((f"H{i}{j}", f"E{i}{j}")))
    chain = DIVISORS[7][0][0]
    for a, b in zip(chain, chain[1:]):
        edges.add(frozenset((a, b)))
    graph = CurveGraph(tuple(verts), frozenset(edges))
    lab = {v: "f" if v[0] in "FGH" else "s" for v in verts}
    unverified = (
        "G1-E31 and the attachments of E12, E22, E32, E23' to F/G curves "
        "are not determined by the published chain and are omitted",
    )
    return Configuration("S2", 2, graph, lab, unverified)


# Each divisor is a list of chains (one per connected component) written
# in the order the curves are listed, together with the claimed type.
DIVISORS: dict[int, tuple[list[list[str]], str]] = {
    1: ([["E11", "E21", "G1", "E31", "E31'", "F3", "E33'", "E33", "G3", "E23", "E23'",
          "F2", "E22'", "E22", "G2", "E12", "E12'", "F1", "E13'"]], "D19"),
    2: ([["E11'", "E12'", "F1", "E13'", "E13", "G3", "E23", "E23'", "F2", "E22'", "E22",
          "G2", "E32", "E32'", "F3", "E33'"],
         ["E21", "G1", "E31"]], "D16+A3"),
    3: ([["E12'", "E13'", "F1", "E11'", "E11", "G1", "E21", "E21'", "F2", "E22'", "E22",
          "G2", "E32"],
         ["E31'", "F3", "E33'", "E33", "G3", "E23"]], "D13+A6"),
    4: ([["E11'", "E12'", "F1", "E13'", "E13", "G3", "E23"],
         ["E33'", "F3", "E32'", "E32", "G2", "E22", "E22'", "F2", "E21'", "E21", "G1",
          "E31"]], "D7+A12"),
    5: ([["E11'", "E12'", "F1", "E13'", "E13", "G3", "E23"],
         ["E33'", "E32'", "F3", "E31'", "E31", "G1", "E21", "E21'", "F2", "E22'", "E22",
          "G2"]], "D7+D12"),
    6: ([["E11'", "E12'", "E13'", "F1"],
         ["E33", "G3", "E23", "E23'", "F2", "E22'", "E22", "G2", "E32", "E32'", "F3",
          "E31'", "E31", "G1", "E21"]], "D4+A15"),
    7: ([["H31", "E31'", "F3", "E33'", "H33", "E33", "G3", "E13", "H13", "E13'", "F1",
          "E11'", "H11", "E11", "G1", "E21'", "F2", "E22'", "G2"]], "A19"),
}


def shioda_inose_configuration(which: int) -> Configuration:
    """The 24-curve configuration on the discriminant-3 (``which=3``) or
    discriminant-4 (``which=2``) surface."""
    if which == 3:
        return _s3_configuration()
    if which == 2:
        return _s2_configuration()
    raise ValueError("which must be 3 or 2")
