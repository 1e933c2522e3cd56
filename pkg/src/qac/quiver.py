"""Finite windows of the doubly-infinite repetition quiver and its ice cuts.

Vertices are (node, shift) pairs; the infinite quiver has an arrow
(i,r) -> (j,s) exactly when C_{i,j} != 0 and s = r + d_i*C_{i,j}.  The
quiver splits into two isomorphic components; a window is the component of
an explicit base vertex clipped to a shift interval, with every vertex
whose full neighborhood lies outside marked frozen.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, NamedTuple

from .cartan import CartanData
from .errors import EmptyWindow


class Vertex(NamedTuple):
    node: int
    shift: int

    def text(self) -> str:
        return f"({self.node},{self.shift})"


def psi_relabel(v: Vertex, cd: CartanData) -> Vertex:
    """Shift a vertex one symmetrizer step up its column: (i,r) -> (i, r+d_i)."""
    return Vertex(v.node, v.shift + cd.di(v.node))


def psi_relabel_inverse(v: Vertex, cd: CartanData) -> Vertex:
    return Vertex(v.node, v.shift - cd.di(v.node))


def column(v: Vertex) -> int:
    """Column index of a vertex (vertices of a column share the node)."""
    return v.node


def out_neighbors(cd: CartanData, v: Vertex) -> list[Vertex]:
    i, r = v
    return [
        Vertex(j, r + cd.di(i) * cd.c(i, j))
        for j in cd.nodes()
        if cd.c(i, j) != 0
    ]


def in_neighbors(cd: CartanData, v: Vertex) -> list[Vertex]:
    i, r = v
    return [
        Vertex(j, r - cd.di(j) * cd.c(j, i))
        for j in cd.nodes()
        if cd.c(j, i) != 0
    ]


def neighbors(cd: CartanData, v: Vertex) -> set[Vertex]:
    return set(out_neighbors(cd, v)) | set(in_neighbors(cd, v))


class Quiver:
    """Finite quiver with a frozen subset; arrows form a multiset.

    Canonical form has no loops and no 2-cycles.  Arrows between two frozen
    vertices are kept as inert window data (no exchange ever reads them);
    mutation never composes new ones.
    """

    __slots__ = ("vertices", "arrows", "frozen", "_hash")

    def __init__(
        self,
        vertices: Iterable[Vertex],
        arrows: Iterable[tuple[Vertex, Vertex]],
        frozen: Iterable[Vertex] = (),
    ):
        self.vertices = frozenset(Vertex(*v) for v in vertices)
        self.frozen = frozenset(Vertex(*v) for v in frozen)
        if not self.frozen <= self.vertices:
            raise ValueError("frozen set is not a subset of the vertices")
        counts = Counter((Vertex(*a), Vertex(*b)) for a, b in arrows)
        # Drop loops, cancel 2-cycles greedily.
        for (a, b) in list(counts):
            if a == b:
                del counts[(a, b)]
        for (a, b) in sorted(counts):
            rev = (b, a)
            if counts.get((a, b), 0) and counts.get(rev, 0):
                k = min(counts[(a, b)], counts[rev])
                counts[(a, b)] -= k
                counts[rev] -= k
        for pair in [p for p, c in counts.items() if c <= 0]:
            del counts[pair]
        for (a, b) in counts:
            if not (a in self.vertices and b in self.vertices):
                raise ValueError(f"arrow {a}->{b} leaves the vertex set")
        self.arrows: tuple[tuple[Vertex, Vertex], ...] = tuple(
            sorted(pair for pair, c in counts.items() for _ in range(c))
        )
        self._hash = hash((self.vertices, self.arrows, self.frozen))

    def mutable_vertices(self) -> frozenset[Vertex]:
        return self.vertices - self.frozen

    def arrows_into(self, v: Vertex) -> list[Vertex]:
        return [a for a, b in self.arrows if b == v]

    def arrows_out_of(self, v: Vertex) -> list[Vertex]:
        return [b for a, b in self.arrows if a == v]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
            and self.frozen == other.frozen
        )

    def __hash__(self) -> int:
        return self._hash

    def mutate(self, k: Vertex) -> "Quiver":
        """Standard quiver mutation at a mutable vertex k.

        Newly composed arrows between two frozen vertices are discarded
        (standard ice convention); existing frozen-frozen arrows are inert.
        """
        ins = self.arrows_into(k)
        outs = self.arrows_out_of(k)
        new_arrows: list[tuple[Vertex, Vertex]] = []
        for a, b in self.arrows:
            if a == k or b == k:
                new_arrows.append((b, a))
            else:
                new_arrows.append((a, b))
        for a in ins:
            for b in outs:
                if not (a in self.frozen and b in self.frozen):
                    new_arrows.append((a, b))
        return Quiver(self.vertices, new_arrows, self.frozen)

    # -- export ---------------------------------------------------------

    def adjacency_text(self) -> str:
        """Plain adjacency list, one vertex per line, frozen marked with *."""
        lines = []
        for v in sorted(self.vertices):
            mark = "*" if v in self.frozen else ""
            targets = " ".join(w.text() for w in sorted(self.arrows_out_of(v)))
            lines.append(f"{v.text()}{mark} -> {targets}".rstrip())
        return "\n".join(lines)

    def dot_text(self) -> str:
        lines = ["digraph window {"]
        for v in sorted(self.vertices):
            shape = "box" if v in self.frozen else "ellipse"
            lines.append(f'  "{v.text()}" [shape={shape}];')
        for a, b in self.arrows:
            lines.append(f'  "{a.text()}" -> "{b.text()}";')
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<Quiver |V|={len(self.vertices)} |A|={len(self.arrows)} frozen={len(self.frozen)}>"


def _component_in_window(cd: CartanData, base: Vertex, lo: int, hi: int) -> set[Vertex]:
    if not lo <= base.shift <= hi:
        raise EmptyWindow(f"base {base.text()} outside window [{lo},{hi}]")
    seen = {base}
    todo = deque([base])
    while todo:
        v = todo.popleft()
        for w in neighbors(cd, v):
            if lo <= w.shift <= hi and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def _arrows_among(cd: CartanData, verts: set[Vertex]) -> list[tuple[Vertex, Vertex]]:
    return [(v, w) for v in verts for w in out_neighbors(cd, v) if w in verts]


def build_gamma_window(cd: CartanData, base: Vertex, r_min: int, r_max: int) -> Quiver:
    """Connected component of `base` clipped to shifts in [r_min, r_max].

    Vertices with any infinite-quiver neighbor outside the window are
    frozen, so every in-window mutation agrees with the infinite quiver.
    """
    base = Vertex(*base)
    verts = _component_in_window(cd, base, r_min, r_max)
    if not verts:
        raise EmptyWindow(f"no vertex in [{r_min},{r_max}]")
    frozen = {v for v in verts if not neighbors(cd, v) <= verts}
    return Quiver(verts, _arrows_among(cd, verts), frozen)


def build_ice_hminus(cd: CartanData, base: Vertex, depth: int) -> Quiver:
    """Nonpositive-shift part of the component plus frozen connectors.

    The part is the component of `base` within [-depth, 0]; for each column
    the unique positive-shift vertex adjacent to the part is added frozen,
    and part vertices with neighbors below -depth are frozen too.
    """
    if depth <= 0:
        raise EmptyWindow("depth must be positive")
    base = Vertex(*base)
    if base.shift > 0:
        raise EmptyWindow(f"base {base.text()} has positive shift")
    part = _component_in_window(cd, base, -depth, 0)
    if not part:
        raise EmptyWindow(f"no vertex in [-{depth},0]")
    connectors: set[Vertex] = set()
    for v in part:
        for w in neighbors(cd, v):
            if w.shift > 0:
                connectors.add(w)
    per_column = Counter(column(c) for c in connectors)
    dup = [j for j, cnt in per_column.items() if cnt > 1]
    if dup:
        raise ValueError(f"multiple connectors in columns {dup}")
    bottom = {v for v in part if any(w.shift < -depth for w in neighbors(cd, v))}
    verts = part | connectors
    return Quiver(verts, _arrows_among(cd, verts), connectors | bottom)
