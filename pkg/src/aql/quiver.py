"""Quivers and the lattice-level bilinear forms attached to them."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import networkx as nx
import numpy as np
import sympy

from .errors import (
    DanglingEndpoint,
    DuplicateId,
    IndexMismatch,
    LoopArrow,
    NotAffine,
    OrientedCycle,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Arrow:
    id: Hashable
    src: Hashable
    dst: Hashable


@dataclass(frozen=True, eq=True)
class Quiver:
    """A finite loop-free quiver with a fixed vertex order.

    Lattice vectors are plain integer tuples indexed by ``vertices``.
    Build instances through :func:`build_quiver` so the invariants are checked.
    """

    vertices: tuple
    arrows: tuple[Arrow, ...]

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def arrow_ends(self) -> list[tuple[int, int]]:
        """(source index, target index) per arrow, in arrow order."""
        idx = self.index
        return [(idx[a.src], idx[a.dst]) for a in self.arrows]

    def simple(self, v) -> Vector:
        out = [0] * self.n_vertices
        out[self.index[v]] = 1
        return tuple(out)

    def check(self, *vectors: Sequence[int]) -> None:
        for v in vectors:
            if len(v) != self.n_vertices:
                raise IndexMismatch(
                    f"vector of length {len(v)} on a quiver with {self.n_vertices} vertices"
                )

    @cached_property
    def euler_matrix(self) -> np.ndarray:
        """E with e(a, b) = a^T E b."""
        n = self.n_vertices
        E = np.eye(n, dtype=np.int64)
        for s, t in self.arrow_ends():
            E[s, t] -= 1
        E.setflags(write=False)
        return E

    @cached_property
    def topological_order(self) -> list[int] | None:
        g = nx.MultiDiGraph()
        g.add_nodes_from(range(self.n_vertices))
        g.add_edges_from(self.arrow_ends())
        try:
            return list(nx.lexicographical_topological_sort(g))
        except nx.NetworkXUnfeasible:
            return None

    @property
    def is_acyclic(self) -> bool:
        return self.topological_order is not None

    def digest_payload(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "arrows": [
                {"id": str(a.id), "src": str(a.src), "dst": str(a.dst)} for a in self.arrows
            ],
        }


def build_quiver(vertices: Iterable, arrows: Iterable) -> Quiver:
    """Validate and build a quiver.

    ``arrows`` holds ``(id, src, dst)`` triples or :class:`Arrow` instances.
    """
    verts = tuple(vertices)
    if len(set(verts)) != len(verts):
        raise DuplicateId(f"duplicate vertex ids in {verts!r}")
    vset = set(verts)
    built = []
    seen = set()
    for a in arrows:
        if not isinstance(a, Arrow):
            a = Arrow(*a)
        if a.id in seen:
            raise DuplicateId(f"duplicate arrow id {a.id!r}")
        seen.add(a.id)
        for end in (a.src, a.dst):
            if end not in vset:
                raise DanglingEndpoint(f"arrow {a.id!r} references undeclared vertex {end!r}")
        if a.src == a.dst:
            raise LoopArrow(f"arrow {a.id!r} is a loop at {a.src!r}")
        built.append(a)
    return Quiver(verts, tuple(built))


def euler_form(q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    q.check(alpha, beta)
    total = sum(a * b for a, b in zip(alpha, beta))
    for s, t in q.arrow_ends():
        total -= alpha[s] * beta[t]
    return int(total)


def symmetrized_form(q: Quiver, alpha, beta) -> int:
    return euler_form(q, alpha, beta) + euler_form(q, beta, alpha)


def tits_form(q: Quiver, alpha) -> int:
    return euler_form(q, alpha, alpha)


def cartan_matrix(q: Quiver) -> np.ndarray:
    E = q.euler_matrix
    return E + E.T


def pairing(theta: Sequence[int], alpha: Sequence[int]) -> int:
    """The standard pairing <theta, alpha> = sum theta_i alpha_i."""
    return int(sum(t * a for t, a in zip(theta, alpha)))


# ---------------------------------------------------------------------------
# affine classification

@dataclass(frozen=True)
class AffineData:
    affine_type: str
    delta: Vector
    extending_vertices: tuple
    n: int
    acyclic: bool


def _underlying_graph(q: Quiver) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(q.n_vertices))
    g.add_edges_from(q.arrow_ends())
    return g


def _affine_catalogue(n_vertices: int) -> dict[str, nx.MultiGraph]:
    """Extended A-D-E graphs with the given number of vertices."""
    out = {}
    n = n_vertices - 1
    if n == 1:
        g = nx.MultiGraph()
        g.add_edges_from([(0, 1), (0, 1)])
        out["A1~"] = g
    elif n >= 2:
        out[f"A{n}~"] = nx.MultiGraph(nx.cycle_graph(n + 1))
    if n >= 4:
        # two forks joined by a path 2 .. n-2
        g = nx.MultiGraph()
        g.add_edges_from([(0, 2), (1, 2), (n - 2, n - 1), (n - 2, n)])
        g.add_edges_from((i, i + 1) for i in range(2, n - 2))
        if n == 4:
            g = nx.MultiGraph(nx.star_graph(4))
        out[f"D{n}~"] = g
    arms = {6: (2, 2, 2), 7: (3, 3, 1), 8: (5, 2, 1)}
    if n in arms:
        g = nx.MultiGraph()
        nxt = 1
        for length in arms[n]:
            prev = 0
            for _ in range(length):
                g.add_edge(prev, nxt)
                prev = nxt
                nxt += 1
        out[f"E{n}~"] = g
    return out


def _primitive_kernel_vector(C: np.ndarray) -> Vector | None:
    ker = sympy.Matrix(C.tolist()).nullspace()
    if len(ker) != 1:
        return None
    v = ker[0]
    den = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        return None
    return tuple(ints)


def classify_affine(q: Quiver) -> AffineData:
    """Recognise an extended Dynkin quiver and compute its imaginary root."""
    if q.n_vertices < 2:
        raise NotAffine("a quiver with fewer than two vertices is never affine")
    g = _underlying_graph(q)
    label = None
    for name, shape in _affine_catalogue(q.n_vertices).items():
        if nx.is_isomorphic(g, shape):
            label = name
            break
    if label is None:
        raise NotAffine("underlying graph is not an extended A-D-E diagram")
    delta = _primitive_kernel_vector(cartan_matrix(q))
    if delta is None:
        raise NotAffine("Cartan kernel is not spanned by a positive vector")
    ext = tuple(v for v, d in zip(q.vertices, delta) if d == 1)
    return AffineData(label, delta, ext, q.n_vertices - 1, q.is_acyclic)


# ---------------------------------------------------------------------------
# doubling and path counts

@dataclass(frozen=True)
class DoubleQuiver:
    quiver: Quiver
    base: Quiver
    star: dict  # arrow id -> partner id, both directions

    def __hash__(self):
        return hash(self.quiver)

    def __eq__(self, other):
        return isinstance(other, DoubleQuiver) and self.quiver == other.quiver


def star_id(arrow_id) -> str:
    return f"{arrow_id}*"


def double_quiver(q: Quiver) -> DoubleQuiver:
    arrows = list(q.arrows)
    star = {}
    for a in q.arrows:
        s = star_id(a.id)
        arrows.append(Arrow(s, a.dst, a.src))
        star[a.id] = s
        star[s] = a.id
    return DoubleQuiver(build_quiver(q.vertices, arrows), q, star)


def projective_injective_dims(q: Quiver) -> dict:
    """Map vertex -> (dim P(v), dim I(v)) by counting paths."""
    order = q.topological_order
    if order is None:
        raise OrientedCycle("path counts diverge on a quiver with an oriented cycle")
    n = q.n_vertices
    # paths[i][j] = number of paths i -> j
    paths = np.zeros((n, n), dtype=object)
    for i in range(n):
        paths[i, i] = 1
    ends = q.arrow_ends()
    for j in order:
        for s, t in ends:
            if s == j:
                for i in range(n):
                    paths[i, t] += paths[i, s]
    out = {}
    for v, i in q.index.items():
        out[v] = (tuple(int(x) for x in paths[i, :]), tuple(int(x) for x in paths[:, i]))
    return out
