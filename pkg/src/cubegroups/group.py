"""Group generation, hypercube recognition, and decorated-graph extraction.

An admissible decorated graph of rank n generates a group of 2^n signed
permutations (the geometric images of the group elements).  The labeled Cayley
graph of that closure must be the 1-skeleton of the n-cube; `is_hypercube`
certifies this directly by assigning coordinates from parallel edge classes
and checking adjacency against Hamming distance 1.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    ClosureSizeMismatchError,
    IllDefinedInvolutionError,
    InternalConsistencyError,
    NotACubeGroupError,
    NotInvolutionError,
    NotStandardError,
    RankCapExceededError,
    UnknownLabelError,
)
from .graphs import DecoratedGraph, require_admissible
from .signedperm import SignedPermutation

RANK_CAP = 20  # bitmask vertex indexing


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph with one generator label per edge."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, str], ...]  # (u, v, label) with u < v

    def __post_init__(self):
        pairs = {(u, v) for u, v, _ in self.edges}
        if len(pairs) != len(self.edges):
            raise ValueError("parallel edges are not allowed")
        if any(u >= v for u, v in pairs):
            raise ValueError("edges must be stored as (u, v) with u < v")
        for v in self.vertices:
            labels = [l for a, b, l in self.edges if v in (a, b)]
            if len(labels) != len(set(labels)):
                raise ValueError(f"repeated edge label at vertex {v}")

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def label_at(self) -> dict[frozenset, str]:
        return {frozenset((u, v)): l for u, v, l in self.edges}


@dataclass(frozen=True)
class HypercubeResult:
    is_hypercube: bool
    dimension: int | None = None
    coords: dict[int, int] | None = None          # vertex -> coordinate bitmask
    edge_class: dict[frozenset, int] | None = None  # edge -> parallel class id
    reason: str | None = None

    def __bool__(self):
        return self.is_hypercube


class _DisjointSet:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def is_hypercube(lg: LabeledGraph) -> HypercubeResult:
    """Decide whether a connected simple graph is the 1-skeleton of a cube.

    Edges are grouped into parallel classes (transitive closure of "opposite
    sides of a common 4-cycle").  The graph passes when there are exactly n
    classes, each a perfect matching, and the bit-flip coordinate map is a
    consistent bijection onto {0,1}^n under which adjacency is exactly Hamming
    distance 1.  That final check certifies the isomorphism outright.
    """
    verts = lg.vertices
    if not verts:
        return HypercubeResult(False, reason="empty graph")
    adj = lg.adjacency()
    edge_ids = {frozenset((u, v)): i for i, (u, v, _) in enumerate(lg.edges)}

    # connectivity
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(verts):
        return HypercubeResult(False, reason="graph is not connected")

    # parallel classes via 4-cycles u-v-x-w-u
    ds = _DisjointSet(len(lg.edges))
    for u in verts:
        for v, w in itertools.combinations(sorted(adj[u]), 2):
            for x in (adj[v] & adj[w]) - {u}:
                ds.union(edge_ids[frozenset((u, v))], edge_ids[frozenset((w, x))])
                ds.union(edge_ids[frozenset((u, w))], edge_ids[frozenset((v, x))])
    roots = sorted({ds.find(i) for i in range(len(lg.edges))})
    class_of = {e: roots.index(ds.find(i)) for e, i in edge_ids.items()}
    n = len(roots)

    if len(verts) != 2 ** n:
        return HypercubeResult(
            False, reason=f"{n} parallel classes but {len(verts)} vertices (need 2^{n})"
        )
    # each class must be a perfect matching
    for c in range(n):
        touched = [v for e in class_of if class_of[e] == c for v in e]
        if len(touched) != len(verts) or len(set(touched)) != len(verts):
            return HypercubeResult(False, reason=f"parallel class {c} is not a perfect matching")

    # coordinates: crossing a class-c edge flips bit c
    base = verts[0]
    coords = {base: 0}
    queue = deque([base])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            bit = 1 << class_of[frozenset((u, v))]
            want = coords[u] ^ bit
            if v in coords:
                if coords[v] != want:
                    return HypercubeResult(False, reason="inconsistent coordinate assignment")
            else:
                coords[v] = want
                queue.append(v)
    if len(set(coords.values())) != 2 ** n:
        return HypercubeResult(False, reason="coordinate map is not a bijection")
    # adjacency must be exactly Hamming distance 1
    for u in verts:
        nbr = {coords[v] for v in adj[u]}
        if nbr != {coords[u] ^ (1 << c) for c in range(n)}:
            return HypercubeResult(False, reason=f"vertex {u} lacks Hamming-1 neighborhood")
    return HypercubeResult(True, dimension=n, coords=coords, edge_class=class_of)


def generator_rho(g: DecoratedGraph, s: str) -> SignedPermutation:
    """Geometric image of a generator: permutation part j_s, sign -1 only at s."""
    if s not in g.involutions:
        raise UnknownLabelError(s)
    signs = {t: (-1 if t == s else 1) for t in g.labels}
    return SignedPermutation.from_maps(g.labels, g.involutions[s], signs)


def word_matrix(g: DecoratedGraph, word) -> SignedPermutation:
    """Fold generator matrices along a word in applied-first order."""
    m = SignedPermutation.identity(g.labels)
    for s in word:
        m = generator_rho(g, s).compose(m)
    return m


@dataclass(frozen=True)
class GroupElement:
    index: int
    matrix: SignedPermutation
    word: tuple[str, ...]  # a shortest generator word, applied-first order


@dataclass
class CubeGroup:
    """A generated cube group with its Cayley graph and vertex indexing."""

    graph: DecoratedGraph
    elements: list[GroupElement]
    index_of: dict[SignedPermutation, int]
    cayley: LabeledGraph
    coords: dict[int, int]                 # element index -> hypercube bitmask
    class_label: tuple[str, ...]           # parallel class bit -> generator label
    subsets: list[frozenset[str]]          # element index -> vertex subset T

    @property
    def rank(self) -> int:
        return self.graph.rank

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity_index(self) -> int:
        return 0

    def element_for_matrix(self, m: SignedPermutation) -> GroupElement:
        return self.elements[self.index_of[m]]

    def element_for_word(self, word) -> GroupElement:
        return self.element_for_matrix(word_matrix(self.graph, word))

    def element_for_subset(self, subset) -> GroupElement:
        target = frozenset(subset)
        for e in self.elements:
            if self.subsets[e.index] == target:
                return e
        raise KeyError(f"no element with vertex subset {sorted(target)}")

    def multiply(self, i: int, k: int) -> int:
        return self.index_of[self.elements[i].matrix.compose(self.elements[k].matrix)]


def generate_group(g: DecoratedGraph) -> CubeGroup:
    """Breadth-first closure of the generator matrices, with hypercube certification.

    Deterministic label-order BFS gives reproducible shortest witness words.
    """
    require_admissible(g)
    n = g.rank
    if n > RANK_CAP:
        raise RankCapExceededError(n, RANK_CAP)
    rho = {s: generator_rho(g, s) for s in g.labels}
    ident = SignedPermutation.identity(g.labels)
    elements = [GroupElement(0, ident, ())]
    index_of = {ident: 0}
    edges = set()
    queue = deque([0])
    while queue:
        i = queue.popleft()
        x = elements[i]
        for s in g.labels:
            m = x.matrix.compose(rho[s])
            k = index_of.get(m)
            if k is None:
                k = len(elements)
                elements.append(GroupElement(k, m, (s,) + x.word))
                index_of[m] = k
                queue.append(k)
            edges.add((min(i, k), max(i, k), s))
    if len(elements) != 2 ** n:
        raise ClosureSizeMismatchError(2 ** n, len(elements))
    cayley = LabeledGraph(tuple(range(len(elements))), tuple(sorted(edges)))
    cube = is_hypercube(cayley)
    if not cube:
        raise InternalConsistencyError(
            f"Cayley graph of an admissible graph failed the cube check: {cube.reason}"
        )
    # map each parallel class to the generator labeling its edge at the identity
    label_at = cayley.label_at()
    class_label = [None] * cube.dimension
    adj = cayley.adjacency()
    for v in adj[0]:
        e = frozenset((0, v))
        class_label[cube.edge_class[e]] = label_at[e]
    class_label = tuple(class_label)
    subsets = [
        frozenset(class_label[c] for c in range(cube.dimension) if cube.coords[e.index] >> c & 1)
        for e in elements
    ]
    return CubeGroup(g, elements, index_of, cayley, cube.coords, class_label, subsets)


def _closure(generators, labels, mul):
    """BFS closure of labeled generators; returns (elements, adjacency, edge labels).

    `generators` are hashable values with an identity obtained by squaring any
    involution; elements are discovered in label order.
    """
    if len(set(generators)) != len(generators):
        raise NotACubeGroupError("generators are not pairwise distinct")
    ident = mul(generators[0], generators[0])
    gen_of = dict(zip(labels, generators))
    for s, gen in gen_of.items():
        if mul(gen, gen) != ident or gen == ident:
            raise NotInvolutionError(s)
    elements = [ident]
    index_of = {ident: 0}
    edges = {}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for s in labels:
            m = mul(elements[i], gen_of[s])
            k = index_of.get(m)
            if k is None:
                k = len(elements)
                elements.append(m)
                index_of[m] = k
                queue.append(k)
            edges[frozenset((i, k))] = s
    return elements, edges


def decorated_graph_from_group(generators, labels, mul=lambda a, b: a * b) -> DecoratedGraph:
    """Extract the decorated graph from involutive generators of a cube group.

    Works with any multiplication oracle over hashable, equality-comparable
    elements.  The group is generated explicitly, its labeled Cayley graph is
    certified as a cube, and each involution j_s is read off the unique 4-cycle
    at the identity through each pair of generator edges: a cyclic label
    reading (t1, t2, t3, t4) contributes j_{t2}(t1) = t3 in both directions.
    """
    labels = tuple(labels)
    generators = list(generators)
    if len(generators) != len(labels):
        raise ValueError("one generator per label required")
    elements, edge_labels = _closure(generators, labels, mul)
    edges = tuple(sorted((min(e), max(e), l) for e, l in edge_labels.items()))
    cayley = LabeledGraph(tuple(range(len(elements))), edges)
    cube = is_hypercube(cayley)
    if not cube:
        raise NotACubeGroupError(cube.reason)
    if cube.dimension != len(labels):
        raise NotACubeGroupError(
            f"cube dimension {cube.dimension} does not match generator count {len(labels)}"
        )
    adj = cayley.adjacency()
    gen_vertex = {}
    for v in adj[0]:
        gen_vertex[edge_labels[frozenset((0, v))]] = v

    assignments = {s: {s: s} for s in labels}

    def record(s, u, v):
        j = assignments[s]
        for a, b in ((u, v), (v, u)):
            if j.setdefault(a, b) != b:
                raise IllDefinedInvolutionError(s, f"j_{s}({a}) read as both {j[a]} and {b}")

    for s1, s2 in itertools.combinations(labels, 2):
        g1, g2 = gen_vertex[s1], gen_vertex[s2]
        across = (adj[g1] & adj[g2]) - {0}
        if len(across) != 1:
            raise IllDefinedInvolutionError(s1, f"no unique 4-cycle through edges {s1},{s2}")
        x = across.pop()
        reading = (
            s1,
            edge_labels[frozenset((g1, x))],
            edge_labels[frozenset((x, g2))],
            s2,
        )
        for i in range(4):
            record(reading[(i + 1) % 4], reading[i], reading[(i + 2) % 4])
    for s in labels:
        missing = set(labels) - set(assignments[s])
        if missing:
            raise IllDefinedInvolutionError(s, f"no reading assigns images for {sorted(missing)}")
    graph = DecoratedGraph(labels, assignments)
    report_ok = require_admissible_or_reason(graph)
    if report_ok is not None:
        raise NotACubeGroupError(f"extracted decorated graph is not admissible ({report_ok})")
    return graph


def require_admissible_or_reason(g: DecoratedGraph):
    from .graphs import is_admissible

    report = is_admissible(g)
    if report.admissible:
        return None
    return ", ".join(f"{f.seed}:{f.kind}" for f in report.failures)


def standard_subgroup(G: CubeGroup, subset) -> CubeGroup:
    """Subgroup generated by a label subset, required to be a cube group on it.

    Raises NotStandardError with evidence when the closure has the wrong order
    or its Cayley graph fails the cube check.
    """
    T = [s for s in G.graph.labels if s in set(subset)]
    if not T or set(subset) - set(G.graph.labels):
        raise UnknownLabelError(sorted(set(subset) - set(G.graph.labels)) or subset)
    gens = [generator_rho(G.graph, t) for t in T]
    elements, _ = _closure(gens, T, SignedPermutation.compose)
    if len(elements) != 2 ** len(T):
        raise NotStandardError(T, f"closure has order {len(elements)}, expected {2 ** len(T)}")
    try:
        sub_graph = decorated_graph_from_group(gens, T, SignedPermutation.compose)
    except NotACubeGroupError as exc:
        raise NotStandardError(T, exc.reason) from exc
    return generate_group(sub_graph)
