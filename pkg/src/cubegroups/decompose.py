"""Orbit structure and product decompositions.

The involutions of a decorated graph generate an action of the whole group on
its label set (each generator acts by its own involution).  Orbits of that
action are invariant subsets; recursing into the restricted graphs gives the
orbit tree, whose leaf order is exactly an ordering for which every group
element factors uniquely as a product of 0/1 powers of the generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    NotADecompositionError,
    RankTooSmallError,
    UnknownLabelError,
)
from .graphs import DecoratedGraph, Permutation, require_admissible
from .group import CubeGroup, GroupElement
from .signedperm import SignedPermutation


def perm_image(g: DecoratedGraph, word) -> Permutation:
    """Composite of the involutions along a word, applied-first order.

    Constant on group elements: equal elements give equal permutations.
    """
    comp = {t: t for t in g.labels}
    for s in word:
        if s not in g.involutions:
            raise UnknownLabelError(s)
        j = g.involutions[s]
        comp = {t: j[comp[t]] for t in comp}
    return comp


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[frozenset[str], ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, s: str) -> frozenset[str]:
        for b in self.blocks:
            if s in b:
                return b
        raise UnknownLabelError(s)


def orbits(g: DecoratedGraph) -> OrbitPartition:
    """Orbits of the label set under all involutions, ordered by least label."""
    remaining = list(g.labels)
    blocks = []
    while remaining:
        seed = remaining[0]
        block = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for t in g.labels:
                y = g.involutions[t][x]
                if y not in block:
                    block.add(y)
                    frontier.append(y)
        blocks.append(frozenset(block))
        remaining = [s for s in remaining if s not in block]
    return OrbitPartition(tuple(blocks))


@dataclass(frozen=True)
class OrbitTree:
    """Recursive orbit partition; children are the orbits of the restricted graph."""

    labels: frozenset[str]
    children: tuple["OrbitTree", ...]

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaf_labels(self) -> tuple[str, ...]:
        if self.is_leaf:
            (label,) = self.labels
            return (label,)
        return tuple(s for child in self.children for s in child.leaf_labels())


def orbit_tree(g: DecoratedGraph) -> OrbitTree:
    require_admissible(g)
    return _orbit_tree(g)


def _orbit_tree(g: DecoratedGraph) -> OrbitTree:
    if g.rank == 1:
        return OrbitTree(frozenset(g.labels), ())
    part = orbits(g)
    if part.block_count == 1:
        # cannot happen for an admissible graph of rank >= 2; keep the tree
        # well-formed anyway by splitting into singletons
        children = tuple(OrbitTree(frozenset((s,)), ()) for s in g.labels)
        return OrbitTree(frozenset(g.labels), children)
    children = tuple(_orbit_tree(g.restricted(block)) for block in part.blocks)
    return OrbitTree(frozenset(g.labels), children)


def decomposition_ordering(tree: OrbitTree, child_order=None) -> tuple[str, ...]:
    """Left-to-right leaf order; `child_order` optionally permutes the children
    of each node (a planar re-ordering), keyed by the node's frozen label set."""
    if child_order is None:
        return tree.leaf_labels()

    def walk(node):
        if node.is_leaf:
            (label,) = node.labels
            return (label,)
        children = node.children
        perm = child_order.get(node.labels)
        if perm is not None:
            children = tuple(children[i] for i in perm)
        return tuple(s for child in children for s in walk(child))

    return walk(tree)


def planar_orderings(tree: OrbitTree):
    """All leaf orders obtainable by permuting children at every node."""
    if tree.is_leaf:
        (label,) = tree.labels
        yield (label,)
        return
    child_orders = [list(planar_orderings(c)) for c in tree.children]
    for perm in itertools.permutations(range(len(tree.children))):
        for combo in itertools.product(*(child_orders[i] for i in perm)):
            yield tuple(s for part in combo for s in part)


@dataclass(frozen=True)
class NormalForm:
    ordering: tuple[str, ...]
    to_element: dict[tuple[int, ...], GroupElement]
    from_element: dict[int, tuple[int, ...]]  # element index -> bit vector

    def bits_for(self, element: GroupElement) -> tuple[int, ...]:
        return self.from_element[element.index]

    def word_for(self, element: GroupElement) -> tuple[str, ...]:
        bits = self.from_element[element.index]
        return tuple(s for s, m in zip(self.ordering, bits) if m)


def normal_form(G: CubeGroup, ordering) -> NormalForm:
    """Tabulate all 2^n products s1^m1 ... sn^mn and verify they are distinct.

    The table itself is the verification: a collision raises
    NotADecompositionError with the two offending bit vectors.
    """
    ordering = tuple(ordering)
    if sorted(ordering) != sorted(G.graph.labels):
        raise UnknownLabelError(ordering)
    from .group import generator_rho

    rho = {s: generator_rho(G.graph, s) for s in ordering}
    to_element = {}
    from_element = {}
    for bits in itertools.product((0, 1), repeat=len(ordering)):
        m = SignedPermutation.identity(G.graph.labels)
        for s, mi in zip(ordering, bits):
            if mi:
                m = m.compose(rho[s])  # rightmost factor applied first
        elem = G.element_for_matrix(m)
        if elem.index in from_element:
            raise NotADecompositionError(ordering, (from_element[elem.index], bits))
        to_element[bits] = elem
        from_element[elem.index] = bits
    return NormalForm(ordering, to_element, from_element)


def two_orbit_check(g: DecoratedGraph) -> bool:
    """Whether the label action has at least two orbits (expected for every
    admissible graph of rank >= 2, since each generator fixes its own label)."""
    require_admissible(g)
    if g.rank < 2:
        raise RankTooSmallError(g.rank, 2)
    return orbits(g).block_count >= 2
