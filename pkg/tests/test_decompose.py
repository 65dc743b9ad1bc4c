import itertools

import pytest

from cubegroups.decompose import (
    OrbitTree,
    decomposition_ordering,
    normal_form,
    orbit_tree,
    orbits,
    perm_image,
    planar_orderings,
    two_orbit_check,
)
from cubegroups.errors import (
    NotADecompositionError,
    RankTooSmallError,
    UnknownLabelError,
)
from cubegroups.graphs import admissible_quick
from cubegroups.group import generate_group, generator_rho
from cubegroups.signedperm import SignedPermutation
from cubegroups.sweep import enumerate_decorated_graphs

from conftest import graph_from


class TestPermImage:
    def test_single_letter(self, d4):
        assert perm_image(d4, ["a"]) == {"a": "a", "b": "c", "c": "b"}

    def test_empty_word(self, d4):
        assert perm_image(d4, []) == {s: s for s in d4.labels}

    def test_constant_on_group_elements(self, d4):
        # aba = c in the group, and both words give the identity permutation
        assert perm_image(d4, ["a", "b", "a"]) == perm_image(d4, ["c"])

    def test_matches_matrix_permutation_part(self, rank5):
        for word in itertools.product(rank5.labels, repeat=3):
            m = SignedPermutation.identity(rank5.labels)
            for s in word:
                m = generator_rho(rank5, s).compose(m)
            assert perm_image(rank5, word) == m.perm_map()

    def test_unknown_letter(self, d4):
        with pytest.raises(UnknownLabelError):
            perm_image(d4, ["a", "z"])


class TestOrbits:
    def test_d4(self, d4):
        assert orbits(d4).blocks == (frozenset("a"), frozenset("bc"))

    def test_all_identity_graph(self):
        g = graph_from("abcd")
        assert orbits(g).blocks == tuple(frozenset(s) for s in "abcd")

    def test_rank5(self, rank5):
        assert set(orbits(rank5).blocks) == {
            frozenset("ac"),
            frozenset("bd"),
            frozenset("e"),
        }

    @pytest.mark.parametrize("rank", [3, 4])
    def test_blocks_are_invariant(self, rank):
        for g in enumerate_decorated_graphs(rank):
            for block in orbits(g).blocks:
                for t in g.labels:
                    assert {g.involutions[t][s] for s in block} == block


class TestOrbitTree:
    def test_d4_tree(self, d4):
        tree = orbit_tree(d4)
        assert tree.labels == frozenset("abc")
        assert [c.labels for c in tree.children] == [frozenset("a"), frozenset("bc")]
        bc = tree.children[1]
        assert [c.labels for c in bc.children] == [frozenset("b"), frozenset("c")]

    def test_rank1_tree(self, rank1):
        tree = orbit_tree(rank1)
        assert tree.is_leaf

    def test_admissible_root_splits(self, rank5):
        assert len(orbit_tree(rank5).children) >= 2


def hand_tree(spec):
    """Build an OrbitTree from nested tuples of label strings."""
    if isinstance(spec, str) and len(spec) == 1:
        return OrbitTree(frozenset(spec), ())
    children = tuple(hand_tree(c) for c in spec[1])
    return OrbitTree(frozenset(spec[0]), children)


class TestDecompositionOrdering:
    def test_d4(self, d4):
        assert decomposition_ordering(orbit_tree(d4)) == ("a", "b", "c")

    def test_rank8_hand_supplied_tree(self):
        # two orbits of four labels, each splitting into commuting pairs
        tree = hand_tree(
            (
                "abcdefgh",
                [
                    ("abef", [("ae", ["a", "e"]), ("bf", ["b", "f"])]),
                    ("cdgh", [("cg", ["c", "g"]), ("dh", ["d", "h"])]),
                ],
            )
        )
        assert decomposition_ordering(tree) == tuple("aebfcgdh")

    def test_single_leaf(self, rank1):
        assert decomposition_ordering(orbit_tree(rank1)) == ("a",)

    def test_child_permutation(self, d4):
        tree = orbit_tree(d4)
        reordered = decomposition_ordering(tree, {frozenset("abc"): (1, 0)})
        assert reordered == ("b", "c", "a")

    def test_planar_orderings_d4(self, d4):
        order_set = set(planar_orderings(orbit_tree(d4)))
        assert order_set == {
            ("a", "b", "c"),
            ("a", "c", "b"),
            ("b", "c", "a"),
            ("c", "b", "a"),
        }


class TestNormalForm:
    def test_d4_orbit_ordering(self, d4):
        G = generate_group(d4)
        nf = normal_form(G, ("a", "b", "c"))
        words = {nf.word_for(e) for e in G.elements}
        assert words == {
            (),
            ("a",),
            ("b",),
            ("c",),
            ("a", "b"),
            ("a", "c"),
            ("b", "c"),
            ("a", "b", "c"),
        }

    def test_d4_bad_ordering_collides(self, d4):
        G = generate_group(d4)
        with pytest.raises(NotADecompositionError) as exc:
            normal_form(G, ("b", "a", "c"))
        bits1, bits2 = exc.value.collision
        assert bits1 != bits2

    def test_rank1(self, rank1):
        G = generate_group(rank1)
        nf = normal_form(G, ("a",))
        assert nf.to_element[(0,)].index == 0
        assert nf.to_element[(1,)].matrix == generator_rho(rank1, "a")

    def test_rejects_non_permutation_ordering(self, d4):
        G = generate_group(d4)
        with pytest.raises(UnknownLabelError):
            normal_form(G, ("a", "b"))

    @pytest.mark.parametrize("rank", [2, 3])
    def test_every_planar_ordering_works(self, rank):
        for g in enumerate_decorated_graphs(rank):
            if not admissible_quick(g):
                continue
            G = generate_group(g)
            for ordering in planar_orderings(orbit_tree(g)):
                nf = normal_form(G, ordering)
                assert len(nf.to_element) == 2 ** rank


class TestProductDecomposition:
    @pytest.mark.parametrize("rank", [2, 3])
    def test_unique_factorization_over_invariant_subsets(self, rank):
        for g in enumerate_decorated_graphs(rank):
            if not admissible_quick(g):
                continue
            G = generate_group(g)
            blocks = orbits(g).blocks
            if len(blocks) < 2:
                continue
            T = blocks[0]
            rest = frozenset(g.labels) - T
            left = _subgroup_matrices(g, T)
            right = _subgroup_matrices(g, rest)
            assert left & right == {SignedPermutation.identity(g.labels)}
            products = [l.compose(r) for l in left for r in right]
            assert len(set(products)) == 2 ** rank


def _subgroup_matrices(g, subset):
    gens = [generator_rho(g, s) for s in g.labels if s in subset]
    elems = {SignedPermutation.identity(g.labels)}
    frontier = list(elems)
    while frontier:
        nxt = []
        for m in frontier:
            for gen in gens:
                p = m.compose(gen)
                if p not in elems:
                    elems.add(p)
                    nxt.append(p)
        frontier = nxt
    return elems


class TestTwoOrbitCheck:
    def test_d4(self, d4):
        assert two_orbit_check(d4)

    def test_rank5(self, rank5):
        assert two_orbit_check(rank5)

    def test_rank1_rejected(self, rank1):
        with pytest.raises(RankTooSmallError):
            two_orbit_check(rank1)

    def test_rank2_always_true(self):
        # the unique rank-2 decorated graph forces both involutions trivial
        graphs = list(enumerate_decorated_graphs(2))
        assert len(graphs) == 1
        assert two_orbit_check(graphs[0])

    @pytest.mark.parametrize("rank", [3, 4])
    def test_holds_over_population(self, rank):
        for g in enumerate_decorated_graphs(rank):
            if admissible_quick(g):
                assert two_orbit_check(g)
