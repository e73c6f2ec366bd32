import random

import pytest

from unipolar import (
    COMPLETE,
    BlockAssignment,
    VertexSet,
    check_representation,
    complement,
    graph_from_edges,
    indep,
    recognise,
    recognise_gsg,
    verify,
)
from unipolar import recognition as rec
from unipolar import oracle as orc
from unipolar.generators import gen_gnp, gen_unipolar, GenParams

from helpers import (
    all_graphs,
    clique,
    cycle,
    edgeless,
    graph_from_code,
    is_valid_central_choice,
    path,
    satisfying_central_sets,
    star,
    vs,
)


def single_block(n: int) -> BlockAssignment:
    return BlockAssignment([0] * n, 1)


def assert_decomposes(g, ba: BlockAssignment, rep) -> None:
    """The extracted representation must validate and match the partition."""
    assert check_representation(g, rep)
    central = set(rep.central)
    assert is_valid_central_choice(g, central, ba.block_of)
    # each block meets the side vertices in exactly one side clique or not at all
    for side in rep.sides:
        blocks_hit = {int(ba.block_of[v]) for v in side}
        assert len(blocks_hit) == 1


class TestVerify:
    def test_triangle_single_block(self):
        g = clique(3)
        ba = single_block(3)
        rep = verify(g, ba)
        assert rep is not None
        assert_decomposes(g, ba, rep)

    def test_p3_single_block_matches_assignment_enumeration(self):
        g = path(3)
        ba = single_block(3)
        rep = verify(g, ba)
        valid = satisfying_central_sets(g, ba.block_of)
        # brute force over all 8 assignments: exactly one of the non-adjacent
        # endpoints 0, 2 goes central, and the middle vertex may join it
        assert valid == {
            frozenset({0}),
            frozenset({2}),
            frozenset({0, 1}),
            frozenset({1, 2}),
        }
        assert rep is not None and frozenset(rep.central) in valid
        assert_decomposes(g, ba, rep)

    def test_two_disjoint_edges_single_block(self):
        g = graph_from_edges(4, [(0, 1), (2, 3)])
        ba = single_block(4)
        valid = satisfying_central_sets(g, ba.block_of)
        assert valid == {frozenset({0, 1}), frozenset({2, 3})}
        rep = verify(g, ba)
        assert rep is not None and frozenset(rep.central) in valid
        assert_decomposes(g, ba, rep)

    def test_c5_single_block_unsatisfiable(self):
        g = cycle(5)
        assert verify(g, single_block(5)) is None
        assert satisfying_central_sets(g, [0] * 5) == set()

    def test_sound_and_complete_on_random_partitions(self):
        rng = random.Random(20240)
        for _ in range(300):
            n = rng.randint(1, 7)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            m = rng.randint(1, n)
            block_of = [rng.randrange(m) for _ in range(n)]
            present = sorted(set(block_of))
            renum = {b: i for i, b in enumerate(present)}
            ba = BlockAssignment([renum[b] for b in block_of], len(present))
            rep = verify(g, ba)
            valid = satisfying_central_sets(g, ba.block_of)
            if rep is None:
                assert valid == set()
            else:
                assert frozenset(rep.central) in valid
                assert_decomposes(g, ba, rep)


class TestBlockAssignment:
    def test_rejects_non_surjective(self):
        with pytest.raises(ValueError):
            BlockAssignment([0, 0, 0], 2)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            BlockAssignment([0, 3], 2)


class TestAntiedge:
    def test_complete_graph(self):
        g = clique(4)
        outcome, grown = rec.antiedge(g, VertexSet.full(4), VertexSet.empty(4))
        assert outcome is COMPLETE
        assert grown == VertexSet.full(4)

    def test_p3_hand_trace(self):
        # scan order 0, 1, 2: absorb 0, absorb 1, then 2 misses 0
        g = path(3)
        outcome, grown = rec.antiedge(g, VertexSet.full(3), VertexSet.empty(3))
        assert outcome == (0, 2)
        assert grown == vs(3, [0, 1])

    def test_triangle_plus_isolated_vertex(self):
        g = graph_from_edges(4, [(0, 1), (0, 2), (1, 2)])
        outcome, grown = rec.antiedge(g, VertexSet.full(4), vs(4, [0]))
        (u, v), c = outcome, grown
        assert v == 3 and u in {0, 1, 2}
        assert 0 in c and c.issubset(vs(4, [0, 1, 2]))

    def test_seed_must_be_inside_scan_set(self):
        g = path(3)
        with pytest.raises(ValueError):
            rec.antiedge(g, vs(3, [0, 1]), vs(3, [2]))

    def test_postconditions_on_random_valid_calls(self):
        rng = random.Random(555)
        from unipolar import is_clique

        for _ in range(400):
            n = rng.randint(1, 9)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            u_members = [v for v in range(n) if rng.random() < 0.7]
            u_set = vs(n, u_members)
            seed = []
            for v in u_members:
                if rng.random() < 0.4 and all(g.adjacent(v, w) for w in seed):
                    seed.append(v)
            c_seed = vs(n, seed)
            outcome, grown = rec.antiedge(g, u_set, c_seed)
            if outcome is COMPLETE:
                assert grown == u_set
                assert is_clique(g, u_set)
            else:
                u, v = outcome
                assert u in grown
                assert v in u_set and v not in grown
                assert not g.adjacent(u, v)
                assert c_seed.issubset(grown) and grown.issubset(u_set)
                assert is_clique(g, grown)


class TestIndep:
    def test_complete_graph(self):
        assert len(indep(clique(5)).vertices) == 1

    def test_edgeless_graph(self):
        res = indep(edgeless(6))
        assert res.vertices == VertexSet.full(6)

    def test_p4_size_two(self):
        assert len(indep(path(4)).vertices) == 2
        assert orc.oracle_s(path(4)) == 2

    def test_empty_graph(self):
        assert indep(graph_from_edges(0, [])).vertices == VertexSet.empty(0)

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
    def test_exhaustive_small(self, n):
        for g in all_graphs(n):
            res = indep(g)
            members = res.vertices
            for v in members:
                assert not g.row_mask(v) & members.mask
            for v in range(n):
                if v not in members:
                    assert g.row_mask(v) & members.mask
            assert len(members) >= orc.oracle_s(g)
            assert res.absorptions <= n

    def test_sampled_seven_and_eight(self):
        rng = random.Random(31)
        for _ in range(400):
            n = rng.choice([7, 8])
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            res = indep(g)
            assert len(res.vertices) >= orc.oracle_s(g)
            assert res.absorptions <= n
        for i in range(200):
            n = rng.choice([7, 8])
            g, _ = gen_unipolar(GenParams(n=n, seed=i, central_fraction=rng.random()))
            assert len(indep(g).vertices) >= orc.oracle_s(g)


class TestTestAndBlocks:
    def test_p4_with_endpoints(self):
        g = path(4)
        rep = rec.test(g, vs(4, [0, 3]))
        assert rep is not None and check_representation(g, rep)

    def test_star_with_all_leaves(self):
        g = star(3)
        rep = rec.test(g, vs(4, [1, 2, 3]))
        assert rep is not None and check_representation(g, rep)
        # every representation of a star has the hub in its central clique
        assert 0 in rep.central

    def test_c5_fails(self):
        assert rec.test(cycle(5), vs(5, [0, 2])) is None

    def test_rejects_dependent_set(self):
        with pytest.raises(ValueError):
            rec.test(path(3), vs(3, [0, 1]))

    def test_blocks_star(self):
        g = star(3)
        rep = rec.blocks(g, vs(4, [1, 2, 3]))
        assert rep is not None and check_representation(g, rep)

    def test_blocks_single_edge(self):
        g = clique(2)
        rep = rec.blocks(g, vs(2, [0]))
        assert rep is not None and check_representation(g, rep)

    def test_blocks_c5(self):
        g = cycle(5)
        assert rec.blocks(g, vs(5, [0, 2])) is None

    def test_blocks_requires_maximality(self):
        with pytest.raises(ValueError):
            rec.blocks(path(4), vs(4, [0]))


class TestRecognise:
    def test_c4_positive(self):
        g = cycle(4)
        rep = recognise(g)
        assert rep is not None and check_representation(g, rep)

    def test_c5_negative(self):
        assert recognise(cycle(5)) is None

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
    def test_exhaustive_small_matches_oracle(self, n):
        for g in all_graphs(n):
            rep = recognise(g)
            expected = orc.oracle_is_unipolar(g)
            assert (rep is None) == (expected is None)
            if rep is not None:
                assert check_representation(g, rep)

    def test_never_returns_invalid_certificate(self):
        rng = random.Random(606)
        for i in range(150):
            n = rng.randint(1, 12)
            g = gen_gnp(n, rng.random(), seed=i)
            rep = recognise(g)
            if rep is not None:
                assert check_representation(g, rep)

    def test_accepts_planted_instances(self):
        for i, n in enumerate([10, 25, 60, 140]):
            g, planted = gen_unipolar(GenParams(n=n, seed=100 + i))
            assert check_representation(g, planted)
            rep = recognise(g)
            assert rep is not None and check_representation(g, rep)


class TestRecogniseGsg:
    def test_c5_neither(self):
        assert recognise_gsg(cycle(5)).verdict == rec.VERDICT_NEITHER

    def test_edgeless_both(self):
        cert = recognise_gsg(edgeless(4))
        assert cert.verdict == rec.VERDICT_BOTH
        assert check_representation(edgeless(4), cert.representation)
        assert check_representation(clique(4), cert.co_representation)

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
    def test_exhaustive_small_matches_oracle(self, n):
        for g in all_graphs(n):
            cert = recognise_gsg(g)
            up = orc.oracle_is_unipolar(g) is not None
            co = orc.oracle_is_unipolar(complement(g)) is not None
            expected = {
                (True, True): rec.VERDICT_BOTH,
                (True, False): rec.VERDICT_UNIPOLAR,
                (False, True): rec.VERDICT_CO_UNIPOLAR,
                (False, False): rec.VERDICT_NEITHER,
            }[(up, co)]
            assert cert.verdict == expected
            if up:
                assert check_representation(g, cert.representation)
            if co:
                assert check_representation(complement(g), cert.co_representation)


class TestCheckRepresentation:
    def test_whole_graph_central(self):
        g = clique(3)
        assert check_representation(g, rec.Representation(VertexSet.full(3), ()))

    def test_p4_valid_split(self):
        g = path(4)
        rep = rec.Representation(vs(4, [1, 2]), (vs(4, [0]), vs(4, [3])))
        assert check_representation(g, rep)

    def test_p4_non_clique_central(self):
        g = path(4)
        rep = rec.Representation(vs(4, [0, 3]), (vs(4, [1]), vs(4, [2])))
        assert not check_representation(g, rep)

    def test_rejects_cross_side_edge(self):
        g = path(4)
        rep = rec.Representation(vs(4, [0]), (vs(4, [1, 2]), vs(4, [3])))
        assert not check_representation(g, rep)  # edge 2-3 joins the sides

    def test_rejects_non_partition(self):
        g = edgeless(3)
        rep = rec.Representation(vs(3, [0]), (vs(3, [1]),))
        assert not check_representation(g, rep)  # vertex 2 uncovered

    def test_rejects_non_clique_central_pair(self):
        g = edgeless(2)
        rep = rec.Representation(vs(2, [0, 1]), ())
        assert not check_representation(g, rep)  # 0-1 not an edge

    def test_rejects_empty_side(self):
        g = clique(2)
        rep = rec.Representation(vs(2, [0, 1]), (VertexSet.empty(2),))
        assert not check_representation(g, rep)
