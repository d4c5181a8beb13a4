import random

import pytest
from hypothesis import given, strategies as st

from mcluster import (
    ColouredQuiver,
    InvalidQuiverError,
    PlainQuiver,
    QuiverError,
    UnknownVertexError,
    fz_mutate,
    gabriel_quiver,
    mutate_formula,
    mutate_procedural,
    seed_from_acyclic,
    validate,
)
from fixtures import cycle4, two_vertex_cycle_patterns
from oracles import random_acyclic_plain, random_reachable_coloured


def arrow_colours(Q):
    return sorted((i, j, c) for i, j, c, k in Q.arrows for _ in range(k))


class TestSeed:
    def test_single_arrow(self):
        q = PlainQuiver.build((1, 2), [(1, 2)])
        Q = seed_from_acyclic(q, 3)
        assert arrow_colours(Q) == [(1, 2, 0), (2, 1, 3)]
        assert validate(Q).ok

    def test_single_vertex(self):
        Q = seed_from_acyclic(PlainQuiver.build((7,)), 2)
        assert Q.arrows == ()

    def test_chain(self):
        q = PlainQuiver.build((1, 2, 3), [(1, 2), (2, 3)])
        Q = seed_from_acyclic(q, 1)
        assert arrow_colours(Q) == [(1, 2, 0), (2, 1, 1), (2, 3, 0), (3, 2, 1)]

    def test_rejects_cycle(self):
        # build() forbids 2-cycles, so use a 3-cycle
        q = PlainQuiver.build((1, 2, 3), [(1, 2), (2, 3), (3, 1)])
        with pytest.raises(QuiverError):
            seed_from_acyclic(q, 2)

    def test_rejects_small_m(self):
        q = PlainQuiver.build((1, 2), [(1, 2)])
        with pytest.raises(QuiverError):
            seed_from_acyclic(q, 0)


class TestValidate:
    def test_seed_is_valid(self):
        Q = seed_from_acyclic(PlainQuiver.build((1, 2), [(1, 2)]), 3)
        report = validate(Q)
        assert report.ok and report.offending == ()

    def test_two_colours_on_a_pair(self):
        Q = ColouredQuiver.build(1, (1, 2), [(1, 2, 0), (1, 2, 1), (2, 1, 1), (2, 1, 0)])
        report = validate(Q)
        assert not report.monochromatic
        assert report.loopless

    def test_missing_dual_arrow(self):
        Q = ColouredQuiver.build(2, (1, 2), [(1, 2, 0)])
        report = validate(Q)
        assert not report.symmetric
        assert report.monochromatic and report.loopless
        assert report.offending


class TestBuild:
    def test_rejects_loop(self):
        with pytest.raises(QuiverError):
            ColouredQuiver.build(1, (1,), [(1, 1, 0)])

    def test_rejects_colour_out_of_range(self):
        with pytest.raises(QuiverError):
            ColouredQuiver.build(1, (1, 2), [(1, 2, 2)])

    def test_rejects_unknown_endpoint(self):
        with pytest.raises(UnknownVertexError):
            ColouredQuiver.build(1, (1, 2), [(1, 3, 0)])

    def test_aggregates_multiplicity(self):
        Q = ColouredQuiver.build(1, (1, 2), [(1, 2, 0), (1, 2, 0, 2)])
        assert Q.mult(1, 2, 0) == 3

    def test_equality_ignores_vertex_order(self):
        a = ColouredQuiver.build(1, (1, 2), [(1, 2, 0), (2, 1, 1)])
        b = ColouredQuiver.build(1, (2, 1), [(1, 2, 0), (2, 1, 1)])
        assert a == b and hash(a) == hash(b)

    def test_plain_rejects_two_cycle(self):
        with pytest.raises(QuiverError):
            PlainQuiver.build((1, 2), [(1, 2), (2, 1)])


class TestMutationCycle:
    def test_procedural_reproduces_the_cycle(self):
        Q0, Q1, Q2 = cycle4()
        assert mutate_procedural(Q0, "X") == Q1
        assert mutate_procedural(Q1, "X") == Q2
        assert mutate_procedural(Q2, "X") == Q0

    def test_formula_agrees_on_the_cycle(self):
        for Q in cycle4():
            assert mutate_formula(Q, "X") == mutate_procedural(Q, "X")

    def test_two_vertex_colour_cycle(self):
        patterns = two_vertex_cycle_patterns()
        Q = ColouredQuiver.build(3, ("a", "b"), [("a", "b", patterns[0][0]), ("b", "a", patterns[0][1])])
        seen = []
        cur = Q
        for _ in range(4):
            seen.append((next(c for i, j, c, k in cur.arrows if i == "a"),
                         next(c for i, j, c, k in cur.arrows if i == "b")))
            cur = mutate_procedural(cur, "b")
        assert tuple(seen) == patterns
        assert cur == Q  # period m + 1 = 4, exactly

    def test_two_vertex_cycle_not_shorter(self):
        Q = ColouredQuiver.build(3, ("a", "b"), [("a", "b", 1), ("b", "a", 2)])
        cur = Q
        for step in range(3):
            cur = mutate_procedural(cur, "b")
            assert cur != Q


class TestMutationFormula:
    def test_hand_evaluated_two_vertex(self):
        Q = seed_from_acyclic(PlainQuiver.build((1, 2), [(1, 2)]), 1)
        assert arrow_colours(mutate_formula(Q, 1)) == [(1, 2, 1), (2, 1, 0)]

    def test_single_vertex_unchanged(self):
        Q = ColouredQuiver.build(2, ("v",))
        assert mutate_formula(Q, "v") == Q
        assert mutate_procedural(Q, "v") == Q

    def test_matches_procedure_on_random_walks(self):
        rng = random.Random(20240817)
        for _ in range(150):
            Q = random_reachable_coloured(rng)
            v = rng.choice(Q.vertices)
            assert mutate_formula(Q, v) == mutate_procedural(Q, v)


class TestMutationContracts:
    def test_unknown_vertex(self):
        Q = seed_from_acyclic(PlainQuiver.build((1, 2), [(1, 2)]), 2)
        with pytest.raises(UnknownVertexError):
            mutate_procedural(Q, 9)
        with pytest.raises(UnknownVertexError):
            mutate_formula(Q, 9)

    def test_invalid_quiver_is_an_error(self):
        Q = ColouredQuiver.build(2, (1, 2), [(1, 2, 0)])  # missing dual arrow
        with pytest.raises(InvalidQuiverError):
            mutate_procedural(Q, 1)
        with pytest.raises(InvalidQuiverError):
            mutate_formula(Q, 1)

    def test_periodicity_and_validity_on_random_walks(self):
        rng = random.Random(96)
        for _ in range(150):
            Q = random_reachable_coloured(rng)
            v = rng.choice(Q.vertices)
            cur = Q
            for _ in range(Q.m + 1):
                cur = mutate_procedural(cur, v)
                report = validate(cur)
                assert report.ok, report
            assert cur == Q

    def test_duality_after_mutation(self):
        rng = random.Random(4711)
        for _ in range(80):
            Q = random_reachable_coloured(rng)
            nxt = mutate_procedural(Q, rng.choice(Q.vertices))
            for i, j, c, k in nxt.arrows:
                assert nxt.mult(j, i, nxt.m - c) == k


class TestFZ:
    def test_endpoint_reversal(self):
        q = PlainQuiver.build((1, 2), [(1, 2)])
        assert fz_mutate(q, 1) == PlainQuiver.build((1, 2), [(2, 1)])

    def test_path_mutated_in_the_middle(self):
        q = PlainQuiver.build((1, 2, 3), [(1, 2), (2, 3)])
        expected = PlainQuiver.build((1, 2, 3), [(2, 1), (3, 2), (1, 3)])
        assert fz_mutate(q, 2) == expected

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            fz_mutate(PlainQuiver.build((1,)), 2)

    @given(st.integers(0, 2 ** 30))
    def test_involution(self, seed):
        rng = random.Random(seed)
        q = random_acyclic_plain(rng)
        for _ in range(rng.randint(0, 4)):
            q = fz_mutate(q, rng.choice(q.vertices))
        v = rng.choice(q.vertices)
        assert fz_mutate(fz_mutate(q, v), v) == q


class TestGabriel:
    def test_cycle_base_colour_zero_arrows(self):
        Q0 = cycle4()[0]
        assert gabriel_quiver(Q0) == PlainQuiver.build(
            ("X", "I4", "I1", "Y1"), [("X", "I4"), ("X", "I1"), ("I1", "Y1")])

    def test_seed_roundtrip(self):
        q = PlainQuiver.build((1, 2, 3), [(1, 2), (3, 2)])
        assert gabriel_quiver(seed_from_acyclic(q, 3)) == q

    def test_all_colour_one_is_empty(self):
        Q = ColouredQuiver.build(1, (1, 2), [(1, 2, 1), (2, 1, 0)])
        assert gabriel_quiver(Q).arrows == () or gabriel_quiver(Q).mult(1, 2) == 0

    def test_shadow_of_coloured_mutation(self):
        # for m=1 the colour-0 projection commutes with mutation
        rng = random.Random(271828)
        for _ in range(60):
            plain = random_acyclic_plain(rng)
            Q = seed_from_acyclic(plain, 1)
            for _ in range(rng.randint(1, 6)):
                v = rng.choice(Q.vertices)
                Q = mutate_procedural(Q, v)
                plain = fz_mutate(plain, v)
                assert gabriel_quiver(Q) == plain


class TestSerialization:
    def test_roundtrip_and_byte_stability(self):
        Q = cycle4()[0]
        text = Q.to_json()
        again = ColouredQuiver.from_json(text)
        assert again == Q
        assert again.to_json() == text

    def test_arrows_sorted_in_output(self):
        Q = cycle4()[0]
        doc = Q.to_json_dict()
        keys = [(a["from"], a["to"], a["colour"]) for a in doc["arrows"]]
        assert keys == sorted(keys)

    def test_plain_roundtrip(self):
        q = PlainQuiver.build((1, 2, 3), [(1, 2, 2), (3, 2)])
        assert PlainQuiver.from_json(q.to_json()) == q

    def test_malformed_documents(self):
        for text in ("[]", "{\"m\": 1}", "{", "{\"m\":1,\"vertices\":[1],\"arrows\":[{}]}"):
            with pytest.raises(QuiverError):
                ColouredQuiver.from_json(text)

    @given(st.integers(0, 2 ** 30))
    def test_random_seed_roundtrips(self, seed):
        rng = random.Random(seed)
        Q = random_reachable_coloured(rng, max_vertices=4, walk=3)
        assert ColouredQuiver.from_json(Q.to_json()) == Q
