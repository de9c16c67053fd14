import json

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from lampgrid import (
    Element,
    METRIC,
    RadiusExceeded,
    SingularSystemError,
    a_length,
    arc_press_solve,
    ball_with_depths,
    certify_depth,
    evaluate,
    exact_distance,
    hex_param,
    identity,
    in_T,
    in_hex,
    make_gn,
    multiply,
    parse,
    press_effect,
    sphere_sizes,
    tour_lower_bound,
    trapezoid_summits,
    witness_word,
)
from lampgrid.metric import MemoryCapExceeded

from conftest import elements


A_ELEMENT = Element(frozenset({(0, 0)}), (0, 0))


class TestHexagon:
    def test_hex_param_identity(self):
        assert hex_param(identity()) == 0

    def test_hex_param_anchor(self):
        anchor, _ = make_gn(1)
        assert hex_param(anchor) == 1

    def test_hex_param_position_only(self):
        assert hex_param(Element(frozenset(), (2, -1))) == 2

    def test_in_T_corners(self):
        assert in_T((0, 0), 4)
        assert in_T((4, -4), 4)
        assert in_T((0, -4), 4)

    def test_in_T_excludes_above_diagonal(self):
        assert not in_T((1, 0), 4)

    def test_in_hex_boundary(self):
        assert in_hex((2, -4), 4)
        assert not in_hex((3, 3), 4)


class TestTrapezoid:
    def test_all_zero_base(self):
        for rows in (1, 2, 4):
            assert trapezoid_summits([0, 0, 0, 0], rows).summits == frozenset()

    def test_single_entry(self):
        assert trapezoid_summits([1], 1).summits == frozenset({(0, 0)})

    def test_worked_example(self):
        # solved by hand and cross-checked by elimination
        solution = trapezoid_summits([1, 0, 1, 1], 3)
        assert solution.summits == frozenset({(0, 0), (1, 0), (2, 0), (2, 1)})

    def test_rows_out_of_range(self):
        with pytest.raises(ValueError):
            trapezoid_summits([1, 0], 3)
        with pytest.raises(ValueError):
            trapezoid_summits([1, 0], 0)

    @given(st.lists(st.sampled_from((0, 1)), min_size=1, max_size=9), st.data())
    def test_replay_reproduces_base(self, bits, data):
        rows = data.draw(st.integers(1, len(bits)))
        solution = trapezoid_summits(bits, rows)
        replay = set()
        for lev, u in solution.summits:
            replay ^= press_effect((lev, u))
        assert replay == {(0, j) for j, b in enumerate(bits) if b}

    @given(st.lists(st.sampled_from((0, 1)), min_size=1, max_size=9), st.data())
    def test_summit_positions_allowed(self, bits, data):
        rows = data.draw(st.integers(1, len(bits)))
        solution = trapezoid_summits(bits, rows)
        for lev, u in solution.summits:
            assert 0 <= lev < rows
            assert lev == rows - 1 or u == 0


class TestArcPressSolve:
    def test_empty_target(self):
        arc = [(-1, -2), (-2, -2)]
        assert arc_press_solve(set(), arc, [(-1, 0), (-2, 0)]) == set()

    def test_single_lamp(self):
        arc = [(-1, -2), (-2, -2)]
        got = arc_press_solve({(-1, 0)}, arc, [(-1, 0), (-2, 0)])
        assert got == {(-1, -2)}

    @given(st.integers(1, 8), st.data())
    def test_replay_on_segment(self, n, data):
        segment = [(-k, 0) for k in range(1, n + 1)]
        target = set(data.draw(st.lists(st.sampled_from(segment), max_size=n)))
        arc = [(-k, -n) for k in range(1, n + 1)]
        chosen = arc_press_solve(target, arc, segment)
        replay = set()
        for vertex in chosen:
            replay ^= press_effect(vertex)
        assert {lamp for lamp in replay if lamp in set(segment)} == target

    def test_singular_system(self):
        # a press on the t-axis cannot reach any s-axis lamp
        with pytest.raises(SingularSystemError):
            arc_press_solve({(-1, 0)}, [(0, -2)], [(-1, 0), (-2, 0)])

    def test_target_outside_segment(self):
        with pytest.raises(SingularSystemError):
            arc_press_solve({(0, 1)}, [(-1, -2)], [(-1, 0)])


class TestWitness:
    def test_identity_empty(self):
        word = witness_word(identity())
        assert word.letters == ()

    def test_origin_press_exception(self):
        # hex parameter 0 but one letter is unavoidable
        word = witness_word(A_ELEMENT)
        assert a_length(word) == 1
        assert evaluate(word) == A_ELEMENT

    def test_anchor_is_tight(self):
        anchor, _ = make_gn(1)
        word = witness_word(anchor)
        assert evaluate(word) == anchor
        assert a_length(word) == 6

    @given(elements(max_n=8))
    @settings(max_examples=120)
    def test_replay_and_bound(self, g):
        word = witness_word(g)
        assert word.alphabet == METRIC
        assert evaluate(word) == g
        if g != A_ELEMENT:
            assert a_length(word) <= 6 * hex_param(g)

    def test_all_four_position_cases(self):
        lamps = frozenset({(0, 3), (0, -2), (-2, 0)})
        for pos in [(2, -3), (1, 2), (-3, -1), (-2, 3)]:
            g = Element(lamps, pos)
            word = witness_word(g)
            assert evaluate(word) == g
            assert a_length(word) <= 6 * hex_param(g)


class TestTour:
    def test_zero(self):
        assert tour_lower_bound(0) == 0

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_six_n(self, n):
        assert tour_lower_bound(n) == 6 * n

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            tour_lower_bound(-1)


class TestExactDistance:
    def test_identity(self):
        assert exact_distance(identity(), 1) == 0

    def test_single_move(self):
        assert exact_distance(evaluate(parse("at", METRIC)), 4) == 1

    def test_anchor(self):
        anchor, _ = make_gn(1)
        assert exact_distance(anchor, 6) == 6

    def test_radius_exceeded(self):
        anchor, _ = make_gn(1)
        with pytest.raises(RadiusExceeded) as info:
            exact_distance(anchor, 3)
        assert info.value.max_radius == 3

    def test_agrees_with_ball_depths(self):
        for element, depth in ball_with_depths(3).items():
            assert exact_distance(element, 4) == depth


class TestBallAndSpheres:
    def test_sphere_sizes_prefix(self):
        assert sphere_sizes(1) == [1, 17]

    def test_depths_are_consistent_with_moves(self):
        from lampgrid import move_elements, multiply

        depths = ball_with_depths(3)
        moves = [el for _, el in move_elements()]
        for element, depth in depths.items():
            if depth == 0:
                continue
            # some move must step one layer down
            assert any(
                depths.get(multiply(mv, element)) == depth - 1 for mv in moves
            )

    def test_memory_cap(self):
        with pytest.raises(MemoryCapExceeded):
            ball_with_depths(4, memory_limit_mb=0)


class TestMakeGn:
    def test_small_values(self):
        el1, w1 = make_gn(1)
        assert el1 == Element(frozenset({(-1, 0), (0, 1), (0, -1)}), (0, 0))
        assert a_length(w1) == 6
        el2, w2 = make_gn(2)
        assert el2.lamps == frozenset({(-2, 0), (0, 2), (0, -2)})
        assert el2.pos == (0, 0)
        assert a_length(w2) == 12

    @pytest.mark.parametrize("n", [1, 2, 7, 20])
    def test_word_replays(self, n):
        element, word = make_gn(n)
        assert evaluate(word) == element

    def test_requires_positive(self):
        with pytest.raises(ValueError):
            make_gn(0)


class TestCertifyDepth:
    def test_trivial(self):
        certificate = certify_depth(1, 0)
        assert certificate.verdict == "certified"
        assert certificate.neighborhood_size == 1

    def test_depth_one_anchor_is_dead_end(self):
        certificate = certify_depth(1, 1)
        assert certificate.verdict == "certified"
        assert certificate.neighborhood_size == 18
        assert certificate.max_witness_length <= 6

    def test_neighbours_confirmed_by_search(self):
        anchor, _ = make_gn(1)
        for b in ball_with_depths(1):
            assert exact_distance(multiply(anchor, b), 6) <= 6

    def test_json_schema(self):
        certificate = certify_depth(2, 2)
        data = json.loads(json.dumps(certificate.to_json()))
        assert set(data) == {
            "n",
            "k",
            "ball_radius",
            "neighborhood_size",
            "max_witness_length",
            "verdict",
            "failure_witness",
        }
        assert data["verdict"] == "certified"
        assert data["ball_radius"] == 12
        assert data["failure_witness"] is None

    def test_precondition(self):
        with pytest.raises(ValueError):
            certify_depth(2, 3)
        with pytest.raises(ValueError):
            certify_depth(0, 0)
