import pytest

from josephus.errors import InvalidInputError
from josephus.solvers import (
    SOLVERS,
    ImperativeState,
    OperationCounter,
    Problem,
    closed_form_m2,
    gamma_line6,
    get_solver,
    imperative_step,
    simulate_imperative,
    solve_order_statistic,
    solve_recurrence,
    solve_zipper,
)
from josephus.structures.fenwick import FenwickTree


def test_six_prisoners_every_third():
    sequence = simulate_imperative(Problem(6, 3))
    assert sequence.order == (3, 6, 4, 2, 5)
    assert sequence.survivor == 1


def test_solvers_agree_with_each_other_and_the_oracle(oracle):
    for n in range(1, 61):
        for m in range(1, 13):
            problem = Problem(n, m)
            imperative = simulate_imperative(problem)
            assert solve_zipper(problem) == imperative
            assert solve_order_statistic(problem) == imperative
            assert solve_recurrence(problem) == imperative.survivor
            order, survivor = oracle(n, m)
            assert list(imperative.order) == order
            assert imperative.survivor == survivor


@pytest.mark.parametrize("n,m", [(100, 10), (41, 3)])
def test_story_instances(oracle, n, m):
    _, expected = oracle(n, m)
    problem = Problem(n, m)
    for solver in SOLVERS.values():
        if solver.supports(problem):
            assert solver.survivor(problem) == expected


def test_closed_form_matches_recurrence():
    for n in range(1, 4097):
        assert closed_form_m2(n) == solve_recurrence(Problem(n, 2))
    for a in range(13):
        assert closed_form_m2(2 ** a) == 1


def test_first_kill_is_the_mth_prisoner():
    for n in range(2, 30):
        for m in range(1, n + 1):
            assert solve_zipper(Problem(n, m)).order[0] == m


def test_every_first_prisoner():
    sequence = solve_order_statistic(Problem(7, 1))
    assert sequence.order == (1, 2, 3, 4, 5, 6)
    assert sequence.survivor == 7


def test_single_prisoner():
    for solver in SOLVERS.values():
        problem = Problem(1, 2)
        assert solver.survivor(problem) == 1
    assert simulate_imperative(Problem(1, 1)).order == ()


@pytest.mark.parametrize("n,m", [(0, 3), (3, 0), (-1, 2), (2.5, 3), (True, 3)])
def test_invalid_problem(n, m):
    with pytest.raises(InvalidInputError):
        Problem(n, m)


def test_closed_form_only_for_m2():
    with pytest.raises(InvalidInputError):
        get_solver("closed-form").run(Problem(10, 3))
    with pytest.raises(InvalidInputError):
        get_solver("bogus")


def test_kill_sequence_tables():
    sequence = solve_zipper(Problem(6, 3))
    assert sequence.to_dict() == {"n": 6, "m": 3, "order": [3, 6, 4, 2, 5], "survivor": 1}
    assert sequence.rows()[0] == {"step": 1, "killed": 3, "remaining_count": 5}
    frame = sequence.to_frame()
    assert list(frame.columns) == ["step", "killed", "remaining_count"]
    assert frame["remaining_count"].tolist() == [5, 4, 3, 2, 1]


def test_recorded_states():
    sequence = simulate_imperative(Problem(6, 3), record_states=True)
    assert sequence.states[0] == ImperativeState(2, (1, 2, 4, 5, 6))
    assert sequence.states[-1] == ImperativeState(0, (1,))
    zipper = solve_zipper(Problem(6, 3), record_states=True)
    assert zipper.states[0].labels() == (4, 5, 6, 1, 2)


def test_imperative_step_and_line6():
    state = ImperativeState(0, (1, 2, 3, 4, 5, 6))
    assert gamma_line6(state, 3) == ImperativeState(2, (1, 2, 3, 4, 5, 6))
    assert imperative_step(state, 3) == ImperativeState(2, (1, 2, 4, 5, 6))
    # the cursor falls off the end after popping the last prisoner
    assert imperative_step(ImperativeState(0, (1, 2, 3)), 3) == ImperativeState(0, (1, 2))
    single = ImperativeState(0, (4,))
    assert imperative_step(single, 3) == single


def test_imperative_state_validation():
    with pytest.raises(InvalidInputError):
        ImperativeState(2, (1, 2))
    with pytest.raises(InvalidInputError):
        ImperativeState(0, ())


def test_counters_for_one_prisoner_are_zero():
    for solver in SOLVERS.values():
        counter = OperationCounter()
        solver.survivor(Problem(1, 2), counter)
        assert counter.operations == 0


def test_zipper_counter_is_m_per_kill():
    counter = OperationCounter()
    solve_zipper(Problem(10, 4), counter)
    assert counter.operations == 9 * 4


def test_fenwick_find_kth():
    tree = FenwickTree(8, fill=1)
    assert tree.total() == 8
    tree.increment(3, -1)
    assert tree.find_kth(3) == 4
    assert tree.prefix_sum(4) == 3
    assert tree.find_kth(8) is None
    with pytest.raises(IndexError):
        tree.increment(9)
