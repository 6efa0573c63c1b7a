import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from josephus.errors import InvalidInputError
from josephus.solvers.zipper import remove_nth
from josephus.structures.circle import Circle, current, is_singleton, mk_circle, remove, rotate

circles = st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=12, unique=True).map(
    lambda labels: mk_circle(labels[0], labels[1:])
)


def test_mk_circle_examples():
    c = mk_circle(1, [2, 3])
    assert current(c) == 1
    assert c.labels() == (1, 2, 3)
    assert not is_singleton(c)
    assert is_singleton(mk_circle(7))


def test_mk_circle_duplicate_label():
    with pytest.raises(InvalidInputError):
        mk_circle(1, [2, 1])


def test_next_moves_focus_to_the_back():
    assert rotate(mk_circle(1, [2, 3])) == Circle(2, (3, 1))


def test_remove_focuses_successor():
    assert remove(mk_circle(1, [2, 3])) == Circle(2, (3,))


def test_rotations_are_distinct_states():
    c = mk_circle(1, [2, 3])
    assert c.next() != c
    assert c.next().next().next() == c


def test_remove_nth_first_kill():
    killed, rest = remove_nth(3, mk_circle(1, range(2, 7)))
    assert killed == 3
    assert rest == Circle(4, (5, 6, 1, 2))


def test_remove_nth_rejects_zero():
    with pytest.raises(InvalidInputError):
        remove_nth(0, mk_circle(1, [2]))


def test_dict_form():
    c = mk_circle(2, [5, 1])
    assert c.to_dict() == {"focus": 2, "rest": [5, 1]}
    assert Circle.from_dict(c.to_dict()) == c
    assert c.key() == '{"focus":2,"rest":[5,1]}'


@settings(max_examples=1000)
@given(circles)
def test_next_has_order_size(c):
    rotated = c
    for _ in range(len(c)):
        rotated = rotated.next()
    assert rotated == c


@settings(max_examples=1000)
@given(circles)
def test_remove_shrinks_by_one(c):
    if c.is_singleton():
        assert c.remove() == c
    else:
        assert len(c.remove()) == len(c) - 1
        assert set(c.remove()) == set(c) - {c.current}


@settings(max_examples=1000)
@given(st.integers())
def test_singleton_fixed_points(label):
    c = mk_circle(label)
    assert c.next() == c
    assert c.remove() == c


@settings(max_examples=1000)
@given(circles, st.integers(min_value=1, max_value=30))
def test_remove_nth_kills_the_mth_label(c, m):
    if c.is_singleton():
        return
    labels = c.labels()
    killed, rest = remove_nth(m, c)
    assert killed == labels[(m - 1) % len(labels)]
    assert len(rest) == len(c) - 1


@settings(max_examples=1000)
@given(circles, st.integers(min_value=0, max_value=40))
def test_advance_matches_repeated_next(c, steps):
    rotated = c
    for _ in range(steps):
        rotated = rotated.next()
    assert c.advance(steps) == rotated
