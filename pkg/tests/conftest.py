import pytest


def brute_force_order(n, m):
    """Kill order by walking a row of alive flags, one seat at a time."""
    alive = [True] * n
    order = []
    seat = n - 1
    for _ in range(n - 1):
        counted = 0
        while counted < m:
            seat = (seat + 1) % n
            if alive[seat]:
                counted += 1
        alive[seat] = False
        order.append(seat + 1)
    survivor = alive.index(True) + 1
    return order, survivor


@pytest.fixture
def oracle():
    return brute_force_order
