from itertools import permutations

from hypothesis import given, strategies as st

from yangbaxter import perm


def brute_group(gens, n):
    elems = {perm.identity(n)}
    while True:
        new = {perm.compose(a, b) for a in elems for b in list(elems) + list(gens)}
        if new <= elems:
            return elems
        elems |= new


def brute_class(elems):
    """Lower central series with each term the full set closure of all
    commutators [g, h], g in the group, h in the previous term."""
    current = set(elems)
    c = 0
    n = len(next(iter(elems)))
    while len(current) > 1:
        comms = {perm.commutator(g, h) for g in elems for h in current}
        nxt = brute_group(comms, n)
        if nxt == current:
            return None
        current = nxt
        c += 1
    return c


perms4 = st.permutations(list(range(4))).map(tuple)


def test_compose_convention():
    p, q = (1, 2, 0), (0, 2, 1)
    assert perm.compose(p, q) == (1, 0, 2)
    assert perm.compose(p, perm.inverse(p)) == perm.identity(3)


def test_cycles_list_fixed_points():
    assert perm.cycles((1, 0, 2, 4, 3)) == [(0, 1), (2,), (3, 4)]
    assert perm.order((1, 2, 0, 4, 3)) == 6


def test_trivial_group_has_class_zero():
    assert perm.PermGroup([perm.identity(3)], 3).nilpotency_class() == 0


def test_cyclic_of_order_two_has_class_one():
    assert perm.PermGroup([(1, 0, 2)], 3).nilpotency_class() == 1


def test_symmetric_group_on_three_points_is_not_nilpotent():
    g = perm.PermGroup([(1, 0, 2), (1, 2, 0)], 3)
    assert g.order == 6
    assert g.nilpotency_class() is None
    # the series stops at the alternating subgroup
    assert len(g.lower_central_series()[-1]) == 3


def test_dihedral_of_order_eight_has_class_two():
    g = perm.PermGroup([(1, 2, 3, 0), (0, 3, 2, 1)], 4)
    assert g.order == 8
    assert g.nilpotency_class() == 2


@given(st.lists(perms4, min_size=1, max_size=3))
def test_closure_matches_naive_products(gens):
    g = perm.PermGroup(gens, 4)
    assert set(g.elements) == brute_group(gens, 4)
    assert 24 % g.order == 0


@given(st.lists(perms4, min_size=1, max_size=3))
def test_class_matches_commutator_closure(gens):
    g = perm.PermGroup(gens, 4)
    assert g.nilpotency_class() == brute_class(brute_group(gens, 4))


def test_exponent_is_lcm_of_orders():
    g = perm.PermGroup(list(permutations(range(4))), 4)
    assert g.exponent() == 12
