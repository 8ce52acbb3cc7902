from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from yangbaxter import fixtures as F
from yangbaxter.brace import (SkewBrace, additive_commutator, automorphisms, brace_solution,
                              cyclic_group, elementary_abelian, group_from_permutations,
                              holomorph_brace, quotient, semidirect_brace, socle, socle_series,
                              subset_flags, trivial_brace, validate_brace)
from yangbaxter.errors import (CompatibilityFailure, InvalidAction, NeutralMismatch,
                               NotAGroup, NotAnIdeal, TableShapeError, YBEError)
from yangbaxter.retract import mpl_tower
from yangbaxter.solution import validate_solution

from conftest import braid_holds

S3, _ = group_from_permutations([(1, 0, 2), (1, 2, 0)])
D4, _ = group_from_permutations([(1, 2, 3, 0), (3, 2, 1, 0)])


def opposite(t):
    return tuple(tuple(t[b][a] for b in range(len(t))) for a in range(len(t)))


def small_braces():
    return {
        "trivial_z2": trivial_brace(cyclic_group(2)),
        "trivial_z4": trivial_brace(cyclic_group(4)),
        "trivial_v4": trivial_brace(elementary_abelian(2)),
        "trivial_s3": trivial_brace(S3),
        "almost_trivial_s3": SkewBrace(opposite(S3), S3),
        "almost_trivial_d4": SkewBrace(opposite(D4), D4),
        "hol_z3": holomorph_brace(trivial_brace(cyclic_group(3)))[0],
        "hol_z4": holomorph_brace(trivial_brace(cyclic_group(4)))[0],
        "hol_v4": F.hol_brace(),
    }


def is_brace(add, mul):
    """The axioms checked one triple at a time."""
    n = len(add)
    r = range(n)
    for t in (add, mul):
        if any(t[t[a][b]][c] != t[a][t[b][c]] for a in r for b in r for c in r):
            return False
    zeros = [e for e in r if all(add[e][x] == x == add[x][e] for x in r)]
    ones = [e for e in r if all(mul[e][x] == x == mul[x][e] for x in r)]
    if zeros != ones or not zeros:
        return False
    e = zeros[0]
    for t in (add, mul):
        if any(not any(t[a][b] == e == t[b][a] for b in r) for a in r):
            return False
    neg = [next(b for b in r if add[a][b] == e) for a in r]
    return all(mul[a][add[b][c]] == add[add[mul[a][b]][neg[a]]][mul[a][c]]
               for a in r for b in r for c in r)


# -- validation --------------------------------------------------------------------

@pytest.mark.parametrize("name", list(small_braces()))
def test_examples_are_braces(name):
    b = small_braces()[name]
    assert is_brace(b.add, b.mul)
    validate_brace(b.add, b.mul)


def test_fixture_braces_validate():
    for b in F.all_braces().values():
        validate_brace(b.add, b.mul, b.name)
    assert F.br_brace().size == 64 and F.hol_brace().size == 24


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_corrupted_cell_matches_axiom_check(data):
    b = data.draw(st.sampled_from(list(small_braces().values())[:7]))
    n = b.size
    which = data.draw(st.sampled_from(["add", "mul"]))
    i, j, v = (data.draw(st.integers(0, n - 1)) for _ in range(3))
    tables = {"add": [list(r) for r in b.add], "mul": [list(r) for r in b.mul]}
    tables[which][i][j] = v
    add, mul = (tuple(map(tuple, tables[k])) for k in ("add", "mul"))
    if is_brace(add, mul):
        validate_brace(add, mul)
    else:
        with pytest.raises(YBEError):
            validate_brace(add, mul)


def test_rejection_kinds():
    z2 = cyclic_group(2)
    with pytest.raises(TableShapeError):
        validate_brace(z2, cyclic_group(3))
    with pytest.raises(NotAGroup):
        validate_brace(((0, 1), (1, 1)), z2)
    with pytest.raises(NeutralMismatch):
        validate_brace(z2, ((1, 0), (0, 1)))
    # Z/4 with the points 2 and 3 swapped in the multiplication
    z4 = cyclic_group(4)
    p = (0, 1, 3, 2)
    mul = tuple(tuple(p[z4[p[a]][p[b]]] for b in range(4)) for a in range(4))
    with pytest.raises(CompatibilityFailure):
        validate_brace(z4, mul)


def test_semidirect_checks_action():
    A = trivial_brace(cyclic_group(3))
    C = trivial_brace(cyclic_group(2))
    with pytest.raises(InvalidAction):
        semidirect_brace(A, C, [(0, 1, 2)])
    with pytest.raises(InvalidAction):
        semidirect_brace(A, C, [(0, 1, 2), (1, 2, 0)])
    b = semidirect_brace(A, C, [(0, 1, 2), (0, 2, 1)])
    assert is_brace(b.add, b.mul)


def test_automorphisms_of_klein_group():
    assert len(automorphisms(trivial_brace(elementary_abelian(2)))) == 6


# -- the associated solution ----------------------------------------------------

@pytest.mark.parametrize("name", list(small_braces()))
def test_brace_solution_is_a_solution(name):
    b = small_braces()[name]
    s = brace_solution(b)
    assert braid_holds(s.lam, s.rho)
    validate_solution(s.lam, s.rho)


def test_large_brace_solutions_validate():
    for s in (F.br_example(), F.hol_example()):
        validate_solution(s.lam, s.rho)
    assert F.hol_example().n == 24


def test_trivial_abelian_brace_gives_trivial_solution():
    s = brace_solution(trivial_brace(cyclic_group(4)))
    assert all(row == (0, 1, 2, 3) for row in s.lam)
    assert all(row == (0, 1, 2, 3) for row in s.rho)


@pytest.mark.parametrize("name", list(small_braces()))
def test_lambda_and_rho_formulas(name):
    b = small_braces()[name]
    s = brace_solution(b)
    r = range(b.size)
    for x, y in product(r, repeat=2):
        # lambda is an automorphism of the additive group
        for z in r:
            assert s.lam[x][b.add[y][z]] == b.add[s.lam[x][y]][s.lam[x][z]]
        # the product of the two components is x o y
        u = s.lam[x][y]
        assert b.mul[u][s.rho[y][x]] == b.mul[x][y]


# -- socle and commutator --------------------------------------------------------

def test_socle_by_definition():
    for b in small_braces().values():
        r = range(b.size)
        expected = {a for a in r if all(b.mul[a][x] == b.add[a][x] == b.add[x][a] for x in r)}
        assert socle(b) == expected
        assert subset_flags(b, socle(b)).is_ideal


def test_socle_lengths():
    assert socle_series(trivial_brace(cyclic_group(4))).length == 1
    assert socle_series(F.hol_brace()).length is None
    assert socle_series(F.br_brace()).to_dict()["sizes"] == [16, 64]


@pytest.mark.parametrize("name", list(small_braces()))
def test_socle_length_matches_retraction_level(name):
    b = small_braces()[name]
    tower = mpl_tower(brace_solution(b))
    length = socle_series(b).length
    assert (length is None) == (tower.kind != "finite")
    if length is not None:
        assert length == tower.level


def test_socle_length_matches_retraction_level_for_large_brace():
    assert mpl_tower(F.br_example()).level == socle_series(F.br_brace()).length == 2


def test_commutator_of_holomorph():
    c = additive_commutator(F.hol_brace())
    assert sorted(c.members) == [0, 12, 16]
    assert c.add_subgroup and not c.mul_normal and not c.is_ideal
    w = c.witness
    assert w["op"] == "mul"
    b = F.hol_brace()
    assert b.mul[b.mul[b.inv[w["g"]]][w["x"]]][w["g"]] == w["image"] not in c.members


def test_commutator_by_definition():
    for b in small_braces().values():
        r = range(b.size)
        gens = {b.add[b.add[b.neg[a]][b.neg[c]]][b.add[a][c]] for a in r for c in r}
        members = set(additive_commutator(b).members)
        assert gens <= members
        assert all(b.add[x][y] in members for x in members for y in members)
        if b.add == opposite(b.add):
            assert members == {b.zero} and additive_commutator(b).is_ideal


def test_quotient_rejects_non_ideal():
    b = F.hol_brace()
    with pytest.raises(NotAnIdeal):
        quotient(b, additive_commutator(b).members)


def test_quotient_by_socle_is_a_brace():
    for b in small_braces().values():
        q, cls = quotient(b, socle(b))
        assert is_brace(q.add, q.mul)
        assert len(set(cls)) == q.size
