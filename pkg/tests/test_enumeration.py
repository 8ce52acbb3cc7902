from itertools import islice, permutations, product

import pytest

from yangbaxter.enumeration import (Enumeration, abelian_racks, enumerate_abelian_rack_data,
                                    enumerate_racks, enumerate_solutions, racks_from_data)
from yangbaxter.errors import EnumerationTooLarge

from conftest import braid_holds


def self_distributive(op):
    n = len(op)
    r = range(n)
    return all(op[op[x][y]][z] == op[op[x][z]][op[y][z]] for x in r for y in r for z in r)


def brute_racks(n):
    """Every table with bijective right translations, tested triple by triple."""
    perms = list(permutations(range(n)))
    out = []
    for cols in product(perms, repeat=n):
        op = tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))
        if self_distributive(op):
            out.append(op)
    return out


def brute_solution_count(n):
    perms = list(permutations(range(n)))
    count = 0
    for lam in product(perms, repeat=n):
        for rho in product(perms, repeat=n):
            if len({(lam[x][y], rho[y][x]) for x in range(n) for y in range(n)}) != n * n:
                continue
            count += braid_holds(lam, rho)
    return count


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 66)])
def test_solution_counts(n, count):
    assert sum(1 for _ in enumerate_solutions(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_solution_counts_match_braid_check(n):
    assert brute_solution_count(n) == sum(1 for _ in enumerate_solutions(n))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 13), (4, 114)])
def test_rack_counts(n, count):
    assert sum(1 for _ in enumerate_racks(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_racks_match_triple_check(n):
    assert sorted(brute_racks(n)) == sorted(r.op for r in enumerate_racks(n))


@pytest.mark.parametrize("n,count,quandles", [(1, 1, 1), (2, 2, 1), (3, 12, 5), (4, 108, 36)])
def test_abelian_counts(n, count, quandles):
    racks = abelian_racks(n)
    assert len(racks) == count
    assert sum(r.is_quandle() for r in enumerate_racks(n)) == quandles
    assert sorted(r.op for r in racks) == sorted(r.op for r in racks_from_data(n))
    assert len(list(enumerate_abelian_rack_data(n))) == count


def test_enumeration_is_deterministic():
    a = [s.lam + s.rho for s in enumerate_solutions(3)]
    b = [s.lam + s.rho for s in enumerate_solutions(3)]
    assert a == b and len(set(a)) == len(a)


@pytest.mark.parametrize("kind,n", [("solutions", 3), ("racks", 3), ("rack-data", 4)])
def test_enumeration_resumes(kind, n):
    full = list(Enumeration(kind, n))
    stream = Enumeration(kind, n)
    head = list(islice(iter(stream), 5))
    assert stream.position == 5
    tail = list(Enumeration(kind, n, stream.position))
    assert head + tail == full


@pytest.mark.parametrize("kind,n", [("solutions", 4), ("racks", 5), ("rack-data", 5),
                                    ("solutions", 0)])
def test_too_large(kind, n):
    with pytest.raises(EnumerationTooLarge):
        Enumeration(kind, n)
