"""Exhaustive labelled enumeration of small solutions, racks and abelian rack
data.  No isomorphism rejection: every table is listed once, in a fixed
order, so the streams can serve as oracles and be resumed by position."""

from itertools import islice, permutations, product

from . import perm
from .errors import EnumerationTooLarge
from .rack import Rack, abelian_rack_data, build_rack_from_data, is_abelian_rack
from .solution import Solution, first_violation

LIMITS = {"solutions": 3, "racks": 4, "rack-data": 4}


def _check_size(kind, n):
    if n < 1 or n > LIMITS[kind]:
        raise EnumerationTooLarge(f"{kind} are enumerated for 1 <= n <= {LIMITS[kind]}",
                                  kind=kind, n=n, limit=LIMITS[kind])


def _solutions(n):
    perms = list(permutations(range(n)))
    for lam in product(perms, repeat=n):
        for rho in product(perms, repeat=n):
            if first_violation(lam, rho) is None:
                yield Solution(lam, rho)


def _racks(n):
    perms = list(permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    comp = [[index[perm.compose(p, q)] for q in perms] for p in perms]
    pairs = [(y, z) for y in range(n) for z in range(n)]
    for choice in product(range(len(perms)), repeat=n):
        # choice[y] is the right translation x -> x <| y; self-distributivity
        # says each translation is an automorphism
        if all(comp[choice[z]][choice[y]] == comp[choice[perms[choice[z]][y]]][choice[z]]
               for y, z in pairs):
            yield Rack(tuple(tuple(perms[choice[y]][x] for y in range(n))
                             for x in range(n)))


def _rack_data(n):
    return abelian_rack_data(n)


_SOURCES = {"solutions": _solutions, "racks": _racks, "rack-data": _rack_data}


class Enumeration:
    """Resumable stream of one kind of object on ``n`` points.

    ``position`` counts the items already produced; a new stream created
    with that position continues where the old one stopped.
    """

    def __init__(self, kind, n, position=0):
        if kind not in _SOURCES:
            raise ValueError(f"unknown enumeration kind {kind!r}")
        _check_size(kind, n)
        self.kind = kind
        self.n = n
        self.position = position

    def __iter__(self):
        for item in islice(_SOURCES[self.kind](self.n), self.position, None):
            self.position += 1
            yield item


def enumerate_solutions(n):
    return iter(Enumeration("solutions", n))


def enumerate_racks(n):
    return iter(Enumeration("racks", n))


def enumerate_abelian_rack_data(n):
    return iter(Enumeration("rack-data", n))


def abelian_racks(n):
    return [r for r in enumerate_racks(n) if is_abelian_rack(r)]


def racks_from_data(n):
    return [build_rack_from_data(d) for d in enumerate_abelian_rack_data(n)]
