"""Finite racks, their solutions, and abelian racks built from block data.

A rack on ``{0..n-1}`` is stored as ``op[x][y] = x <| y``.  The left map of
``x`` in the associated solution is ``y -> y <| x``.
"""

from dataclasses import dataclass
from itertools import permutations, product

from . import perm
from .errors import (ConditionFailure, InvalidPartition, NotARack,
                     NotRackType, TableShapeError)
from .solution import Solution


@dataclass(frozen=True)
class Rack:
    op: tuple[tuple[int, ...], ...]

    @property
    def n(self):
        return len(self.op)

    def right_map(self, x):
        """``y -> y <| x``."""
        return tuple(self.op[y][x] for y in range(self.n))

    def is_quandle(self):
        return all(self.op[x][x] == x for x in range(self.n))

    def group(self, cap=perm.DEFAULT_CLOSURE_CAP):
        return perm.PermGroup([self.right_map(x) for x in range(self.n)], self.n, cap)

    def orbits(self):
        return perm.orbits([self.right_map(x) for x in range(self.n)], self.n)


def first_rack_violation(op):
    n = len(op)
    for y in range(n):
        column = [op[x][y] for x in range(n)]
        if sorted(column) != list(range(n)):
            return NotARack(f"right translation by {y} is not bijective",
                            axiom="R2", witness=[y])
    for x in range(n):
        ox = op[x]
        for y in range(n):
            oxy = op[ox[y]]
            oy = op[y]
            for z in range(n):
                if oxy[z] != op[ox[z]][oy[z]]:
                    return NotARack("self-distributivity fails",
                                    axiom="R1", witness=[x, y, z])
    return None


def validate_rack(op):
    try:
        op = tuple(tuple(int(v) for v in row) for row in op)
    except (TypeError, ValueError) as exc:
        raise TableShapeError("rack table is not a table of integers") from exc
    n = len(op)
    if any(len(row) != n or any(not 0 <= v < n for v in row) for row in op):
        raise TableShapeError("rack table must be square with entries in range")
    failure = first_rack_violation(op)
    if failure is not None:
        raise failure
    return Rack(op)


def rack_solution(rack, name=None):
    """``r(x, y) = (y <| x, x)``."""
    n = rack.n
    lam = tuple(rack.right_map(x) for x in range(n))
    ident = tuple(tuple(range(n)) for _ in range(n))
    return Solution(lam, ident, name)


def solution_rack(s):
    """Inverse of :func:`rack_solution`; needs every right map to be the identity."""
    n = s.n
    ident = tuple(range(n))
    for y in range(n):
        if s.rho[y] != ident:
            raise NotRackType(f"right map of {y} is not the identity", index=y)
    return Rack(tuple(tuple(s.lam[x][y] for x in range(n)) for y in range(n)))


def is_abelian_rack(rack):
    """``(a <| b) <| c == (a <| c) <| b`` for all ``a, b, c``."""
    op = rack.op
    n = rack.n
    return all(op[op[a][b]][c] == op[op[a][c]][b]
               for a in range(n) for b in range(n) for c in range(n))


@dataclass(frozen=True)
class RackData:
    """Block data of an abelian rack.

    ``blocks`` partitions ``{0..n-1}`` into sorted blocks ordered by least
    member.  ``f[i][j]`` is a permutation of block ``i`` written in
    block-local one-line notation: position ``k`` holds the local index of
    the image of ``blocks[i][k]``.
    """
    blocks: tuple[tuple[int, ...], ...]
    f: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def n(self):
        return sum(len(b) for b in self.blocks)

    def to_dict(self):
        return {"blocks": [list(b) for b in self.blocks],
                "f": [[list(p) for p in row] for row in self.f]}


def classify_abelian_rack(rack):
    """Orbit decomposition of an abelian rack as :class:`RackData`."""
    if not is_abelian_rack(rack):
        raise ConditionFailure("rack is not abelian", condition="abelian")
    blocks = rack.orbits()
    f = []
    for block in blocks:
        local = {x: k for k, x in enumerate(block)}
        row = []
        for rep in blocks:
            lx = rack.right_map(rep[0])
            row.append(tuple(local[lx[x]] for x in block))
        f.append(tuple(row))
    return RackData(tuple(blocks), tuple(f))


def _check_partition(blocks, n=None):
    flat = sorted(x for b in blocks for x in b)
    n = len(flat) if n is None else n
    if flat != list(range(n)):
        raise InvalidPartition("blocks do not partition {0..n-1}")
    for b in blocks:
        if not b or list(b) != sorted(b):
            raise InvalidPartition("blocks must be non-empty and sorted")
    if [b[0] for b in blocks] != sorted(b[0] for b in blocks):
        raise InvalidPartition("blocks must be ordered by least member")


def block_family_violation(family, size, quandle_index=None):
    """First failed condition for the permutations acting on one block.

    The family must commute pairwise, generate a transitive group, and no
    non-identity element of that group may fix a point.
    """
    for k, p in enumerate(family):
        if not perm.is_permutation(p, size):
            return ConditionFailure("entry is not a permutation of its block",
                                    condition="permutation", witness=[k])
    for j, p in enumerate(family):
        for k, q in enumerate(family[j + 1:], start=j + 1):
            if perm.compose(p, q) != perm.compose(q, p):
                return ConditionFailure("block maps do not commute",
                                        condition=1, witness=[j, k])
    gens = list(family)
    if len(perm.orbits(gens, size)) != 1:
        return ConditionFailure("block group is not transitive",
                                condition=2, witness=[])
    e = perm.identity(size)
    for g in perm.closure(gens, size):
        if g != e and any(g[i] == i for i in range(size)):
            return ConditionFailure("non-identity element has a fixed point",
                                    condition=3, witness=list(g))
    if quandle_index is not None and family[quandle_index] != e:
        return ConditionFailure("a block does not act trivially on itself",
                                condition="quandle", witness=[quandle_index])
    return None


def build_rack_from_data(data, quandle=False):
    blocks = tuple(tuple(b) for b in data.blocks)
    f = tuple(tuple(tuple(p) for p in row) for row in data.f)
    _check_partition(blocks)
    if len(f) != len(blocks) or any(len(row) != len(blocks) for row in f):
        raise InvalidPartition("f must be a square array indexed by blocks")
    for i, block in enumerate(blocks):
        failure = block_family_violation(f[i], len(block), i if quandle else None)
        if failure is not None:
            failure.details["block"] = i
            raise failure
    n = sum(len(b) for b in blocks)
    where = {}
    for i, block in enumerate(blocks):
        for k, x in enumerate(block):
            where[x] = (i, k)
    op = [[0] * n for _ in range(n)]
    for x in range(n):
        i, k = where[x]
        for y in range(n):
            j, _ = where[y]
            op[x][y] = blocks[i][f[i][j][k]]
    return Rack(tuple(map(tuple, op)))


def cycle_uniformity(rack):
    """Check that each left map restricted to each orbit has cycles of one
    length.  Returns ``None`` or the offending ``(block, element, lengths)``."""
    for block in rack.orbits():
        for x in range(rack.n):
            lx = rack.right_map(x)
            lengths = set()
            seen = set()
            for start in block:
                if start in seen:
                    continue
                length = 0
                i = start
                while i not in seen:
                    seen.add(i)
                    i = lx[i]
                    length += 1
                lengths.add(length)
            if len(lengths) > 1:
                return block, x, sorted(lengths)
    return None


def rack_nilpotency_bound(rack, cap=perm.DEFAULT_CLOSURE_CAP):
    """Upper bound on the nilpotency class of the structure monoid of the
    rack solution when its permutation group is nilpotent of class ``c``:
    ``c + 2`` in general and ``c + 1`` for quandles.  ``None`` otherwise."""
    c = rack.group(cap).nilpotency_class()
    if c is None:
        return None
    return c + 1 if rack.is_quandle() else c + 2


def set_partitions(n):
    """Set partitions of ``{0..n-1}``, blocks sorted and ordered by least member."""
    if n == 0:
        yield ()
        return
    for part in set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + (part[i] + (n - 1,),) + part[i + 1:]
        yield part + ((n - 1,),)


def abelian_rack_data(n, quandle=False):
    """All valid :class:`RackData` on ``n`` points in a fixed order."""
    for blocks in sorted(set_partitions(n)):
        per_block = []
        for i, block in enumerate(blocks):
            size = len(block)
            options = []
            for family in product(list(permutations(range(size))), repeat=len(blocks)):
                if block_family_violation(family, size, i if quandle else None) is None:
                    options.append(family)
            per_block.append(options)
        for choice in product(*per_block):
            yield RackData(blocks, tuple(choice))
