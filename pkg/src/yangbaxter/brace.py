"""Finite skew braces given by two Cayley tables on ``{0..N-1}``.

``add[a][b]`` is ``a + b`` and ``mul[a][b]`` is ``a o b``.  The two groups
share their neutral element and ``a o (b + c) = a o b - a + a o c``.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

import numpy as np

from . import perm
from .errors import (CompatibilityFailure, InvalidAction, NeutralMismatch, NotAGroup,
                     NotAnIdeal, TableShapeError)
from .solution import Solution


@dataclass(frozen=True)
class SkewBrace:
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    name: str | None = None

    @property
    def size(self):
        return len(self.add)

    @cached_property
    def zero(self):
        return _neutral(self.add)

    @cached_property
    def neg(self):
        return _inverses(self.add, self.zero)

    @cached_property
    def inv(self):
        return _inverses(self.mul, self.zero)

    def sub(self, a, b):
        """``a - b``."""
        return self.add[a][self.neg[b]]

    def lam(self, a, b):
        """``-a + a o b``."""
        return self.add[self.neg[a]][self.mul[a][b]]

    def lam_inv(self, a, b):
        """Inverse of ``lam(a, .)``: ``a^-1 o (a + b)``."""
        return self.mul[self.inv[a]][self.add[a][b]]

    def is_trivial(self):
        return self.add == self.mul


def _neutral(table):
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def _inverses(table, e):
    out = [0] * len(table)
    for a, row in enumerate(table):
        out[a] = row.index(e)
    return tuple(out)


def _group_violation(table, op):
    t = np.asarray(table)
    n = len(t)
    if t.shape != (n, n) or t.min(initial=0) < 0 or t.max(initial=0) >= n:
        return TableShapeError(f"{op} table must be square with entries in range", op=op)
    e = _neutral(table)
    if e is None:
        return NotAGroup(f"{op} has no neutral element", op=op, axiom="neutral", witness=[])
    for a in range(n):
        if e not in table[a] or not all(table[b][a] == e for b in range(n) if table[a][b] == e):
            return NotAGroup(f"{a} has no two-sided inverse for {op}", op=op,
                             axiom="inverse", witness=[a])
    left = t[t[:, :, None], np.arange(n)[None, None, :]]
    right = t[np.arange(n)[:, None, None], t[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        return NotAGroup(f"{op} is not associative", op=op, axiom="associativity",
                         witness=[int(v) for v in bad[0]])
    return None


def validate_brace(add, mul, name=None):
    add = tuple(tuple(int(v) for v in row) for row in add)
    mul = tuple(tuple(int(v) for v in row) for row in mul)
    if len(add) != len(mul):
        raise TableShapeError("add and mul have different sizes")
    for table, op in ((add, "add"), (mul, "mul")):
        failure = _group_violation(table, op)
        if failure is not None:
            raise failure
    if _neutral(add) != _neutral(mul):
        raise NeutralMismatch("the two groups have different neutral elements",
                              add=_neutral(add), mul=_neutral(mul))
    b = SkewBrace(add, mul, name)
    failure = _compatibility_violation(b)
    if failure is not None:
        raise failure
    return b


def _compatibility_violation(b):
    A = np.asarray(b.add)
    M = np.asarray(b.mul)
    neg = np.asarray(b.neg)
    n = b.size
    a = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    left = M[a, A[y, z]]
    right = A[A[M[a, y], neg[a]], M[a, z]]
    bad = np.argwhere(left != right)
    if len(bad):
        return CompatibilityFailure("a o (b + c) != a o b - a + a o c",
                                    triple=[int(v) for v in bad[0]])
    return None


def brace_solution(b, name=None):
    """``r(a, b) = (lam_a(b), rho_b(a))`` with ``lam_a(b) = -a + a o b`` and
    ``rho_b(a) = lam_{lam_a(b)}^-1(-lam_a(b) + a + lam_a(b))``."""
    n = b.size
    lam = tuple(tuple(b.lam(x, y) for y in range(n)) for x in range(n))
    rho = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            u = lam[x][y]
            conj = b.add[b.add[b.neg[u]][x]][u]
            rho[y][x] = b.lam_inv(u, conj)
    return Solution(lam, tuple(map(tuple, rho)), name or b.name)


# -- substructures ---------------------------------------------------------------

@dataclass(frozen=True)
class BraceSubset:
    members: frozenset
    add_subgroup: bool
    mul_subgroup: bool
    add_normal: bool
    mul_normal: bool
    lambda_invariant: bool
    witness: dict | None = None

    @property
    def is_ideal(self):
        return (self.add_subgroup and self.mul_subgroup and self.add_normal
                and self.mul_normal and self.lambda_invariant)

    def to_dict(self):
        return {"members": sorted(self.members), "size": len(self.members),
                "add_subgroup": self.add_subgroup, "mul_subgroup": self.mul_subgroup,
                "add_normal": self.add_normal, "mul_normal": self.mul_normal,
                "lambda_invariant": self.lambda_invariant, "is_ideal": self.is_ideal,
                "witness": self.witness}


def subset_flags(b, members):
    S = frozenset(members)
    n = range(b.size)
    add, mul = b.add, b.mul
    add_sub = b.zero in S and all(add[x][b.neg[y]] in S for x in S for y in S)
    mul_sub = b.zero in S and all(mul[x][b.inv[y]] in S for x in S for y in S)
    witness = None
    add_normal = True
    for g in n:
        for x in S:
            if add[add[g][x]][b.neg[g]] not in S:
                add_normal = False
                witness = witness or {"op": "add", "g": g, "x": x,
                                      "image": add[add[g][x]][b.neg[g]]}
                break
        if not add_normal:
            break
    mul_normal = True
    for g in n:
        for x in S:
            img = mul[mul[b.inv[g]][x]][g]
            if img not in S:
                mul_normal = False
                witness = witness or {"op": "mul", "g": g, "x": x, "image": img}
                break
        if not mul_normal:
            break
    lam_inv = all(b.lam(g, x) in S for g in n for x in S)
    return BraceSubset(S, add_sub, mul_sub, add_normal, mul_normal, lam_inv, witness)


def additive_subgroup(b, seeds):
    members = {b.zero}
    frontier = list(dict.fromkeys(seeds))
    members.update(frontier)
    while frontier:
        new = []
        for x in frontier:
            for y in list(members):
                for z in (b.add[x][y], b.add[y][x]):
                    if z not in members:
                        members.add(z)
                        new.append(z)
        frontier = new
    return frozenset(members)


def additive_commutator(b):
    """Additive subgroup generated by ``-a - c + a + c``."""
    comms = {b.add[b.add[b.neg[a]][b.neg[c]]][b.add[a][c]]
             for a in range(b.size) for c in range(b.size)}
    return subset_flags(b, additive_subgroup(b, sorted(comms)))


def socle(b):
    """``{a : a o x = a + x = x + a for all x}``."""
    return frozenset(a for a in range(b.size)
                     if all(b.mul[a][x] == b.add[a][x] == b.add[x][a] for x in range(b.size)))


def quotient(b, ideal):
    """Quotient brace on cosets, each represented by its least member."""
    flags = subset_flags(b, ideal)
    if not flags.is_ideal:
        raise NotAnIdeal("subset is not an ideal", witness=flags.witness)
    cls = [-1] * b.size
    reps = []
    for a in range(b.size):
        if cls[a] < 0:
            k = len(reps)
            reps.append(a)
            for i in ideal:
                cls[b.add[a][i]] = k
    add = tuple(tuple(cls[b.add[x][y]] for y in reps) for x in reps)
    mul = tuple(tuple(cls[b.mul[x][y]] for y in reps) for x in reps)
    return SkewBrace(add, mul), cls


@dataclass(frozen=True)
class SocleSeries:
    """Ideals ``Soc_1 <= Soc_2 <= ...`` as subsets of the brace.  ``length``
    is the first ``k`` with ``Soc_k`` everything, or ``None`` when the series
    stops short of that."""
    ideals: tuple
    length: int | None

    def to_dict(self):
        return {"ideals": [sorted(i) for i in self.ideals],
                "sizes": [len(i) for i in self.ideals], "length": self.length}


def socle_series(b):
    ideals = []
    current, cls = b, list(range(b.size))
    while current.size > 1:
        soc = socle(current)
        if len(soc) == 1:
            return SocleSeries(tuple(ideals), None)
        current, step = quotient(current, soc)
        cls = [step[c] for c in cls]
        ideals.append(frozenset(x for x in range(b.size) if cls[x] == cls[b.zero]))
    return SocleSeries(tuple(ideals), len(ideals))


# -- constructions ----------------------------------------------------------------

def group_from_permutations(generators):
    """Cayley table of the group generated by permutations; the identity is 0
    and the other elements follow in sorted order."""
    generators = [tuple(g) for g in generators]
    degree = len(generators[0])
    elements = sorted(perm.closure(generators, degree))
    index = {g: k for k, g in enumerate(elements)}
    return tuple(tuple(index[perm.compose(g, h)] for h in elements) for g in elements), elements


def cyclic_group(n):
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def direct_product(t1, t2):
    """Pairs ``(a, b)`` encoded as ``a + len(t1) * b``."""
    n1, n2 = len(t1), len(t2)
    return tuple(tuple(t1[a1][b1] + n1 * t2[a2][b2]
                       for b2 in range(n2) for b1 in range(n1))
                 for a2 in range(n2) for a1 in range(n1))


def elementary_abelian(k):
    """``(Z/2)^k`` with bit ``i`` of an element holding coordinate ``i``."""
    size = 2**k
    return tuple(tuple(a ^ b for b in range(size)) for a in range(size))


def trivial_brace(table, name=None):
    table = tuple(tuple(row) for row in table)
    return SkewBrace(table, table, name)


def automorphisms(b):
    """Permutations preserving both operations, sorted (identity first)."""
    n = b.size
    out = []
    for p in permutations(range(n)):
        if p[b.zero] != b.zero:
            continue
        if all(p[b.add[x][y]] == b.add[p[x]][p[y]] and p[b.mul[x][y]] == b.mul[p[x]][p[y]]
               for x in range(n) for y in range(n)):
            out.append(p)
    return out


def semidirect_brace(A, C, alpha, name=None):
    """``A x C`` with componentwise addition and
    ``(a, c) o (a', c') = (a o alpha(c)(a'), c o c')``.

    ``alpha[c]`` is a permutation of A that must preserve both operations,
    and ``c -> alpha[c]`` must turn the product of C into composition.
    Elements are encoded as ``a + |A| * c``.
    """
    alpha = [tuple(p) for p in alpha]
    nA, nC = A.size, C.size
    if len(alpha) != nC:
        raise InvalidAction("alpha needs one permutation per element of C")
    for c, p in enumerate(alpha):
        if not perm.is_permutation(p, nA) or any(
                p[A.add[x][y]] != A.add[p[x]][p[y]] or p[A.mul[x][y]] != A.mul[p[x]][p[y]]
                for x in range(nA) for y in range(nA)):
            raise InvalidAction(f"alpha[{c}] is not an automorphism of A", element=c)
    for c in range(nC):
        for c2 in range(nC):
            if alpha[C.mul[c][c2]] != perm.compose(alpha[c], alpha[c2]):
                raise InvalidAction("alpha is not a homomorphism", pair=[c, c2])
    N = nA * nC
    add = [[0] * N for _ in range(N)]
    mul = [[0] * N for _ in range(N)]
    for c in range(nC):
        for a in range(nA):
            x = a + nA * c
            for c2 in range(nC):
                for a2 in range(nA):
                    y = a2 + nA * c2
                    add[x][y] = A.add[a][a2] + nA * C.add[c][c2]
                    mul[x][y] = A.mul[a][alpha[c][a2]] + nA * C.mul[c][c2]
    return SkewBrace(tuple(map(tuple, add)), tuple(map(tuple, mul)), name)


def holomorph_brace(A, name=None):
    """``A`` semidirect its automorphism group, the latter as the trivial
    brace of composition.  Automorphisms are indexed in sorted order."""
    auts = automorphisms(A)
    index = {p: k for k, p in enumerate(auts)}
    comp = tuple(tuple(index[perm.compose(f, g)] for g in auts) for f in auts)
    return semidirect_brace(A, trivial_brace(comp), auts, name), auts
