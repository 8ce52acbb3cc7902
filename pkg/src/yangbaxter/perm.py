"""Permutations as tuples and finite permutation groups by explicit closure.

A permutation ``p`` of ``{0..n-1}`` is the tuple of images, ``p[i]`` being the
image of ``i``.  Products read right to left: ``compose(p, q)`` applies ``q``
first, so ``compose(p, q)[i] == p[q[i]]``.
"""

from collections import deque
from math import lcm

from .errors import ClosureCapExceeded

DEFAULT_CLOSURE_CAP = 10**7


def identity(n):
    return tuple(range(n))


def compose(p, q):
    return tuple(p[i] for i in q)


def inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def is_permutation(p, n=None):
    n = len(p) if n is None else n
    return len(p) == n and sorted(p) == list(range(n))


def cycles(p):
    """Cycles of ``p`` (fixed points included), each starting at its least
    point, ordered by least point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def order(p):
    return lcm(*(len(c) for c in cycles(p))) if p else 1


def power(p, k):
    n = len(p)
    result = identity(n)
    base = p
    if k < 0:
        base, k = inverse(p), -k
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def apply_to_set(p, subset):
    return frozenset(p[i] for i in subset)


def commutator(a, b):
    """``a^-1 b^-1 a b``."""
    return compose(inverse(a), compose(inverse(b), compose(a, b)))


def direct_sum(*perms):
    """Concatenate permutations acting on consecutive disjoint blocks."""
    out = []
    offset = 0
    for p in perms:
        out.extend(offset + v for v in p)
        offset += len(p)
    return tuple(out)


def closure(generators, degree, cap=DEFAULT_CLOSURE_CAP):
    """Set of all products of ``generators``; the identity is always included."""
    gens = list(dict.fromkeys(generators))
    e = identity(degree)
    elements = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in elements:
                elements.add(h)
                if len(elements) > cap:
                    raise ClosureCapExceeded(
                        f"group closure exceeded {cap} elements", cap=cap)
                queue.append(h)
    return frozenset(elements)


def orbits(generators, degree):
    """Orbits of the group generated by ``generators``, sorted by least point."""
    parent = list(range(degree))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in generators:
        for i, v in enumerate(g):
            a, b = find(i), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks = {}
    for i in range(degree):
        blocks.setdefault(find(i), []).append(i)
    return sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0])


class PermGroup:
    """A permutation group given by generators, with its element set computed
    on demand by naive closure."""

    def __init__(self, generators, degree, cap=DEFAULT_CLOSURE_CAP):
        self.degree = degree
        self.cap = cap
        e = identity(degree)
        self.generators = tuple(g for g in dict.fromkeys(generators) if g != e)
        self._elements = None

    @property
    def elements(self):
        if self._elements is None:
            self._elements = closure(self.generators, self.degree, self.cap)
        return self._elements

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in self.elements

    def is_abelian(self):
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def exponent(self):
        return lcm(*(order(g) for g in self.elements))

    def orbits(self):
        return orbits(self.generators, self.degree)

    def _normal_closure(self, seeds):
        """Generators and elements of the normal closure of ``seeds``."""
        e = identity(self.degree)
        gens = [s for s in dict.fromkeys(seeds) if s != e]
        elements = closure(gens, self.degree, self.cap)
        grew = True
        while grew:
            grew = False
            for g in self.generators:
                g_inv = inverse(g)
                for h in list(gens):
                    c = compose(g, compose(h, g_inv))
                    if c not in elements:
                        gens.append(c)
                        elements = closure(gens, self.degree, self.cap)
                        grew = True
        return gens, elements

    def lower_central_series(self):
        """Terms ``G = g_1 > g_2 > ...`` as element sets, stopping at the
        trivial group or when the series becomes stationary."""
        series = [self.elements]
        gens = list(self.generators)
        while len(series[-1]) > 1:
            seeds = [commutator(h, g) for h in gens for g in self.generators]
            gens, nxt = self._normal_closure(seeds)
            if len(nxt) == len(series[-1]):
                break
            series.append(nxt)
        return series

    def nilpotency_class(self):
        """Nilpotency class, or ``None`` when the group is not nilpotent."""
        series = self.lower_central_series()
        if len(series[-1]) > 1:
            return None
        return len(series) - 1
