"""The derived monoid ``A`` of a solution and the cocycle into it.

``A`` is the monoid on ``X`` with relations ``x + u = u + sigma_u(x)`` for
all ``x, u``, where ``sigma`` is the right action of the left derived
solution.  Words are tuples of letters.  All relations preserve length, so
the equivalence class of a word is finite and can be enumerated by
breadth-first search over single relation steps.

The structure monoid ``M`` of the solution is handled through the bijective
cocycle ``pi: M -> A``: two ``M``-words are equal iff their images under
``pi`` are equal in ``A``.  Writing ``lam'(m)`` for the composite of the
left maps of the letters of ``m``, ``pi`` is determined by
``pi(m1 m2) = pi(m1) + lam'(m1)(pi(m2))``.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from . import perm
from .errors import ClassOverflow, LetterOutsideIntersection, NoValidD, StateCapExceeded
from .rewriting import Rewriter, RuleBudgetExceeded

DEFAULT_NODE_CAP = 10**6
DEFAULT_STATE_CAP = 10**6
DEFAULT_D_RETRIES = 6


@dataclass(frozen=True)
class NormalClass:
    words: frozenset
    canon: tuple
    divisors: frozenset
    level: int

    def to_dict(self):
        return {"size": len(self.words), "canon": list(self.canon),
                "divisors": sorted(self.divisors), "level": self.level}


class DerivedMonoid:
    """Word problem and cocycle computations for one solution."""

    def __init__(self, s, node_cap=DEFAULT_NODE_CAP):
        self.s = s
        self.n = s.n
        self.node_cap = node_cap
        sigma = s.sigma
        n = self.n
        self.step = {}
        self.back = {}
        for x in range(n):
            for u in range(n):
                img = (u, sigma[u][x])
                self.step[(x, u)] = img
                self.back[img] = (x, u)
        orbit_of = {}
        for k, orb in enumerate(perm.orbits(sigma, n)):
            for x in orb:
                orbit_of[x] = k
        self._orbit_of = orbit_of
        self._classes = {}
        self._rewriter = None
        self._rewriter_failed_at = None

    # -- the word problem in A ------------------------------------------------

    def neighbours(self, w):
        step, back = self.step, self.back
        for i in range(len(w) - 1):
            pair = (w[i], w[i + 1])
            for img in (step[pair], back[pair]):
                if img != pair:
                    yield w[:i] + img + w[i + 2:]

    def normalize(self, w):
        """Full equivalence class of ``w`` (memoised per class)."""
        w = tuple(w)
        cached = self._classes.get(w)
        if cached is not None:
            return cached
        seen = {w}
        queue = deque([w])
        while queue:
            v = queue.popleft()
            for u in self.neighbours(v):
                if u not in seen:
                    seen.add(u)
                    if len(seen) > self.node_cap:
                        raise ClassOverflow(
                            f"class of a word of length {len(w)} exceeds {self.node_cap} words",
                            cap=self.node_cap, word=list(w))
                    queue.append(u)
        words = frozenset(seen)
        divisors = frozenset(v[0] for v in words if v)
        nc = NormalClass(words, min(words), divisors, len(divisors))
        for v in words:
            self._classes[v] = nc
        return nc

    def content(self, w):
        """Multiset of orbit labels; constant on classes."""
        return sorted(self._orbit_of[x] for x in w)

    def rewriter(self, length):
        """A confluent rewriting system valid for words of ``length``, or None."""
        rw = self._rewriter
        if rw is not None and rw.covers(length):
            return rw
        if self._rewriter_failed_at is not None and length >= self._rewriter_failed_at:
            return None
        degree = max(length, 2 * rw.degree if rw else 8)
        relations = [((x, u), img) for (x, u), img in self.step.items() if (x, u) != img]
        try:
            rw = Rewriter(relations, degree)
        except RuleBudgetExceeded:
            self._rewriter_failed_at = length
            return None
        self._rewriter = rw
        return rw

    def canonical(self, w):
        """Least word of the class of ``w`` in lexicographic order."""
        w = tuple(w)
        rw = self.rewriter(len(w))
        if rw is not None:
            return rw.reduce(w)
        return self.normalize(w).canon

    def equal(self, w1, w2):
        w1, w2 = tuple(w1), tuple(w2)
        if len(w1) != len(w2):
            return False
        if w1 == w2:
            return True
        if self.content(w1) != self.content(w2):
            return False
        cached = self._classes.get(w1)
        if cached is not None:
            return w2 in cached.words
        rw = self.rewriter(len(w1))
        if rw is not None:
            return rw.reduce(w1) == rw.reduce(w2)
        return self.equal_by_search(w1, w2)

    def equal_by_search(self, w1, w2):
        """Two-sided breadth-first search between ``w1`` and ``w2``."""
        if len(w1) != len(w2):
            return False
        if w1 == w2:
            return True
        sides = [{w1}, {w2}]
        fronts = [[w1], [w2]]
        while fronts[0] and fronts[1]:
            k = 0 if len(fronts[0]) <= len(fronts[1]) else 1
            mine, other = sides[k], sides[1 - k]
            nxt = []
            for v in fronts[k]:
                for u in self.neighbours(v):
                    if u in other:
                        return True
                    if u not in mine:
                        mine.add(u)
                        nxt.append(u)
            if len(sides[0]) + len(sides[1]) > self.node_cap:
                raise ClassOverflow("search between two words exceeded the node cap",
                                    cap=self.node_cap, word=list(w1))
            fronts[k] = nxt
        return False

    # -- the cocycle -----------------------------------------------------------

    def lam_prime_m(self, m):
        """Composite of the left maps of the letters of the M-word ``m``."""
        g = perm.identity(self.n)
        lam = self.s.lam
        for x in m:
            g = perm.compose(g, lam[x])
        return g

    def pi_forward(self, m):
        lam = self.s.lam
        g = perm.identity(self.n)
        out = []
        for x in m:
            out.append(g[x])
            g = perm.compose(g, lam[x])
        return tuple(out)

    def pi_inverse(self, a):
        lam = self.s.lam
        g = perm.identity(self.n)
        out = []
        for letter in a:
            x = perm.inverse(g)[letter]
            out.append(x)
            g = perm.compose(g, lam[x])
        return tuple(out)

    def lam_prime(self, a):
        """The left map attached to the A-word ``a``."""
        return self.lam_prime_m(self.pi_inverse(a))

    def m_equal(self, m1, m2):
        m1, m2 = tuple(m1), tuple(m2)
        if len(m1) != len(m2):
            return False
        if m1 == m2:
            return True
        if self.lam_prime_m(m1) != self.lam_prime_m(m2):
            return False
        return self.equal(self.pi_forward(m1), self.pi_forward(m2))

    def m_canonical(self, m):
        return self.canonical(self.pi_forward(m))

    def m_element(self, m):
        """``m`` as the pair (canonical A-word of its image, left map)."""
        return self.m_canonical(m), self.lam_prime_m(m)

    def m_product(self, e1, e2):
        """Product of two elements in the form of :meth:`m_element`.  The left
        map of the first factor acts letterwise on the second word; as an
        automorphism of A it respects classes."""
        (a, g), (b, h) = e1, e2
        moved = tuple(g[x] for x in b)
        rw = self.rewriter(len(a) + len(b))
        if rw is not None:
            word = rw.reduce(moved, prefix=a)
        else:
            word = self.normalize(a + moved).canon
        return word, perm.compose(g, h)

    def lam_m(self, m1, m2):
        """Left action of the M-word ``m1`` on the M-word ``m2``, as a word."""
        out = tuple(m2)
        for x in reversed(tuple(m1)):
            out = self._lam_letter(x, out)
        return out

    def _lam_letter(self, x, word):
        lam, rho = self.s.lam, self.s.rho
        out = []
        for y in word:
            out.append(lam[x][y])
            x = rho[y][x]
        return tuple(out)


def monoid(s, node_cap=DEFAULT_NODE_CAP):
    """Shared :class:`DerivedMonoid` for ``s`` (memo tables persist)."""
    return _monoid(s, node_cap)


@lru_cache(maxsize=64)
def _monoid(s, node_cap):
    return DerivedMonoid(s, node_cap)


def a_normalize(s, w, node_cap=DEFAULT_NODE_CAP):
    return monoid(s, node_cap).normalize(w)


def a_equal(s, w1, w2, node_cap=DEFAULT_NODE_CAP):
    return monoid(s, node_cap).equal(w1, w2)


def divisors(s, w, node_cap=DEFAULT_NODE_CAP):
    return monoid(s, node_cap).normalize(w).divisors


def pi_forward(s, m):
    return monoid(s).pi_forward(m)


def pi_inverse(s, a):
    return monoid(s).pi_inverse(a)


def lam_prime(s, a):
    return monoid(s).lam_prime(a)


def m_equal(s, m1, m2, node_cap=DEFAULT_NODE_CAP):
    return monoid(s, node_cap).m_equal(m1, m2)


# -- the exponent d ---------------------------------------------------------------

def check_d(s, d, node_cap=DEFAULT_NODE_CAP):
    """Whether ``d x`` has trivial left map and commutes with every letter,
    for every letter ``x``.  Returns the first failure or ``None``."""
    mon = monoid(s, node_cap)
    e = perm.identity(s.n)
    for x in range(s.n):
        if mon.lam_prime((x,) * d) != e:
            return ("left map", x)
    for x in range(s.n):
        block = (x,) * d
        for y in range(s.n):
            if not mon.equal(block + (y,), (y,) + block):
                return ("central", x, y)
    return None


def compute_d(s, retry_cap=DEFAULT_D_RETRIES, node_cap=DEFAULT_NODE_CAP):
    """Least ``d >= 2`` up to the exponent ``e`` of the group generated by
    the left maps and the derived right maps that passes :func:`check_d`;
    past ``e`` the candidate is doubled at most ``retry_cap`` times."""
    gens = list(s.lam) + list(s.sigma)
    e = perm.PermGroup(gens, s.n).exponent()
    top = max(2, e)
    candidates = list(range(2, top + 1)) + [top * 2**k for k in range(1, retry_cap + 1)]
    tried = []
    for d in candidates:
        if check_d(s, d, node_cap) is None:
            return d
        tried.append(d)
    raise NoValidD("no candidate exponent passed verification", tried=tried)


# -- subsets -------------------------------------------------------------------------

def a_word(subset, d):
    """``d`` copies of each element of the subset, in increasing order."""
    return tuple(y for y in sorted(subset) for _ in range(d))


def closure_violation(s, subset):
    """A pair ``(x, u)`` of the subset whose relation partner leaves it, or None."""
    members = set(subset)
    sigma = s.sigma
    for x in sorted(members):
        for u in sorted(members):
            if sigma[u][x] not in members:
                return x, u
    return None


@dataclass(frozen=True)
class SubsetState:
    """Whether ``a_Y`` (``d`` copies of each element of ``Y``) has no divisor
    outside ``Y``.

    When a relation step leads out of ``Y``, ``escape`` is a word of the class
    of ``a_Y`` containing the letter ``escape_letter`` outside ``Y``.
    """
    Y: frozenset
    d: int
    word: tuple
    in_lu: bool
    divisors: frozenset | None = None
    escape: tuple | None = None
    escape_letter: int | None = None

    def to_dict(self):
        return {"Y": sorted(self.Y), "d": self.d, "word": list(self.word),
                "in_Lu": self.in_lu,
                "divisors": sorted(self.divisors) if self.divisors is not None else None,
                "escape": list(self.escape) if self.escape is not None else None}


def subset_state(s, subset, d, exhaustive=False, node_cap=DEFAULT_NODE_CAP):
    """Decide whether the divisors of ``a_Y`` are exactly ``Y``.

    If every relation step between letters of ``Y`` stays inside ``Y`` the
    class of ``a_Y`` only contains words over ``Y``, and since every letter
    of a word divides it the divisor set is ``Y``.  Otherwise a pair
    ``(x, u)`` leaves ``Y``; moving the blocks ``d x`` and ``d u`` next to
    each other (they are central) and applying that relation step exposes a
    letter outside ``Y``.  ``exhaustive=True`` enumerates the whole class
    instead.
    """
    Y = frozenset(subset)
    word = a_word(Y, d)
    if exhaustive:
        divs = a_normalize(s, word, node_cap).divisors
        return SubsetState(Y, d, word, divs == Y, divs)
    bad = closure_violation(s, Y)
    if bad is None:
        return SubsetState(Y, d, word, True, Y)
    x, u = bad
    rest = tuple(y for y in sorted(Y) if y not in (x, u) for _ in range(d))
    if x == u:
        moved = (x,) * (d - 2) + monoid(s).step[(x, x)]
    else:
        moved = (x,) * (d - 1) + monoid(s).step[(x, u)] + (u,) * (d - 1)
    escape = moved + rest
    return SubsetState(Y, d, word, False, None, escape, s.sigma[u][x])


def component_membership(s, a, Y, Z, node_cap=DEFAULT_NODE_CAP):
    """Whether the A-word ``a`` has divisor set ``Y`` and its left map sends
    ``Z`` onto ``Y``."""
    mon = monoid(s, node_cap)
    Y, Z = frozenset(Y), frozenset(Z)
    if mon.normalize(a).divisors != Y:
        return False
    return perm.apply_to_set(mon.lam_prime(a), Z) == Y


def lu_subsets(s, max_sets=None):
    """All subsets closed under the relation steps, grouped by size.

    These are exactly the subsets ``Y`` with ``divisors(a_Y) == Y`` (see
    :func:`subset_state`).  They form a closure system, enumerated from the
    empty set by adding one point and closing.  Returns ``None`` when more
    than ``max_sets`` closed sets exist.
    """
    sigma = s.sigma
    n = s.n

    def close(start):
        members = set(start)
        frontier = list(members)
        while frontier:
            new = []
            for x in list(members):
                for u in frontier:
                    for v in (sigma[u][x], sigma[x][u]):
                        if v not in members:
                            members.add(v)
                            new.append(v)
            frontier = new
        return frozenset(members)

    start = close(())
    found = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for x in range(n):
            if x not in c:
                nxt = close(c | {x})
                if nxt not in found:
                    found.add(nxt)
                    if max_sets is not None and len(found) > max_sets:
                        return None
                    queue.append(nxt)
    by_size = {}
    for c in found:
        by_size.setdefault(len(c), []).append(c)
    return {k: sorted(v, key=sorted) for k, v in sorted(by_size.items())}


# -- reachable left maps ---------------------------------------------------------

@dataclass(frozen=True)
class ReachableLambdas:
    """Left maps of all elements of the submonoid generated by ``W``.

    ``witnesses`` maps each permutation to an A-word over ``W`` realising it,
    in breadth-first order (shortest words first).
    """
    W: frozenset
    witnesses: dict = field(compare=False)

    @property
    def perms(self):
        return list(self.witnesses)


def reachable_lambdas(s, W, state_cap=DEFAULT_STATE_CAP):
    """Fixpoint over states ``g``: appending the letter ``w`` of ``W`` to a
    word with left map ``g`` gives left map ``g . lam[g^-1(w)]``."""
    W = frozenset(W)
    lam = s.lam
    e = perm.identity(s.n)
    witnesses = {e: ()}
    queue = deque([e])
    letters = sorted(W)
    while queue:
        g = queue.popleft()
        g_inv = perm.inverse(g)
        for w in letters:
            h = perm.compose(g, lam[g_inv[w]])
            if h not in witnesses:
                witnesses[h] = witnesses[g] + (w,)
                if len(witnesses) > state_cap:
                    raise StateCapExceeded("reachable left maps exceeded the state cap",
                                           cap=state_cap)
                queue.append(h)
    return ReachableLambdas(W, witnesses)


# -- uniform components ------------------------------------------------------------

@dataclass
class LevelComponents:
    """Classes of the relation ``Y ~ Z`` (some ``a`` with divisors ``Y`` maps
    ``Z`` onto ``Y``) among the closed subsets of one size."""
    level: int
    lu: list
    classes: list
    edges: list
    unknown: list

    @property
    def degrees(self):
        return [len(c) for c in self.classes]

    def to_dict(self):
        return {"level": self.level,
                "lu": [sorted(y) for y in self.lu],
                "classes": [[sorted(y) for y in c] for c in self.classes],
                "degrees": self.degrees,
                "edges": [{"Y": sorted(y), "Z": sorted(z), "witness": list(w)}
                          for y, z, w in self.edges],
                "unknown": [{"Y": sorted(y), "Z": sorted(z)} for y, z in self.unknown]}


def component_witness(s, Y, Z, d, reach=None):
    """An A-word in the component ``(Y, Z)``, or ``None`` if there is none.

    Any word ``w`` over ``Y`` whose left map sends ``Z`` onto ``Y`` yields
    ``a_Y + w``: the prefix fixes the divisor set and has trivial left map.
    """
    reach = reach or reachable_lambdas(s, Y)
    Y, Z = frozenset(Y), frozenset(Z)
    for g, w in reach.witnesses.items():
        if perm.apply_to_set(g, Z) == Y:
            return a_word(Y, d) + w
    return None


def search_component_witness(s, Y, Z, len_cap, node_cap=DEFAULT_NODE_CAP):
    """Bounded search over words in ``Y`` of length at most ``len_cap``."""
    letters = sorted(Y)
    for length in range(1, len_cap + 1):
        for w in product(letters, repeat=length):
            if component_membership(s, w, Y, Z, node_cap):
                return w
    return None


def sim_classes(s, i, d, len_cap=None, exact=True, lu=None, node_cap=DEFAULT_NODE_CAP):
    """Components at level ``i``.

    With ``exact=True`` an edge is decided by the reachable-left-map fixpoint
    and its witness checked with :func:`component_membership`.  With
    ``exact=False`` witnesses are searched among words of length at most
    ``len_cap`` (default ``d*i + 2*i``) and pairs without a witness are
    reported as unknown.
    """
    if lu is None:
        levels = lu_subsets(s)
        lu = levels.get(i, [])
    len_cap = d * i + 2 * i if len_cap is None else len_cap
    parent = list(range(len(lu)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    edges, unknown = [], []
    reach = {}
    for p, q in combinations(range(len(lu)), 2):
        Y, Z = lu[p], lu[q]
        if exact:
            if p not in reach:
                reach[p] = reachable_lambdas(s, Y)
            w = component_witness(s, Y, Z, d, reach[p])
            if w is None:
                continue
            if not component_membership(s, w, Y, Z, node_cap):
                unknown.append((Y, Z))
                continue
        else:
            w = search_component_witness(s, Y, Z, len_cap, node_cap)
            if w is None:
                unknown.append((Y, Z))
                continue
        edges.append((Y, Z, w))
        a, b = find(p), find(q)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups = {}
    for k in range(len(lu)):
        groups.setdefault(find(k), []).append(lu[k])
    classes = [groups[k] for k in sorted(groups)]
    return LevelComponents(i, list(lu), classes, edges, unknown)


def letters_in(word, allowed):
    bad = [x for x in word if x not in allowed]
    if bad:
        raise LetterOutsideIntersection(f"letter {bad[0]} is not allowed", letter=bad[0])
