"""Nilpotency of the structure monoid: obstruction search, witness replay,
identity falsification and the sufficient criteria for special families."""

from dataclasses import dataclass, field
from itertools import combinations, product

from . import perm
from .errors import BudgetExceeded, ClassOverflow, StateCapExceeded, YBEError
from .monoid import (DEFAULT_NODE_CAP, DEFAULT_STATE_CAP, compute_d,
                     letters_in, lu_subsets, monoid, reachable_lambdas, sim_classes,
                     subset_state)
from .rack import rack_nilpotency_bound, solution_rack

DEFAULT_MAX_CLOSED_SETS = 20000
DEFAULT_MAX_PAIRS = 10**6


@dataclass
class NcVerdict:
    """Result of the search for a pair ``Y != Z`` of closed subsets and
    ``a, b`` in the submonoid generated by ``Y & Z`` such that
    ``lam'(b) lam'(a)^-1`` swaps ``Y`` and ``Z``.

    ``outcome`` is ``satisfied``, ``not_satisfied`` or ``inconclusive``.
    """
    outcome: str
    Y: frozenset | None = None
    Z: frozenset | None = None
    a: tuple | None = None
    b: tuple | None = None
    g_a: tuple | None = None
    g_b: tuple | None = None
    reason: str | None = None
    sizes: tuple = ()

    def to_dict(self):
        out = {"outcome": self.outcome, "sizes": list(self.sizes)}
        if self.outcome == "satisfied":
            out.update(Y=sorted(self.Y), Z=sorted(self.Z), a=list(self.a), b=list(self.b),
                       g_a=list(self.g_a), g_b=list(self.g_b))
        if self.reason:
            out["reason"] = self.reason
        return out


def nc_search(s, d=None, sizes=None, max_closed_sets=DEFAULT_MAX_CLOSED_SETS,
              max_pairs=DEFAULT_MAX_PAIRS, state_cap=DEFAULT_STATE_CAP):
    """Search sizes in increasing order; return the first pair found."""
    sizes = tuple(range(1, s.n + 1) if sizes is None else sorted(sizes))
    if d is None:
        d = compute_d(s)
    levels = lu_subsets(s, max_closed_sets)
    if levels is None:
        return NcVerdict("inconclusive", reason=f"more than {max_closed_sets} closed subsets",
                         sizes=sizes)
    reach = {}
    pairs = 0
    for i in sizes:
        lu = levels.get(i, [])
        for Y, Z in combinations(lu, 2):
            pairs += 1
            if pairs > max_pairs:
                return NcVerdict("inconclusive", reason=f"more than {max_pairs} pairs",
                                 sizes=sizes)
            common = Y & Z
            if not common:
                continue
            try:
                if common not in reach:
                    reach[common] = reachable_lambdas(s, common, state_cap)
            except StateCapExceeded as exc:
                return NcVerdict("inconclusive", reason=str(exc), sizes=sizes)
            found = _swap_pair(reach[common], Y, Z)
            if found is not None:
                (g_a, a), (g_b, b) = found
                # d copies of a letter also have trivial left map; prefer
                # them to the empty word in reports
                pad = (min(common),) * d
                return NcVerdict("satisfied", Y, Z, a or pad, b or pad, g_a, g_b,
                                 sizes=sizes)
    return NcVerdict("not_satisfied", sizes=sizes)


def _swap_pair(reach, Y, Z):
    items = list(reach.witnesses.items())
    for g_b, b in items:
        for g_a, a in items:
            f = perm.compose(g_b, perm.inverse(g_a))
            if perm.apply_to_set(f, Y) == Z and perm.apply_to_set(f, Z) == Y:
                return (g_a, a), (g_b, b)
    return None


def nc_verify_witness(s, Y, Z, a, b, d=None, node_cap=DEFAULT_NODE_CAP):
    """Replay a claimed obstruction from scratch.  Raises
    :class:`LetterOutsideIntersection` when ``a`` or ``b`` uses a letter
    outside ``Y & Z``."""
    Y, Z = frozenset(Y), frozenset(Z)
    a, b = tuple(a), tuple(b)
    common = Y & Z
    letters_in(a, common)
    letters_in(b, common)
    if Y == Z or len(Y) != len(Z):
        return False
    if d is None:
        d = compute_d(s, node_cap=node_cap)
    if not (subset_state(s, Y, d).in_lu and subset_state(s, Z, d).in_lu):
        return False
    mon = monoid(s, node_cap)
    g_a, g_b = mon.lam_prime(a), mon.lam_prime(b)
    g_a_inv = perm.inverse(g_a)
    return (perm.apply_to_set(g_b, perm.apply_to_set(g_a_inv, Y)) == Z
            and perm.apply_to_set(g_b, perm.apply_to_set(g_a_inv, Z)) == Y)


def uniform_components(s, d=None, max_closed_sets=DEFAULT_MAX_CLOSED_SETS):
    """Components of every level, or ``None`` when there are too many closed
    subsets to list."""
    if d is None:
        d = compute_d(s)
    levels = lu_subsets(s, max_closed_sets)
    if levels is None:
        return None
    return [sim_classes(s, i, d, lu=lu) for i, lu in levels.items() if i >= 1]


# -- Malcev identities ------------------------------------------------------------

@dataclass
class MalcevResult:
    cls: int
    length: int
    counterexample: dict | None
    comparisons: int

    @property
    def found(self):
        return self.counterexample is not None

    def to_dict(self):
        return {"class": self.cls, "length": self.length, "found": self.found,
                "counterexample": self.counterexample, "comparisons": self.comparisons}


def malcev_words(x, y, zs):
    """The two Malcev words after substituting ``zs`` (one per step)."""
    for z in zs:
        x, y = x + z + y, y + z + x
    return x, y


def malcev_falsify(s, cls, length, node_cap=DEFAULT_NODE_CAP, pool_cap=2000):
    """Look for M-words ``x, y`` (length ``1..length``) and ``z_1..z_cls``
    (length ``0..length``) with different Malcev words.

    Substitutions range over distinct elements of M only, and each pair of
    intermediate words is explored once per step.  Once the two words agree
    at some step they agree at every later step, so that branch is cut.
    Raises :class:`ClassOverflow` when an equality test exceeds its budget and
    :class:`BudgetExceeded` when more than ``pool_cap`` distinct elements
    would be substituted.
    """
    mon = monoid(s, node_cap)
    pool = []
    seen = set()
    for k in range(1, length + 1):
        for w in product(range(s.n), repeat=k):
            elt = mon.m_element(w)
            if elt not in seen:
                seen.add(elt)
                pool.append((w, elt))
                if len(pool) > pool_cap:
                    raise BudgetExceeded(f"more than {pool_cap} distinct elements",
                                         cap=pool_cap)
    one = ((), perm.identity(s.n))
    zpool = [((), one)] + pool
    mul = mon.m_product
    explored = [set() for _ in range(cls + 1)]
    comparisons = 0

    def descend(x, y, zs):
        nonlocal comparisons
        (xw, xe), (yw, ye) = x, y
        for zw, ze in zpool:
            xn = mul(mul(xe, ze), ye)
            yn = mul(mul(ye, ze), xe)
            comparisons += 1
            if xn == yn:
                continue
            step = zs + (zw,)
            nxt = ((xw + zw + yw, xn), (yw + zw + xw, yn))
            if len(step) == cls:
                return step, nxt[0][0], nxt[1][0]
            key = (xn, yn) if xn <= yn else (yn, xn)
            if key in explored[len(step)]:
                continue
            explored[len(step)].add(key)
            hit = descend(*nxt, step)
            if hit is not None:
                return hit
        return None

    if cls == 0:
        if len(pool) < 2:
            return MalcevResult(cls, length, None, 0)
        x, y = pool[0][0], pool[1][0]
        return MalcevResult(cls, length, {"x": list(x), "y": list(y), "z": [],
                                          "x_word": list(x), "y_word": list(y)}, 1)

    for x, y in combinations(pool, 2):
        hit = descend(x, y, ())
        if hit is not None:
            zs, xw, yw = hit
            return MalcevResult(cls, length, {
                "x": list(x[0]), "y": list(y[0]), "z": [list(z) for z in zs],
                "x_word": list(xw), "y_word": list(yw)}, comparisons)
    return MalcevResult(cls, length, None, comparisons)


# -- the families with a closed answer ---------------------------------------------

@dataclass
class LyubashenkoCertificate:
    """For ``r(x, y) = (sigma(y), tau(x))``: with ``gamma = sigma tau`` and its
    cycles ``c_i`` (fixed points included) on ``X_i``, ``holds`` is true iff
    ``sigma`` maps each ``X_i`` to itself and agrees there with a power
    ``c_i^k_i``; ``tau`` then agrees with ``c_i^(1 - k_i)``."""
    holds: bool
    cycles: list
    exponents: list | None
    reason: str | None = None

    def to_dict(self):
        return {"holds": self.holds, "cycles": [list(c) for c in self.cycles],
                "exponents": self.exponents, "reason": self.reason}


def lyubashenko_criterion(sigma, tau):
    sigma, tau = tuple(sigma), tuple(tau)
    gamma = perm.compose(sigma, tau)
    cyc = perm.cycles(gamma)
    exponents = []
    for c in cyc:
        members = set(c)
        if any(sigma[x] not in members for x in c):
            return LyubashenkoCertificate(False, cyc, None,
                                          f"sigma does not preserve the cycle {list(c)}")
        # sigma on the cycle must be a rotation: sigma(c[0]) = c[k] fixes k
        k = c.index(sigma[c[0]])
        m = len(c)
        if any(sigma[c[j]] != c[(j + k) % m] for j in range(m)):
            return LyubashenkoCertificate(False, cyc, None,
                                          f"sigma is not a power of the cycle {list(c)}")
        if any(tau[c[j]] != c[(j + 1 - k) % m] for j in range(m)):
            return LyubashenkoCertificate(False, cyc, None,
                                          f"tau disagrees on the cycle {list(c)}")
        exponents.append(k)
    return LyubashenkoCertificate(True, cyc, exponents)


def lyubashenko_maps(s):
    """``(sigma, tau)`` when the left maps and right maps are constant."""
    if all(row == s.lam[0] for row in s.lam) and all(row == s.rho[0] for row in s.rho):
        return s.lam[0], s.rho[0]
    return None


@dataclass
class NilpotencyReport:
    """``verdict`` is ``not_nilpotent`` (an exact obstruction was found),
    ``nilpotent`` (a sufficient criterion applies) or ``undetermined``."""
    verdict: str
    nc: NcVerdict
    lambda_class: int | None
    lambda_order: int
    lyubashenko: LyubashenkoCertificate | None = None
    rack_bound: int | None = None
    components: list | None = None
    falsifier: MalcevResult | None = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "nc": self.nc.to_dict(),
            "lambda_group": {"order": self.lambda_order, "nilpotency_class": self.lambda_class},
            "lyubashenko": self.lyubashenko.to_dict() if self.lyubashenko else None,
            "rack_bound": self.rack_bound,
            "components": ([c.to_dict() for c in self.components]
                           if self.components is not None else None),
            "falsifier": self.falsifier.to_dict() if self.falsifier else None,
            "notes": list(self.notes),
        }


def nilpotency_report(s, d=None, malcev_class=3, malcev_len=3,
                      closure_cap=perm.DEFAULT_CLOSURE_CAP, node_cap=DEFAULT_NODE_CAP,
                      max_closed_sets=DEFAULT_MAX_CLOSED_SETS, pool_cap=2000):
    notes = []
    if d is None:
        d = compute_d(s, node_cap=node_cap)
    nc = nc_search(s, d, max_closed_sets=max_closed_sets)
    lam_group = perm.PermGroup(s.lam, s.n, closure_cap)
    lam_class = lam_group.nilpotency_class()

    lyu = None
    maps = lyubashenko_maps(s)
    if maps is not None:
        lyu = lyubashenko_criterion(*maps)

    bound = None
    if all(row == tuple(range(s.n)) for row in s.rho):
        bound = rack_nilpotency_bound(solution_rack(s), closure_cap)

    components = uniform_components(s, d, max_closed_sets)
    if components is None:
        notes.append(f"components skipped: more than {max_closed_sets} closed subsets")

    obstructed = nc.outcome == "satisfied" or lam_class is None
    sufficient = (lyu is not None and lyu.holds) or bound is not None
    if obstructed and sufficient:
        raise YBEError("an obstruction and a sufficient criterion both apply")
    verdict = "not_nilpotent" if obstructed else "nilpotent" if sufficient else "undetermined"

    falsifier = None
    if verdict != "not_nilpotent":
        try:
            falsifier = malcev_falsify(s, malcev_class, malcev_len, node_cap, pool_cap)
        except (ClassOverflow, BudgetExceeded) as exc:
            notes.append(f"falsifier stopped: {exc}")
        if falsifier is not None and falsifier.found:
            notes.append(f"structure monoid is not nilpotent of class <= {malcev_class}")
            if bound is not None and bound <= malcev_class:
                raise YBEError("falsifier contradicts the rack bound")
    return NilpotencyReport(verdict, nc, lam_class, lam_group.order, lyu, bound,
                            components, falsifier, notes)
