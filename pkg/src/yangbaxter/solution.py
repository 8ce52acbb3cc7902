"""Finite solutions of the set-theoretic Yang-Baxter equation.

A solution on ``X = {0..n-1}`` is stored as two tables:

* ``lam[x][y]`` is the left action of ``x`` on ``y``,
* ``rho[y][x]`` is the right action of ``y`` on ``x``,

so that ``r(x, y) = (lam[x][y], rho[y][x])``.  Rows of both tables are the
permutations themselves: ``lam[x]`` is the left map of ``x`` and ``rho[y]``
the right map of ``y``.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

from . import perm
from .errors import (NonCommuting, NonDegeneracyFailure, RNotBijective,
                     TableShapeError, YbeConditionFailure)

Table = tuple[tuple[int, ...], ...]


def _as_table(rows, name):
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise TableShapeError(f"{name} is not a table of integers",
                              table=name) from exc
    return table


def _check_shape(table, n, name):
    if len(table) != n:
        raise TableShapeError(f"{name} has {len(table)} rows, expected {n}",
                              table=name)
    for i, row in enumerate(table):
        if len(row) != n:
            raise TableShapeError(f"{name}[{i}] has length {len(row)}, expected {n}",
                                  table=name, row=i)
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise TableShapeError(f"{name}[{i}][{j}] = {v} is out of range",
                                      table=name, row=i, column=j)


@dataclass(frozen=True)
class Solution:
    lam: Table
    rho: Table
    name: str | None = field(default=None, compare=False)

    @property
    def n(self):
        return len(self.lam)

    def r(self, x, y):
        return self.lam[x][y], self.rho[y][x]

    @cached_property
    def lam_inv(self):
        return tuple(perm.inverse(row) for row in self.lam)

    @cached_property
    def rho_inv(self):
        return tuple(perm.inverse(row) for row in self.rho)

    @cached_property
    def sigma(self):
        """``sigma[y][x]``: the right action of the left derived solution."""
        lam, rho, li = self.lam, self.rho, self.lam_inv
        n = self.n
        return tuple(tuple(lam[y][rho[li[x][y]][x]] for x in range(n))
                     for y in range(n))

    @cached_property
    def tau(self):
        """``tau[x][y]``: the left action of the right derived solution."""
        lam, rho, ri = self.lam, self.rho, self.rho_inv
        n = self.n
        return tuple(tuple(rho[x][lam[ri[y][x]][y]] for y in range(n))
                     for x in range(n))

    def to_dict(self):
        return {"n": self.n, "lambda": [list(r) for r in self.lam],
                "rho": [list(r) for r in self.rho]}


def first_violation(lam, rho):
    """Return the exception describing the first failed axiom, or ``None``.

    Checks run in a fixed order: non-degeneracy, bijectivity of ``r`` on
    ``X x X``, then the three component identities of the braid relation.
    """
    n = len(lam)
    for x in range(n):
        if not perm.is_permutation(lam[x], n):
            return NonDegeneracyFailure(f"left map of {x} is not bijective",
                                        side="lambda", index=x)
    for y in range(n):
        if not perm.is_permutation(rho[y], n):
            return NonDegeneracyFailure(f"right map of {y} is not bijective",
                                        side="rho", index=y)

    seen = {}
    for x in range(n):
        for y in range(n):
            img = (lam[x][y], rho[y][x])
            if img in seen:
                return RNotBijective(f"r{seen[img]} = r{(x, y)} = {img}",
                                     pairs=[list(seen[img]), [x, y]],
                                     image=list(img))
            seen[img] = (x, y)

    for x in range(n):
        lx = lam[x]
        for y in range(n):
            left = perm.compose(lx, lam[y])
            right = perm.compose(lam[lx[y]], lam[rho[y][x]])
            if left != right:
                z = next(z for z in range(n) if left[z] != right[z])
                return YbeConditionFailure("left-action condition fails",
                                           condition=1, triple=[x, y, z])

    for x in range(n):
        for y in range(n):
            rxy = rho[y][x]
            lxy = lam[x][y]
            for z in range(n):
                left = lam[rho[lxy][z]][rxy]
                right = rho[lam[rho[x][z]][y]][lam[z][x]]
                if left != right:
                    return YbeConditionFailure("mixed condition fails",
                                               condition=2, triple=[x, y, z])

    for x in range(n):
        rx = rho[x]
        for y in range(n):
            left = perm.compose(rx, rho[y])
            right = perm.compose(rho[rx[y]], rho[lam[y][x]])
            if left != right:
                z = next(z for z in range(n) if left[z] != right[z])
                return YbeConditionFailure("right-action condition fails",
                                           condition=3, triple=[x, y, z])
    return None


def validate_solution(lam, rho, name=None):
    """Build a :class:`Solution`, raising the first failed axiom otherwise."""
    lam = _as_table(lam, "lambda")
    rho = _as_table(rho, "rho")
    n = len(lam)
    _check_shape(lam, n, "lambda")
    _check_shape(rho, n, "rho")
    failure = first_violation(lam, rho)
    if failure is not None:
        raise failure
    return Solution(lam, rho, name)


@dataclass(frozen=True)
class HatMaps:
    """Tables of the inverse map: ``r^-1(x, y) = (lam_hat[x][y], rho_hat[y][x])``."""
    lam_hat: Table
    rho_hat: Table


def invert(s):
    n = s.n
    lam_hat = [[0] * n for _ in range(n)]
    rho_hat = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            u, v = s.r(x, y)
            lam_hat[u][v] = x
            rho_hat[v][u] = y
    return HatMaps(tuple(map(tuple, lam_hat)), tuple(map(tuple, rho_hat)))


def inverse_solution(s):
    h = invert(s)
    return Solution(h.lam_hat, h.rho_hat)


@dataclass(frozen=True)
class SolutionStats:
    n: int
    r_order: int
    involutive: bool
    square_free: bool


def r_as_permutation(s):
    """``r`` as a permutation of ``X x X`` with the pair ``(x, y)`` encoded
    as ``x * n + y``."""
    n = s.n
    return tuple(u * n + v for u, v in (s.r(x, y) for x in range(n) for y in range(n)))


def solution_stats(s):
    r_perm = r_as_permutation(s)
    k = perm.order(r_perm)
    return SolutionStats(
        n=s.n, r_order=k, involutive=k <= 2,
        square_free=all(s.r(x, x) == (x, x) for x in range(s.n)))


def derived(s, side: Literal["left", "right"] = "left"):
    """The derived solution.

    ``left``: ``(x, y) -> (y, sigma_y(x))``; ``right``: ``(x, y) -> (tau_x(y), x)``.
    """
    n = s.n
    ident = tuple(tuple(range(n)) for _ in range(n))
    if side == "left":
        return Solution(ident, s.sigma, f"left derived of {s.name}" if s.name else None)
    if side == "right":
        return Solution(s.tau, ident, f"right derived of {s.name}" if s.name else None)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def lyubashenko(sigma, tau, name=None):
    """``r(x, y) = (sigma(y), tau(x))`` for commuting permutations."""
    sigma, tau = tuple(sigma), tuple(tau)
    n = len(sigma)
    if not (perm.is_permutation(sigma, n) and perm.is_permutation(tau, n)):
        raise TableShapeError("sigma and tau must be permutations of one set")
    if perm.compose(sigma, tau) != perm.compose(tau, sigma):
        raise NonCommuting("sigma and tau do not commute",
                           sigma=list(sigma), tau=list(tau))
    return Solution(tuple(sigma for _ in range(n)), tuple(tau for _ in range(n)), name)


def trivial(n):
    """The flip ``(x, y) -> (y, x)``."""
    ident = tuple(tuple(range(n)) for _ in range(n))
    return Solution(ident, ident, f"trivial({n})")


@dataclass(frozen=True)
class GroupReport:
    orders: dict
    classes: dict

    def to_dict(self):
        return {"orders": dict(self.orders),
                "nilpotency_class": {k: v for k, v in self.classes.items()}}


def permutation_groups(s, cap=perm.DEFAULT_CLOSURE_CAP):
    """The permutation groups attached to ``s``.

    Keys: ``lambda`` and ``rho`` (left and right maps), ``lambda_rho`` (pairs
    of a left map and an inverse right map), ``lambda_lambdahat`` (a left map
    with the matching left map of the inverse), ``gen`` (all four together),
    ``sigma`` (right maps of the left derived solution).
    """
    n = s.n
    h = invert(s)
    rho_inv = s.rho_inv
    rho_hat_inv = [perm.inverse(row) for row in h.rho_hat]
    xs = range(n)
    return {
        "lambda": perm.PermGroup(s.lam, n, cap),
        "rho": perm.PermGroup(s.rho, n, cap),
        "lambda_rho": perm.PermGroup(
            [perm.direct_sum(s.lam[x], rho_inv[x]) for x in xs], 2 * n, cap),
        "lambda_lambdahat": perm.PermGroup(
            [perm.direct_sum(s.lam[x], h.lam_hat[x]) for x in xs], 2 * n, cap),
        "gen": perm.PermGroup(
            [perm.direct_sum(s.lam[x], rho_inv[x], h.lam_hat[x], rho_hat_inv[x])
             for x in xs], 4 * n, cap),
        "sigma": perm.PermGroup(s.sigma, n, cap),
    }


def perm_group_report(s, cap=perm.DEFAULT_CLOSURE_CAP):
    groups = permutation_groups(s, cap)
    return GroupReport(
        orders={k: g.order for k, g in groups.items()},
        classes={k: g.nilpotency_class() for k, g in groups.items()})
