"""Retraction of solutions and the multipermutation tower."""

from dataclasses import dataclass

from .solution import Solution


def retract_classes(s):
    """Class id of every element; ``x ~ y`` iff both their left maps and their
    right maps agree.  Classes are numbered in order of their least member."""
    ids = {}
    out = []
    for x in range(s.n):
        key = (s.lam[x], s.rho[x])
        if key not in ids:
            ids[key] = len(ids)
        out.append(ids[key])
    return out


def retract(s):
    """The induced solution on the classes, with the class map."""
    cls = retract_classes(s)
    k = max(cls) + 1 if cls else 0
    rep = [0] * k
    for x in reversed(range(s.n)):
        rep[cls[x]] = x
    lam = tuple(tuple(cls[s.lam[rep[a]][rep[b]]] for b in range(k)) for a in range(k))
    rho = tuple(tuple(cls[s.rho[rep[b]][rep[a]]] for a in range(k)) for b in range(k))
    name = f"Ret({s.name})" if s.name else None
    return Solution(lam, rho, name), cls


@dataclass(frozen=True)
class MplResult:
    """Outcome of iterated retraction.

    ``kind`` is ``finite`` (``level`` holds the multipermutation level),
    ``irretractable`` (the tower stopped at a solution with more than one
    point whose retraction changes nothing) or ``cap_exceeded``.
    """
    kind: str
    level: int | None
    tower_sizes: tuple[int, ...]

    @property
    def is_finite(self):
        return self.kind == "finite"

    def to_dict(self):
        return {"kind": self.kind, "level": self.level,
                "tower_sizes": list(self.tower_sizes)}


def mpl_tower(s, cap=None):
    """Retract repeatedly, recording the size of each stage."""
    cap = s.n if cap is None else cap
    sizes = [s.n]
    current = s
    for _ in range(cap + 1):
        if current.n <= 1:
            return MplResult("finite", len(sizes) - 1, tuple(sizes))
        nxt, _ = retract(current)
        if nxt.n == current.n:
            return MplResult("irretractable", None, tuple(sizes))
        sizes.append(nxt.n)
        current = nxt
    return MplResult("cap_exceeded", None, tuple(sizes))


def is_invariant(s, subset):
    """Whether ``r`` maps ``Y x Y`` into itself."""
    ys = sorted(subset)
    members = set(ys)
    return all(s.lam[x][y] in members and s.rho[y][x] in members
               for x in ys for y in ys)


def restrict(s, subset):
    """Subsolution on an invariant subset, relabelled in increasing order."""
    ys = sorted(subset)
    if not is_invariant(s, ys):
        raise ValueError(f"{ys} is not invariant")
    pos = {y: i for i, y in enumerate(ys)}
    lam = tuple(tuple(pos[s.lam[x][y]] for y in ys) for x in ys)
    rho = tuple(tuple(pos[s.rho[y][x]] for x in ys) for y in ys)
    return Solution(lam, rho)
