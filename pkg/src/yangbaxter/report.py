"""Full analysis of one solution as a JSON-ready dictionary."""

import time
from dataclasses import dataclass

from . import perm
from .errors import ClosureCapExceeded, NoValidD
from .monoid import DEFAULT_D_RETRIES, DEFAULT_NODE_CAP, compute_d, lu_subsets
from .nilpotency import DEFAULT_MAX_CLOSED_SETS, nilpotency_report
from .retract import mpl_tower, retract_classes
from .solution import perm_group_report, solution_stats


@dataclass
class Options:
    class_cap: int = DEFAULT_NODE_CAP
    closure_cap: int = perm.DEFAULT_CLOSURE_CAP
    malcev_class: int = 3
    malcev_len: int = 3
    d_retries: int = DEFAULT_D_RETRIES
    max_closed_sets: int = DEFAULT_MAX_CLOSED_SETS


def analyze(s, options=None):
    """Every computation the library offers for ``s``.  Sections that could
    not be computed hold an error object instead of a value; ``timing``
    holds seconds per section."""
    opts = options or Options()
    timing = {}

    def timed(key, fn):
        start = time.perf_counter()
        try:
            return fn()
        finally:
            timing[key] = round(time.perf_counter() - start, 4)

    out = {"kind": "analysis", "name": s.name, "n": s.n, "validation": {"valid": True}}
    stats = timed("stats", lambda: solution_stats(s))
    out["stats"] = {"involutive": stats.involutive, "square_free": stats.square_free,
                    "r_order": stats.r_order}
    out["retract"] = timed("retract", lambda: {
        "classes": retract_classes(s), "mpl": mpl_tower(s).to_dict()})
    try:
        out["groups"] = timed("groups", lambda: perm_group_report(s, opts.closure_cap).to_dict())
    except ClosureCapExceeded as exc:
        out["groups"] = exc.to_dict()

    try:
        d = timed("d", lambda: compute_d(s, opts.d_retries, opts.class_cap))
    except NoValidD as exc:
        out["d"] = exc.to_dict()
        out["timing"] = timing
        return out
    out["d"] = d

    levels = timed("lu", lambda: lu_subsets(s, opts.max_closed_sets))
    out["lu"] = (None if levels is None
                 else {str(k): [sorted(y) for y in v] for k, v in levels.items()})

    rep = timed("nilpotency", lambda: nilpotency_report(
        s, d, opts.malcev_class, opts.malcev_len, opts.closure_cap, opts.class_cap,
        opts.max_closed_sets))
    body = rep.to_dict()
    out["components"] = body.pop("components")
    out["nc"] = body.pop("nc")
    out["nilpotency"] = body
    out["timing"] = timing
    return out


def without_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}
