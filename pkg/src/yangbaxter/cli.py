"""Command line interface.  Every command prints one JSON object.

Exit status is 0 whenever the computation ran, whatever its mathematical
answer; 2 for unreadable or invalid input; 1 for internal failures.
"""

import argparse
import sys

from . import perm
from .brace import additive_commutator, brace_solution, socle_series
from .documents import (dumps, load_document, rack_data_document, rack_document,
                        solution_document)
from .enumeration import Enumeration
from .errors import YBEError
from .monoid import DEFAULT_D_RETRIES, DEFAULT_NODE_CAP, compute_d, monoid
from .nilpotency import nc_search, nc_verify_witness
from .rack import (classify_abelian_rack, cycle_uniformity, is_abelian_rack,
                   rack_nilpotency_bound)
from .report import Options, analyze


class UsageError(YBEError):
    kind = "UsageError"


def _word(text, n, flag):
    if text is None:
        raise UsageError(f"{flag} is required")
    text = text.strip()
    if not text:
        return ()
    try:
        letters = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} must be comma separated integers", value=text) from None
    bad = [x for x in letters if not 0 <= x < n]
    if bad:
        raise UsageError(f"{flag} has letter {bad[0]} outside 0..{n - 1}", value=text)
    return letters


def _load(path, kind):
    doc = load_document(path)
    if doc.kind != kind:
        raise UsageError(f"expected a {kind} document, got {doc.kind}", path=path)
    return doc


def _solution(args):
    return _load(args.file, "solution").build()


def _options(args):
    return Options(class_cap=args.class_cap, closure_cap=args.closure_cap,
                   malcev_class=args.malcev_class, malcev_len=args.malcev_len,
                   d_retries=args.d_retries)


# -- commands ----------------------------------------------------------------------

def cmd_validate(args):
    doc = load_document(args.file)
    try:
        obj = doc.build()
    except YBEError as exc:
        return {"kind": doc.kind, "valid": False, "failure": exc.to_dict()}
    out = {"kind": doc.kind, "valid": True, "n": doc.n}
    if doc.kind == "rack":
        out["quandle"] = obj.is_quandle()
    return out


def cmd_analyze(args):
    return analyze(_solution(args), _options(args))


def cmd_nc_check(args):
    s = _solution(args)
    d = compute_d(s, args.d_retries, args.class_cap)
    out = nc_search(s, d).to_dict()
    out["d"] = d
    return out


def cmd_nc_verify(args):
    s = _solution(args)
    Y = set(_word(args.Y, s.n, "--Y"))
    Z = set(_word(args.Z, s.n, "--Z"))
    a = _word(args.a, s.n, "--a")
    b = _word(args.b, s.n, "--b")
    d = compute_d(s, args.d_retries, args.class_cap)
    ok = nc_verify_witness(s, Y, Z, a, b, d, args.class_cap)
    return {"valid": ok, "d": d, "Y": sorted(Y), "Z": sorted(Z), "a": list(a), "b": list(b)}


def cmd_rack(args):
    doc = _load(args.file, "rack")
    rack = doc.build()
    if args.action == "build":
        return rack_document(rack, doc.name).to_json()
    if args.action == "classify":
        return rack_data_document(classify_abelian_rack(rack), doc.name).to_json()
    abelian = is_abelian_rack(rack)
    out = {"valid": True, "n": rack.n, "quandle": rack.is_quandle(), "abelian": abelian,
           "orbits": [list(o) for o in rack.orbits()]}
    group = rack.group(args.closure_cap)
    out["group"] = {"order": group.order, "nilpotency_class": group.nilpotency_class()}
    out["nilpotency_bound"] = rack_nilpotency_bound(rack, args.closure_cap)
    if abelian:
        bad = cycle_uniformity(rack)
        out["cycle_uniform"] = bad is None
    return out


def cmd_brace(args):
    b = _load(args.file, "brace").build()
    if args.action == "validate":
        return {"valid": True, "n": b.size, "zero": b.zero, "trivial": b.is_trivial()}
    if args.action == "socle":
        return socle_series(b).to_dict()
    if args.action == "commutator":
        return additive_commutator(b).to_dict()
    return solution_document(brace_solution(b)).to_json()


def cmd_monoid(args):
    s = _solution(args)
    mon = monoid(s, args.class_cap)
    w = _word(args.word, s.n, "--word")
    if args.action == "normalize":
        a = mon.pi_forward(w) if args.structure else w
        cls = mon.normalize(a)
        out = {"word": list(w), "canon": list(cls.canon), "divisors": sorted(cls.divisors),
               "level": cls.level, "class_size": len(cls.words)}
        if args.structure:
            out["image"] = list(a)
        return out
    if args.action == "divisors":
        a = mon.pi_forward(w) if args.structure else w
        divs = mon.normalize(a).divisors
        return {"word": list(w), "divisors": sorted(divs), "level": len(divs)}
    other = _word(args.other, s.n, "--other")
    equal = mon.m_equal(w, other) if args.structure else mon.equal(w, other)
    return {"word": list(w), "other": list(other),
            "monoid": "structure" if args.structure else "derived", "equal": equal}


def cmd_enumerate(args):
    stream = Enumeration(args.kind, args.n, args.start)
    items = []
    for obj in stream:
        if args.kind == "solutions":
            items.append(solution_document(obj).to_json())
        elif args.kind == "racks":
            doc = rack_document(obj).to_json()
            doc["quandle"] = obj.is_quandle()
            doc["abelian"] = is_abelian_rack(obj)
            items.append(doc)
        else:
            items.append(rack_data_document(obj).to_json())
        if args.limit is not None and len(items) >= args.limit:
            break
    return {"kind": args.kind, "n": args.n, "start": args.start,
            "next": stream.position, "count": len(items),
            "items": [] if args.count_only else items}


# -- parser --------------------------------------------------------------------------

def build_parser():
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--class-cap", type=int, default=DEFAULT_NODE_CAP,
                      help="largest word class explored by equality tests")
    caps.add_argument("--closure-cap", type=int, default=perm.DEFAULT_CLOSURE_CAP,
                      help="largest permutation group closed explicitly")
    caps.add_argument("--malcev-class", type=int, default=3)
    caps.add_argument("--malcev-len", type=int, default=3)
    caps.add_argument("--d-retries", type=int, default=DEFAULT_D_RETRIES)

    parser = argparse.ArgumentParser(prog="ybe", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, parents=[caps], **kw)
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, help="validate any document").add_argument("file")
    add("analyze", cmd_analyze, help="full report for a solution").add_argument("file")
    add("nc-check", cmd_nc_check, help="search for the obstruction").add_argument("file")
    p = add("nc-verify", cmd_nc_verify, help="replay an obstruction witness")
    p.add_argument("file")
    for flag in ("--Y", "--Z", "--a", "--b"):
        p.add_argument(flag, help="comma separated points")

    p = add("rack", cmd_rack, help="rack tools")
    p.add_argument("action", choices=["classify", "build", "check"])
    p.add_argument("file")
    p = add("brace", cmd_brace, help="skew brace tools")
    p.add_argument("action", choices=["validate", "socle", "commutator", "solution"])
    p.add_argument("file")
    p = add("monoid", cmd_monoid, help="word calculus")
    p.add_argument("action", choices=["normalize", "equal", "divisors"])
    p.add_argument("file")
    p.add_argument("--word", help="comma separated letters; empty for the identity")
    p.add_argument("--other", help="second word for equal")
    p.add_argument("--structure", action="store_true",
                   help="words are in the structure monoid rather than the derived one")

    p = add("enumerate", cmd_enumerate, help="exhaustive enumeration")
    p.add_argument("--kind", choices=["solutions", "racks", "rack-data"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--start", type=int, default=0, help="resume after this many items")
    p.add_argument("--limit", type=int)
    p.add_argument("--count-only", action="store_true")
    return parser


def run(argv=None):
    """Return ``(exit_code, result_object)``."""
    args = build_parser().parse_args(argv)
    try:
        return 0, args.fn(args)
    except YBEError as exc:
        return 2, exc.to_dict()
    except OSError as exc:
        return 2, {"error": "FileError", "message": str(exc)}
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        return 1, {"error": "InternalError", "message": f"{type(exc).__name__}: {exc}"}


def main(argv=None):
    code, result = run(argv)
    sys.stdout.write(dumps(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
