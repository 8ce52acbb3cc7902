"""Named example solutions and braces used by the tests and shipped as JSON.

Labels are 0-based throughout.
"""

from itertools import permutations

from . import perm
from .brace import (brace_solution, elementary_abelian, holomorph_brace,
                    semidirect_brace, trivial_brace)
from .rack import validate_rack
from .solution import lyubashenko, validate_solution


def transposition(a, b, n):
    return tuple(b if i == a else a if i == b else i for i in range(n))


def _from_maps(lam_rows, rho_rows, name):
    return validate_solution(lam_rows, rho_rows, name)


def nc_example():
    """Four points; the obstruction holds for ``{0, 2}`` and ``{0, 3}``."""
    n = 4
    e = perm.identity(n)
    t23 = transposition(2, 3, n)
    lam = [t23, t23, transposition(1, 3, n), transposition(1, 2, n)]
    rho = [t23, e, e, e]
    return _from_maps(lam, rho, "nc_example")


def nonnil_example():
    n = 4
    e = perm.identity(n)
    t23 = transposition(2, 3, n)
    return _from_maps([t23, t23, e, e], [t23, e, e, e], "nonnil_example")


def lyubashenko_example():
    n = 4
    return lyubashenko(transposition(0, 1, n), transposition(2, 3, n), "lyubashenko_example")


def z3_example():
    """``r(x, y) = (-y, x - y)`` on ``Z/3``."""
    n = 3
    lam = [[(-y) % n for y in range(n)] for x in range(n)]
    rho = [[(x - y) % n for x in range(n)] for y in range(n)]
    return _from_maps(lam, rho, "z3_example")


def z4_example():
    """``r(x, y) = (-y, x + 2y)`` on ``Z/4``."""
    n = 4
    lam = [[(-y) % n for y in range(n)] for x in range(n)]
    rho = [[(x + 2 * y) % n for x in range(n)] for y in range(n)]
    return _from_maps(lam, rho, "z4_example")


def mpl2_example():
    """``r(x, y) = (s_x(y), x)`` with ``s_0 = s_1 = (2 3)``, ``s_2 = s_3 = (0 1)``."""
    n = 4
    e = perm.identity(n)
    a, b = transposition(2, 3, n), transposition(0, 1, n)
    return _from_maps([a, a, b, b], [e] * n, "mpl2_example")


def s3_example():
    """``r(x, y) = (x y^-1 x^-1, x y^2)`` on the symmetric group of degree 3,
    elements indexed in sorted order and multiplied as composition."""
    elements = sorted(permutations(range(3)))
    index = {g: k for k, g in enumerate(elements)}
    mul, inv = perm.compose, perm.inverse
    n = len(elements)
    lam = [[0] * n for _ in range(n)]
    rho = [[0] * n for _ in range(n)]
    for x, gx in enumerate(elements):
        for y, gy in enumerate(elements):
            lam[x][y] = index[mul(gx, mul(inv(gy), inv(gx)))]
            rho[y][x] = index[mul(gx, mul(gy, gy))]
    return _from_maps(lam, rho, "s3_example")


def perm_example(n):
    """``r(x, y) = (y + 1, x + 1)`` on ``Z/n``."""
    lam = [[(y + 1) % n for y in range(n)] for x in range(n)]
    rho = [[(x + 1) % n for x in range(n)] for y in range(n)]
    return _from_maps(lam, rho, f"perm_example_{n}")


def br_brace():
    """``(Z/2)^4`` semidirect ``(Z/2)^2``, the first generator swapping the
    first two coordinates and the second swapping the last two.  Element
    ``a + 16 c``; coordinate ``i`` of ``a`` is bit ``i``, likewise for ``c``."""
    A = trivial_brace(elementary_abelian(4))
    C = trivial_brace(elementary_abelian(2))

    def swap_bits(i, j):
        out = []
        for a in range(16):
            bi, bj = (a >> i) & 1, (a >> j) & 1
            a2 = a & ~((1 << i) | (1 << j)) | (bj << i) | (bi << j)
            out.append(a2)
        return tuple(out)

    s01, s23 = swap_bits(0, 1), swap_bits(2, 3)
    alpha = [perm.identity(16), s01, s23, perm.compose(s01, s23)]
    return semidirect_brace(A, C, alpha, "br_brace")


BR_Y = (1, 4, 16, 32)
BR_Z = (2, 8, 16, 32)
BR_A = (16,)
BR_B = (32,)


def br_example():
    return brace_solution(br_brace(), "br_example")


def hol_brace():
    """Holomorph of ``(Z/2)^2``; element ``a + 4 f`` with ``a`` in bit
    notation and ``f`` the index of the automorphism in sorted order."""
    b, _ = holomorph_brace(trivial_brace(elementary_abelian(2)), "hol_brace")
    return b


def hol_example():
    return brace_solution(hol_brace(), "hol_example")


def all_solutions():
    """Every named solution fixture."""
    return {
        "nc_example": nc_example(),
        "nonnil_example": nonnil_example(),
        "lyubashenko_example": lyubashenko_example(),
        "z3_example": z3_example(),
        "z4_example": z4_example(),
        "mpl2_example": mpl2_example(),
        "s3_example": s3_example(),
        "perm_example_2": perm_example(2),
        "perm_example_3": perm_example(3),
        "perm_example_4": perm_example(4),
    }


def all_braces():
    return {"br_brace": br_brace(), "hol_brace": hol_brace()}


def mpl2_rack():
    """``x <| y = s_y(x)`` with the maps of :func:`mpl2_example`."""
    s = mpl2_example()
    return validate_rack([[s.lam[y][x] for y in range(4)] for x in range(4)])


def swap_rack():
    """``x <| y = s(x)`` on two points with ``s = (0 1)``."""
    return validate_rack([[1, 1], [0, 0]])


def dihedral_quandle(n=3):
    """``x <| y = 2y - x mod n``."""
    return validate_rack([[(2 * y - x) % n for y in range(n)] for x in range(n)])


def trivial_quandle(n):
    return validate_rack([[x] * n for x in range(n)])


def all_racks():
    return {"mpl2_rack": mpl2_rack(), "swap_rack": swap_rack(),
            "dihedral_quandle_3": dihedral_quandle(3), "trivial_quandle_3": trivial_quandle(3)}


SHIFTED = "labels are one less than in the usual 1-based presentation"

NOTES = {
    "nc_example": SHIFTED,
    "nonnil_example": SHIFTED,
    "lyubashenko_example": SHIFTED,
    "mpl2_example": SHIFTED,
    "s3_example": "group elements in sorted one-line order, product is composition",
    "br_brace": "element a + 16 c with a in (Z/2)^4 and c in (Z/2)^2 as bit vectors",
    "hol_brace": "element a + 4 f with a in (Z/2)^2 as a bit vector and f an automorphism index",
}


def documents():
    """Every fixture as a document, keyed by file stem."""
    from .documents import brace_document, rack_document, solution_document
    out = {}
    for name, s in all_solutions().items():
        out[name] = solution_document(s, NOTES.get(name))
    for name, b in all_braces().items():
        out[name] = brace_document(b, NOTES.get(name))
    for name, r in all_racks().items():
        out[name] = rack_document(r, name, NOTES.get(name))
    return out


def write_all(directory):
    from pathlib import Path

    from .documents import serialize_document
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    for name, doc in documents().items():
        (path / f"{name}.json").write_text(serialize_document(doc))


def small_solutions():
    """Fixtures on at most four points."""
    return {k: v for k, v in all_solutions().items() if v.n <= 4}

