"""Named permutation realizations of the groups used throughout.

All registry groups are concrete permutation groups: symmetric/alternating
groups on points, dihedral groups on polygon vertices, matrix groups acting
on vectors or projective lines, and Cayley (regular) realizations where no
small faithful action exists (generalized quaternion groups).

Names are exact strings; products are spelled with "x" (e.g. "C4xC2") and
semidirect products from the fixed table with ":" (e.g. "C7:C3").
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Callable

from . import perms
from .errors import UnknownName
from .groups import FiniteGroup, group_from_generators


# -- small builders ---------------------------------------------------------

def symmetric(n: int) -> FiniteGroup:
    gens = [perms.from_cycles([[0, 1]], n), perms.from_cycles([list(range(n))], n)]
    if n == 1:
        gens = [perms.identity(1)]
    return group_from_generators(n, gens, label=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n <= 2:
        return group_from_generators(max(n, 1), [perms.identity(max(n, 1))], label=f"A{n}")
    three = perms.from_cycles([[0, 1, 2]], n)
    if n % 2 == 1:
        big = perms.from_cycles([list(range(n))], n)
    else:
        big = perms.from_cycles([list(range(1, n))], n)
    return group_from_generators(n, [three, big], label=f"A{n}")


def cyclic(n: int) -> FiniteGroup:
    return group_from_generators(n, [perms.from_cycles([list(range(n))], n)], label=f"C{n}")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group named by its order (D8 = symmetries of the square)."""
    n = order // 2
    rot = perms.from_cycles([list(range(n))], n)
    refl = tuple((n - i) % n for i in range(n))
    return group_from_generators(n, [rot, refl], label=f"D{order}")


def direct_product(groups: list[FiniteGroup], label: str) -> FiniteGroup:
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for gen in g.generators:
            images = list(range(degree))
            for i, j in enumerate(gen):
                images[offset + i] = offset + j
            gens.append(tuple(images))
        offset += g.degree
    return group_from_generators(degree, gens, label=label)


def regular_realization(elems: list, mul: Callable, gens: list, label: str) -> FiniteGroup:
    """Cayley/regular permutation realization of an abstractly given group."""
    index = {e: i for i, e in enumerate(elems)}
    def as_perm(g):
        return tuple(index[mul(g, e)] for e in elems)
    return group_from_generators(len(elems), [as_perm(g) for g in gens], label=label)


def dicyclic(order: int) -> FiniteGroup:
    """Generalized quaternion Q_{2^k} (and general dicyclic groups) via the
    regular representation; these have no smaller faithful action since the
    unique involution is central."""
    m = order // 4
    elems = [(i, j) for j in (0, 1) for i in range(2 * m)]

    def mul(a, b):
        i, j = a
        k, l = b
        if j == 0:
            return ((i + k) % (2 * m), l)
        if l == 0:
            return ((i - k) % (2 * m), 1)
        return ((i - k + m) % (2 * m), 0)

    return regular_realization(elems, mul, [(1, 0), (0, 1)], label=f"Q{order}")


def semidihedral(order: int) -> FiniteGroup:
    """SD_{2^n}: <r, s | r^{2^{n-1}}, s^2, s r s = r^{2^{n-2}-1}>, acting
    faithfully on the cyclic part's points."""
    n = order // 2
    k = n // 2 - 1  # s conjugates r to r^k, k = 2^{n-2}-1 for order 2^n
    rot = perms.from_cycles([list(range(n))], n)
    s = tuple((k * i) % n for i in range(n))
    return group_from_generators(n, [rot, s], label=f"SD{order}")


# -- matrix actions ---------------------------------------------------------

def _vector_points(q: int, dim: int) -> list[tuple]:
    def rec(d):
        if d == 0:
            return [()]
        return [(a,) + rest for a in range(q) for rest in rec(d - 1)]
    return sorted(v for v in rec(dim) if any(v))


def _matrix_perm(mat, pts, q):
    index = {v: i for i, v in enumerate(pts)}
    def act(v):
        return tuple(sum(mat[r][c] * v[c] for c in range(len(v))) % q
                     for r in range(len(mat)))
    return tuple(index[act(v)] for v in pts)


def gl32() -> FiniteGroup:
    pts = _vector_points(2, 3)
    cyc = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    trans = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    gens = [_matrix_perm(m, pts, 2) for m in (cyc, swap, trans)]
    return group_from_generators(7, gens, label="GL(3,2)")


def sl23() -> FiniteGroup:
    pts = _vector_points(3, 2)
    gens = [_matrix_perm(m, pts, 3) for m in ([[1, 1], [0, 1]], [[0, 2], [1, 0]])]
    return group_from_generators(8, gens, label="SL(2,3)")


def quadratic_group(q: int) -> FiniteGroup:
    """Qd(p) = C_p^2 : SL(2,p), the affine action on the p^2 points of F_p^2."""
    pts = sorted((a, b) for a in range(q) for b in range(q))
    index = {v: i for i, v in enumerate(pts)}

    def affine(mat, vec):
        def act(v):
            w = tuple(sum(mat[r][c] * v[c] for c in range(2)) % q for r in range(2))
            return tuple((w[i] + vec[i]) % q for i in range(2))
        return tuple(index[act(v)] for v in pts)

    ident = [[1, 0], [0, 1]]
    gens = [
        affine(ident, (1, 0)),
        affine(ident, (0, 1)),
        affine([[1, 1], [0, 1]], (0, 0)),
        affine([[0, q - 1], [1, 0]], (0, 0)),
    ]
    return group_from_generators(q * q, gens, label=f"Qd({q})")


def qd3() -> FiniteGroup:
    return quadratic_group(3)


def _mobius_perm(mat, q: int) -> tuple:
    """Action of [[a,b],[c,d]] on the projective line {0..q-1, inf=q}."""
    a, b, c, d = mat[0][0] % q, mat[0][1] % q, mat[1][0] % q, mat[1][1] % q
    inf = q
    images = []
    for z in range(q):
        den = (c * z + d) % q
        num = (a * z + b) % q
        images.append(inf if den == 0 else (num * pow(den, q - 2, q)) % q)
    images.append(inf if c == 0 else (a * pow(c, q - 2, q)) % q)
    return tuple(images)


def pgl27() -> FiniteGroup:
    q = 7
    gens = [_mobius_perm(m, q) for m in ([[1, 1], [0, 1]], [[3, 0], [0, 1]],
                                         [[0, 1], [1, 0]])]
    return group_from_generators(q + 1, gens, label="PGL(2,7)")


def psl217() -> FiniteGroup:
    q = 17
    gens = [_mobius_perm(m, q) for m in ([[1, 1], [0, 1]], [[0, -1], [1, 0]])]
    return group_from_generators(q + 1, gens, label="PSL(2,17)")


# -- fixed semidirect products ---------------------------------------------

def frobenius20() -> FiniteGroup:
    # AGL(1,5): z -> z+1 and z -> 2z on F5
    add = perms.from_cycles([[0, 1, 2, 3, 4]], 5)
    mul2 = tuple((2 * i) % 5 for i in range(5))
    return group_from_generators(5, [add, mul2], label="F20")


def c7_c3() -> FiniteGroup:
    add = perms.from_cycles([[0, 1, 2, 3, 4, 5, 6]], 7)
    mul2 = tuple((2 * i) % 7 for i in range(7))
    return group_from_generators(7, [add, mul2], label="C7:C3")


def c3_c4() -> FiniteGroup:
    # <a, b | a^3, b^4, b a b^-1 = a^-1> on 3 + 4 points
    a = perms.from_cycles([[0, 1, 2]], 7)
    b = perms.from_cycles([[0, 2], [3, 4, 5, 6]], 7)
    return group_from_generators(7, [a, b], label="C3:C4")


def c9_c3() -> FiniteGroup:
    # automorphism x -> x^4 of C9 (4^3 = 64 = 1 mod 9), marker 3-cycle
    a = perms.from_cycles([list(range(9))], 12)
    b_images = [(4 * i) % 9 for i in range(9)] + [10, 11, 9]
    return group_from_generators(12, [a, tuple(b_images)], label="C9:C3")


def wreath_cpcp(p: int) -> FiniteGroup:
    """C_p wr C_p acting on p^2 points (p blocks of p)."""
    deg = p * p
    base = perms.from_cycles([list(range(p))], deg)
    top = tuple((i + p) % deg for i in range(deg))
    return group_from_generators(deg, [base, top], label=f"C{p}wrC{p}")


# -- name resolution --------------------------------------------------------

_FIXED: dict[str, Callable[[], FiniteGroup]] = {
    "GL(3,2)": gl32,
    "SL(2,3)": sl23,
    "PGL(2,7)": pgl27,
    "PSL(2,17)": psl217,
    "Qd(3)": qd3,
    "F20": frobenius20,
    "C7:C3": c7_c3,
    "C3:C4": c3_c4,
    "C9:C3": c9_c3,
    "C2wrC2": lambda: wreath_cpcp(2),
    "C3wrC3": lambda: wreath_cpcp(3),
    "V4": lambda: direct_product([cyclic(2), cyclic(2)], "V4"),
}


def _atomic(name: str) -> FiniteGroup:
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"S(\d+)", name)
    if m:
        return symmetric(int(m.group(1)))
    m = re.fullmatch(r"A(\d+)", name)
    if m:
        return alternating(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", name)
    if m:
        return cyclic(int(m.group(1)))
    m = re.fullmatch(r"D(\d+)", name)
    if m and int(m.group(1)) % 2 == 0 and int(m.group(1)) >= 6:
        return dihedral(int(m.group(1)))
    m = re.fullmatch(r"Q(\d+)", name)
    if m and int(m.group(1)) % 4 == 0 and int(m.group(1)) >= 8:
        return dicyclic(int(m.group(1)))
    m = re.fullmatch(r"SD(\d+)", name)
    if m and int(m.group(1)) % 16 == 0:
        return semidihedral(int(m.group(1)))
    raise UnknownName(f"no registry group named {name!r}")


@lru_cache(maxsize=None)
def named_group(name: str) -> FiniteGroup:
    if "x" in name and name not in _FIXED:
        parts = name.split("x")
        return direct_product([_atomic(p) for p in parts], label=name)
    return _atomic(name)


def realization_scan_names() -> list[str]:
    """Concrete registry names worth scanning when matching a fusion system
    to some F_P(G); smaller, more familiar groups first."""
    return [
        "S3", "A4", "S4", "SL(2,3)", "GL(3,2)", "A5", "S5", "A6", "S6",
        "F20", "C7:C3", "C3:C4", "C9:C3",
        "D12", "C2wrC2", "C3wrC3", "Qd(3)", "PGL(2,7)", "PSL(2,17)",
    ]


def registry_names() -> list[str]:
    """The documented exact names (parameterized families shown by example)."""
    fixed = sorted(_FIXED)
    families = ["S3..S6", "A4..A6", "C2..C99", "D6,D8,..", "Q8,Q16,..",
                "SD16,SD32", "products like C4xC2, S3xS3"]
    return fixed + families
