"""Permutations as image tuples.

A permutation of degree n is a tuple ``p`` of length n with ``p[i]`` the
image of point ``i`` (0-based).  Plain tuples keep composition, hashing and
canonical (lexicographic) ordering trivial; every group in this package is
small enough that nothing fancier is warranted.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import MalformedPermutation

Perm = tuple

# Composition convention: (a * b)(i) = a(b(i)), i.e. apply b first.


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[i] for i in b)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conjugate(g: Perm, x: Perm) -> Perm:
    """g x g^-1."""
    out = [0] * len(x)
    for i, j in enumerate(x):
        out[g[i]] = g[j]
    return tuple(out)


def order(p: Perm) -> int:
    n = 1
    q = p
    e = identity(len(p))
    while q != e:
        q = compose(q, p)
        n += 1
    return n


def check(p: Sequence[int], degree: int | None = None) -> Perm:
    p = tuple(p)
    if degree is not None and len(p) != degree:
        raise MalformedPermutation(f"degree {len(p)} != expected {degree}")
    if sorted(p) != list(range(len(p))):
        raise MalformedPermutation(f"not a bijection on 0..{len(p) - 1}: {p}")
    return p


def from_cycles(cycles: Iterable[Iterable[int]], degree: int, one_based: bool = False) -> Perm:
    """Build a permutation from disjoint cycles.

    File and CLI inputs use 1-based points; internal code uses 0-based.
    """
    images = list(range(degree))
    seen: set[int] = set()
    for cycle in cycles:
        pts = [c - 1 if one_based else c for c in cycle]
        for a in pts:
            if not 0 <= a < degree:
                raise MalformedPermutation(f"point {a} out of range for degree {degree}")
            if a in seen:
                raise MalformedPermutation(f"point {a} repeated across cycles")
            seen.add(a)
        for i, a in enumerate(pts):
            images[a] = pts[(i + 1) % len(pts)]
    return tuple(images)


def to_cycles(p: Perm, one_based: bool = True) -> list[list[int]]:
    """Disjoint cycle decomposition, fixed points omitted."""
    out = []
    seen = [False] * len(p)
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        out.append([c + 1 for c in cycle] if one_based else cycle)
    return out


def parse_cycle_string(text: str, degree: int) -> Perm:
    """Parse cycle notation like "(1 2)(3 4)" or "(1,2,3)" (1-based points)."""
    text = text.strip()
    if text in ("", "()", "e", "id"):
        return identity(degree)
    if not (text.startswith("(") and text.endswith(")")):
        raise MalformedPermutation(f"bad cycle string: {text!r}")
    cycles = []
    for chunk in text[1:-1].split(")("):
        pts = [int(tok) for tok in chunk.replace(",", " ").split()]
        if len(pts) < 2:
            raise MalformedPermutation(f"bad cycle: ({chunk})")
        cycles.append(pts)
    return from_cycles(cycles, degree, one_based=True)


def format_cycles(p: Perm) -> str:
    cycles = to_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)
