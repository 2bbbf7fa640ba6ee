"""Independent naive reference implementations.

Everything here is written as plain double/triple loops over the ring's
scalar arithmetic, deliberately sharing no code with the vectorized
kernels it cross-checks.  Expected values frozen into tests were
computed with these functions.
"""

from __future__ import annotations


def naive_idempotents(ring) -> set[int]:
    return {a for a in ring.elements() if ring.mul(a, a) == a}


def naive_units(ring) -> dict[int, int]:
    """u -> inverse, by exhaustive pairing (both sides)."""
    out = {}
    for a in ring.elements():
        for b in ring.elements():
            if ring.mul(a, b) == ring.one and ring.mul(b, a) == ring.one:
                out.setdefault(a, b)
    return out


def naive_nilpotents(ring) -> set[int]:
    out = set()
    for a in ring.elements():
        seen = set()
        x = a
        while x not in seen:
            if x == ring.zero:
                out.add(a)
                break
            seen.add(x)
            x = ring.mul(x, a)
    return out


def naive_jacobson(ring) -> set[int]:
    """Quasi-regularity from first principles: 1 - r*a always a unit."""
    invertible = set(naive_units(ring))
    out = set()
    for a in ring.elements():
        if all(ring.sub(ring.one, ring.mul(r, a)) in invertible for r in ring.elements()):
            out.add(a)
    return out


def naive_center(ring) -> set[int]:
    return {
        a for a in ring.elements()
        if all(ring.mul(a, r) == ring.mul(r, a) for r in ring.elements())
    }


def naive_two_good(ring) -> set[int]:
    inv = set(naive_units(ring))
    return {ring.add(u, v) for u in inv for v in inv}


def naive_decompositions(ring, a) -> list[tuple[int, int, bool]]:
    """The Id x U double loop: all (e, u, commuting) with e + u = a."""
    inv = sorted(naive_units(ring))
    out = []
    for e in sorted(naive_idempotents(ring)):
        for u in inv:
            if ring.add(e, u) == a:
                out.append((e, u, ring.mul(e, u) == ring.mul(u, e)))
    return out


def naive_ucn0(ring) -> set[int]:
    zc = naive_center(ring)
    jac = naive_jacobson(ring)
    return {
        ring.add(e, j)
        for e in naive_idempotents(ring)
        if e in zc
        for j in jac
    }


def is_left_ideal(ring, subset: set[int]) -> bool:
    if ring.zero not in subset:
        return False
    for x in subset:
        if ring.neg(x) not in subset:
            return False
        for y in subset:
            if ring.add(x, y) not in subset:
                return False
        for r in ring.elements():
            if ring.mul(r, x) not in subset:
                return False
    return True


def diagram_implications(c) -> list[tuple[str, bool]]:
    """The uniqueness-implication diagram, as (name, holds) pairs."""
    implies = lambda p, q: (not p) or q
    return [
        ("UC=>USC", implies(c.is_UC, c.is_USC)),
        ("UC=>CUC", implies(c.is_UC, c.is_CUC)),
        ("USC=>CUSC", implies(c.is_USC, c.is_CUSC)),
        ("CUC=>CUSC", implies(c.is_CUC, c.is_CUSC)),
        ("CUC=>UUC", implies(c.is_CUC, c.is_UUC)),
        ("UUC=>UUSC", implies(c.is_UUC, c.is_UUSC)),
        ("CUSC=>UUSC", implies(c.is_CUSC, c.is_UUSC)),
        ("USC=>strongly_clean", implies(c.is_USC, c.is_strongly_clean)),
        ("strongly_clean=>clean", implies(c.is_strongly_clean, c.is_clean)),
        ("boolean=>UC", implies(c.is_boolean, c.is_UC)),
    ]
