"""Canonical element sets of a finite ring.

Idempotents, units, nilpotents, the Jacobson radical (by quasi-
regularity), the center, sums of two units, central-idempotent-plus-
radical elements, ideal closure, idempotent lifting, and the one-sided
ideal lattice.  Everything is computed exhaustively from the ring's
tables; results are memoized on the ring handle (write-once, lock-
guarded, safe to share).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .core import ElementSet, FiniteRing
from .errors import IdealError, LatticeLimitError, SizeOverflowError

DEFAULT_IDEAL_ORDER_LIMIT = 256
DEFAULT_IDEAL_COUNT_LIMIT = 100_000


class InvariantCache:
    """Per-ring memo of the canonical element sets and the inverse map."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        # Reentrant: computing one invariant may nest into another
        # (the radical consults the unit set) on the same thread.
        self._lock = threading.RLock()
        self._memo: dict[str, np.ndarray] = {}

    def _get(self, key: str, compute) -> np.ndarray:
        value = self._memo.get(key)
        if value is None:
            with self._lock:
                value = self._memo.get(key)
                if value is None:
                    value = compute()
                    if isinstance(value, np.ndarray):
                        value.setflags(write=False)
                    self._memo[key] = value
        return value

    @property
    def idempotent_mask(self) -> np.ndarray:
        def compute():
            n = self.ring.order
            idx = np.arange(n)
            return self.ring.mul_table[idx, idx] == idx

        return self._get("idempotent", compute)

    @property
    def unit_mask(self) -> np.ndarray:
        return self._get("unit", self._compute_units)[0]

    @property
    def inverse(self) -> np.ndarray:
        """inverse[u] for units, -1 elsewhere."""
        return self._get("unit", self._compute_units)[1]

    def _compute_units(self):
        ring = self.ring
        n, one = ring.order, ring.one
        mul = ring.mul_table
        mask = np.zeros(n, dtype=bool)
        inv = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(mul == one)
        # Finite rings: one-sided inverses are two-sided.  Guard it.
        for a, b in zip(rows, cols):
            if mul[b, a] != one:
                raise AssertionError(
                    f"one-sided inverse in {ring.name}: {a}*{b}=1 but {b}*{a}!=1"
                )
        for a, b in zip(rows, cols):
            if not mask[a]:
                mask[a] = True
                inv[a] = b
        out = (mask, inv)
        mask.setflags(write=False)
        inv.setflags(write=False)
        return out

    @property
    def nilpotent_mask(self) -> np.ndarray:
        def compute():
            # a^(2^t) = 0 for 2^t >= order catches every nilpotent:
            # the nilpotency index is at most the ring order.
            ring = self.ring
            n = ring.order
            mul = ring.mul_table
            v = np.arange(n)
            steps = max(1, int(n - 1).bit_length())
            for _ in range(steps):
                v = mul[v, v]
            return v == ring.zero

        return self._get("nilpotent", compute)

    @property
    def jacobson_mask(self) -> np.ndarray:
        def compute():
            # Quasi-regularity: a in J iff 1 - r*a is a unit for every r.
            ring = self.ring
            mul = ring.mul_table
            one_minus = ring.add_row(ring.one)[ring.neg_table[mul]]
            mask = self.unit_mask[one_minus].all(axis=0)
            self._assert_two_sided_ideal(mask)
            return mask

        return self._get("jacobson", compute)

    def _assert_two_sided_ideal(self, mask: np.ndarray):
        ring = self.ring
        ids = np.flatnonzero(mask)
        add, mul = ring.add_table, ring.mul_table
        ok = (
            mask[add[np.ix_(ids, ids)]].all()
            and mask[mul[:, ids]].all()
            and mask[mul[ids, :]].all()
        )
        if not ok:
            raise AssertionError(f"J({ring.name}) closure violated: kernel bug")

    @property
    def center_mask(self) -> np.ndarray:
        def compute():
            mul = self.ring.mul_table
            return (mul == mul.T).all(axis=1)

        return self._get("center", compute)

    @property
    def two_good_mask(self) -> np.ndarray:
        def compute():
            ring = self.ring
            units = np.flatnonzero(self.unit_mask)
            mask = np.zeros(ring.order, dtype=bool)
            if units.size:
                sums = ring.add_table[np.ix_(units, units)]
                mask[np.unique(sums)] = True
            return mask

        return self._get("two_good", compute)

    @property
    def ucn0_mask(self) -> np.ndarray:
        def compute():
            ring = self.ring
            central_idem = np.flatnonzero(self.idempotent_mask & self.center_mask)
            radical = np.flatnonzero(self.jacobson_mask)
            sums = ring.add_table[np.ix_(central_idem, radical)]
            mask = np.zeros(ring.order, dtype=bool)
            mask[np.unique(sums)] = True
            return mask

        return self._get("ucn0", compute)


def get_cache(ring: FiniteRing) -> InvariantCache:
    cache = ring._invariant_cache
    if cache is None:
        cache = InvariantCache(ring)
        ring._invariant_cache = cache
    return cache


def idempotents(ring: FiniteRing) -> ElementSet:
    """{e : e*e = e}."""
    return ElementSet.from_mask(ring, get_cache(ring).idempotent_mask)


def units(ring: FiniteRing) -> ElementSet:
    """{u : u*v = v*u = 1 for some v}."""
    return ElementSet.from_mask(ring, get_cache(ring).unit_mask)


def unit_inverses(ring: FiniteRing) -> dict[int, int]:
    """u -> u^-1, defined exactly on the unit set."""
    inv = get_cache(ring).inverse
    return {int(u): int(inv[u]) for u in np.flatnonzero(inv >= 0)}


def nilpotents(ring: FiniteRing) -> ElementSet:
    """{a : a^k = 0 for some k <= order}."""
    return ElementSet.from_mask(ring, get_cache(ring).nilpotent_mask)


def jacobson_radical(ring: FiniteRing) -> ElementSet:
    """{a : 1 - r*a is a unit for all r}; verified to be a two-sided ideal."""
    return ElementSet.from_mask(ring, get_cache(ring).jacobson_mask)


def center(ring: FiniteRing) -> ElementSet:
    """{a : a*r = r*a for all r}."""
    return ElementSet.from_mask(ring, get_cache(ring).center_mask)


def two_good_elements(ring: FiniteRing) -> ElementSet:
    """Sums of two units."""
    return ElementSet.from_mask(ring, get_cache(ring).two_good_mask)


def ucn0(ring: FiniteRing) -> ElementSet:
    """{e + j : e a central idempotent, j in the radical}."""
    return ElementSet.from_mask(ring, get_cache(ring).ucn0_mask)


def ideal_generated(ring: FiniteRing, generators: Iterable[int]) -> ElementSet:
    """Least two-sided ideal containing ``generators`` (worklist closure).

    Closed under addition, negation, and multiplication by arbitrary
    ring elements on both sides.  Empty generators give {0}; a unit
    generator gives the whole ring.
    """
    n = ring.order
    mask = np.zeros(n, dtype=bool)
    mask[ring.zero] = True
    members: list[int] = [ring.zero]
    queue = sorted({int(g) for g in generators} - {ring.zero})
    while queue:
        x = queue.pop()
        if mask[x]:
            continue
        mask[x] = True
        candidates = set()
        candidates.add(int(ring.neg_table[x]))
        candidates.update(int(v) for v in np.unique(ring.mul_row(x)))
        mul = ring.mul_table
        candidates.update(int(v) for v in np.unique(mul[:, x]))
        row = ring.add_row(x)
        candidates.update(int(row[m]) for m in members)
        members.append(x)
        for c in candidates:
            if not mask[c]:
                queue.append(c)
    return ElementSet.from_mask(ring, mask)


def is_two_sided_ideal(ring: FiniteRing, subset: ElementSet | Iterable[int]) -> bool:
    ids = np.asarray(sorted(subset.members if isinstance(subset, ElementSet) else set(subset)))
    if ids.size == 0 or ring.zero not in ids:
        return False
    mask = np.zeros(ring.order, dtype=bool)
    mask[ids] = True
    add, mul = ring.add_table, ring.mul_table
    return bool(
        mask[add[np.ix_(ids, ids)]].all()
        and mask[ring.neg_table[ids]].all()
        and mask[mul[:, ids]].all()
        and mask[mul[ids, :]].all()
    )


@dataclass(frozen=True)
class LiftReport:
    """Outcome of idempotent lifting modulo an ideal."""

    lifts: bool
    witnesses: dict[int, int]
    failure: Optional[int] = None


def idempotents_lift_mod(ring: FiniteRing, ideal: ElementSet | Iterable[int]) -> LiftReport:
    """Whether every x with x^2 - x in I lifts to an idempotent e, e - x in I."""
    ids = sorted(ideal.members if isinstance(ideal, ElementSet) else set(ideal))
    if not is_two_sided_ideal(ring, ids):
        raise IdealError(f"subset {ids} is not a two-sided ideal of {ring.name}")
    imask = np.zeros(ring.order, dtype=bool)
    imask[ids] = True
    cache = get_cache(ring)
    idem = np.flatnonzero(cache.idempotent_mask)
    neg = ring.neg_table
    witnesses: dict[int, int] = {}
    for x in range(ring.order):
        defect = ring.add(ring.mul(x, x), int(neg[x]))
        if not imask[defect]:
            continue
        lifted = None
        negx = int(neg[x])
        for e in idem:
            if imask[ring.add(int(e), negx)]:
                lifted = int(e)
                break
        if lifted is None:
            return LiftReport(False, witnesses, failure=x)
        witnesses[x] = lifted
    return LiftReport(True, witnesses)


def _cyclic_one_sided(ring: FiniteRing, a: int, side: str) -> frozenset[int]:
    mul = ring.mul_table
    col = mul[:, a] if side == "left" else mul[a, :]
    return frozenset(int(v) for v in np.unique(col))


def one_sided_ideals(
    ring: FiniteRing,
    side: str = "left",
    count_limit: int = DEFAULT_IDEAL_COUNT_LIMIT,
    order_limit: int = DEFAULT_IDEAL_ORDER_LIMIT,
) -> list[frozenset[int]]:
    """All left (or right) ideals via join closure of cyclic ones.

    Raises :class:`SizeOverflowError` above ``order_limit`` and
    :class:`LatticeLimitError` when the lattice would exceed
    ``count_limit``; bounds are reported, never silently truncated.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = ring.order
    if n > order_limit:
        raise SizeOverflowError(n, order_limit)
    add = ring.add_table
    cyclic = sorted(
        {_cyclic_one_sided(ring, a, side) for a in range(n)},
        key=lambda s: (len(s), sorted(s)),
    )
    if len(cyclic) > count_limit:
        raise LatticeLimitError(count_limit)
    known: set[frozenset[int]] = set(cyclic)
    queue = list(cyclic)
    while queue:
        current = queue.pop()
        cur_ids = sorted(current)
        for gen in cyclic:
            joined = frozenset(
                int(v) for v in np.unique(add[np.ix_(cur_ids, sorted(gen))])
            )
            if joined not in known:
                known.add(joined)
                if len(known) > count_limit:
                    raise LatticeLimitError(count_limit)
                queue.append(joined)
    return sorted(known, key=lambda s: (len(s), sorted(s)))


def left_ideals(ring: FiniteRing, count_limit: int = DEFAULT_IDEAL_COUNT_LIMIT, **kw) -> list[ElementSet]:
    return [ElementSet(ring, s) for s in one_sided_ideals(ring, "left", count_limit, **kw)]


def right_ideals(ring: FiniteRing, count_limit: int = DEFAULT_IDEAL_COUNT_LIMIT, **kw) -> list[ElementSet]:
    return [ElementSet(ring, s) for s in one_sided_ideals(ring, "right", count_limit, **kw)]


def maximal_one_sided_ideals(
    ring: FiniteRing,
    side: str = "left",
    count_limit: int = DEFAULT_IDEAL_COUNT_LIMIT,
    order_limit: int = DEFAULT_IDEAL_ORDER_LIMIT,
) -> list[frozenset[int]]:
    """Proper one-sided ideals M with M + Ra = R for every a outside M."""
    everything = frozenset(range(ring.order))
    lattice = one_sided_ideals(ring, side, count_limit, order_limit)
    add = ring.add_table
    out = []
    for m in lattice:
        if m == everything:
            continue
        m_ids = sorted(m)
        maximal = True
        for a in range(ring.order):
            if a in m:
                continue
            cyc = sorted(_cyclic_one_sided(ring, a, side))
            joined = np.unique(add[np.ix_(m_ids, cyc)])
            if len(joined) != ring.order:
                maximal = False
                break
        if maximal:
            out.append(m)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def maximal_left_ideals(ring: FiniteRing, **kw) -> list[ElementSet]:
    return [ElementSet(ring, s) for s in maximal_one_sided_ideals(ring, "left", **kw)]


def maximal_right_ideals(ring: FiniteRing, **kw) -> list[ElementSet]:
    return [ElementSet(ring, s) for s in maximal_one_sided_ideals(ring, "right", **kw)]
