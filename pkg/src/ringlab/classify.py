"""Ring-level classification and isomorphism testing.

:func:`classify` evaluates the whole predicate vector for a ring:
cleanness and strong cleanness, the four uniqueness classes (every
element / every clean element / every unit, with plain or commuting
decompositions), and the auxiliary structural predicates the
verification suite quantifies over (boolean, reduced, abelian, local,
regular, semi-potent, potent, semi-boolean, quasi-duo, and the
radical-related equalities).

Lattice-bounded predicates are tri-state: True, False, or None when
the one-sided ideal enumeration exceeded its limits ("skipped" in
reports); an unverified boolean is never reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .construct import quotient_ring
from .core import ElementSet, FiniteRing
from .elements import decomposition_counts, element_profile, ElementProfile
from .errors import LatticeLimitError, SizeOverflowError
from .invariants import (
    get_cache,
    idempotents_lift_mod,
    maximal_one_sided_ideals,
)

#: JSON field names of the classification vector, in canonical order.
CLASSIFICATION_FIELDS = (
    "is_clean", "is_strongly_clean", "is_UC", "is_USC", "is_CUC", "is_CUSC",
    "is_UUC", "is_UUSC", "is_boolean", "is_reduced", "is_abelian",
    "is_commutative", "is_local", "is_regular", "is_semi_potent", "is_potent",
    "is_semi_boolean", "is_quasi_duo_left", "is_quasi_duo_right",
    "one_is_two_good", "two_in_J", "R_equals_ucn0", "RmodJ_boolean",
    "U_equals_one_plus_J",
)


@dataclass
class Classification:
    """The full boolean predicate vector of one ring.

    Quasi-duo fields are ``None`` when the ideal-lattice scan was
    skipped.  ``witnesses`` maps predicate names to serializable
    payloads justifying a failure (or, for existence-flavored fields,
    a success).
    """

    is_clean: bool
    is_strongly_clean: bool
    is_UC: bool
    is_USC: bool
    is_CUC: bool
    is_CUSC: bool
    is_UUC: bool
    is_UUSC: bool
    is_boolean: bool
    is_reduced: bool
    is_abelian: bool
    is_commutative: bool
    is_local: bool
    is_regular: bool
    is_semi_potent: bool
    is_potent: bool
    is_semi_boolean: bool
    is_quasi_duo_left: Optional[bool]
    is_quasi_duo_right: Optional[bool]
    one_is_two_good: bool
    two_in_J: bool
    R_equals_ucn0: bool
    RmodJ_boolean: bool
    U_equals_one_plus_J: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {}
        for name in CLASSIFICATION_FIELDS:
            value = getattr(self, name)
            out[name] = "skipped" if value is None else value
        if self.witnesses:
            out["witnesses"] = self.witnesses
        return out


def _quantify(counts: np.ndarray, over: np.ndarray, want_exactly_one: bool,
              at_most_one: bool = False) -> tuple[bool, Optional[int]]:
    """All elements of ``over`` have exactly/at-most one decomposition."""
    ids = np.flatnonzero(over)
    if ids.size == 0:
        return True, None
    sub = counts[ids]
    if want_exactly_one and not at_most_one:
        bad = ids[np.flatnonzero(sub != 1)]
    else:
        bad = ids[np.flatnonzero(sub > 1)]
    if bad.size:
        return False, int(bad[0])
    return True, None


def _regular_mask(ring: FiniteRing) -> np.ndarray:
    mul = ring.mul_table
    out = np.zeros(ring.order, dtype=bool)
    for a in range(ring.order):
        axa = mul[mul[a], a]
        out[a] = bool((axa == a).any())
    return out


def _semi_potent(ring: FiniteRing, jac_mask: np.ndarray, idem_mask: np.ndarray):
    """Every principal one-sided ideal outside J holds a nonzero idempotent.

    Principal ideals suffice: a one-sided ideal not inside J contains
    some a outside J, and Ra (resp. aR) sits inside it.
    """
    nz_idem = idem_mask.copy()
    nz_idem[ring.zero] = False
    mul = ring.mul_table
    ra_ok = nz_idem[mul].any(axis=0)
    ar_ok = nz_idem[mul].any(axis=1)
    ok = jac_mask | (ra_ok & ar_ok)
    if ok.all():
        return True, None
    return False, int(np.flatnonzero(~ok)[0])


def classify(
    ring: FiniteRing,
    *,
    usc_reading: str = "exact-one",
    quasi_duo_order_limit: int = 256,
    quasi_duo_count_limit: int = 100_000,
) -> Classification:
    """Compute the full classification vector of a ring."""
    cache = get_cache(ring)
    n = ring.order
    at_most = usc_reading == "at-most-one"
    clean_counts, strong_counts = decomposition_counts(ring)
    everything = np.ones(n, dtype=bool)
    clean_mask = clean_counts > 0
    unit_mask = cache.unit_mask
    idem_mask = cache.idempotent_mask
    jac_mask = cache.jacobson_mask
    witnesses: dict = {}

    def note(name, element, with_decomps=True):
        payload = {"element": ring.label_of(element)}
        if with_decomps:
            prof = element_profile(ring, element, usc_reading)
            payload["clean_decompositions"] = [
                d.to_json(ring) for d in prof.clean_decomps
            ]
        witnesses[name] = payload

    is_clean = bool(clean_mask.all())
    if not is_clean:
        note("is_clean", int(np.flatnonzero(~clean_mask)[0]), with_decomps=False)
    strongly_mask = strong_counts > 0
    is_strongly_clean = bool(strongly_mask.all())
    if not is_strongly_clean:
        note("is_strongly_clean", int(np.flatnonzero(~strongly_mask)[0]), with_decomps=False)

    is_UC, w = _quantify(clean_counts, everything, True)
    if w is not None:
        note("is_UC", w)
    is_USC, w = _quantify(strong_counts, everything, True, at_most)
    if w is not None:
        note("is_USC", w)
    is_CUC, w = _quantify(clean_counts, clean_mask, True)
    if w is not None:
        note("is_CUC", w)
    is_CUSC, w = _quantify(strong_counts, clean_mask, True, at_most)
    if w is not None:
        note("is_CUSC", w)
    is_UUC, w = _quantify(clean_counts, unit_mask, True)
    if w is not None:
        note("is_UUC", w)
    is_UUSC, w = _quantify(strong_counts, unit_mask, True, at_most)
    if w is not None:
        note("is_UUSC", w)

    idx = np.arange(n)
    boolean_bad = np.flatnonzero(~idem_mask)
    is_boolean = boolean_bad.size == 0
    if not is_boolean:
        witnesses["is_boolean"] = {"element": ring.label_of(int(boolean_bad[0]))}

    nil_ids = np.flatnonzero(cache.nilpotent_mask)
    is_reduced = bool((nil_ids == ring.zero).all())
    if not is_reduced:
        bad = [i for i in nil_ids if i != ring.zero][0]
        witnesses["is_reduced"] = {"element": ring.label_of(int(bad))}

    center_mask = cache.center_mask
    noncentral_idem = np.flatnonzero(idem_mask & ~center_mask)
    is_abelian = noncentral_idem.size == 0
    if not is_abelian:
        e = int(noncentral_idem[0])
        r = int(np.flatnonzero(ring.mul_row(e) != ring.mul_table[:, e])[0])
        witnesses["is_abelian"] = {
            "idempotent": ring.label_of(e), "element": ring.label_of(r),
        }

    is_commutative = bool(center_mask.all())
    if not is_commutative:
        a = int(np.flatnonzero(~center_mask)[0])
        b = int(np.flatnonzero(ring.mul_row(a) != ring.mul_table[:, a])[0])
        witnesses["is_commutative"] = {"pair": [ring.label_of(a), ring.label_of(b)]}

    # Local: the quotient by the radical is a division ring.
    quotient = quotient_ring(ring, np.flatnonzero(jac_mask).tolist())
    qcache = get_cache(quotient)
    q_bad = [
        int(i) for i in np.flatnonzero(~qcache.unit_mask) if i != quotient.zero
    ]
    is_local = len(q_bad) == 0
    if not is_local:
        witnesses["is_local"] = {"quotient_element": quotient.label_of(int(q_bad[0]))}

    q_idx = np.arange(quotient.order)
    RmodJ_boolean = bool(
        (quotient.mul_table[q_idx, q_idx] == q_idx).all()
    )
    if not RmodJ_boolean:
        bad = int(np.flatnonzero(quotient.mul_table[q_idx, q_idx] != q_idx)[0])
        witnesses["RmodJ_boolean"] = {"quotient_element": quotient.label_of(bad)}

    regular = _regular_mask(ring)
    is_regular = bool(regular.all())
    if not is_regular:
        witnesses["is_regular"] = {
            "element": ring.label_of(int(np.flatnonzero(~regular)[0]))
        }

    is_semi_potent, w = _semi_potent(ring, jac_mask, idem_mask)
    if w is not None:
        witnesses["is_semi_potent"] = {"element": ring.label_of(w)}

    lift = idempotents_lift_mod(ring, ElementSet.from_mask(ring, jac_mask))
    is_potent = is_semi_potent and lift.lifts
    if not lift.lifts:
        witnesses["is_potent"] = {"element": ring.label_of(lift.failure)}

    is_semi_boolean = is_potent and RmodJ_boolean

    def quasi_duo(side):
        try:
            maximal = maximal_one_sided_ideals(
                ring, side,
                count_limit=quasi_duo_count_limit,
                order_limit=quasi_duo_order_limit,
            )
        except (SizeOverflowError, LatticeLimitError) as exc:
            witnesses[f"is_quasi_duo_{side}"] = {"skipped": str(exc)}
            return None
        mul = ring.mul_table
        for m in maximal:
            ids = sorted(m)
            mask = np.zeros(n, dtype=bool)
            mask[ids] = True
            two_sided = bool(mask[mul[np.ix_(ids, range(n))]].all()
                             and mask[mul[np.ix_(range(n), ids)]].all())
            if not two_sided:
                witnesses[f"is_quasi_duo_{side}"] = {
                    "maximal_ideal": [ring.label_of(i) for i in ids]
                }
                return False
        return True

    is_quasi_duo_left = quasi_duo("left")
    is_quasi_duo_right = quasi_duo("right")

    two_good_mask = cache.two_good_mask
    one_is_two_good = bool(two_good_mask[ring.one])
    if one_is_two_good:
        units_ids = np.flatnonzero(unit_mask)
        pair = None
        for u1 in units_ids:
            u2 = ring.sub(ring.one, int(u1))
            if unit_mask[u2]:
                pair = (int(u1), int(u2))
                break
        witnesses["one_is_two_good"] = {
            "units": [ring.label_of(pair[0]), ring.label_of(pair[1])]
        }

    two = ring.add(ring.one, ring.one)
    two_in_J = bool(jac_mask[two])

    ucn0_mask = cache.ucn0_mask
    R_equals_ucn0 = bool(ucn0_mask.all())
    if not R_equals_ucn0:
        witnesses["R_equals_ucn0"] = {
            "element": ring.label_of(int(np.flatnonzero(~ucn0_mask)[0]))
        }

    one_plus_j = np.zeros(n, dtype=bool)
    one_plus_j[ring.add_row(ring.one)[np.flatnonzero(jac_mask)]] = True
    U_equals_one_plus_J = bool((unit_mask == one_plus_j).all())
    if not U_equals_one_plus_J:
        bad = int(np.flatnonzero(unit_mask != one_plus_j)[0])
        witnesses["U_equals_one_plus_J"] = {"element": ring.label_of(bad)}

    return Classification(
        is_clean=is_clean,
        is_strongly_clean=is_strongly_clean,
        is_UC=is_UC,
        is_USC=is_USC,
        is_CUC=is_CUC,
        is_CUSC=is_CUSC,
        is_UUC=is_UUC,
        is_UUSC=is_UUSC,
        is_boolean=is_boolean,
        is_reduced=is_reduced,
        is_abelian=is_abelian,
        is_commutative=is_commutative,
        is_local=is_local,
        is_regular=is_regular,
        is_semi_potent=is_semi_potent,
        is_potent=is_potent,
        is_semi_boolean=is_semi_boolean,
        is_quasi_duo_left=is_quasi_duo_left,
        is_quasi_duo_right=is_quasi_duo_right,
        one_is_two_good=one_is_two_good,
        two_in_J=two_in_J,
        R_equals_ucn0=R_equals_ucn0,
        RmodJ_boolean=RmodJ_boolean,
        U_equals_one_plus_J=U_equals_one_plus_J,
        witnesses=witnesses,
    )


def classify_element_summary(
    ring: FiniteRing, usc_reading: str = "exact-one"
) -> list[ElementProfile]:
    """One profile per element, consistent with classify's quantifiers."""
    return [element_profile(ring, a, usc_reading) for a in range(ring.order)]


# ---------------------------------------------------------------------------
# isomorphism search


@dataclass(frozen=True)
class IsoResult:
    found: bool
    mapping: Optional[tuple[int, ...]]
    reason: str = ""

    def __bool__(self):
        return self.found


def _additive_orders(ring: FiniteRing) -> np.ndarray:
    n = ring.order
    orders = np.zeros(n, dtype=np.int64)
    v = np.arange(n)
    idx = np.arange(n)
    remaining = n
    for k in range(1, n + 1):
        hit = (orders == 0) & (v == ring.zero)
        orders[hit] = k
        remaining -= int(hit.sum())
        if remaining == 0:
            break
        v = ring.add_table[v, idx]
    return orders


def _fingerprints(ring: FiniteRing) -> list[tuple]:
    cache = get_cache(ring)
    orders = _additive_orders(ring)
    mul = ring.mul_table
    left_ann = (mul == ring.zero).sum(axis=0)
    right_ann = (mul == ring.zero).sum(axis=1)
    out = []
    for a in range(ring.order):
        out.append((
            int(orders[a]),
            bool(cache.unit_mask[a]),
            bool(cache.idempotent_mask[a]),
            bool(cache.nilpotent_mask[a]),
            bool(cache.center_mask[a]),
            int(left_ann[a]),
            int(right_ann[a]),
        ))
    return out


def check_isomorphic(
    ring1: FiniteRing,
    ring2: FiniteRing,
    *,
    order_limit: int = 256,
) -> IsoResult:
    """Search for a ring isomorphism, guided by invariant fingerprints.

    Returns a witness bijection (as a tuple ``phi`` with
    ``phi[a1] = a2``) or a negative verdict with the discriminating
    invariant.  Bounded by ``order_limit``.
    """
    if ring1.order != ring2.order:
        return IsoResult(False, None, "orders differ")
    n = ring1.order
    if n > order_limit:
        raise SizeOverflowError(n, order_limit)
    fp1 = _fingerprints(ring1)
    fp2 = _fingerprints(ring2)
    if sorted(fp1) != sorted(fp2):
        return IsoResult(False, None, "element fingerprint multisets differ")

    candidates_by_fp: dict[tuple, list[int]] = {}
    for a, f in enumerate(fp2):
        candidates_by_fp.setdefault(f, []).append(a)

    add1, add2 = ring1.add_table, ring2.add_table
    mul1, mul2 = ring1.mul_table, ring2.mul_table

    phi = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    phi[ring1.zero] = ring2.zero
    used[ring2.zero] = True
    span = [ring1.zero]
    span_mask = np.zeros(n, dtype=bool)
    span_mask[ring1.zero] = True

    def pick_generator():
        best, best_count = None, None
        for a in range(n):
            if span_mask[a]:
                continue
            count = sum(
                1 for c in candidates_by_fp.get(fp1[a], []) if not used[c]
            )
            if best_count is None or count < best_count:
                best, best_count = a, count
        return best

    def retract(new_elems):
        for ns in new_elems:
            used[phi[ns]] = False
            phi[ns] = -1
            span_mask[ns] = False
        if new_elems:
            del span[-len(new_elems):]

    def extend(g, h):
        """Try phi[g] = h; extend phi over the enlarged additive span.

        With k minimal such that k*g lies in the span, the cosets
        span + t*g (t < k) partition the new span, so the additive
        extension phi(s + t*g) = phi(s) + t*h is well-defined once
        phi(k*g) = k*h holds.  Returns the added elements, or None.
        """
        k, x = 1, g
        while not span_mask[x]:
            x = int(add1[x, g])
            k += 1
        y = h
        for _ in range(k - 1):
            y = int(add2[y, h])
        if phi[x] != y:
            return None
        new_elems = []
        cur_g, cur_h = g, h
        for _ in range(1, k):
            for s in list(span):
                ns = int(add1[s, cur_g])
                nh = int(add2[phi[s], cur_h])
                if used[nh] or span_mask[ns]:
                    span.extend(new_elems)
                    retract(new_elems)
                    return None
                phi[ns] = nh
                used[nh] = True
                span_mask[ns] = True
                new_elems.append(ns)
            cur_g = int(add1[cur_g, g])
            cur_h = int(add2[cur_h, h])
        span.extend(new_elems)
        return new_elems

    def dfs():
        if len(span) == n:
            if phi[ring1.one] != ring2.one:
                return False
            p = phi
            if not (p[mul1] == mul2[p[:, None], p[None, :]]).all():
                return False
            if not (p[add1] == add2[p[:, None], p[None, :]]).all():
                return False
            return True
        g = pick_generator()
        for h in candidates_by_fp.get(fp1[g], []):
            if used[h]:
                continue
            added = extend(g, h)
            if added is None:
                continue
            if dfs():
                return True
            retract(added)
        return False

    if dfs():
        return IsoResult(True, tuple(int(x) for x in phi))
    return IsoResult(False, None, "no isomorphism found by exhaustive search")
