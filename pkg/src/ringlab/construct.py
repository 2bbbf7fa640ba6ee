"""Constructors for every ring family the catalog uses.

Base rings (Z_n, GF(p^k)), direct products, full and upper-triangular
matrix rings, two-sided quotients, corner rings eRe, group rings with
their augmentation map, trivial and ideal extensions, formal triangular
rings, trivial Morita contexts, (skew) truncated polynomial rings, and
opposite rings.

Composite rings are assembled from mixed-radix element coordinates: the
additive structure is always componentwise, so only the multiplication
formula varies per family.  Tables materialize fully up to ``threshold``
elements (default 4096) and become row-memoized :class:`LazyRing`
handles above it; the hard cap :data:`ringlab.core.MAX_ORDER` is never
crossed.  Constructor outputs are validated at build time (full cubic
axiom check up to order 256, fixed-seed sampling above).
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .core import (
    DEFAULT_THRESHOLD,
    MAX_ORDER,
    FiniteRing,
    LazyRing,
    TableRing,
    dtype_for,
    spec_name,
    table_ring,
    validate_axioms,
)
from .errors import (
    BimoduleError,
    EndomorphismError,
    RingConstructionError,
    SizeOverflowError,
    SpecError,
)
from .groups import Group, group_from_spec
from .invariants import get_cache, ideal_generated

_BUILD_VALIDATE_LIMIT = 256


# ---------------------------------------------------------------------------
# coordinate assembly


class _Axis:
    """One coordinate of a composite element: an additive group."""

    def __init__(self, size: int, add: np.ndarray, neg: np.ndarray, zero: int):
        self.size = size
        self.add = add
        self.neg = neg
        self.zero = zero

    @classmethod
    def of_ring(cls, ring: FiniteRing) -> "_Axis":
        return cls(ring.order, ring.add_table, ring.neg_table, ring.zero)


def _axis_of_module(add_table: np.ndarray) -> tuple["_Axis", int]:
    """Validate a module's additive table as an abelian group."""
    add = np.asarray(add_table, dtype=np.int64)
    n = len(add)
    if add.shape != (n, n) or (n and (add.min() < 0 or add.max() >= n)):
        raise RingConstructionError("module add table malformed")
    idx = np.arange(n)
    zeros = [a for a in range(n) if (add[a] == idx).all()]
    if not zeros:
        raise RingConstructionError("module addition has no zero")
    zero = zeros[0]
    if not (add == add.T).all():
        raise RingConstructionError("module addition is not commutative")
    for a in range(n):
        lhs = add[add[a], :]
        if not (lhs == add[a][add]).all():
            raise RingConstructionError("module addition is not associative")
    neg = np.full(n, -1, dtype=np.int64)
    rows, cols = np.nonzero(add == zero)
    neg[rows] = cols
    if (neg < 0).any():
        raise RingConstructionError("module addition lacks inverses")
    return _Axis(n, add, neg, zero), zero


class _Assembly:
    """Mixed-radix coordinates plus a multiplication formula."""

    def __init__(self, axes: Sequence[_Axis]):
        self.axes = list(axes)
        self.sizes = [ax.size for ax in self.axes]
        order = 1
        for s in self.sizes:
            order *= s
        self.order = order
        weights = []
        w = order
        for s in self.sizes:
            w //= s
            weights.append(w)
        self.weights = weights

    def decode(self, ids: np.ndarray) -> list[np.ndarray]:
        return [
            (ids // w) % s for w, s in zip(self.weights, self.sizes)
        ]

    def encode(self, digits: Sequence[np.ndarray], dtype) -> np.ndarray:
        acc = np.zeros(np.broadcast(*digits).shape if len(digits) > 1 else np.shape(digits[0]), dtype=dtype)
        for w, d in zip(self.weights, digits):
            acc += np.asarray(d, dtype=dtype) * dtype.type(w)
        return acc

    def encode_one(self, digits: Sequence[int]) -> int:
        return sum(w * int(d) for w, d in zip(self.weights, digits))


def _assemble_ring(
    assembly: _Assembly,
    mul_digits: Callable[[list, list], list],
    one_digits: Sequence[int],
    label_fn: Callable[[list[int]], str],
    spec: Optional[dict],
    name: Optional[str],
    threshold: int,
) -> FiniteRing:
    """Build a table or lazy ring from coordinates and a product formula."""
    n = assembly.order
    if n > MAX_ORDER:
        raise SizeOverflowError(n, MAX_ORDER)
    dt = dtype_for(n)
    zero = assembly.encode_one([ax.zero for ax in assembly.axes])
    one = assembly.encode_one(one_digits)
    all_ids = np.arange(n)
    X = [np.asarray(d) for d in assembly.decode(all_ids)]

    def labels_for(i: int) -> str:
        return label_fn([int(x[i]) for x in X])

    neg = assembly.encode([ax.neg[x] for ax, x in zip(assembly.axes, X)], dt)

    if n <= threshold:
        da = [x[:, None] for x in X]
        db = [x[None, :] for x in X]
        add_tab = assembly.encode(
            [ax.add[d1, d2] for ax, d1, d2 in zip(assembly.axes, da, db)], dt
        )
        mul_tab = assembly.encode(mul_digits(da, db), dt)
        labels = [labels_for(i) for i in range(n)]
        ring = TableRing(add_tab, mul_tab, zero, one, labels=labels, spec=spec, name=name)
    else:
        def add_row(a):
            da = [np.asarray([x[a]])[:, None] for x in X]
            db = [x[None, :] for x in X]
            row = assembly.encode(
                [ax.add[d1, d2] for ax, d1, d2 in zip(assembly.axes, da, db)], dt
            )
            return row[0]

        def mul_row(a):
            da = [np.asarray([x[a]])[:, None] for x in X]
            db = [x[None, :] for x in X]
            return assembly.encode(mul_digits(da, db), dt)[0]

        ring = LazyRing(
            n, zero, one, add_row, mul_row, neg,
            spec=spec, name=name, label_fn=labels_for,
        )
    _validate_built(ring)
    ring.meta["axis_sizes"] = tuple(assembly.sizes)
    ring.meta["axis_weights"] = tuple(assembly.weights)
    return ring


def _validate_built(ring: FiniteRing):
    report = validate_axioms(ring, limit=_BUILD_VALIDATE_LIMIT, force=True)
    if not report.ok:
        raise RingConstructionError(
            f"constructed ring {ring.name} fails {report.axiom} at {report.witness}"
        )


def _restrict_to_subset(
    base: FiniteRing,
    ids: Sequence[int],
    one_id: int,
    labels: Optional[Sequence[str]] = None,
    spec: Optional[dict] = None,
    name: Optional[str] = None,
) -> TableRing:
    """Table ring on a multiplicatively and additively closed subset."""
    ids = sorted(int(i) for i in ids)
    lookup = np.full(base.order, -1, dtype=np.int64)
    lookup[ids] = np.arange(len(ids))
    sub_add = lookup[base.add_table[np.ix_(ids, ids)]]
    sub_mul = lookup[base.mul_table[np.ix_(ids, ids)]]
    if (sub_add < 0).any() or (sub_mul < 0).any():
        raise RingConstructionError("subset is not closed under ring operations")
    zero = int(lookup[base.zero])
    if zero < 0:
        raise RingConstructionError("subset does not contain zero")
    one = int(lookup[one_id])
    if labels is None:
        labels = [base.label_of(i) for i in ids]
    ring = TableRing(sub_add, sub_mul, zero, one, labels=labels, spec=spec, name=name)
    _validate_built(ring)
    return ring


# ---------------------------------------------------------------------------
# base rings


def zn(n: int, *, threshold: int = DEFAULT_THRESHOLD, spec: Optional[dict] = None) -> FiniteRing:
    """The ring of integers modulo n."""
    if n < 1:
        raise SpecError(f"zn parameter must be positive, got {n}")
    if n > MAX_ORDER:
        raise SizeOverflowError(n, MAX_ORDER)
    spec = spec or {"zn": n}
    idx = np.arange(n, dtype=np.int64)
    if n <= threshold:
        add = (idx[:, None] + idx[None, :]) % n
        mul = (idx[:, None] * idx[None, :]) % n
        ring = TableRing(add, mul, 0, 1 % n, labels=[str(i) for i in range(n)],
                         spec=spec, name=spec_name(spec))
    else:
        neg = (-idx) % n
        ring = LazyRing(
            n, 0, 1 % n,
            lambda a: (a + idx) % n,
            lambda a: (a * idx) % n,
            neg, spec=spec, name=spec_name(spec),
        )
    _validate_built(ring)
    return ring


def _poly_divisible(dividend: list[int], divisor: list[int], p: int) -> bool:
    """Whether divisor (monic) divides dividend over Z_p."""
    rem = list(dividend)
    d = len(divisor) - 1
    while len(rem) - 1 >= d and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        lead = rem[-1]
        shift = len(rem) - 1 - d
        for i, c in enumerate(divisor):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return not any(rem)


def _find_irreducible(p: int, k: int) -> list[int]:
    """First monic irreducible of degree k over Z_p in coefficient order.

    A monic polynomial of degree k >= 2 is irreducible iff no monic
    polynomial of degree 1..k//2 divides it.
    """
    divisors = []
    for deg in range(1, k // 2 + 1):
        for c in range(p ** deg):
            divisors.append([(c // p ** i) % p for i in range(deg)] + [1])
    for c in range(p ** k):
        cand = [(c // p ** i) % p for i in range(k)] + [1]
        if all(not _poly_divisible(cand, d, p) for d in divisors):
            return cand
    raise RingConstructionError(f"no irreducible polynomial of degree {k} over Z_{p}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def gf(p: int, k: int, *, threshold: int = DEFAULT_THRESHOLD, spec: Optional[dict] = None) -> FiniteRing:
    """The finite field with p^k elements (canonical modulus, generator w)."""
    if not _is_prime(p):
        raise SpecError(f"gf characteristic must be prime, got {p}")
    if k < 1:
        raise SpecError(f"gf degree must be positive, got {k}")
    spec = spec or {"gf": {"p": p, "k": k}}
    order = p ** k
    if order > MAX_ORDER:
        raise SizeOverflowError(order, MAX_ORDER)
    if k == 1:
        base = zn(p, threshold=threshold, spec=spec)
        return base
    modulus = _find_irreducible(p, k)

    def decode(i):
        return [(i // p ** j) % p for j in range(k)]

    def reduce_poly(coeffs):
        coeffs = list(coeffs)
        for deg in range(len(coeffs) - 1, k - 1, -1):
            lead = coeffs[deg]
            if lead:
                for i in range(k + 1):
                    coeffs[deg - k + i] = (coeffs[deg - k + i] - lead * modulus[i]) % p
        return coeffs[:k]

    def encode(coeffs):
        return sum(c * p ** j for j, c in enumerate(coeffs))

    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    polys = [decode(i) for i in range(order)]
    for i, a in enumerate(polys):
        for j, b in enumerate(polys):
            add[i, j] = encode([(x + y) % p for x, y in zip(a, b)])
            prod = [0] * (2 * k - 1)
            for da, ca in enumerate(a):
                if ca:
                    for db, cb in enumerate(b):
                        prod[da + db] = (prod[da + db] + ca * cb) % p
            mul[i, j] = encode(reduce_poly(prod))
    labels = [_poly_label(poly, "w") for poly in polys]
    ring = TableRing(add, mul, 0, 1, labels=labels, spec=spec, name=spec_name(spec))
    _validate_built(ring)
    return ring


def _poly_label(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for deg, c in enumerate(coeffs):
        if c == 0:
            continue
        power = "" if deg == 0 else (var if deg == 1 else f"{var}^{deg}")
        if deg == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(power)
        else:
            terms.append(f"{c}*{power}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# products, matrices, triangular rings


def product_ring(
    factors: Sequence[FiniteRing],
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Direct product with componentwise operations."""
    if not factors:
        raise SpecError("product requires at least one factor")
    spec = spec or {"product": [f.spec for f in factors]}
    assembly = _Assembly([_Axis.of_ring(f) for f in factors])
    muls = [f.mul_table for f in factors]

    def mul_digits(da, db):
        return [m[d1, d2] for m, d1, d2 in zip(muls, da, db)]

    labels = [f.labels for f in factors]

    def label_fn(digits):
        return "(" + ",".join(lbl[d] for lbl, d in zip(labels, digits)) + ")"

    return _assemble_ring(
        assembly, mul_digits, [f.one for f in factors], label_fn,
        spec, spec_name(spec), threshold,
    )


def matrix_ring(
    n: int,
    base: FiniteRing,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Full n x n matrix ring over the base."""
    if n < 1:
        raise SpecError(f"matrix dimension must be positive, got {n}")
    spec = spec or {"matrix": {"n": n, "base": base.spec}}
    order = base.order ** (n * n)
    if order > MAX_ORDER:
        raise SizeOverflowError(order, MAX_ORDER)
    entries = [(i, j) for i in range(n) for j in range(n)]
    pos = {e: c for c, e in enumerate(entries)}
    assembly = _Assembly([_Axis.of_ring(base)] * len(entries))
    amul, aadd = base.mul_table, base.add_table

    def mul_digits(da, db):
        out = []
        for i, j in entries:
            acc = None
            for k in range(n):
                term = amul[da[pos[(i, k)]], db[pos[(k, j)]]]
                acc = term if acc is None else aadd[acc, term]
            out.append(acc)
        return out

    one_digits = [base.one if i == j else base.zero for i, j in entries]
    base_labels = base.labels

    def label_fn(digits):
        rows = []
        for i in range(n):
            rows.append(" ".join(base_labels[digits[pos[(i, j)]]] for j in range(n)))
        return "(" + ";".join(rows) + ")"

    return _assemble_ring(assembly, mul_digits, one_digits, label_fn,
                          spec, spec_name(spec), threshold)


def triangular_ring(
    n: int,
    base: FiniteRing,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Upper triangular n x n matrices over the base."""
    if n < 1:
        raise SpecError(f"triangular dimension must be positive, got {n}")
    spec = spec or {"triangular": {"n": n, "base": base.spec}}
    order = base.order ** (n * (n + 1) // 2)
    if order > MAX_ORDER:
        raise SizeOverflowError(order, MAX_ORDER)
    entries = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {e: c for c, e in enumerate(entries)}
    assembly = _Assembly([_Axis.of_ring(base)] * len(entries))
    amul, aadd = base.mul_table, base.add_table

    def mul_digits(da, db):
        out = []
        for i, j in entries:
            acc = None
            for k in range(i, j + 1):
                term = amul[da[pos[(i, k)]], db[pos[(k, j)]]]
                acc = term if acc is None else aadd[acc, term]
            out.append(acc)
        return out

    one_digits = [base.one if i == j else base.zero for i, j in entries]
    base_labels = base.labels
    zero_label = base_labels[base.zero]

    def label_fn(digits):
        rows = []
        for i in range(n):
            cells = []
            for j in range(n):
                cells.append(base_labels[digits[pos[(i, j)]]] if j >= i else zero_label)
            rows.append(" ".join(cells))
        return "(" + ";".join(rows) + ")"

    return _assemble_ring(assembly, mul_digits, one_digits, label_fn,
                          spec, spec_name(spec), threshold)


# ---------------------------------------------------------------------------
# quotients, corners, subrings


def quotient_ring(
    base: FiniteRing,
    generators: Iterable[int],
    *,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Quotient by the two-sided ideal generated by ``generators``.

    Cosets are canonicalized by least element id; the projection map is
    available as ``ring.meta['projection']`` (an array over base ids).
    """
    gens = sorted({int(g) for g in generators})
    spec = spec or {"quotient": {"base": base.spec, "generators": gens}}
    ideal = ideal_generated(base, gens)
    ideal_ids = np.asarray(ideal.sorted_ids())
    n = base.order
    if isinstance(base, TableRing):
        reps = base.add_table[:, ideal_ids].min(axis=1)
    else:
        reps = np.array([int(base.add_row(x)[ideal_ids].min()) for x in range(n)])
    rep_ids = np.unique(reps)
    lookup = np.full(n, -1, dtype=np.int64)
    lookup[rep_ids] = np.arange(len(rep_ids))
    proj = lookup[reps]
    m = len(rep_ids)
    q_add = np.zeros((m, m), dtype=np.int64)
    q_mul = np.zeros((m, m), dtype=np.int64)
    for qi, r in enumerate(rep_ids):
        q_add[qi] = proj[base.add_row(int(r))[rep_ids]]
        q_mul[qi] = proj[base.mul_row(int(r))[rep_ids]]
    labels = ["[" + base.label_of(int(r)) + "]" for r in rep_ids]
    ring = TableRing(
        q_add, q_mul, int(proj[base.zero]), int(proj[base.one]),
        labels=labels, spec=spec, name=spec_name(spec),
    )
    _validate_built(ring)
    ring.meta["projection"] = proj
    ring.meta["base_ring"] = base
    ring.meta["ideal"] = ideal
    ring.meta["representatives"] = rep_ids
    return ring


def corner_ring(
    base: FiniteRing,
    e: int,
    *,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """The unital ring e*R*e with identity e.

    The embedding back into the base is ``ring.meta['embedding']``.
    """
    if base.mul(e, e) != e:
        raise RingConstructionError(f"element {e} is not idempotent in {base.name}")
    spec = spec or {"corner": {"base": base.spec, "idempotent": int(e)}}
    er = base.mul_row(e)
    if isinstance(base, TableRing):
        ere = base.mul_table[er, e]
    else:
        ere = np.array([base.mul(int(x), e) for x in er])
    ids = np.unique(ere)
    ring = _restrict_to_subset(base, ids, e, spec=spec, name=spec_name(spec))
    ring.meta["embedding"] = np.asarray(sorted(int(i) for i in ids))
    ring.meta["base_ring"] = base
    ring.meta["idempotent"] = int(e)
    return ring


def subring_generated(base: FiniteRing, generators: Iterable[int]) -> FiniteRing:
    """Smallest unital subring containing the generators.

    The embedding into the base is ``ring.meta['embedding']``.
    """
    current = {base.zero, base.one} | {int(g) for g in generators}
    while True:
        ids = sorted(current)
        grown = set(current)
        grown.update(int(v) for v in np.unique(base.add_table[np.ix_(ids, ids)]))
        grown.update(int(v) for v in np.unique(base.mul_table[np.ix_(ids, ids)]))
        grown.update(int(base.neg_table[i]) for i in ids)
        if grown == current:
            break
        current = grown
    ids = sorted(current)
    ring = _restrict_to_subset(base, ids, base.one, name=f"sub({base.name})")
    ring.meta["embedding"] = np.asarray(ids)
    ring.meta["base_ring"] = base
    return ring


# ---------------------------------------------------------------------------
# group rings


def group_ring(
    base: FiniteRing,
    group: Group,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Group ring R[G] with convolution product.

    meta carries the augmentation map (``'augmentation'``: RG id ->
    base id), its kernel (``'aug_kernel'``, equal to the ideal generated
    by the elements 1 - g), and the base embedding r -> r*1_G.
    """
    g = group.order
    order = base.order ** g
    if order > MAX_ORDER:
        raise SizeOverflowError(order, MAX_ORDER)
    assembly = _Assembly([_Axis.of_ring(base)] * g)
    amul, aadd = base.mul_table, base.add_table
    gtab = group.table

    def mul_digits(da, db):
        out = [None] * g
        for h in range(g):
            for k in range(g):
                target = int(gtab[h, k])
                term = amul[da[h], db[k]]
                out[target] = term if out[target] is None else aadd[out[target], term]
        return out

    one_digits = [base.zero] * g
    one_digits[group.identity] = base.one
    base_labels = base.labels
    glabels = group.labels

    def label_fn(digits):
        terms = []
        for pos, c in enumerate(digits):
            if c == base.zero:
                continue
            coeff = base_labels[c]
            sym = glabels[pos]
            if pos == group.identity:
                terms.append(coeff)
            elif c == base.one:
                terms.append(sym)
            else:
                terms.append(f"{coeff}*{sym}")
        return "+".join(terms) if terms else base_labels[base.zero]

    spec = spec or {"group_ring": {"base": base.spec, "group": _group_spec_of(group)}}
    ring = _assemble_ring(assembly, mul_digits, one_digits, label_fn,
                          spec, spec_name(spec), threshold)

    X = assembly.decode(np.arange(order))
    eps = None
    for digits in X:
        eps = digits if eps is None else aadd[eps, digits]
    ring.meta["augmentation"] = np.asarray(eps)
    embed = np.zeros(base.order, dtype=np.int64)
    for r in range(base.order):
        digits = [base.zero] * g
        digits[group.identity] = r
        embed[r] = assembly.encode_one(digits)
    ring.meta["base_embedding"] = embed
    gens = []
    for h in range(group.order):
        digits = [base.zero] * g
        digits[group.identity] = base.one
        gid = assembly.encode_one(digits)
        digits2 = [base.zero] * g
        digits2[h] = base.one
        hid = assembly.encode_one(digits2)
        gens.append(ring.sub(gid, hid))
    ring.meta["aug_kernel"] = ideal_generated(ring, gens)
    ring.meta["group"] = group
    ring.meta["base_ring"] = base
    return ring


def _group_spec_of(group: Group):
    name = group.name
    if name.startswith("C") and name[1:].isdigit():
        return {"cyclic": int(name[1:])}
    if name == "V4":
        return "klein_four"
    if name == "S3":
        return "symmetric3"
    if name == "Q8":
        return "quaternion8"
    if name.startswith("D") and name[1:].isdigit():
        return {"dihedral": int(name[1:])}
    return {
        "table": {
            "mul": group.table.tolist(),
            "identity": group.identity,
            "labels": group.labels,
            "name": group.name,
        }
    }


# ---------------------------------------------------------------------------
# extensions


def trivial_extension(
    base: FiniteRing,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Pairs (a, x) with product (a, x)(b, y) = (ab, ay + xb), V = base."""
    spec = spec or {"trivial_extension": base.spec}
    assembly = _Assembly([_Axis.of_ring(base), _Axis.of_ring(base)])
    amul, aadd = base.mul_table, base.add_table

    def mul_digits(da, db):
        first = amul[da[0], db[0]]
        second = aadd[amul[da[0], db[1]], amul[da[1], db[0]]]
        return [first, second]

    base_labels = base.labels

    def label_fn(digits):
        return f"({base_labels[digits[0]]},{base_labels[digits[1]]})"

    return _assemble_ring(assembly, mul_digits, [base.one, base.zero], label_fn,
                          spec, spec_name(spec), threshold)


def _check(law: str, ok: np.ndarray | bool, witness_of):
    if isinstance(ok, np.ndarray):
        if ok.all():
            return
        where = tuple(int(x) for x in np.argwhere(~ok)[0])
        raise BimoduleError(law, witness_of(where))
    if not ok:
        raise BimoduleError(law, ())


def _validate_left_action(ring: FiniteRing, axis: _Axis, lam: np.ndarray, law_prefix: str):
    radd, rmul = ring.add_table, ring.mul_table
    madd = axis.add
    nr, nm = ring.order, axis.size
    if lam.shape != (nr, nm) or (lam.size and (lam.min() < 0 or lam.max() >= nm)):
        raise BimoduleError(f"{law_prefix}-shape", (nr, nm))
    _check(f"{law_prefix}-unital", lam[ring.one] == np.arange(nm), lambda w: w)
    r = np.arange(nr)
    s = np.arange(nr)
    m = np.arange(nm)
    # (r+s)m = rm + sm
    lhs = lam[radd[r[:, None, None], s[None, :, None]], m[None, None, :]]
    rhs = madd[lam[r[:, None, None], m[None, None, :]], lam[s[None, :, None], m[None, None, :]]]
    _check(f"{law_prefix}-additive-in-ring", lhs == rhs, lambda w: w)
    # r(m+n) = rm + rn
    n_ = np.arange(nm)
    lhs = lam[r[:, None, None], madd[m[None, :, None], n_[None, None, :]]]
    rhs = madd[lam[r[:, None, None], m[None, :, None]], lam[r[:, None, None], n_[None, None, :]]]
    _check(f"{law_prefix}-additive-in-module", lhs == rhs, lambda w: w)
    # (rs)m = r(sm)
    lhs = lam[rmul[r[:, None, None], s[None, :, None]], m[None, None, :]]
    rhs = lam[r[:, None, None], lam[s[None, :, None], m[None, None, :]]]
    _check(f"{law_prefix}-associative", lhs == rhs, lambda w: w)


def _validate_right_action(ring: FiniteRing, axis: _Axis, rho: np.ndarray, law_prefix: str):
    radd, rmul = ring.add_table, ring.mul_table
    madd = axis.add
    nr, nm = ring.order, axis.size
    if rho.shape != (nm, nr) or (rho.size and (rho.min() < 0 or rho.max() >= nm)):
        raise BimoduleError(f"{law_prefix}-shape", (nm, nr))
    _check(f"{law_prefix}-unital", rho[:, ring.one] == np.arange(nm), lambda w: w)
    r = np.arange(nr)
    s = np.arange(nr)
    m = np.arange(nm)
    lhs = rho[m[:, None, None], radd[r[None, :, None], s[None, None, :]]]
    rhs = madd[rho[m[:, None, None], r[None, :, None]], rho[m[:, None, None], s[None, None, :]]]
    _check(f"{law_prefix}-additive-in-ring", lhs == rhs, lambda w: w)
    n_ = np.arange(nm)
    lhs = rho[madd[m[:, None, None], n_[None, :, None]], r[None, None, :]]
    rhs = madd[rho[m[:, None, None], r[None, None, :]], rho[n_[None, :, None], r[None, None, :]]]
    _check(f"{law_prefix}-additive-in-module", lhs == rhs, lambda w: w)
    lhs = rho[m[:, None, None], rmul[r[None, :, None], s[None, None, :]]]
    rhs = rho[rho[m[:, None, None], r[None, :, None]], s[None, None, :]]
    _check(f"{law_prefix}-associative", lhs == rhs, lambda w: w)


def _validate_bimodule_compat(lam: np.ndarray, rho: np.ndarray, nr: int, nm: int):
    r = np.arange(nr)
    s = np.arange(nr)
    m = np.arange(nm)
    # (r m) s = r (m s)
    lhs = rho[lam[r[:, None, None], m[None, :, None]], s[None, None, :]]
    rhs = lam[r[:, None, None], rho[m[None, :, None], s[None, None, :]]]
    _check("bimodule-compat", lhs == rhs, lambda w: w)


def ideal_extension(
    base: FiniteRing,
    m_tables: dict,
    left_action,
    right_action,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Ring on base + M with product (r,m)(s,n) = (rs, rn + ms + mn).

    M is a (possibly non-unital) ring given by explicit add/mul tables;
    the actions must make it a unital bimodule compatible with the M
    multiplication.  All laws are validated exhaustively and violations
    raise :class:`BimoduleError` with a witness.

    ``ring.meta['hypotheses']`` records whether idempotents of the base
    act centrally on M and whether every m in M is quasi-regular
    (m + n + mn = 0 for some n); downstream checks gate on these flags.
    """
    m_add = np.asarray(m_tables["add"], dtype=np.int64)
    axis, m_zero = _axis_of_module(m_add)
    nm = axis.size
    m_mul = np.asarray(m_tables.get("mul") or np.full((nm, nm), m_zero), dtype=np.int64)
    if m_mul.shape != (nm, nm) or (m_mul.size and (m_mul.min() < 0 or m_mul.max() >= nm)):
        raise RingConstructionError("module mul table malformed")
    lam = np.asarray(left_action, dtype=np.int64)
    rho = np.asarray(right_action, dtype=np.int64)

    # M is an associative rng distributing over its own addition.
    mi = np.arange(nm)
    lhs = m_mul[m_mul[mi[:, None, None], mi[None, :, None]], mi[None, None, :]]
    rhs = m_mul[mi[:, None, None], m_mul[mi[None, :, None], mi[None, None, :]]]
    _check("m-associative", lhs == rhs, lambda w: w)
    lhs = m_mul[mi[:, None, None], m_add[mi[None, :, None], mi[None, None, :]]]
    rhs = m_add[m_mul[mi[:, None, None], mi[None, :, None]], m_mul[mi[:, None, None], mi[None, None, :]]]
    _check("m-left-distributive", lhs == rhs, lambda w: w)
    lhs = m_mul[m_add[mi[:, None, None], mi[None, :, None]], mi[None, None, :]]
    rhs = m_add[m_mul[mi[:, None, None], mi[None, None, :]], m_mul[mi[None, :, None], mi[None, None, :]]]
    _check("m-right-distributive", lhs == rhs, lambda w: w)

    _validate_left_action(base, axis, lam, "left")
    _validate_right_action(base, axis, rho, "right")
    _validate_bimodule_compat(lam, rho, base.order, nm)

    # Compatibility of the actions with the M multiplication:
    # (mn)r = m(nr), m(nr) = (mr)n, (rm)n = r(mn).
    r = np.arange(base.order)
    lhs = rho[m_mul[mi[:, None, None], mi[None, :, None]], r[None, None, :]]
    rhs = m_mul[mi[:, None, None], rho[mi[None, :, None], r[None, None, :]]]
    _check("compat-(mn)r=m(nr)", lhs == rhs, lambda w: w)
    rhs2 = m_mul[rho[mi[:, None, None], r[None, None, :]], mi[None, :, None]]
    _check("compat-m(nr)=(mr)n", rhs == rhs2, lambda w: w)
    lhs = m_mul[lam[r[:, None, None], mi[None, :, None]], mi[None, None, :]]
    rhs = lam[r[:, None, None], m_mul[mi[None, :, None], mi[None, None, :]]]
    _check("compat-(rm)n=r(mn)", lhs == rhs, lambda w: w)

    assembly = _Assembly([_Axis.of_ring(base), axis])
    amul = base.mul_table
    madd = axis.add

    def mul_digits(da, db):
        first = amul[da[0], db[0]]
        second = madd[madd[lam[da[0], db[1]], rho[da[1], db[0]]], m_mul[da[1], db[1]]]
        return [first, second]

    m_labels = list(m_tables.get("labels") or [str(i) for i in range(nm)])
    base_labels = base.labels

    def label_fn(digits):
        return f"({base_labels[digits[0]]},{m_labels[digits[1]]})"

    spec = spec or {
        "ideal_extension": {
            "base": base.spec,
            "m": {"add": m_add.tolist(), "mul": m_mul.tolist(), "labels": m_labels},
            "left_action": lam.tolist(),
            "right_action": rho.tolist(),
        }
    }
    ring = _assemble_ring(assembly, mul_digits, [base.one, m_zero], label_fn,
                          spec, spec_name(spec), threshold)

    idem = np.flatnonzero(get_cache(base).idempotent_mask)
    central = bool((lam[np.ix_(idem, mi)] == rho[np.ix_(mi, idem)].T).all())
    quasi = True
    for m0 in range(nm):
        found = any(
            m_add[m_add[m0, n0], m_mul[m0, n0]] == m_zero for n0 in range(nm)
        )
        if not found:
            quasi = False
            break
    ring.meta["hypotheses"] = {"idempotents_central_on_m": central, "m_quasi_regular": quasi}
    ring.meta["base_ring"] = base
    return ring


def _bimodule_trivial_extension(
    base: FiniteRing,
    v_axis: _Axis,
    lam: np.ndarray,
    rho: np.ndarray,
    v_labels: Sequence[str],
    spec: dict,
    threshold: int,
) -> FiniteRing:
    """T(base, V) for a general validated bimodule V (V*V = 0)."""
    _validate_left_action(base, v_axis, lam, "left")
    _validate_right_action(base, v_axis, rho, "right")
    _validate_bimodule_compat(lam, rho, base.order, v_axis.size)
    assembly = _Assembly([_Axis.of_ring(base), v_axis])
    amul = base.mul_table
    vadd = v_axis.add

    def mul_digits(da, db):
        return [amul[da[0], db[0]], vadd[lam[da[0], db[1]], rho[da[1], db[0]]]]

    base_labels = base.labels

    def label_fn(digits):
        return f"({base_labels[digits[0]]},{v_labels[digits[1]]})"

    return _assemble_ring(assembly, mul_digits, [base.one, v_axis.zero], label_fn,
                          spec, spec_name(spec), threshold)


def formal_triangular(
    a: FiniteRing,
    b: FiniteRing,
    m_tables: dict,
    left_action,
    right_action,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Triples (a, m, b) with product (aa', am' + mb', bb').

    M must be a validated (A,B)-bimodule given by tables; the left
    action is A x M -> M and the right action M x B -> M.
    """
    m_add = np.asarray(m_tables["add"], dtype=np.int64)
    axis, m_zero = _axis_of_module(m_add)
    lam = np.asarray(left_action, dtype=np.int64)
    rho = np.asarray(right_action, dtype=np.int64)
    _validate_left_action(a, axis, lam, "left")
    _validate_right_action(b, axis, rho, "right")
    # (a m) b = a (m b)
    ai = np.arange(a.order)
    bi = np.arange(b.order)
    mi = np.arange(axis.size)
    lhs = rho[lam[ai[:, None, None], mi[None, :, None]], bi[None, None, :]]
    rhs = lam[ai[:, None, None], rho[mi[None, :, None], bi[None, None, :]]]
    _check("bimodule-compat", lhs == rhs, lambda w: w)

    assembly = _Assembly([_Axis.of_ring(a), axis, _Axis.of_ring(b)])
    amul, bmul = a.mul_table, b.mul_table
    madd = axis.add

    def mul_digits(da, db):
        return [
            amul[da[0], db[0]],
            madd[lam[da[0], db[1]], rho[da[1], db[2]]],
            bmul[da[2], db[2]],
        ]

    m_labels = list(m_tables.get("labels") or [str(i) for i in range(axis.size)])
    a_labels, b_labels = a.labels, b.labels

    def label_fn(digits):
        return f"({a_labels[digits[0]]},{m_labels[digits[1]]},{b_labels[digits[2]]})"

    spec = spec or {
        "formal_triangular": {
            "a": a.spec,
            "b": b.spec,
            "m": {"add": m_add.tolist(), "labels": m_labels},
            "left_action": lam.tolist(),
            "right_action": rho.tolist(),
        }
    }
    return _assemble_ring(assembly, mul_digits, [a.one, m_zero, b.one], label_fn,
                          spec, spec_name(spec), threshold)


def trivial_morita(
    a: FiniteRing,
    b: FiniteRing,
    m: dict,
    m_left,
    m_right,
    n: dict,
    n_left,
    n_right,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Trivial Morita context, built as T(A x B, M + N).

    M is an (A,B)-bimodule and N a (B,A)-bimodule; both context
    products are zero, which is exactly the stated isomorphism with the
    trivial extension of the product ring by M + N.
    """
    m_axis, _ = _axis_of_module(np.asarray(m["add"], dtype=np.int64))
    n_axis, _ = _axis_of_module(np.asarray(n["add"], dtype=np.int64))
    lam_m = np.asarray(m_left, dtype=np.int64)
    rho_m = np.asarray(m_right, dtype=np.int64)
    lam_n = np.asarray(n_left, dtype=np.int64)
    rho_n = np.asarray(n_right, dtype=np.int64)
    _validate_left_action(a, m_axis, lam_m, "m-left")
    _validate_right_action(b, m_axis, rho_m, "m-right")
    _validate_left_action(b, n_axis, lam_n, "n-left")
    _validate_right_action(a, n_axis, rho_n, "n-right")

    p = product_ring([a, b], threshold=max(threshold, a.order * b.order))
    sizes = (m_axis.size, n_axis.size)
    v_order = sizes[0] * sizes[1]
    v_add = np.zeros((v_order, v_order), dtype=np.int64)
    for i in range(v_order):
        mi, ni = divmod(i, sizes[1])
        for j in range(v_order):
            mj, nj = divmod(j, sizes[1])
            v_add[i, j] = m_axis.add[mi, mj] * sizes[1] + n_axis.add[ni, nj]
    v_axis, _ = _axis_of_module(v_add)

    lam = np.zeros((p.order, v_order), dtype=np.int64)
    rho = np.zeros((v_order, p.order), dtype=np.int64)
    for pid in range(p.order):
        ai, bi = divmod(pid, b.order)
        for v in range(v_order):
            mv, nv = divmod(v, sizes[1])
            lam[pid, v] = lam_m[ai, mv] * sizes[1] + lam_n[bi, nv]
            rho[v, pid] = rho_m[mv, bi] * sizes[1] + rho_n[nv, ai]

    m_labels = list(m.get("labels") or [str(i) for i in range(sizes[0])])
    n_labels = list(n.get("labels") or [str(i) for i in range(sizes[1])])
    v_labels = [
        f"({m_labels[i // sizes[1]]},{n_labels[i % sizes[1]]})" for i in range(v_order)
    ]
    spec = spec or {
        "trivial_morita": {
            "a": a.spec,
            "b": b.spec,
            "m": {"add": np.asarray(m["add"]).tolist(), "labels": m_labels},
            "m_left": lam_m.tolist(),
            "m_right": rho_m.tolist(),
            "n": {"add": np.asarray(n["add"]).tolist(), "labels": n_labels},
            "n_left": lam_n.tolist(),
            "n_right": rho_n.tolist(),
        }
    }
    ring = _bimodule_trivial_extension(p, v_axis, lam, rho, v_labels, spec, threshold)
    ring.meta["factors"] = (a, b)
    return ring


# ---------------------------------------------------------------------------
# polynomial quotients


def resolve_endomorphism(base: FiniteRing, descriptor) -> np.ndarray:
    """Resolve and validate a unital ring endomorphism descriptor."""
    n = base.order
    if descriptor == "identity" or descriptor is None:
        alpha = np.arange(n, dtype=np.int64)
    elif isinstance(descriptor, dict) and "frobenius" in descriptor:
        p = int(descriptor["frobenius"])
        alpha = np.zeros(n, dtype=np.int64)
        for a in range(n):
            x = base.one
            for _ in range(p):
                x = base.mul(x, a)
            alpha[a] = x
    elif isinstance(descriptor, dict) and "map" in descriptor:
        alpha = np.asarray(descriptor["map"], dtype=np.int64)
        if alpha.shape != (n,) or alpha.min() < 0 or alpha.max() >= n:
            raise EndomorphismError("shape", (n,))
    else:
        raise SpecError(f"unrecognized endomorphism descriptor {descriptor!r}")

    if alpha[base.one] != base.one:
        raise EndomorphismError("unital", (base.one,))
    add, mul = base.add_table, base.mul_table
    lhs = alpha[add]
    rhs = add[alpha[:, None], alpha[None, :]]
    if not (lhs == rhs).all():
        a, b = (int(x) for x in np.argwhere(lhs != rhs)[0])
        raise EndomorphismError("additive", (a, b))
    lhs = alpha[mul]
    rhs = mul[alpha[:, None], alpha[None, :]]
    if not (lhs == rhs).all():
        a, b = (int(x) for x in np.argwhere(lhs != rhs)[0])
        raise EndomorphismError("multiplicative", (a, b))
    return alpha


def skew_trunc_poly(
    base: FiniteRing,
    alpha,
    n: int,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Skew truncated polynomials: x*r = alpha(r)*x, truncated at x^n."""
    if n < 1:
        raise SpecError(f"truncation degree must be positive, got {n}")
    alpha_vec = resolve_endomorphism(base, alpha)
    order = base.order ** n
    if order > MAX_ORDER:
        raise SizeOverflowError(order, MAX_ORDER)
    alpha_pows = [np.arange(base.order, dtype=np.int64)]
    for _ in range(1, n):
        alpha_pows.append(alpha_vec[alpha_pows[-1]])
    assembly = _Assembly([_Axis.of_ring(base)] * n)
    amul, aadd = base.mul_table, base.add_table

    def mul_digits(da, db):
        out = [None] * n
        for i in range(n):
            for j in range(n - i):
                # coefficient of x^(i+j): a_i * alpha^i(b_j)
                term = amul[da[i], alpha_pows[i][db[j]]]
                k = i + j
                out[k] = term if out[k] is None else aadd[out[k], term]
        return out

    one_digits = [base.one] + [base.zero] * (n - 1)
    base_labels = base.labels

    def label_fn(digits):
        terms = []
        for deg, c in enumerate(digits):
            if c == base.zero:
                continue
            power = "" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
            if deg == 0:
                terms.append(base_labels[c])
            elif c == base.one:
                terms.append(power)
            else:
                terms.append(f"{base_labels[c]}*{power}")
        return "+".join(terms) if terms else base_labels[base.zero]

    if spec is None:
        alpha_spec = alpha if isinstance(alpha, (str, dict)) else {"map": alpha_vec.tolist()}
        spec = {"skew_trunc_poly": {"base": base.spec, "alpha": alpha_spec, "n": n}}
    return _assemble_ring(assembly, mul_digits, one_digits, label_fn,
                          spec, spec_name(spec), threshold)


def trunc_poly(
    base: FiniteRing,
    n: int,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    spec: Optional[dict] = None,
) -> FiniteRing:
    """Truncated polynomial ring base[x]/(x^n)."""
    spec = spec or {"trunc_poly": {"base": base.spec, "n": n}}
    return skew_trunc_poly(base, "identity", n, threshold=threshold, spec=spec)


def opposite_ring(base: FiniteRing, *, spec: Optional[dict] = None) -> FiniteRing:
    """Same elements and addition, reversed multiplication."""
    spec = spec or {"opposite": base.spec}
    ring = TableRing(
        base.add_table, base.mul_table.T.copy(), base.zero, base.one,
        labels=list(base.labels), spec=spec, name=spec_name(spec),
    )
    _validate_built(ring)
    return ring


# ---------------------------------------------------------------------------
# spec codec


def load_schema() -> dict:
    text = resources.files("ringlab.data").joinpath("ringspec.schema.json").read_text()
    return json.loads(text)


def validate_spec(spec) -> None:
    """Validate a spec document against the shipped JSON schema.

    Raises :class:`SpecError` carrying the JSON path of the offence.
    """
    import jsonschema

    validator = jsonschema.Draft202012Validator(load_schema())
    errors = sorted(validator.iter_errors(spec), key=lambda e: len(e.absolute_path))
    if errors:
        best = jsonschema.exceptions.best_match(errors)
        raise SpecError(best.message, best.json_path)


def build(
    spec: dict,
    *,
    threshold: int = DEFAULT_THRESHOLD,
    validate: bool = True,
) -> FiniteRing:
    """Build a ring from its declarative construction tree."""
    if validate:
        validate_spec(spec)
    return _build(spec, threshold)


def _build(spec: dict, threshold: int) -> FiniteRing:
    if not isinstance(spec, dict) or len(spec) != 1:
        raise SpecError(f"spec node must be a single-key object, got {spec!r}")
    kind, args = next(iter(spec.items()))
    if kind == "zn":
        return zn(int(args), threshold=threshold, spec=spec)
    if kind == "gf":
        return gf(int(args["p"]), int(args["k"]), threshold=threshold, spec=spec)
    if kind == "product":
        factors = [_build(s, threshold) for s in args]
        return product_ring(factors, threshold=threshold, spec=spec)
    if kind == "matrix":
        return matrix_ring(int(args["n"]), _build(args["base"], threshold),
                           threshold=threshold, spec=spec)
    if kind == "triangular":
        return triangular_ring(int(args["n"]), _build(args["base"], threshold),
                               threshold=threshold, spec=spec)
    if kind == "quotient":
        return quotient_ring(_build(args["base"], threshold), args["generators"], spec=spec)
    if kind == "corner":
        return corner_ring(_build(args["base"], threshold), int(args["idempotent"]), spec=spec)
    if kind == "group_ring":
        return group_ring(_build(args["base"], threshold), group_from_spec(args["group"]),
                          threshold=threshold, spec=spec)
    if kind == "trivial_extension":
        return trivial_extension(_build(args, threshold), threshold=threshold, spec=spec)
    if kind == "ideal_extension":
        return ideal_extension(
            _build(args["base"], threshold), args["m"],
            args["left_action"], args["right_action"],
            threshold=threshold, spec=spec,
        )
    if kind == "formal_triangular":
        return formal_triangular(
            _build(args["a"], threshold), _build(args["b"], threshold),
            args["m"], args["left_action"], args["right_action"],
            threshold=threshold, spec=spec,
        )
    if kind == "trivial_morita":
        return trivial_morita(
            _build(args["a"], threshold), _build(args["b"], threshold),
            args["m"], args["m_left"], args["m_right"],
            args["n"], args["n_left"], args["n_right"],
            threshold=threshold, spec=spec,
        )
    if kind == "trunc_poly":
        return trunc_poly(_build(args["base"], threshold), int(args["n"]),
                          threshold=threshold, spec=spec)
    if kind == "skew_trunc_poly":
        return skew_trunc_poly(_build(args["base"], threshold), args["alpha"], int(args["n"]),
                               threshold=threshold, spec=spec)
    if kind == "opposite":
        return opposite_ring(_build(args, threshold), spec=spec)
    if kind == "table":
        return table_ring(args["add"], args["mul"], args.get("labels"), spec=spec)
    raise SpecError(f"unknown construction kind {kind!r}")
