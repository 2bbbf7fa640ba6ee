"""Finite unital rings on dense element ids 0..order-1.

Every ring in this package is a :class:`FiniteRing`: an immutable value
whose elements are the integers ``0..order-1`` and whose arithmetic is
answered from Cayley tables.  Table-backed rings hold full numpy add/mul
tables; :class:`LazyRing` computes rows on demand (memoized) for orders
above the materialization threshold, where the O(n^2) tables would
dominate memory.

All higher modules speak element ids only, never structural
representations, so subsets can be plain masks and kernels can be
vectorized over the raw tables.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from .errors import AxiomCheckLimitError, RingConstructionError

#: Constructors materialize full tables up to this many elements.
DEFAULT_THRESHOLD = 4096

#: Hard cap on constructible orders; beyond it constructors refuse outright.
MAX_ORDER = 1 << 20

#: Full cubic axiom validation runs up to this order; above it, sampling.
DEFAULT_AXIOM_LIMIT = 512

_SAMPLE_TRIPLES = 512
_SEED = 0x51AB


def dtype_for(order: int) -> np.dtype:
    """Smallest unsigned dtype that holds ids below ``order``."""
    if order <= 256:
        return np.dtype(np.uint8)
    if order <= 65536:
        return np.dtype(np.uint16)
    return np.dtype(np.uint32)


class FiniteRing:
    """A finite associative unital ring with elements ``0..order-1``.

    Instances are immutable after construction and safe to share across
    threads.  ``spec`` records the construction tree that produced the
    ring (``None`` for raw table rings), ``meta`` carries construction
    byproducts such as projection or embedding maps.
    """

    def __init__(
        self,
        order: int,
        zero: int,
        one: int,
        labels: Optional[Sequence[str]] = None,
        spec: Optional[dict] = None,
        name: Optional[str] = None,
    ):
        if order < 1:
            raise RingConstructionError(f"order must be positive, got {order}")
        if order > 1 and zero == one:
            raise RingConstructionError("zero = one requires order 1")
        self.order = int(order)
        self.zero = int(zero)
        self.one = int(one)
        self.spec = spec
        self.name = name or (spec_name(spec) if spec else f"ring{order}")
        self._labels = list(labels) if labels is not None else None
        self._label_index: Optional[dict] = None
        self.meta: dict = {}
        self._invariant_cache = None
        self._classification_cache: dict = {}

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_row(a)[b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_row(a)[b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def elements(self) -> range:
        return range(self.order)

    def add_row(self, a: int) -> np.ndarray:
        raise NotImplementedError

    def mul_row(self, a: int) -> np.ndarray:
        raise NotImplementedError

    @property
    def neg_table(self) -> np.ndarray:
        raise NotImplementedError

    @property
    def add_table(self) -> np.ndarray:
        raise NotImplementedError

    @property
    def mul_table(self) -> np.ndarray:
        raise NotImplementedError

    # -- labels ----------------------------------------------------------

    @property
    def labels(self) -> list[str]:
        if self._labels is None:
            self._labels = [str(i) for i in range(self.order)]
        return self._labels

    def label_of(self, a: int) -> str:
        return self.labels[a]

    def id_of(self, label: str) -> Optional[int]:
        """Resolve a display label back to an element id, or None."""
        if self._label_index is None:
            self._label_index = {lbl: i for i, lbl in enumerate(self.labels)}
        return self._label_index.get(label)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} order={self.order}>"


class TableRing(FiniteRing):
    """Ring backed by fully materialized add/mul tables."""

    def __init__(
        self,
        add_table: np.ndarray,
        mul_table: np.ndarray,
        zero: int,
        one: int,
        labels: Optional[Sequence[str]] = None,
        spec: Optional[dict] = None,
        name: Optional[str] = None,
    ):
        order = len(add_table)
        super().__init__(order, zero, one, labels, spec, name)
        dt = dtype_for(order)
        self._add = np.ascontiguousarray(add_table, dtype=dt)
        self._mul = np.ascontiguousarray(mul_table, dtype=dt)
        self._add.setflags(write=False)
        self._mul.setflags(write=False)
        self._neg = _derive_neg(self._add, zero)
        self._neg.setflags(write=False)

    def add_row(self, a: int) -> np.ndarray:
        return self._add[a]

    def mul_row(self, a: int) -> np.ndarray:
        return self._mul[a]

    @property
    def neg_table(self) -> np.ndarray:
        return self._neg

    @property
    def add_table(self) -> np.ndarray:
        return self._add

    @property
    def mul_table(self) -> np.ndarray:
        return self._mul


class LazyRing(FiniteRing):
    """Ring whose table rows are computed on demand and memoized.

    ``add_row_fn``/``mul_row_fn`` map an element id to the full row of
    the corresponding table.  Row caches are lock-guarded so handles can
    be shared across threads; accessing :attr:`add_table` or
    :attr:`mul_table` materializes the whole table (documented cost:
    O(order^2) memory).
    """

    def __init__(
        self,
        order: int,
        zero: int,
        one: int,
        add_row_fn: Callable[[int], np.ndarray],
        mul_row_fn: Callable[[int], np.ndarray],
        neg_table: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        spec: Optional[dict] = None,
        name: Optional[str] = None,
        label_fn: Optional[Callable[[int], str]] = None,
    ):
        super().__init__(order, zero, one, labels, spec, name)
        self._add_row_fn = add_row_fn
        self._mul_row_fn = mul_row_fn
        self._neg = np.ascontiguousarray(neg_table, dtype=dtype_for(order))
        self._neg.setflags(write=False)
        self._label_fn = label_fn
        self._add_rows: dict[int, np.ndarray] = {}
        self._mul_rows: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()
        self._full_add: Optional[np.ndarray] = None
        self._full_mul: Optional[np.ndarray] = None

    def add_row(self, a: int) -> np.ndarray:
        row = self._add_rows.get(a)
        if row is None:
            with self._lock:
                row = self._add_rows.get(a)
                if row is None:
                    row = np.asarray(self._add_row_fn(a), dtype=dtype_for(self.order))
                    row.setflags(write=False)
                    self._add_rows[a] = row
        return row

    def mul_row(self, a: int) -> np.ndarray:
        row = self._mul_rows.get(a)
        if row is None:
            with self._lock:
                row = self._mul_rows.get(a)
                if row is None:
                    row = np.asarray(self._mul_row_fn(a), dtype=dtype_for(self.order))
                    row.setflags(write=False)
                    self._mul_rows[a] = row
        return row

    @property
    def neg_table(self) -> np.ndarray:
        return self._neg

    @property
    def add_table(self) -> np.ndarray:
        if self._full_add is None:
            full = np.vstack([self.add_row(a) for a in range(self.order)])
            full.setflags(write=False)
            self._full_add = full
        return self._full_add

    @property
    def mul_table(self) -> np.ndarray:
        if self._full_mul is None:
            full = np.vstack([self.mul_row(a) for a in range(self.order)])
            full.setflags(write=False)
            self._full_mul = full
        return self._full_mul

    @property
    def labels(self) -> list[str]:
        if self._labels is None:
            if self._label_fn is not None:
                self._labels = [self._label_fn(i) for i in range(self.order)]
            else:
                self._labels = [str(i) for i in range(self.order)]
        return self._labels


@dataclass(frozen=True)
class ElementSet:
    """A subset of a ring's elements with bitset semantics."""

    ring: FiniteRing
    members: frozenset[int]

    def __post_init__(self):
        bad = [m for m in self.members if not 0 <= m < self.ring.order]
        if bad:
            raise ValueError(f"element ids out of range: {bad}")

    @classmethod
    def from_mask(cls, ring: FiniteRing, mask: np.ndarray) -> "ElementSet":
        return cls(ring, frozenset(int(i) for i in np.flatnonzero(mask)))

    def mask(self) -> np.ndarray:
        out = np.zeros(self.ring.order, dtype=bool)
        out[self.sorted_ids()] = True
        return out

    def sorted_ids(self) -> list[int]:
        return sorted(self.members)

    def labels(self) -> list[str]:
        return [self.ring.label_of(i) for i in self.sorted_ids()]

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_ids())


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate_axioms`.

    ``ok`` is the verdict; on failure ``axiom`` names the first violated
    law and ``witness`` carries the offending element tuple.  ``mode``
    records whether the cubic laws were checked in full or on sampled
    triples.
    """

    ok: bool
    mode: str
    triples_checked: int
    axiom: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def _derive_neg(add_table: np.ndarray, zero: int) -> np.ndarray:
    n = len(add_table)
    neg = np.full(n, -1, dtype=np.int64)
    rows, cols = np.nonzero(add_table == zero)
    neg[rows] = cols
    if (neg < 0).any():
        a = int(np.flatnonzero(neg < 0)[0])
        raise RingConstructionError(f"element {a} has no additive inverse")
    return neg.astype(dtype_for(n))


def _first_mismatch(a_fixed: int, lhs: np.ndarray, rhs: np.ndarray) -> tuple:
    bad = np.argwhere(lhs != rhs)
    b, c = (int(x) for x in bad[0])
    return (a_fixed, b, c)


def validate_axioms(
    ring: FiniteRing,
    limit: int = DEFAULT_AXIOM_LIMIT,
    *,
    force: bool = False,
    samples: int = _SAMPLE_TRIPLES,
) -> ValidationReport:
    """Check the ring axioms exhaustively, or by seeded sampling when big.

    Quadratic laws (closure, additive commutativity/inverses, the two
    identities) are always checked in full.  The cubic laws (both
    associativities, both distributivities) are checked over all
    ``order^3`` triples when ``order <= limit``; above the limit the
    call raises :class:`AxiomCheckLimitError` unless ``force`` is set,
    in which case a fixed-seed sample of triples is used instead.
    """
    n = ring.order
    if n > limit and not force:
        raise AxiomCheckLimitError(n, limit)
    mode = "full" if n <= limit else "sampled"

    if mode == "sampled" and not isinstance(ring, TableRing):
        # Row-memoized rings: avoid materializing the whole table.
        return _validate_sampled_rows(ring, samples)

    add = ring.add_table
    mul = ring.mul_table
    neg = ring.neg_table
    zero, one = ring.zero, ring.one

    def fail(axiom, witness, checked=0):
        return ValidationReport(False, mode, checked, axiom, tuple(int(x) for x in witness))

    # Closure and shape.
    for tab, what in ((add, "add"), (mul, "mul")):
        if tab.shape != (n, n):
            return fail(f"{what}-shape", (n,))
        if int(tab.max(initial=0)) >= n:
            r, c = np.argwhere(tab >= n)[0]
            return fail(f"{what}-closure", (r, c))

    # Abelian-group laws for addition (quadratic parts).
    if not (add == add.T).all():
        r, c = np.argwhere(add != add.T)[0]
        return fail("add-commutativity", (r, c))
    idx = np.arange(n)
    if not (add[zero] == idx).all():
        b = int(np.flatnonzero(add[zero] != idx)[0])
        return fail("add-zero", (zero, b))
    if not (add[idx, neg] == zero).all():
        a = int(np.flatnonzero(add[idx, neg] != zero)[0])
        return fail("add-inverse", (a,))

    # Multiplicative identity, both sides.
    if not (mul[one] == idx).all():
        b = int(np.flatnonzero(mul[one] != idx)[0])
        return fail("mul-left-identity", (one, b))
    if not (mul[:, one] == idx).all():
        a = int(np.flatnonzero(mul[:, one] != idx)[0])
        return fail("mul-right-identity", (a, one))

    if mode == "full":
        checked = n * n * n
        for a in range(n):
            lhs = add[add[a], :]
            rhs = add[a][add]
            if not (lhs == rhs).all():
                return fail("add-associativity", _first_mismatch(a, lhs, rhs), checked)
            lhs = mul[mul[a], :]
            rhs = mul[a][mul]
            if not (lhs == rhs).all():
                return fail("mul-associativity", _first_mismatch(a, lhs, rhs), checked)
            row = mul[a]
            lhs = row[add]
            rhs = add[row[:, None], row[None, :]]
            if not (lhs == rhs).all():
                return fail("left-distributivity", _first_mismatch(a, lhs, rhs), checked)
            col = mul[:, a]
            lhs = mul[add, a]
            rhs = add[col[:, None], col[None, :]]
            if not (lhs == rhs).all():
                return fail("right-distributivity", _first_mismatch(a, lhs, rhs), checked)
        return ValidationReport(True, mode, checked)

    # Sampled cubic laws with a fixed seed: deterministic across runs.
    rng = np.random.default_rng(_SEED + n)
    count = min(samples, n * n * n)
    a = rng.integers(0, n, size=count)
    b = rng.integers(0, n, size=count)
    c = rng.integers(0, n, size=count)
    checks = (
        ("add-associativity", add[add[a, b], c], add[a, add[b, c]]),
        ("mul-associativity", mul[mul[a, b], c], mul[a, mul[b, c]]),
        ("left-distributivity", mul[a, add[b, c]], add[mul[a, b], mul[a, c]]),
        ("right-distributivity", mul[add[a, b], c], add[mul[a, c], mul[b, c]]),
    )
    for axiom, lhs, rhs in checks:
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            i = int(bad[0])
            return fail(axiom, (a[i], b[i], c[i]), count)
    return ValidationReport(True, mode, count)


def _validate_sampled_rows(ring: FiniteRing, samples: int) -> ValidationReport:
    """Sampled validation through row access only (lazy rings)."""
    n = ring.order
    rng = np.random.default_rng(_SEED + n)
    zero, one = ring.zero, ring.one
    idx = np.arange(n)

    def fail(axiom, witness):
        return ValidationReport(False, "sampled", samples, axiom, tuple(int(x) for x in witness))

    if not (ring.add_row(zero) == idx).all():
        b = int(np.flatnonzero(ring.add_row(zero) != idx)[0])
        return fail("add-zero", (zero, b))
    if not (ring.mul_row(one) == idx).all():
        b = int(np.flatnonzero(ring.mul_row(one) != idx)[0])
        return fail("mul-left-identity", (one, b))

    picks = rng.integers(0, n, size=samples)
    for a in np.unique(picks):
        a = int(a)
        row = ring.add_row(a)
        if int(row.max()) >= n:
            return fail("add-closure", (a, int(np.flatnonzero(row >= n)[0])))
        if int(ring.mul_row(a).max()) >= n:
            return fail("mul-closure", (a, 0))
        if ring.add(a, int(ring.neg_table[a])) != zero:
            return fail("add-inverse", (a,))
        if ring.mul(a, one) != a:
            return fail("mul-right-identity", (a, one))

    a = rng.integers(0, n, size=samples)
    b = rng.integers(0, n, size=samples)
    c = rng.integers(0, n, size=samples)
    for i in range(samples):
        x, y, z = int(a[i]), int(b[i]), int(c[i])
        if ring.add(x, y) != ring.add(y, x):
            return fail("add-commutativity", (x, y))
        if ring.add(ring.add(x, y), z) != ring.add(x, ring.add(y, z)):
            return fail("add-associativity", (x, y, z))
        if ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z)):
            return fail("mul-associativity", (x, y, z))
        if ring.mul(x, ring.add(y, z)) != ring.add(ring.mul(x, y), ring.mul(x, z)):
            return fail("left-distributivity", (x, y, z))
        if ring.mul(ring.add(x, y), z) != ring.add(ring.mul(x, z), ring.mul(y, z)):
            return fail("right-distributivity", (x, y, z))
    return ValidationReport(True, "sampled", samples)


def table_ring(
    add_table,
    mul_table,
    labels: Optional[Sequence[str]] = None,
    *,
    name: Optional[str] = None,
    spec: Optional[dict] = None,
    validate: bool = True,
    limit: int = DEFAULT_AXIOM_LIMIT,
) -> TableRing:
    """Build a validated ring from raw square add/mul tables.

    The additive zero and the two-sided multiplicative identity are
    located automatically; ``neg`` is derived from the add table.
    Raises :class:`RingConstructionError` on dimension mismatch,
    non-group addition, a missing identity, or any axiom failure.
    """
    add = np.asarray(add_table, dtype=np.int64)
    mul = np.asarray(mul_table, dtype=np.int64)
    if add.ndim != 2 or add.shape[0] != add.shape[1]:
        raise RingConstructionError(f"add table is not square: shape {add.shape}")
    if mul.shape != add.shape:
        raise RingConstructionError(
            f"table dimension mismatch: add {add.shape} vs mul {mul.shape}"
        )
    n = add.shape[0]
    if n == 0:
        raise RingConstructionError("empty tables")
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        raise RingConstructionError("table entries out of range")

    idx = np.arange(n)
    zeros = [a for a in range(n) if (add[a] == idx).all()]
    if not zeros:
        raise RingConstructionError("addition has no zero row (not a group)")
    zero = zeros[0]
    # Each add row must be a permutation for inverses to exist.
    for a in range(n):
        if len(np.unique(add[a])) != n:
            raise RingConstructionError(f"addition is not a group: row {a} repeats")
    ones = [e for e in range(n) if (mul[e] == idx).all() and (mul[:, e] == idx).all()]
    if not ones:
        raise RingConstructionError("missing multiplicative identity")
    one = ones[0]

    ring = TableRing(add, mul, zero, one, labels=labels, spec=spec, name=name)
    if validate:
        report = validate_axioms(ring, limit=limit, force=True)
        if not report.ok:
            raise RingConstructionError(
                f"axiom {report.axiom} fails at {report.witness}"
            )
    return ring


def spec_name(spec: Optional[dict]) -> str:
    """Short display name derived from a construction tree."""
    if spec is None:
        return "ring"
    if not isinstance(spec, dict) or len(spec) != 1:
        return "ring"
    kind, args = next(iter(spec.items()))
    if kind == "zn":
        return f"Z{args}"
    if kind == "gf":
        p, k = (args["p"], args["k"]) if isinstance(args, dict) else args
        return f"F{p ** k}"
    if kind == "product":
        return "x".join(spec_name(s) for s in args)
    if kind == "matrix":
        return f"M{args['n']}({spec_name(args['base'])})"
    if kind == "triangular":
        return f"T{args['n']}({spec_name(args['base'])})"
    if kind == "quotient":
        return f"{spec_name(args['base'])}/I"
    if kind == "corner":
        return f"corner({spec_name(args['base'])})"
    if kind == "group_ring":
        return f"{spec_name(args['base'])}[{_group_name(args['group'])}]"
    if kind == "trivial_extension":
        return f"TE({spec_name(args)})"
    if kind == "ideal_extension":
        return f"IE({spec_name(args['base'])})"
    if kind == "formal_triangular":
        return f"FT({spec_name(args['a'])},{spec_name(args['b'])})"
    if kind == "trivial_morita":
        return f"MC({spec_name(args['a'])},{spec_name(args['b'])})"
    if kind == "trunc_poly":
        return f"{spec_name(args['base'])}[x]/x^{args['n']}"
    if kind == "skew_trunc_poly":
        return f"{spec_name(args['base'])}[x;a]/x^{args['n']}"
    if kind == "opposite":
        return f"op({spec_name(args)})"
    if kind == "table":
        return "table"
    return "ring"


def _group_name(gspec) -> str:
    if isinstance(gspec, str):
        return {"klein_four": "V4", "symmetric3": "S3", "quaternion8": "Q8"}.get(
            gspec, gspec
        )
    if isinstance(gspec, dict):
        if "cyclic" in gspec:
            return f"C{gspec['cyclic']}"
        if "dihedral" in gspec:
            return f"D{gspec['dihedral']}"
        if "table" in gspec:
            return "G"
    return "G"
