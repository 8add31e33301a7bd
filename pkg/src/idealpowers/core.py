"""Exact arithmetic on monomial ideals.

A monomial is an exponent vector (tuple of non-negative ints) over a fixed
number of variables.  A :class:`MonomialIdeal` stores the unique minimal
generating set of the ideal as an immutable ``(g, nvars)`` int64 matrix whose
rows are sorted in graded lexicographic order, so two ideals are equal exactly
when their matrices are equal.

All operations are pure functions of their inputs; nothing here mutates
shared state, so everything is safe to use from concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Exponents above this bound raise rather than risk int64 wraparound when
#: two of them are added during an ideal product.
MAX_EXPONENT = 2**62 - 1

# Cells per broadcasted comparison block in divisibility scans; bounds the
# peak memory of minimalization and socle enumeration.
_CHUNK_CELLS = 1 << 25


class DimensionError(ValueError):
    """Exponent vectors of mismatched lengths were combined."""


class NotArtinianError(ValueError):
    """A socle degree was requested for an ideal that has none."""


class ExponentOverflowError(OverflowError):
    """An exponent left the representable range."""


class ResourceLimitError(RuntimeError):
    """A brute-force computation would exceed its configured size cap."""


# ---------------------------------------------------------------------------
# monomial helpers (monomials are plain sequences of non-negative ints)

def degree(exponents) -> int:
    """Total degree: the sum of the exponents."""
    return sum(exponents)


def divides(u, v) -> bool:
    """True when u divides v, i.e. componentwise u <= v."""
    if len(u) != len(v):
        raise DimensionError(f"exponent lengths differ: {len(u)} vs {len(v)}")
    return all(a <= b for a, b in zip(u, v))


def monomial_mul(u, v) -> tuple:
    """Product of two monomials: componentwise exponent sum."""
    if len(u) != len(v):
        raise DimensionError(f"exponent lengths differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# internal matrix utilities

def _as_gen_matrix(generators, nvars: int) -> np.ndarray:
    rows = []
    for gen in generators:
        row = tuple(int(e) for e in gen)
        if len(row) != nvars:
            raise DimensionError(
                f"generator {row} has {len(row)} exponents, expected {nvars}")
        for e in row:
            if e < 0:
                raise ValueError(f"negative exponent in generator {row}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        rows.append(row)
    if not rows:
        return np.empty((0, nvars), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def _graded_lex_sort(arr: np.ndarray) -> np.ndarray:
    """Rows sorted by (total degree, lexicographic exponent vector)."""
    if arr.shape[0] <= 1:
        return arr
    keys = tuple(arr[:, j] for j in range(arr.shape[1] - 1, -1, -1))
    order = np.lexsort(keys + (arr.sum(axis=1),))
    return arr[order]


def _divisible_by_any(points: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Boolean mask: row i is componentwise >= some row of gens."""
    npoints, nvars = points.shape
    out = np.zeros(npoints, dtype=bool)
    if gens.shape[0] == 0 or npoints == 0:
        return out
    chunk = max(1, _CHUNK_CELLS // (gens.shape[0] * max(nvars, 1)))
    for start in range(0, npoints, chunk):
        block = points[start:start + chunk]
        hits = (block[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
        out[start:start + len(block)] = hits
    return out


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Divisibility-minimal, deduplicated rows in graded-lex order.

    Rows are processed in ascending degree; equal-degree monomials cannot
    divide one another, so each degree block only needs to be tested against
    the minimal rows of strictly smaller degree.
    """
    arr = np.unique(arr, axis=0)
    if arr.shape[0] <= 1:
        return arr
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr, deg = arr[order], deg[order]
    kept_blocks: list[np.ndarray] = []
    kept = None
    for d in np.unique(deg):
        block = arr[deg == d]
        if kept is not None:
            block = block[~_divisible_by_any(block, kept)]
        if block.shape[0]:
            kept_blocks.append(block)
            kept = kept_blocks[0] if len(kept_blocks) == 1 else np.concatenate(kept_blocks)
    # np.unique sorted rows lexicographically, and the stable degree sort kept
    # that order inside each block, so the concatenation is graded-lex sorted.
    return kept if kept is not None else arr[:0]


def _check_product_bound(arr: np.ndarray) -> None:
    if arr.size and int(arr.max()) > MAX_EXPONENT:
        raise ExponentOverflowError("exponent sum exceeds the 64-bit guard bound")


# ---------------------------------------------------------------------------

class MonomialIdeal:
    """A monomial ideal, canonically represented by its minimal generators.

    ``gens`` is a read-only ``(g, nvars)`` int64 array whose rows form an
    antichain under componentwise <= (no generator divides another) and are
    sorted in graded lexicographic order.  The constructor accepts any
    generating set and minimalizes it.
    """

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, generators=()):
        if int(nvars) < 1:
            raise ValueError(f"nvars must be positive, got {nvars}")
        object.__setattr__(self, "nvars", int(nvars))
        arr = _minimal_rows(_as_gen_matrix(generators, self.nvars))
        arr.flags.writeable = False
        object.__setattr__(self, "gens", arr)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def _from_canonical(cls, nvars: int, arr: np.ndarray) -> "MonomialIdeal":
        """Wrap rows already known to be a deduplicated antichain."""
        self = object.__new__(cls)
        object.__setattr__(self, "nvars", nvars)
        arr = _graded_lex_sort(np.ascontiguousarray(arr, dtype=np.int64))
        arr.flags.writeable = False
        object.__setattr__(self, "gens", arr)
        return self

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ((0,) * nvars,))

    # -- basic queries ------------------------------------------------------

    @property
    def generators(self) -> list[tuple[int, ...]]:
        """Minimal generators as exponent tuples, in storage order."""
        return [tuple(int(e) for e in row) for row in self.gens]

    def num_min_gens(self) -> int:
        """mu(I): the size of the minimal generating set."""
        return self.gens.shape[0]

    def __len__(self) -> int:
        return self.gens.shape[0]

    def is_zero(self) -> bool:
        return self.gens.shape[0] == 0

    def is_unit(self) -> bool:
        return self.gens.shape[0] == 1 and not self.gens.any()

    def contains(self, exponents) -> bool:
        """Monomial membership: some generator divides the given monomial."""
        point = _as_gen_matrix([exponents], self.nvars)
        return bool(_divisible_by_any(point, self.gens)[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and np.array_equal(self.gens, other.gens)

    def __hash__(self) -> int:
        return hash((self.nvars, self.gens.tobytes()))

    def __repr__(self) -> str:
        shown = self.generators[:8]
        tail = ", ..." if len(self) > 8 else ""
        return f"MonomialIdeal(nvars={self.nvars}, generators={shown}{tail})"

    # -- ring operations ----------------------------------------------------

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Ideal product: minimal generators of {u*v : u in G(A), v in G(B)}."""
        if self.nvars != other.nvars:
            raise DimensionError(
                f"nvars mismatch: {self.nvars} vs {other.nvars}")
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.nvars)
        pairs = (self.gens[:, None, :] + other.gens[None, :, :]).reshape(-1, self.nvars)
        _check_product_bound(pairs)
        return MonomialIdeal._from_canonical(self.nvars, _minimal_rows(pairs))

    __mul__ = product

    def power(self, k: int) -> "MonomialIdeal":
        """k-th power by iterated product, minimalizing at every step."""
        if k < 0:
            raise ValueError(f"power exponent must be >= 0, got {k}")
        if k == 0:
            return MonomialIdeal.unit(self.nvars)
        result = self
        for _ in range(k - 1):
            result = result.product(self)
        return result

    __pow__ = power

    def pseudo_frobenius(self, r: int) -> "MonomialIdeal":
        """The ideal generated by the r-th powers of the minimal generators.

        Scaling every exponent vector by r preserves the antichain, so the
        result has exactly the same number of minimal generators.
        """
        if r < 1:
            raise ValueError(f"pseudo-Frobenius exponent must be >= 1, got {r}")
        if self.gens.size and r * int(self.gens.max()) > MAX_EXPONENT:
            raise ExponentOverflowError("scaled exponent exceeds the 64-bit guard bound")
        return MonomialIdeal._from_canonical(self.nvars, self.gens * np.int64(r))

    def ideal_sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Ideal sum: minimal generators of G(A) | G(B)."""
        if self.nvars != other.nvars:
            raise DimensionError(
                f"nvars mismatch: {self.nvars} vs {other.nvars}")
        stacked = np.concatenate([self.gens, other.gens])
        return MonomialIdeal._from_canonical(self.nvars, _minimal_rows(stacked))

    __add__ = ideal_sum

    def external_product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Product after moving the factors into disjoint variable blocks.

        The result lives in ``self.nvars + other.nvars`` variables; its
        generators are all concatenations (u, v), which already form an
        antichain, so mu multiplies exactly.
        """
        n = self.nvars + other.nvars
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(n)
        ga, gb = self.gens.shape[0], other.gens.shape[0]
        block = np.zeros((ga, gb, n), dtype=np.int64)
        block[:, :, : self.nvars] = self.gens[:, None, :]
        block[:, :, self.nvars:] = other.gens[None, :, :]
        return MonomialIdeal._from_canonical(n, block.reshape(ga * gb, n))

    # -- Artinian structure --------------------------------------------------

    def is_artinian(self) -> bool:
        """True when every variable appears as a pure power x_i^e, e >= 1.

        Equivalent to dim S/I = 0.  The zero and unit ideals are both
        non-Artinian under this convention (the unit ideal has no standard
        monomials at all, so its socle degree is undefined too).
        """
        if self.is_zero():
            return False
        positive = self.gens > 0
        pure_rows = positive.sum(axis=1) == 1
        covered = positive[pure_rows].any(axis=0)
        return bool(covered.all()) if pure_rows.any() else False

    def socle_degree(self, max_box: int = 1 << 26) -> int:
        """Largest degree of a monomial outside the ideal.

        Brute force: every standard monomial has exponent_i < p_i, where
        x_i^{p_i} is the minimal pure power among the generators.  The box is
        scanned in descending total degree and the first monomial not in the
        ideal decides.  ``max_box`` caps the number of box points.
        """
        if not self.is_artinian():
            raise NotArtinianError(
                "socle degree requires an Artinian (zero-dimensional) ideal")
        positive = self.gens > 0
        pure_rows = positive.sum(axis=1) == 1
        pure = self.gens[pure_rows]
        bounds = np.array(
            [int(pure[pure[:, i] > 0, i].min()) - 1 for i in range(self.nvars)],
            dtype=np.int64)
        box_size = 1
        for b in bounds:
            box_size *= int(b) + 1
        if box_size > max_box:
            raise ResourceLimitError(
                f"socle box has {box_size} points, cap is {max_box}")
        # Generators with an exponent above its bound divide nothing in the box.
        gens = self.gens[(self.gens <= bounds).all(axis=1)]
        if gens.shape[0] == 0:
            return int(bounds.sum())
        grids = np.meshgrid(*(np.arange(b + 1) for b in bounds), indexing="ij")
        points = np.stack(grids, axis=-1).reshape(-1, self.nvars).astype(np.int64)
        order = np.argsort(points.sum(axis=1), kind="stable")[::-1]
        points = points[order]
        chunk = max(1, _CHUNK_CELLS // (gens.shape[0] * self.nvars))
        for start in range(0, points.shape[0], chunk):
            block = points[start:start + chunk]
            standard = ~_divisible_by_any(block, gens)
            if standard.any():
                return int(block[standard][0].sum())
        raise NotArtinianError("unit ideal has no standard monomials")


# ---------------------------------------------------------------------------
# constructors

def minimalize(generators, nvars: int) -> MonomialIdeal:
    """The ideal generated by the given monomials, canonically minimalized.

    Empty input yields the zero ideal.
    """
    return MonomialIdeal(nvars, generators)


def pure_power_ideal(nvars: int, exponent: int) -> MonomialIdeal:
    """(x_1^e, ..., x_n^e)."""
    if exponent < 1:
        raise ValueError(f"exponent must be >= 1, got {exponent}")
    if exponent > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {exponent} exceeds {MAX_EXPONENT}")
    arr = np.eye(nvars, dtype=np.int64) * np.int64(exponent)
    return MonomialIdeal._from_canonical(nvars, arr)


def maximal_ideal_power(nvars: int, c: int) -> MonomialIdeal:
    """(x_1, ..., x_n)^c: all monomials of total degree c."""
    if c < 0:
        raise ValueError(f"power must be >= 0, got {c}")
    if c == 0:
        return MonomialIdeal.unit(nvars)
    if c > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {c} exceeds {MAX_EXPONENT}")
    if nvars == 1:
        return MonomialIdeal._from_canonical(1, np.array([[c]], dtype=np.int64))
    rows = []
    for bars in combinations(range(c + nvars - 1), nvars - 1):
        cuts = (-1, *bars, c + nvars - 1)
        rows.append([cuts[i + 1] - cuts[i] - 1 for i in range(nvars)])
    return MonomialIdeal._from_canonical(nvars, np.array(rows, dtype=np.int64))


@dataclass(frozen=True)
class FamilyParams:
    """Parameter bundle naming one of the built-in ideal families.

    ``family`` is one of ``basic`` (two pure-power factors), ``modified``
    (basic plus a power of the maximal ideal), ``iam`` (the two-variable
    family with the tuned truncation exponent) or ``product`` (the block
    product of ``iam`` ideals in disjoint variable pairs).  Only the fields
    a family actually uses need to be set; ``d`` is the least generator
    degree (a+1)m of the basic ideal.
    """

    family: str
    n: int | None = None
    a: int | None = None
    m: int | None = None
    c: int | None = None
    l: int | None = None
    q: int | None = None

    @property
    def d(self) -> int:
        if self.a is None or self.m is None:
            raise ValueError("d requires both a and m")
        return (self.a + 1) * self.m

    def describe(self) -> str:
        fields = [(name, getattr(self, name)) for name in ("n", "a", "m", "c", "l", "q")]
        inner = ", ".join(f"{name}={value}" for name, value in fields if value is not None)
        return f"{self.family}({inner})"
