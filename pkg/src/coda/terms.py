"""The pure-data term model.

A coda is a pair of data; data is a finite sequence of codas.  Data is
represented as a plain tuple of Coda values so that concatenation is tuple
concatenation, structural equality is ``==`` and everything is hashable.

Also provides the canonical total order used everywhere (carrier listing,
sorting, quotient representatives), width/depth metrics, and bounded
enumeration / exact counting of pure data.
"""

from __future__ import annotations

from functools import cmp_to_key, lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Tuple


class Coda:
    """An ordered pair of data.  Immutable, hashable, value semantics."""

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left: "Data" = (), right: "Data" = ()):
        self.left = tuple(left)
        self.right = tuple(right)
        object.__setattr__(self, "_hash", hash((self.left, self.right)))

    def __setattr__(self, name, value):
        if name in ("left", "right") and not hasattr(self, "_hash"):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("Coda is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Coda):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.left == other.left
            and self.right == other.right
        )

    def __repr__(self):
        return f"<coda {render_coda(self)}>"


Data = Tuple[Coda, ...]

EMPTY: Data = ()
COLON = Coda()  # the primordial atom (:)


def data(*codas: Coda) -> Data:
    return tuple(codas)


def make_coda(left: Data, right: Data) -> Coda:
    return Coda(left, right)


def concat(a: Data, b: Data) -> Data:
    return tuple(a) + tuple(b)


def structural_eq(a: Data, b: Data) -> bool:
    return tuple(a) == tuple(b)


# ---------------------------------------------------------------------------
# Rendering (canonical text form; bit-exact)

def render_coda(c: Coda) -> str:
    return "(" + render_inner(c.left) + ":" + render_inner(c.right) + ")"


def render_inner(d: Data) -> str:
    return " ".join(render_coda(c) for c in d)


def render(d: Data) -> str:
    """Canonical text form: `()` for empty data, items joined by one space."""
    if not d:
        return "()"
    return render_inner(d)


# ---------------------------------------------------------------------------
# Canonical order: shorter sequence first, then pointwise; codas by
# (left, right) recursively.

def cmp_data(a: Data, b: Data) -> int:
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    for x, y in zip(a, b):
        c = cmp_coda(x, y)
        if c:
            return c
    return 0


def cmp_coda(x: Coda, y: Coda) -> int:
    if x is y or x == y:
        return 0
    return cmp_data(x.left, y.left) or cmp_data(x.right, y.right)


def canonical_order(a: Data, b: Data) -> int:
    """Total order on data; returns -1, 0 or 1."""
    return cmp_data(tuple(a), tuple(b))


data_key = cmp_to_key(lambda a, b: cmp_data(a, b))
coda_key = cmp_to_key(cmp_coda)


# ---------------------------------------------------------------------------
# Width / depth

class SizeBound(NamedTuple):
    width: int
    depth: int


def coda_depth(c: Coda) -> int:
    return 1 + max(data_depth(c.left), data_depth(c.right))


def data_depth(d: Data) -> int:
    return max((coda_depth(c) for c in d), default=0)


def data_width(d: Data) -> int:
    w = len(d)
    for c in d:
        w = max(w, data_width(c.left), data_width(c.right))
    return w


def measure(d: Data) -> SizeBound:
    return SizeBound(data_width(d), data_depth(d))


# ---------------------------------------------------------------------------
# Counting and bounded enumeration

class CapExceeded(Exception):
    """Predicted enumeration size exceeds the configured cap."""


def count_pure_data(bound: SizeBound) -> int:
    """Exact count of pure data with width <= w and depth <= d.

    Recurrence: D(w,0) = 1 and D(w,d) = sum_{k=0..w} (D(w,d-1)^2)^k, since a
    data of depth <= d is a sequence of at most w codas, each a pair of data
    of depth <= d-1.
    """
    w, d = bound
    return _count(w, d)


@lru_cache(maxsize=None)
def _count(w: int, d: int) -> int:
    if d <= 0:
        return 1
    pairs = _count(w, d - 1) ** 2
    return sum(pairs**k for k in range(w + 1))


DEFAULT_ENUM_CAP = 100_000


def enumerate_pure_data(bound: SizeBound, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Data]:
    """Yield every pure data within `bound`, in canonical order, no duplicates.

    Raises CapExceeded up front when the recurrence predicts more than `cap`
    items.
    """
    w, d = bound
    predicted = count_pure_data(bound)
    if predicted > cap:
        raise CapExceeded(f"{predicted} pure data exceed cap {cap}")
    yield from _enumerate(w, d)


def _enumerate(w: int, d: int) -> Iterator[Data]:
    yield EMPTY
    if d <= 0:
        return
    codas = _codas_upto(w, d)
    for k in range(1, w + 1):
        for items in product(codas, repeat=k):
            yield items


@lru_cache(maxsize=None)
def _codas_upto(w: int, d: int) -> Tuple[Coda, ...]:
    # already in canonical coda order because _enumerate yields data in
    # canonical (length-then-lexicographic) order
    below = tuple(_enumerate(w, d - 1))
    return tuple(Coda(l, r) for l in below for r in below)
