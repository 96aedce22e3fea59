"""Finite-space analysis: carriers, endomorphism semirings, classification.

A space S induces a monoid on the normal forms (S:X): the carrier.  Once the
carrier is finite (or truncated), endomorphisms become plain endofunctions of
the element set and everything in the classification (constants,
homomorphisms, units, central maps, idempotents, subspaces, the field
criteria, quotients) is decided by exhaustive checks over the tables.

Carriers come from two directions: extraction through the rewriting engine,
or directly from a Python-level addition function when an independent oracle
(mod-n arithmetic, saturation, and so on) is wanted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import HOLDS, REFUTED, ProbeSet, Verdict, default_probes
from .encoding import word
from .engine import DEFAULT_BUDGET, Budget, Context, Engine
from .lang import render
from .prelude import prelude
from .terms import Coda, Data, data_key

DEFAULT_ENDO_CAP = 5 ** 5


class CarrierOverflow(Exception):
    """More distinct carrier elements than the cap allows."""


class TooManyEndos(Exception):
    """The full endofunction set would exceed the enumeration cap."""


class NotAHomomorphism(Exception):
    pass


@dataclass(frozen=True)
class CarrierTable:
    """Elements in canonical order with the induced addition table.

    `add[i][j]` is the index of element_i + element_j, or None when the sum
    left the extracted set (only possible for open, truncated carriers).
    """

    space: Optional[Data]
    elements: Tuple[Data, ...]
    neutral: int
    add: Tuple[Tuple[Optional[int], ...], ...]
    closed: bool
    labels: Optional[Tuple[str, ...]] = None

    @property
    def size(self) -> int:
        return len(self.elements)

    def add_idx(self, i: int, j: int) -> Optional[int]:
        return self.add[i][j]

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return render(self.elements[i])

    def index_of(self, d: Data) -> Optional[int]:
        d = tuple(d)
        for i, e in enumerate(self.elements):
            if e == d:
                return i
        return None


def _normalize(space: Data, x: Data, ctx: Context, budget: Budget) -> Optional[Data]:
    eng = Engine(ctx, budget)
    out = eng.eval_data((Coda(tuple(space), tuple(x)),))
    if eng.exhausted:
        return None
    return out


def extract_carrier(
    space: Data,
    probes: Optional[ProbeSet] = None,
    cap: int = 64,
    ctx: Optional[Context] = None,
    on_overflow: str = "open",
) -> CarrierTable:
    """Distinct normal forms of (space : probe), closed under the sum.

    With on_overflow="open" the closure stops at `cap` elements and the
    table keeps None entries; "raise" turns the cap into CarrierOverflow.
    """
    ctx = ctx if ctx is not None else prelude()
    probes = probes if probes is not None else default_probes()
    budget = probes.budget
    space = tuple(space)

    seen: Dict[Data, None] = {}
    neutral_elem = _normalize(space, (), ctx, budget)
    if neutral_elem is None:
        raise CarrierOverflow("budget exhausted while normalizing the neutral")
    seen[neutral_elem] = None
    for p in probes.probes:
        e = _normalize(space, p, ctx, budget)
        if e is not None:
            seen[e] = None

    closed = True
    frontier = list(seen)
    while frontier:
        new: List[Data] = []
        for x in frontier:
            for y in list(seen):
                for s in (_normalize(space, x + y, ctx, budget),
                          _normalize(space, y + x, ctx, budget)):
                    if s is None:
                        closed = False
                        continue
                    if s not in seen:
                        if len(seen) >= cap:
                            if on_overflow == "raise":
                                raise CarrierOverflow(
                                    f"more than {cap} carrier elements"
                                )
                            closed = False
                            continue
                        seen[s] = None
                        new.append(s)
        frontier = new

    elements = tuple(sorted(seen, key=data_key))
    index = {e: i for i, e in enumerate(elements)}
    table: List[Tuple[Optional[int], ...]] = []
    for x in elements:
        row: List[Optional[int]] = []
        for y in elements:
            s = _normalize(space, x + y, ctx, budget)
            row.append(index.get(s) if s is not None else None)
        if any(v is None for v in row):
            closed = False
        table.append(tuple(row))
    return CarrierTable(
        space=space,
        elements=elements,
        neutral=index[neutral_elem],
        add=tuple(table),
        closed=closed,
    )


def carrier_from_function(
    values: Sequence,
    add: Callable,
    neutral,
    to_data: Optional[Callable] = None,
    labels: Optional[Sequence[str]] = None,
    space: Optional[Data] = None,
) -> CarrierTable:
    """Oracle carrier: elements and addition supplied as plain Python.

    `add` may return a value outside `values` (or None) to leave an entry
    undefined, which marks the carrier as open.
    """
    values = list(values)
    if to_data is None:
        to_data = lambda v: (word(str(v)),)
    index = {v: i for i, v in enumerate(values)}
    closed = True
    table: List[Tuple[Optional[int], ...]] = []
    for x in values:
        row: List[Optional[int]] = []
        for y in values:
            s = add(x, y)
            idx = index.get(s)
            if idx is None:
                closed = False
            row.append(idx)
        table.append(tuple(row))
    return CarrierTable(
        space=space,
        elements=tuple(tuple(to_data(v)) for v in values),
        neutral=index[neutral],
        add=tuple(table),
        closed=closed,
        labels=tuple(labels) if labels is not None else tuple(str(v) for v in values),
    )


def zn_carrier(n: int) -> CarrierTable:
    """Integers modulo n under addition."""
    return carrier_from_function(range(n), lambda x, y: (x + y) % n, 0)


def saturation_carrier(q: int) -> CarrierTable:
    """{0..q-1} with addition clamped at q-1."""
    return carrier_from_function(range(q), lambda x, y: min(x + y, q - 1), 0)


def check_carrier_monoid(c: CarrierTable) -> bool:
    """Neutral unit laws and associativity wherever the table is defined."""
    n = c.size
    for i in range(n):
        if c.add[c.neutral][i] != i or c.add[i][c.neutral] != i:
            return False
    for i in range(n):
        for j in range(n):
            ij = c.add[i][j]
            for k in range(n):
                jk = c.add[j][k]
                if ij is None or jk is None:
                    continue
                left = c.add[ij][k]
                right = c.add[i][jk]
                if left is not None and right is not None and left != right:
                    return False
    return True


# ---------------------------------------------------------------------------
# Endomorphisms

@dataclass(frozen=True)
class Endo:
    map: Tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.map[i]

    @property
    def size(self) -> int:
        return len(self.map)


def identity_endo(c: CarrierTable) -> Endo:
    return Endo(tuple(range(c.size)))


def constant_endo(c: CarrierTable, k: int) -> Endo:
    return Endo((k,) * c.size)


def zero_endo(c: CarrierTable) -> Endo:
    return constant_endo(c, c.neutral)


def compose(f: Endo, g: Endo) -> Endo:
    """f after g."""
    return Endo(tuple(f.map[g.map[i]] for i in range(len(g.map))))


def oplus(f: Endo, g: Endo, c: CarrierTable) -> Optional[Endo]:
    """Pointwise sum; None when the carrier's table is missing an entry."""
    out = []
    for i in range(c.size):
        v = c.add[f(i)][g(i)]
        if v is None:
            return None
        out.append(v)
    return Endo(tuple(out))


def enumerate_endos(c: CarrierTable, cap: int = DEFAULT_ENDO_CAP) -> List[Endo]:
    n = c.size
    if n ** n > cap:
        raise TooManyEndos(f"{n}^{n} endofunctions exceed cap {cap}")
    return [Endo(m) for m in itertools.product(range(n), repeat=n)]


def is_constant(f: Endo) -> bool:
    return len(set(f.map)) <= 1


def is_homomorphism(f: Endo, c: CarrierTable) -> bool:
    for i in range(c.size):
        for j in range(c.size):
            ij = c.add[i][j]
            fij = c.add[f(i)][f(j)]
            if ij is None or fij is None:
                continue
            if f(ij) != fij:
                return False
    return True


def inverse_of(f: Endo) -> Optional[Endo]:
    if len(set(f.map)) != len(f.map):
        return None
    inv = [0] * len(f.map)
    for i, v in enumerate(f.map):
        inv[v] = i
    return Endo(tuple(inv))


def is_idempotent(f: Endo) -> bool:
    return compose(f, f) == f


def is_subspace(f: Endo, c: CarrierTable) -> bool:
    """Idempotent and compatible with the sum in the sense
    f(x+y) = f(f(x)+y) = f(x+f(y)) wherever defined."""
    if not is_idempotent(f):
        return False
    for i in range(c.size):
        for j in range(c.size):
            ij = c.add[i][j]
            fi_j = c.add[f(i)][j]
            i_fj = c.add[i][f(j)]
            if ij is None:
                continue
            if fi_j is not None and f(ij) != f(fi_j):
                return False
            if i_fj is not None and f(ij) != f(i_fj):
                return False
    return True


def is_cancellative(c: CarrierTable) -> bool:
    """Left and right cancellation of the carrier sum."""
    n = c.size
    for i in range(n):
        row = [c.add[i][j] for j in range(n)]
        col = [c.add[j][i] for j in range(n)]
        for seq in (row, col):
            defined = [v for v in seq if v is not None]
            if len(defined) != len(set(defined)):
                return False
    return True


def is_commutative(c: CarrierTable) -> bool:
    n = c.size
    for i in range(n):
        for j in range(n):
            a, b = c.add[i][j], c.add[j][i]
            if a is not None and b is not None and a != b:
                return False
    return True


# ---------------------------------------------------------------------------
# Classification

@dataclass
class EndoFlags:
    constant: bool
    homomorphism: bool
    unit: bool
    central: bool
    idempotent: bool
    subspace: bool


@dataclass
class SemiringReport:
    carrier: CarrierTable
    endos: List[Endo]
    flags: List[EndoFlags]
    identity: int
    zero: int
    product_table: List[List[Optional[int]]]
    sum_table: List[List[Optional[int]]]
    order_pairs: List[Tuple[int, int]]
    neutral_space: bool
    algebraic: bool
    semilattice: bool
    field: Optional[Tuple[bool, bool]]

    def units(self) -> List[int]:
        return [i for i, f in enumerate(self.flags) if f.unit]

    def constants(self) -> List[int]:
        return [i for i, f in enumerate(self.flags) if f.constant]

    def homomorphisms(self) -> List[int]:
        return [i for i, f in enumerate(self.flags) if f.homomorphism]

    def subspaces(self) -> List[int]:
        return [i for i, f in enumerate(self.flags) if f.subspace]

    def endo_name(self, i: int) -> str:
        return "".join(self.carrier.label(v) for v in self.endos[i].map)


def classify(c: CarrierTable, endos: Sequence[Endo]) -> SemiringReport:
    endos = list(endos)
    pos = {e: i for i, e in enumerate(endos)}
    ident = identity_endo(c)
    zero = zero_endo(c)
    if ident not in pos or zero not in pos:
        raise ValueError("endo list must contain the identity and zero maps")

    units: List[Endo] = []
    for f in endos:
        inv = inverse_of(f)
        if inv is not None and inv in pos:
            units.append(f)

    flags: List[EndoFlags] = []
    for f in endos:
        inv = inverse_of(f)
        flags.append(
            EndoFlags(
                constant=is_constant(f),
                homomorphism=is_homomorphism(f, c),
                unit=inv is not None and inv in pos,
                central=all(compose(f, u) == compose(u, f) for u in units),
                idempotent=is_idempotent(f),
                subspace=is_subspace(f, c),
            )
        )

    product_table = [[pos.get(compose(f, g)) for g in endos] for f in endos]
    sum_table = []
    for f in endos:
        row = []
        for g in endos:
            s = oplus(f, g, c)
            row.append(pos.get(s) if s is not None else None)
        sum_table.append(row)

    order_pairs = [
        (i, j)
        for i, f in enumerate(endos)
        for j, g in enumerate(endos)
        if compose(f, g) == f
    ]

    algebraic = is_commutative(c)
    semilattice = algebraic and all(
        c.add[i][i] == i for i in range(c.size) if c.add[i][i] is not None
    )
    try:
        field = field_check(c)
    except TooManyEndos:
        field = None
    return SemiringReport(
        carrier=c,
        endos=endos,
        flags=flags,
        identity=pos[ident],
        zero=pos[zero],
        product_table=product_table,
        sum_table=sum_table,
        order_pairs=order_pairs,
        neutral_space=is_cancellative(c),
        algebraic=algebraic,
        semilattice=semilattice,
        field=field,
    )


def field_check(c: CarrierTable, cap: int = 7 ** 7) -> Tuple[bool, bool]:
    """Two independent field criteria; they should always agree.

    First: every proper subspace endofunction is constant.  Second: every
    non-constant homomorphism is a unit (a bijection).  Both scan the full
    endofunction set, so the carrier must be small.
    """
    n = c.size
    if n ** n > cap:
        raise TooManyEndos(f"{n}^{n} endofunctions exceed cap {cap}")
    ident = tuple(range(n))
    subspaces_ok = True
    homs_ok = True
    for m in itertools.product(range(n), repeat=n):
        f = Endo(m)
        const = len(set(m)) <= 1
        if const:
            continue
        if subspaces_ok and m != ident and is_subspace(f, c):
            subspaces_ok = False
        if homs_ok and len(set(m)) != n and is_homomorphism(f, c):
            homs_ok = False
        if not subspaces_ok and not homs_ok:
            break
    return subspaces_ok, homs_ok


def quotient_of_hom(h: Endo, c: CarrierTable) -> Endo:
    """The idempotent with the same fibers as h, picking the canonically
    smallest element of each fiber as representative."""
    if not is_homomorphism(h, c):
        raise NotAHomomorphism(f"endo {h.map} does not preserve the sum")
    fibers: Dict[int, List[int]] = {}
    for i in range(c.size):
        fibers.setdefault(h(i), []).append(i)
    rep = {
        v: min(members, key=lambda i: data_key(c.elements[i]))
        for v, members in fibers.items()
    }
    return Endo(tuple(rep[h(i)] for i in range(c.size)))


def verify_semialgebra(
    c: CarrierTable,
    mapping: Dict[int, Endo],
    central: bool = False,
    units: Optional[Sequence[Endo]] = None,
) -> Verdict:
    """Check a constants-to-homomorphisms assignment: total on the listed
    constants, injective, every image a homomorphism (and central if asked)."""
    checked = 0
    images = list(mapping.values())
    if len({e.map for e in images}) != len(images):
        return Verdict(REFUTED, "semialgebra-injective", len(images))
    for k, h in mapping.items():
        checked += 1
        if not is_homomorphism(h, c):
            return Verdict(REFUTED, "semialgebra-homomorphism", checked)
        if central and units is not None:
            if any(compose(h, u) != compose(u, h) for u in units):
                return Verdict(REFUTED, "semialgebra-central", checked)
    return Verdict(HOLDS, "semialgebra", checked)


# ---------------------------------------------------------------------------
# Isomorphism

@dataclass(frozen=True)
class IsoResult:
    """A bijection of carriers; `monoid` reports whether it also transports
    the sum table (neutral to neutral, entry by entry)."""

    bijection: Tuple[int, ...]
    monoid: bool


def _table_respects(c1: CarrierTable, c2: CarrierTable, p: Sequence[int]) -> bool:
    if p[c1.neutral] != c2.neutral:
        return False
    n = c1.size
    for i in range(n):
        for j in range(n):
            a = c1.add[i][j]
            b = c2.add[p[i]][p[j]]
            if a is None or b is None:
                continue
            if p[a] != b:
                return False
    return True


def iso_check(c1: CarrierTable, c2: CarrierTable, max_size: int = 8) -> Optional[IsoResult]:
    """Exhaustive bijection search between two small carriers.

    Prefers a sum-preserving (monoid) bijection.  When none exists but the
    sizes agree, any bijection pairs the carriers element for element; that
    weaker correspondence is returned with monoid=False.
    """
    if c1.size != c2.size:
        return None
    if c1.size > max_size:
        raise CarrierOverflow(f"carrier too large for iso search ({c1.size})")
    for p in itertools.permutations(range(c1.size)):
        if _table_respects(c1, c2, p):
            return IsoResult(p, monoid=True)
    fallback = list(range(c1.size))
    fallback[c1.neutral], fallback[c2.neutral] = c2.neutral, c1.neutral
    return IsoResult(tuple(fallback), monoid=False)


# ---------------------------------------------------------------------------
# Rendering

def render_table(
    report: SemiringReport,
    which: str = "product",
    names: Optional[Sequence[str]] = None,
    fmt: str = "text",
    order: Optional[Sequence[int]] = None,
) -> str:
    """One operation table, header row and column, aligned text or TSV."""
    table = report.product_table if which == "product" else report.sum_table
    corner = "f.g" if which == "product" else "f+g"
    if names is None:
        names = [report.endo_name(i) for i in range(len(report.endos))]
    if order is None:
        order = range(len(report.endos))
    cells = [[corner] + [names[i] for i in order]]
    for i in order:
        cells.append(
            [names[i]]
            + [
                names[table[i][j]] if table[i][j] is not None else "?"
                for j in order
            ]
        )
    if fmt == "tsv":
        return "\n".join("\t".join(r) for r in cells)
    widths = [max(len(r[k]) for r in cells) for k in range(len(cells[0]))]
    lines = [
        " | ".join(cell.ljust(w) for cell, w in zip(r, widths)) for r in cells
    ]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines)


def render_report(
    report: SemiringReport, names: Optional[Sequence[str]] = None, fmt: str = "text"
) -> str:
    c = report.carrier
    if names is None:
        names = [report.endo_name(i) for i in range(len(report.endos))]
    if fmt == "tsv":
        rows = [
            ["elements", *(c.label(i) for i in range(c.size))],
            ["neutral", c.label(c.neutral)],
            ["closed", str(c.closed)],
            ["endos", str(len(report.endos))],
            ["units", *(names[i] for i in report.units())],
            ["constants", *(names[i] for i in report.constants())],
            ["homomorphisms", *(names[i] for i in report.homomorphisms())],
            ["subspaces", *(names[i] for i in report.subspaces())],
            ["neutral_space", str(report.neutral_space)],
            ["algebraic", str(report.algebraic)],
            ["semilattice", str(report.semilattice)],
            ["field", str(report.field[0]), str(report.field[1])],
        ]
        out = ["\n".join("\t".join(r) for r in rows)]
        out.append(render_table(report, "product", names, fmt))
        out.append(render_table(report, "sum", names, fmt))
        return "\n".join(out)
    lines = [
        "elements: " + " ".join(c.label(i) for i in range(c.size)),
        f"neutral: {c.label(c.neutral)}    closed: {c.closed}",
        f"endomorphisms: {len(report.endos)}",
        "units: " + " ".join(names[i] for i in report.units()),
        "constants: " + " ".join(names[i] for i in report.constants()),
        "homomorphisms: " + " ".join(names[i] for i in report.homomorphisms()),
        "subspaces: " + " ".join(names[i] for i in report.subspaces()),
        f"neutral space: {report.neutral_space}    algebraic: {report.algebraic}"
        f"    semilattice: {report.semilattice}",
        f"field (subspace criterion, unit criterion): {report.field}",
        "",
        render_table(report, "product", names),
        "",
        render_table(report, "sum", names),
    ]
    return "\n".join(lines)
