"""Contexts, definitions and budgeted evaluation.

A context is a partial function from codas to data.  Named definitions
trigger on a word atom heading the left data of a coda: in (name A : B) the
definition receives A (the rest of the left data) and B (the right data).
Marker definitions are fixed points: their codas are atoms.

Evaluation strategy: repeated outermost rewriting, left to right.  A coda's
head is evaluated just far enough to resolve dispatch; branch guards may
demand further evaluation of the components through the shared engine (and
its budget).  This is one of the deterministic strategies the rewrite rules
admit; it is documented rather than canonical.

There are no run-time errors: evaluation either normalizes or stops at the
step/node budget, reporting normalized=False.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Dict, Optional

from .encoding import is_lang_atom, is_word_atom, word, word_text
from .terms import Coda, Data

BranchFn = Callable[["Engine", Data, Data], Optional[Data]]


@dataclass(frozen=True)
class Budget:
    max_steps: int = 100_000
    max_nodes: int = 1_000_000


DEFAULT_BUDGET = Budget()


class TriBool(enum.Enum):
    ALWAYS = "always"
    NEVER = "never"
    UNDECIDED = "undecided"


@dataclass
class EvalOutcome:
    result: Data
    normalized: bool
    steps_used: int


@dataclass(frozen=True)
class Definition:
    """A context fragment triggered by an invariant atom.

    `apply` implements the branch list natively: it returns the rewritten
    data, or None when no branch is in domain (the coda stays put).
    Fixed-point definitions are atom makers: their codas are atoms and are
    never rewritten or evaluated inside.
    """

    name: str
    trigger: Coda
    apply: Optional[BranchFn] = None
    fixed_point: bool = False


class _Lang:
    """Sentinel for dispatch on language-atom heads."""


LANG = _Lang()


class Context:
    """Immutable map from trigger atoms to definitions."""

    __slots__ = ("defs",)

    def __init__(self, defs: Optional[Dict[Coda, Definition]] = None):
        self.defs: Dict[Coda, Definition] = dict(defs or {})

    def lookup(self, trigger: Coda) -> Optional[Definition]:
        return self.defs.get(trigger)

    def has_name(self, name: str) -> bool:
        return word(name) in self.defs

    def bind(self, definition: Definition) -> "Context":
        new = dict(self.defs)
        new[definition.trigger] = definition
        return Context(new)

    def names(self):
        return sorted(d.name for d in self.defs.values())


class Engine:
    """One evaluation: a context, a budget and the step/node meters."""

    def __init__(self, context: Context, budget: Budget = DEFAULT_BUDGET):
        self.context = context
        self.budget = budget
        self.steps = 0
        self.nodes = 0
        self.exhausted = False

    # -- budget ------------------------------------------------------------

    def spent(self) -> bool:
        if self.steps >= self.budget.max_steps or self.nodes >= self.budget.max_nodes:
            self.exhausted = True
        return self.exhausted

    def charge(self, produced: Data) -> None:
        self.steps += 1
        self.nodes += len(produced)

    # -- dispatch ----------------------------------------------------------

    def dispatch(self, c: Coda):
        """The definition owning coda `c`, LANG for language applications,
        or None when `c` is out of every definition's domain."""
        if not c.left:
            return None  # structural atom (:X)
        head = c.left[0]
        if is_lang_atom(head):
            return LANG
        return self.context.lookup(head)

    # -- evaluation --------------------------------------------------------

    def eval_data(self, d: Data) -> Data:
        out: list = []
        for c in d:
            out.extend(self.eval_coda(c))
        return tuple(out)

    def eval_coda(self, c: Coda) -> Data:
        while True:
            if self.spent():
                return (c,)
            if not c.left:
                return (c,)  # (:X) is a fixed point
            defn = self.dispatch(c)
            if defn is LANG:
                from .lang import eval_lang_atom  # circular at import time

                src = _lang_src(c.left[0])
                res = eval_lang_atom(src, c.left[1:], c.right, self)
                self.charge(res)
                return self.eval_data(res)
            if defn is None:
                head = c.left[0]
                hv = self.eval_coda(head)
                if hv != (head,):
                    c = Coda(hv + c.left[1:], c.right)
                    continue
                # head is normal and out of domain: the coda is inert;
                # normalize its components (congruence steps only)
                left = (head,) + self.eval_data(c.left[1:])
                right = self.eval_data(c.right)
                return (Coda(left, right),)
            if defn.fixed_point:
                return (c,)
            res = defn.apply(self, c.left[1:], c.right)
            if res is None:
                return (c,)  # no branch in domain; stuck as-is
            self.charge(res)
            return self.eval_data(res)

    # -- decision helpers --------------------------------------------------

    def is_atom(self, c: Coda) -> bool:
        """True when a (normalized) coda is an atom: a fixed point of the
        context, or permanently out of its domain."""
        if not c.left:
            return True
        defn = self.dispatch(c)
        if defn is LANG:
            return False
        if defn is None:
            head = c.left[0]
            # normal head with no definition: inert coda, treated as atomic
            return self.dispatch(head) is None or is_word_atom(head) or self.is_atom(head)
        if defn.fixed_point:
            return True
        if defn.name == "=":
            # a fully peeled mismatch (= a : b) is its own fixed point
            return self.tri_equal(c.left[1:], c.right) is TriBool.NEVER
        return False

    def is_invariant(self, c: Coda) -> bool:
        if c.left:
            defn = self.dispatch(c)
            if defn is None:
                if self.dispatch(c.left[0]) is not None or any(
                    not self.is_atom(x) for x in c.left + c.right
                ):
                    return False
            elif not defn.fixed_point:
                return False
        return all(self.is_invariant(x) for x in c.left + c.right)

    def emptiness(self, d: Data) -> TriBool:
        """Does data `d` evaluate to the empty sequence?  ALWAYS if it does,
        NEVER if it is atomic (contains an atom), else UNDECIDED."""
        ev = self.eval_data(d)
        if not ev:
            return TriBool.ALWAYS
        if any(self.is_atom(c) for c in ev):
            return TriBool.NEVER
        return TriBool.UNDECIDED

    def tri_equal(self, a: Data, b: Data) -> TriBool:
        return self.tri_compare(self.eval_data(a), self.eval_data(b))

    def tri_compare(self, a: Data, b: Data) -> TriBool:
        """Three-valued equality of two (normalized) data."""
        if a == b:
            return TriBool.ALWAYS
        # peel structurally identical ends
        lo = 0
        hi_a, hi_b = len(a), len(b)
        while lo < hi_a and lo < hi_b and a[lo] == b[lo]:
            lo += 1
        while hi_a > lo and hi_b > lo and a[hi_a - 1] == b[hi_b - 1]:
            hi_a -= 1
            hi_b -= 1
        ra, rb = a[lo:hi_a], b[lo:hi_b]
        if not ra and not rb:
            return TriBool.ALWAYS
        if not ra or not rb:
            rest = ra or rb
            if any(self.is_atom(c) for c in rest):
                return TriBool.NEVER  # empty vs atomic
            return TriBool.UNDECIDED
        if self.is_atom(ra[0]) and self.is_atom(rb[0]):
            return TriBool.NEVER  # distinct atoms at the front
        if (
            ra[-1] != rb[-1]
            and self.is_atom(ra[-1])
            and self.is_atom(rb[-1])
        ):
            return TriBool.NEVER
        return TriBool.UNDECIDED


def _lang_src(atom: Coda) -> str:
    from .encoding import lang_source

    return lang_source(atom) or ""


# ---------------------------------------------------------------------------
# Module-level operations

def evaluate(d: Data, ctx: Context, budget: Budget = DEFAULT_BUDGET) -> EvalOutcome:
    eng = Engine(ctx, budget)
    result = eng.eval_data(tuple(d))
    return EvalOutcome(result=result, normalized=not eng.exhausted, steps_used=eng.steps)


def step(d: Data, ctx: Context, budget: Budget = DEFAULT_BUDGET) -> Data:
    """One left-to-right pass: each coda in domain is replaced by its image
    (not further evaluated)."""
    eng = Engine(ctx, budget)
    out: list = []
    for c in d:
        defn = eng.dispatch(c)
        if defn is LANG:
            from .lang import eval_lang_atom

            out.extend(eval_lang_atom(_lang_src(c.left[0]), c.left[1:], c.right, eng))
            continue
        if defn is None or defn.fixed_point:
            out.append(c)
            continue
        res = defn.apply(eng, c.left[1:], c.right)
        out.extend(res if res is not None else (c,))
    return tuple(out)


def equal(a: Data, b: Data, ctx: Context, budget: Budget = DEFAULT_BUDGET) -> TriBool:
    return Engine(ctx, budget).tri_equal(tuple(a), tuple(b))


def classify_atom(c: Coda, ctx: Context, budget: Budget = DEFAULT_BUDGET) -> str:
    """One of invariant_atom, defined_fixed_point, reducible, undecided."""
    eng = Engine(ctx, budget)
    if not c.left:
        return "invariant_atom"
    defn = eng.dispatch(c)
    if defn is LANG:
        return "reducible"
    if defn is None:
        head = c.left[0]
        hv = eng.eval_coda(head)
        if hv != (head,):
            return classify_atom(Coda(hv + c.left[1:], c.right), ctx, budget)
        if eng.exhausted:
            return "undecided"
        return "invariant_atom" if eng.is_atom(c) else "undecided"
    if defn.fixed_point:
        if all(eng.is_invariant(x) for x in c.left + c.right):
            return "invariant_atom"
        return "defined_fixed_point"
    res = defn.apply(eng, c.left[1:], c.right)
    if res is not None:
        return "reducible"
    return "undecided"


def add_definition(ctx: Context, name, body: Data) -> Context:
    """Install (name A:B) -> (body A:B).  A no-op when the name is bound."""
    if isinstance(name, Coda):
        text = word_text(name)
        if text is None:
            raise ValueError("definition name must be a word atom")
        name = text
    if ctx.has_name(name):
        return ctx
    body = tuple(body)

    def apply(engine: Engine, a: Data, b: Data) -> Data:
        return (Coda(body + a, b),)

    return ctx.bind(Definition(name=name, trigger=word(name), apply=apply))
