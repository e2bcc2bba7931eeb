"""Structural feasibility oracle for path constraints.

Only UNSAT answers are load-bearing: the explorer prunes a branch exactly
when the oracle proves a contradiction, so UNSAT must imply true
infeasibility. SAT/UNKNOWN both mean "keep exploring"; SAT is reported when
every constraint fit a recognized shape and no contradiction was found.

Recognized shapes: constant conditions, (dis)equality of a term with
constants, unsigned interval bounds of the form ``term <op> constant``, and
polarity clashes between a comparison and its negation. Anything else makes
the verdict UNKNOWN. A richer SMT backend can be swapped in anywhere an
oracle callable is accepted, without changing the explorer contract.
"""

from __future__ import annotations

from .terms import (
    EQ,
    GT,
    LT,
    SGT,
    SLT,
    WORD_MASK,
    App,
    Const,
    Term,
    strip_negations,
)

SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"

_GE = "GE"  # internal fact kind: left >= right (unsigned)


class _Domain:
    """Unsigned interval plus disequalities for one atom."""

    __slots__ = ("lo", "hi", "neq")

    def __init__(self) -> None:
        self.lo = 0
        self.hi = WORD_MASK
        self.neq: set[int] = set()

    def consistent(self) -> bool:
        if self.lo > self.hi:
            return False
        if self.lo == self.hi and self.lo in self.neq:
            return False
        return True


def _normalize(term: Term) -> tuple[bool, Term]:
    """Polarity-stripped core with GT rewritten to a mirrored LT."""
    polarity, core = strip_negations(term)
    if isinstance(core, App) and core.op == GT:
        core = App(LT, (core.args[1], core.args[0]))
    if isinstance(core, App) and core.op == SGT:
        core = App(SLT, (core.args[1], core.args[0]))
    return polarity, core


def feasible(constraints: list) -> str:
    """Classify a constraint conjunction as SAT, UNSAT or UNKNOWN.

    Accepts PathConstraint-like objects (anything with a ``term``
    attribute) or raw terms.
    """
    domains: dict[Term, _Domain] = {}
    ordered: set[tuple[str, Term, Term]] = set()  # (kind, a, b) facts
    truthy: dict[Term, bool] = {}  # opaque atoms pinned to a polarity
    all_understood = True

    def domain(atom: Term) -> _Domain:
        return domains.setdefault(atom, _Domain())

    for item in constraints:
        term = item.term if hasattr(item, "term") else item
        polarity, core = _normalize(term)

        if isinstance(core, Const):
            if bool(core.value) != polarity:
                return UNSAT
            continue

        if isinstance(core, App) and core.op == LT:
            a, b = core.args
            if isinstance(a, Const) and isinstance(b, Const):
                if (a.value < b.value) != polarity:
                    return UNSAT
                continue
            if isinstance(b, Const):  # atom < c  /  atom >= c
                d = domain(a)
                if polarity:
                    if b.value == 0:
                        return UNSAT
                    d.hi = min(d.hi, b.value - 1)
                else:
                    d.lo = max(d.lo, b.value)
            elif isinstance(a, Const):  # c < atom  /  c >= atom
                d = domain(b)
                if polarity:
                    if a.value == WORD_MASK:
                        return UNSAT
                    d.lo = max(d.lo, a.value + 1)
                else:
                    d.hi = min(d.hi, a.value)
            else:
                if a == b and polarity:
                    return UNSAT  # t < t
                kind = LT if polarity else _GE
                ordered.add((kind, a, b))
            continue

        if isinstance(core, App) and core.op == EQ:
            a, b = core.args  # make_app keeps any constant on the right
            if isinstance(b, Const) and not isinstance(a, Const):
                d = domain(a)
                if polarity:
                    d.lo = max(d.lo, b.value)
                    d.hi = min(d.hi, b.value)
                else:
                    d.neq.add(b.value)
            else:
                if a == b and not polarity:
                    return UNSAT  # t != t
                kind = EQ if polarity else "NEQ"
                ordered.add((kind, a, b))
                ordered.add((kind, b, a))  # symmetric relation
            continue

        if isinstance(core, App) and core.op in (SLT,):
            a, b = core.args
            if a == b and polarity:
                return UNSAT
            ordered.add((SLT if polarity else "SGE", a, b))
            continue

        # Opaque condition: only its own truthiness is tracked.
        if core in truthy and truthy[core] != polarity:
            return UNSAT
        truthy[core] = polarity
        all_understood = False

    for d in domains.values():
        if not d.consistent():
            return UNSAT

    for kind, a, b in ordered:
        if kind == LT and (_GE, a, b) in ordered:
            return UNSAT
        if kind == LT and (LT, b, a) in ordered:
            return UNSAT
        if kind == LT and ((EQ, a, b) in ordered or (EQ, b, a) in ordered):
            return UNSAT
        if kind == EQ and ("NEQ", a, b) in ordered:
            return UNSAT
        if kind == SLT and ("SGE", a, b) in ordered:
            return UNSAT

    return SAT if all_understood else UNKNOWN
