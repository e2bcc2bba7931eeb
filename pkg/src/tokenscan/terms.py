"""Symbolic terms over 256-bit EVM words.

A term is a finite tree: ``Const`` (concrete word), ``Sym`` (input symbol)
or ``App`` (operator application). Structural equality is the subterm
relation used everywhere; hashes are cached so terms can key dicts cheaply.

Operator applications whose children are all constants are folded away at
construction time, so normalized terms never carry a fully-concrete
arithmetic node. KECCAK, SLOAD and CALLRET are uninterpreted and exempt:
they stand for reads the engine cannot evaluate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

WORD_MASK = (1 << 256) - 1
_SIGN_BIT = 1 << 255

# Sym sources
CALLDATA = "CALLDATA"
CALLVALUE = "CALLVALUE"
CALLER = "CALLER"
ORIGIN = "ORIGIN"
TIMESTAMP = "TIMESTAMP"
NUMBER = "NUMBER"
BALANCE = "BALANCE"
UNKNOWN = "UNKNOWN"

# App operators
ADD, SUB, MUL, DIV = "ADD", "SUB", "MUL", "DIV"
LT, GT, SLT, SGT, EQ = "LT", "GT", "SLT", "SGT", "EQ"
ISZERO, AND, OR, XOR, NOT = "ISZERO", "AND", "OR", "XOR", "NOT"
EXP, SHL, SHR, BYTE, SIGNEXTEND = "EXP", "SHL", "SHR", "BYTE", "SIGNEXTEND"
SLOAD, KECCAK, CALLRET = "SLOAD", "KECCAK", "CALLRET"

COMPARISONS = frozenset({LT, GT, SLT, SGT, EQ})
UNINTERPRETED = frozenset({SLOAD, KECCAK, CALLRET})


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Const(Term):
    value: int


@dataclass(frozen=True, eq=True)
class Sym(Term):
    source: str
    key: "Term | None" = None  # CALLDATA offset, BALANCE address
    index: int | None = None  # freshness tag for UNKNOWN symbols


@dataclass(frozen=True, eq=True)
class App(Term):
    op: str
    args: tuple[Term, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.op, self.args)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]


def const(value: int) -> Const:
    return Const(value & WORD_MASK)


def _to_signed(v: int) -> int:
    return v - (1 << 256) if v & _SIGN_BIT else v


def eval_op(op: str, values: list[int]) -> int:
    """Concrete EVM semantics for foldable operators, args in pop order."""
    a = values[0]
    b = values[1] if len(values) > 1 else 0
    if op == ADD:
        return (a + b) & WORD_MASK
    if op == SUB:
        return (a - b) & WORD_MASK
    if op == MUL:
        return (a * b) & WORD_MASK
    if op == DIV:
        return a // b if b else 0
    if op == "SDIV":
        sa, sb = _to_signed(a), _to_signed(b)
        return (abs(sa) // abs(sb) * (-1 if sa * sb < 0 else 1)) & WORD_MASK if sb else 0
    if op == "MOD":
        return a % b if b else 0
    if op == "SMOD":
        sa, sb = _to_signed(a), _to_signed(b)
        return (abs(sa) % abs(sb) * (-1 if sa < 0 else 1)) & WORD_MASK if sb else 0
    if op == "ADDMOD":
        return (a + b) % values[2] if values[2] else 0
    if op == "MULMOD":
        return (a * b) % values[2] if values[2] else 0
    if op == EXP:
        return pow(a, b, 1 << 256)
    if op == SIGNEXTEND:
        if a > 31:
            return b
        bit = 8 * a + 7
        if b & (1 << bit):
            return b | (WORD_MASK ^ ((1 << (bit + 1)) - 1))
        return b & ((1 << (bit + 1)) - 1)
    if op == LT:
        return 1 if a < b else 0
    if op == GT:
        return 1 if a > b else 0
    if op == SLT:
        return 1 if _to_signed(a) < _to_signed(b) else 0
    if op == SGT:
        return 1 if _to_signed(a) > _to_signed(b) else 0
    if op == EQ:
        return 1 if a == b else 0
    if op == ISZERO:
        return 0 if a else 1
    if op == AND:
        return a & b
    if op == OR:
        return a | b
    if op == XOR:
        return a ^ b
    if op == NOT:
        return a ^ WORD_MASK
    if op == BYTE:
        return (b >> (8 * (31 - a))) & 0xFF if a < 32 else 0
    if op == SHL:
        return (b << a) & WORD_MASK if a < 256 else 0
    if op == SHR:
        return b >> a if a < 256 else 0
    if op == "SAR":
        if a >= 256:
            return WORD_MASK if b & _SIGN_BIT else 0
        return (_to_signed(b) >> a) & WORD_MASK
    raise KeyError(op)


def is_boolean(term: Term) -> bool:
    """True for terms that only take values 0 or 1."""
    return isinstance(term, App) and (term.op in COMPARISONS or term.op == ISZERO)


def make_app(op: str, *args: Term) -> Term:
    """Build an application, folding constants and trivial identities."""
    if op not in UNINTERPRETED and all(isinstance(a, Const) for a in args):
        return const(eval_op(op, [a.value for a in args]))  # type: ignore[union-attr]
    if op == EQ:
        if args[0] == args[1]:
            return Const(1)
        # keep the constant on the right so dispatch constraints read naturally
        if isinstance(args[0], Const) and not isinstance(args[1], Const):
            args = (args[1], args[0])
    if op == ISZERO and isinstance(args[0], App):
        inner = args[0]
        if inner.op == ISZERO and is_boolean(inner.args[0]):
            return inner.args[0]
    return App(op, tuple(args))


def negate(term: Term) -> Term:
    """Logical negation of a branch condition (EVM truthiness)."""
    return make_app(ISZERO, term)


def iter_subterms(term: Term) -> Iterator[Term]:
    """Pre-order traversal including ``term`` itself."""
    stack = [term]
    while stack:
        t = stack.pop()
        yield t
        if isinstance(t, App):
            stack.extend(reversed(t.args))
        elif isinstance(t, Sym) and t.key is not None:
            stack.append(t.key)


def is_subterm(needle: Term, hay: Term) -> bool:
    return any(t == needle for t in iter_subterms(hay))


def is_proper_subterm(needle: Term, hay: Term) -> bool:
    return needle != hay and is_subterm(needle, hay)


def tainted(term: Term) -> bool:
    """True iff the term contains a calldata-derived symbol."""
    return any(
        isinstance(t, Sym) and t.source == CALLDATA for t in iter_subterms(term)
    )


def contains_sload(term: Term) -> bool:
    return any(isinstance(t, App) and t.op == SLOAD for t in iter_subterms(term))


def sload_slots(term: Term) -> Iterator[Term]:
    """The slot argument of every SLOAD node inside ``term``."""
    for t in iter_subterms(term):
        if isinstance(t, App) and t.op == SLOAD:
            yield t.args[0]


def strip_negations(term: Term) -> tuple[bool, Term]:
    """Peel logical negations, returning (polarity, core).

    ISZERO always flips truthiness; bitwise NOT is treated as a logical
    negation only over boolean-sorted operands, where the reading is exact.
    """
    polarity = True
    while isinstance(term, App):
        if term.op == ISZERO:
            polarity = not polarity
            term = term.args[0]
        elif term.op == NOT and is_boolean(term.args[0]):
            polarity = not polarity
            term = term.args[0]
        else:
            break
    return polarity, term


def format_term(term: Term) -> str:
    """Canonical prefix notation, e.g. ``(SUB (SLOAD 0x2) CALLDATA[0x24])``."""
    if isinstance(term, Const):
        return hex(term.value)
    if isinstance(term, Sym):
        name = term.source
        if term.index is not None:
            name = f"{name}#{term.index}"
        if term.key is not None:
            return f"{name}[{format_term(term.key)}]"
        return name
    assert isinstance(term, App)
    return "(" + " ".join([term.op] + [format_term(a) for a in term.args]) + ")"
