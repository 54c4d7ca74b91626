"""A primitive recursive term fragment.

Grammar (ASCII, whitespace-insensitive):

    term := "Z" | "S" | "P[" nat "," nat "]"
          | "C(" term ";" term ("," term)* ")"
          | "R(" term "," term ")"

Z is the unary constant zero, S the successor, P[n,k] the k-th projection of
arity n (1-based).  C(f; g1,...,gr) composes an arity-r outer with r inners of
one common arity.  R(base, step) recurses on the last argument: with base of
arity m the result has arity m+1, h(xs, 0) = base(xs) and h(xs, y+1) =
step(xs, y, h(xs, y)), so step has arity m+2.  All arities are at least one.

Evaluation is fuel bounded: each node visit, including every unrolling of a
recursion, costs one unit, and running out raises FuelExhausted.

The enumerator lists all well-formed unary terms ordered by size (number of
constructor nodes) and, within a size, by constructor rank Z < S < P < C < R
with components compared recursively.  It is a total surjection onto the
unary terms of the fragment, deterministic across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .classes import EffectiveClass
from .outcomes import ArityError, FuelExhausted, ParseError

DEFAULT_FUEL = 10**6


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Succ:
    pass


@dataclass(frozen=True)
class Proj:
    n: int
    k: int


@dataclass(frozen=True)
class Comp:
    outer: "Term"
    inners: tuple["Term", ...]


@dataclass(frozen=True)
class PrimRec:
    base: "Term"
    step: "Term"


Term = Zero | Succ | Proj | Comp | PrimRec


def arity(term: Term) -> int:
    """Arity of a well-formed term; raises ArityError otherwise."""
    match term:
        case Zero() | Succ():
            return 1
        case Proj(n, k):
            if n < 1 or not 1 <= k <= n:
                raise ArityError(f"bad projection {render(term)}")
            return n
        case Comp(outer, inners):
            if not inners:
                raise ArityError("composition needs at least one inner term")
            if arity(outer) != len(inners):
                raise ArityError(
                    f"outer arity {arity(outer)} != {len(inners)} inners in {render(term)}"
                )
            arities = {arity(g) for g in inners}
            if len(arities) != 1:
                raise ArityError(f"inner arities disagree in {render(term)}")
            return arities.pop()
        case PrimRec(base, step):
            m = arity(base)
            if arity(step) != m + 2:
                raise ArityError(
                    f"step arity {arity(step)} != base arity {m} + 2 in {render(term)}"
                )
            return m + 1
    raise TypeError(f"not a term: {term!r}")


def render(term: Term) -> str:
    match term:
        case Zero():
            return "Z"
        case Succ():
            return "S"
        case Proj(n, k):
            return f"P[{n},{k}]"
        case Comp(outer, inners):
            return f"C({render(outer)}; {', '.join(render(g) for g in inners)})"
        case PrimRec(base, step):
            return f"R({render(base)}, {render(step)})"
    raise TypeError(f"not a term: {term!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a natural number")
        return int(self.text[start : self.pos])

    def term(self) -> Term:
        head = self.peek()
        if head == "Z":
            self.pos += 1
            return Zero()
        if head == "S":
            self.pos += 1
            return Succ()
        if head == "P":
            self.pos += 1
            self.expect("[")
            n = self.nat()
            self.expect(",")
            k = self.nat()
            self.expect("]")
            return Proj(n, k)
        if head == "C":
            self.pos += 1
            self.expect("(")
            outer = self.term()
            self.expect(";")
            inners = [self.term()]
            while self.peek() == ",":
                self.pos += 1
                inners.append(self.term())
            self.expect(")")
            return Comp(outer, tuple(inners))
        if head == "R":
            self.pos += 1
            self.expect("(")
            base = self.term()
            self.expect(",")
            step = self.term()
            self.expect(")")
            return PrimRec(base, step)
        raise self.error("expected a term")


def parse(text: str) -> Term:
    """Parse and arity-check a term."""
    parser = _Parser(text)
    term = parser.term()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input after term")
    arity(term)
    return term


def evaluate(term: Term, args: tuple[int, ...], fuel: int = DEFAULT_FUEL) -> int:
    """Evaluate a well-formed term on `args`; deterministic, fuel bounded."""
    if arity(term) != len(args):
        raise ArityError(f"{render(term)} applied to {len(args)} arguments")
    budget = [fuel]

    def ev(t: Term, xs: tuple[int, ...]) -> int:
        budget[0] -= 1
        if budget[0] < 0:
            raise FuelExhausted(f"fuel {fuel} exhausted evaluating {render(term)}")
        match t:
            case Zero():
                return 0
            case Succ():
                return xs[0] + 1
            case Proj(_, k):
                return xs[k - 1]
            case Comp(outer, inners):
                return ev(outer, tuple(ev(g, xs) for g in inners))
            case PrimRec(base, step):
                head, y = xs[:-1], xs[-1]
                acc = ev(base, head)
                for t_prev in range(y):
                    acc = ev(step, head + (t_prev, acc))
                return acc
        raise TypeError(f"not a term: {t!r}")

    return ev(term, args)


def size(term: Term) -> int:
    match term:
        case Zero() | Succ() | Proj():
            return 1
        case Comp(outer, inners):
            return 1 + size(outer) + sum(size(g) for g in inners)
        case PrimRec(base, step):
            return 1 + size(base) + size(step)
    raise TypeError(f"not a term: {term!r}")


def order_key(term: Term) -> tuple[int, ...]:
    """Flat integer key realizing the constructor order Z < S < P < C < R."""
    match term:
        case Zero():
            return (0,)
        case Succ():
            return (1,)
        case Proj(n, k):
            return (2, n, k)
        case Comp(outer, inners):
            key = (3, len(inners)) + order_key(outer)
            for g in inners:
                key += order_key(g)
            return key
        case PrimRec(base, step):
            return (4,) + order_key(base) + order_key(step)
    raise TypeError(f"not a term: {term!r}")


@lru_cache(maxsize=None)
def _terms_of(target_arity: int, target_size: int) -> tuple[Term, ...]:
    """All well-formed terms of the given arity and size, sorted."""
    found: list[Term] = []
    if target_size == 1:
        if target_arity == 1:
            found.extend([Zero(), Succ()])
        found.extend(Proj(target_arity, k) for k in range(1, target_arity + 1))
        return tuple(sorted(found, key=order_key))
    budget = target_size - 1
    # compositions: outer of arity r and size sf, r inners of this arity
    for r in range(1, budget):
        for sf in range(1, budget - r + 1):
            outers = _terms_of(r, sf)
            if not outers:
                continue
            rest = budget - sf
            for split in _size_splits(rest, r):
                pools = [_terms_of(target_arity, s) for s in split]
                if any(not pool for pool in pools):
                    continue
                for outer in outers:
                    for inners in product(*pools):
                        found.append(Comp(outer, inners))
    # recursions produce arity >= 2
    if target_arity >= 2:
        for sb in range(1, budget):
            bases = _terms_of(target_arity - 1, sb)
            steps = _terms_of(target_arity + 1, budget - sb)
            found.extend(PrimRec(b, s) for b in bases for s in steps)
    return tuple(sorted(found, key=order_key))


def _size_splits(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # positive compositions of `total` into exactly `parts` parts
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _size_splits(total - head, parts - 1):
            yield (head,) + rest


def unary_terms_of_size(s: int) -> tuple[Term, ...]:
    return _terms_of(1, s)


_enum_cache: list[Term] = []
_enum_size = 0


def pr_enumerate(i: int) -> Term:
    """The i-th well-formed unary term (size, then constructor order)."""
    global _enum_size
    if i < 0:
        raise ValueError("indices are naturals")
    while len(_enum_cache) <= i:
        _enum_size += 1
        _enum_cache.extend(unary_terms_of_size(_enum_size))
    return _enum_cache[i]


@lru_cache(maxsize=None)
def make_pr(fuel: int = DEFAULT_FUEL) -> EffectiveClass:
    """The unary-term numbering as an effective class.

    Equality of terms is syntactic, equality of the functions they denote is
    not decidable here, so the class only offers horizon-bounded comparison.
    Density holds (constant-then-anything behaviour is expressible) but no
    cheap cylinder witness is provided.
    """

    def evaluator(i: int, n: int) -> int:
        return evaluate(pr_enumerate(i), (n,), fuel)

    return EffectiveClass(
        class_id="pr",
        evaluator=evaluator,
        decidable_equality=False,
        dense=True,
        eval_budget=fuel,
    )


ADDITION = PrimRec(Proj(1, 1), Comp(Succ(), (Proj(3, 3),)))
MULTIPLICATION = PrimRec(Zero(), Comp(ADDITION, (Proj(3, 1), Proj(3, 3))))
