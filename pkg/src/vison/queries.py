"""Class-expression queries over a frozen ontology.

Grammar (keywords case-insensitive, `and` binds tighter than `or`):

    expr   := term ("or" term)*
    term   := factor ("and" factor)*
    factor := "not" factor | atom
    atom   := "(" expr ")"
            | NAME
            | NAME "value" NAME
            | NAME "some" atom
            | NAME ("=" | ">=" | "<=") INTEGER
    NAME   := [a-zA-Z][a-zA-Z0-9_-]*

Evaluation is closed-world: an individual matches a property atom only if the
assertion is explicitly present, and `not` complements within the tool
universe rather than answering "unknown". An explicitly negated triple never
matches, even when a contradictory positive assertion exists (the consistency
checker reports the contradiction separately).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import QuerySyntaxError, TypeMismatchError, UnknownReferenceError
from .model import INTEGER, Ontology

KEYWORDS = {"and", "or", "not", "value", "some"}
COMPARE_OPS = ("=", ">=", "<=")

# Complement universe for `not`; falls back to all individuals when the
# ontology has no such class (toy fixtures).
UNIVERSE_CLASS = "tool"


# -- abstract syntax ---------------------------------------------------------

@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class And:
    parts: tuple  # two or more expressions


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Not:
    operand: object


@dataclass(frozen=True)
class HasValue:
    prop: str
    value: str


@dataclass(frozen=True)
class Some:
    prop: str
    operand: object


@dataclass(frozen=True)
class Compare:
    prop: str
    op: str  # one of COMPARE_OPS
    value: int


Expression = (Named, And, Or, Not, HasValue, Some, Compare)


# -- tokenizer ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[a-zA-Z][a-zA-Z0-9_-]*)|(?P<int>\d+)"
    r"|(?P<op>>=|<=|=)|(?P<lparen>\()|(?P<rparen>\)))"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # name | int | op | lparen | rparen | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad = len(text) - len(stripped)
            raise QuerySyntaxError(f"unexpected character {text[bad]!r}", bad)
        kind = match.lastgroup or ""
        tokens.append(_Token(kind=kind, text=match.group(kind), pos=match.start(kind)))
        pos = match.end()
    tokens.append(_Token(kind="end", text="", pos=len(text)))
    return tokens


# -- parser --------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.cursor = 0

    def current(self) -> _Token:
        return self.tokens[self.cursor]

    def advance(self) -> _Token:
        token = self.tokens[self.cursor]
        self.cursor += 1
        return token

    def at_keyword(self, word: str) -> bool:
        token = self.current()
        return token.kind == "name" and token.text.lower() == word

    def expect_keyword(self, word: str) -> None:
        if not self.at_keyword(word):
            raise QuerySyntaxError(f"expected {word!r}", self.current().pos)
        self.advance()

    def parse(self):
        expr = self.parse_expr()
        if self.current().kind != "end":
            raise QuerySyntaxError(
                f"unexpected {self.current().text!r}", self.current().pos
            )
        return expr

    def parse_expr(self):
        parts = [self.parse_term()]
        while self.at_keyword("or"):
            self.advance()
            parts.append(self.parse_term())
        return parts[0] if len(parts) == 1 else Or(parts=tuple(parts))

    def parse_term(self):
        parts = [self.parse_factor()]
        while self.at_keyword("and"):
            self.advance()
            parts.append(self.parse_factor())
        return parts[0] if len(parts) == 1 else And(parts=tuple(parts))

    def parse_factor(self):
        if self.at_keyword("not"):
            self.advance()
            return Not(operand=self.parse_factor())
        return self.parse_atom()

    def parse_atom(self):
        token = self.current()
        if token.kind == "lparen":
            self.advance()
            expr = self.parse_expr()
            if self.current().kind != "rparen":
                raise QuerySyntaxError("expected ')'", self.current().pos)
            self.advance()
            return expr
        if token.kind != "name" or token.text.lower() in KEYWORDS:
            raise QuerySyntaxError(
                f"expected a name, got {token.text or 'end of input'!r}", token.pos
            )
        name = self.advance().text.lower()
        if self.at_keyword("value"):
            self.advance()
            target = self.current()
            if target.kind != "name" or target.text.lower() in KEYWORDS:
                raise QuerySyntaxError("expected an individual name", target.pos)
            self.advance()
            return HasValue(prop=name, value=target.text.lower())
        if self.at_keyword("some"):
            self.advance()
            return Some(prop=name, operand=self.parse_atom())
        if self.current().kind == "op":
            op = self.advance().text
            number = self.current()
            if number.kind != "int":
                raise QuerySyntaxError("expected an integer", number.pos)
            self.advance()
            return Compare(prop=name, op=op, value=int(number.text))
        return Named(name=name)


def parse_query(text: str):
    """Parse query text into an expression tree.

    Name-agnostic: names resolve against an ontology at evaluation time, and
    are lowercased here since identifiers are case-insensitive.
    """
    if not text or not text.strip():
        raise QuerySyntaxError("empty query", 0)
    return _Parser(text).parse()


# -- printer --------------------------------------------------------------------

def _precedence(expr) -> int:
    if isinstance(expr, Or):
        return 1
    if isinstance(expr, And):
        return 2
    if isinstance(expr, Not):
        return 3
    return 4


def print_expression(expr) -> str:
    """Canonical text such that parse_query(print_expression(e)) == e.

    Parentheses are minimal: same-precedence nesting is parenthesized so the
    n-ary And/Or structure survives a round trip.
    """
    if isinstance(expr, Named):
        return expr.name
    if isinstance(expr, HasValue):
        return f"{expr.prop} value {expr.value}"
    if isinstance(expr, Compare):
        return f"{expr.prop} {expr.op} {expr.value}"
    if isinstance(expr, Some):
        inner = print_expression(expr.operand)
        if not isinstance(expr.operand, Named):
            inner = f"({inner})"
        return f"{expr.prop} some {inner}"
    if isinstance(expr, Not):
        inner = print_expression(expr.operand)
        if _precedence(expr.operand) < 3:
            inner = f"({inner})"
        return f"not {inner}"
    if isinstance(expr, (And, Or)):
        word = " and " if isinstance(expr, And) else " or "
        own = _precedence(expr)
        pieces = []
        for part in expr.parts:
            text = print_expression(part)
            if _precedence(part) <= own:
                text = f"({text})"
            pieces.append(text)
        return word.join(pieces)
    raise TypeError(f"not an expression: {expr!r}")


# -- evaluator --------------------------------------------------------------------

@dataclass(frozen=True)
class QueryResult:
    matches: tuple[str, ...]
    expression: str
    universe_size: int


def tool_universe(onto: Ontology) -> frozenset[str]:
    if UNIVERSE_CLASS in onto.classes:
        return onto.instances_of(UNIVERSE_CLASS)
    return frozenset(onto.individuals)


def _property_pairs(onto: Ontology, ind, props: frozenset[str]):
    positives = {(p, t) for p, t in ind.property_assertions if p in props}
    negated = {(p, t) for p, t in ind.negative_assertions if p in props}
    return {(p, t) for p, t in positives if (p, t) not in negated}


def evaluate_set(expr, onto: Ontology) -> frozenset[str]:
    """The match set, unordered. See evaluate() for the packaged result."""
    if isinstance(expr, Named):
        if expr.name not in onto.classes and expr.name != "thing":
            raise UnknownReferenceError(f"unknown class {expr.name!r}", expr.name)
        return onto.instances_of(expr.name)
    if isinstance(expr, And):
        result = evaluate_set(expr.parts[0], onto)
        for part in expr.parts[1:]:
            result &= evaluate_set(part, onto)
        return result
    if isinstance(expr, Or):
        result = evaluate_set(expr.parts[0], onto)
        for part in expr.parts[1:]:
            result |= evaluate_set(part, onto)
        return result
    if isinstance(expr, Not):
        return tool_universe(onto) - evaluate_set(expr.operand, onto)
    if isinstance(expr, HasValue):
        prop = _resolve_object_property(onto, expr.prop)
        if expr.value not in onto.individuals:
            raise UnknownReferenceError(
                f"unknown individual {expr.value!r}", expr.value
            )
        props = onto.sub_properties(prop.id)
        return frozenset(
            ind.id
            for ind in onto.individuals.values()
            if any(t == expr.value for _, t in _property_pairs(onto, ind, props))
        )
    if isinstance(expr, Some):
        prop = _resolve_object_property(onto, expr.prop)
        props = onto.sub_properties(prop.id)
        targets = evaluate_set(expr.operand, onto)
        return frozenset(
            ind.id
            for ind in onto.individuals.values()
            if any(t in targets for _, t in _property_pairs(onto, ind, props))
        )
    if isinstance(expr, Compare):
        if expr.prop not in onto.properties:
            raise UnknownReferenceError(f"unknown property {expr.prop!r}", expr.prop)
        pdef = onto.properties[expr.prop]
        if pdef.kind != INTEGER:
            raise TypeMismatchError(
                f"property {expr.prop!r} is object-valued; comparison needs an"
                " integer-valued property"
            )
        props = onto.sub_properties(pdef.id)
        ops = {
            "=": lambda v: v == expr.value,
            ">=": lambda v: v >= expr.value,
            "<=": lambda v: v <= expr.value,
        }
        test = ops[expr.op]
        return frozenset(
            ind.id
            for ind in onto.individuals.values()
            if any(
                isinstance(t, int) and test(t)
                for p, t in ind.property_assertions
                if p in props
            )
        )
    raise TypeError(f"not an expression: {expr!r}")


def _resolve_object_property(onto: Ontology, name: str):
    if name not in onto.properties:
        raise UnknownReferenceError(f"unknown property {name!r}", name)
    pdef = onto.properties[name]
    if pdef.kind == INTEGER:
        raise TypeMismatchError(
            f"property {name!r} is integer-valued; use a comparison instead"
        )
    return pdef


YEAR_PROPERTY = "lastupdate"


def result_order_key(onto: Ontology, ind_id: str):
    """Most recently updated first, then label; year-less individuals last."""
    ind = onto.individuals[ind_id]
    years = [t for p, t in ind.property_assertions
             if p == YEAR_PROPERTY and isinstance(t, int)]
    year = max(years) if years else None
    return (0 if year is not None else 1, -(year or 0), ind.label.lower(), ind.id)


def evaluate(expr, onto: Ontology) -> QueryResult:
    matches = sorted(evaluate_set(expr, onto), key=lambda i: result_order_key(onto, i))
    return QueryResult(
        matches=tuple(matches),
        expression=print_expression(expr),
        universe_size=len(tool_universe(onto)),
    )


def run_query(text: str, onto: Ontology) -> QueryResult:
    return evaluate(parse_query(text), onto)
