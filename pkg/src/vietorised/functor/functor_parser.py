#
# Copyright 2022 The vietorised authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Recursive-descent parser for functor expressions.

    comp := sum ("." comp)?
    sum  := prod ("+" prod)*
    prod := atom ("*" atom)*
    atom := "Id" | "V" | "Vl" | "V+" | "Vc" | "C" "(" NAME ")" | "(" comp ")"

"V" immediately followed by "+" is the leaf "V+" unless the next non-blank
character after the "+" starts an operand, in which case the "+" is a sum.
"""

from __future__ import annotations

from typing import AbstractSet, Iterable, List, NamedTuple

from typing_extensions import Final

from vietorised.functor.functor_expr import (
    CONST_NAME_PATTERN,
    Comp,
    Const,
    FunctorExpr,
    Hyper,
    Identity,
    Prod,
    Sum,
)
from vietorised.vietoris import HyperVariant
from vietorised.vietorised_error import VietorisedError

_LEAVES: Final = {
    "Id": Identity(),
    "V": Hyper(HyperVariant.COMPACT),
    "Vl": Hyper(HyperVariant.LOWER),
    "V+": Hyper(HyperVariant.COMPACT_NONEMPTY),
    "Vc": Hyper(HyperVariant.COMPACT_CONNECTED),
}
_ATOM_STARTS: Final = frozenset([*_LEAVES, "C", "("])
_END: Final = "end of input"
_NAME: Final = "constant name"


class ParseError(VietorisedError):
    def __init__(self, text: str, offset: int, expected: Iterable[str], found: str):
        self.text = text
        # Byte offset into the UTF-8 encoding of text.
        self.offset = len(text[:offset].encode("utf-8"))
        self.expected = frozenset(expected)
        self.found = found

    def __str__(self) -> str:
        expected = ", ".join(f"'{e}'" for e in sorted(self.expected))
        return (
            f"Parse error at byte {self.offset}: expected one of {expected}, "
            f"found '{self.found}'."
        )


class _Token(NamedTuple):
    kind: str
    text: str
    offset: int


def _starts_operand(char: str) -> bool:
    return char.isalnum() or char == "_" or char == "("


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    while i < len(text):
        char = text[i]
        if char.isspace():
            i += 1
        elif char in "()*+.":
            tokens.append(_Token(char, char, i))
            i += 1
        else:
            match = CONST_NAME_PATTERN.match(text, i)
            if match is None:
                raise ParseError(text, i, _ATOM_STARTS, char)
            word = match.group()
            end = match.end()
            if word == "V" and text[end : end + 1] == "+":
                rest = text[end + 1 :].lstrip()
                if not (rest and _starts_operand(rest[0])):
                    word = "V+"
                    end += 1
            tokens.append(_Token("word", word, i))
            i = end
    tokens.append(_Token(_END, "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self._text = text
        self._tokens = _tokenize(text)
        self._position = 0

    def _peek(self) -> _Token:
        return self._tokens[self._position]

    def _advance(self) -> _Token:
        token = self._tokens[self._position]
        self._position += 1
        return token

    def _error(self, expected: AbstractSet[str]) -> ParseError:
        token = self._peek()
        return ParseError(self._text, token.offset, expected, token.text or _END)

    def _expect(self, kind: str) -> _Token:
        if self._peek().kind != kind:
            raise self._error({kind})
        return self._advance()

    def parse(self) -> FunctorExpr:
        expr = self._comp()
        if self._peek().kind != _END:
            raise self._error({"*", "+", ".", _END})
        return expr

    def _comp(self) -> FunctorExpr:
        outer = self._sum()
        if self._peek().kind == ".":
            self._advance()
            return Comp(outer, self._comp())
        return outer

    def _sum(self) -> FunctorExpr:
        expr = self._prod()
        while self._peek().kind == "+":
            self._advance()
            expr = Sum(expr, self._prod())
        return expr

    def _prod(self) -> FunctorExpr:
        expr = self._atom()
        while self._peek().kind == "*":
            self._advance()
            expr = Prod(expr, self._atom())
        return expr

    def _atom(self) -> FunctorExpr:
        token = self._peek()
        if token.kind == "(":
            self._advance()
            expr = self._comp()
            self._expect(")")
            return expr
        if token.kind == "word":
            if token.text in _LEAVES:
                self._advance()
                return _LEAVES[token.text]
            if token.text == "C":
                self._advance()
                self._expect("(")
                if self._peek().kind != "word" or self._peek().text == "V+":
                    raise self._error({_NAME})
                name = self._advance().text
                self._expect(")")
                return Const(name)
        raise self._error(_ATOM_STARTS)


def parse_functor(text: str) -> FunctorExpr:
    return _Parser(text).parse()
