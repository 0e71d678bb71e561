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

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterator, Union

from typing_extensions import Final

from vietorised.vietoris import HyperVariant

CONST_NAME_PATTERN: Final = re.compile(r"[A-Za-z0-9_]+")


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Const:
    name: str

    def __post_init__(self) -> None:
        if not CONST_NAME_PATTERN.fullmatch(self.name):
            raise ValueError(f"Invalid constant name: {self.name!r}")


@dataclass(frozen=True)
class Hyper:
    variant: HyperVariant


@dataclass(frozen=True)
class Sum:
    left: FunctorExpr
    right: FunctorExpr


@dataclass(frozen=True)
class Prod:
    left: FunctorExpr
    right: FunctorExpr


@dataclass(frozen=True)
class Comp:
    """outer after inner."""

    outer: FunctorExpr
    inner: FunctorExpr


FunctorExpr = Union[Identity, Const, Hyper, Sum, Prod, Comp]

# Binding strength; composition binds loosest.
_COMP: Final = 0
_SUM: Final = 1
_PROD: Final = 2
_ATOM: Final = 3


def print_functor(expr: FunctorExpr) -> str:
    """Canonical concrete syntax, with the fewest parentheses that parse back."""
    return _print(expr, _COMP)


def _print(expr: FunctorExpr, context: int) -> str:
    if isinstance(expr, Identity):
        return "Id"
    elif isinstance(expr, Const):
        return f"C({expr.name})"
    elif isinstance(expr, Hyper):
        return expr.variant.value

    if isinstance(expr, Sum):
        level = _SUM
        text = f"{_print(expr.left, _SUM)} + {_print(expr.right, _PROD)}"
    elif isinstance(expr, Prod):
        level = _PROD
        text = f"{_print(expr.left, _PROD)} * {_print(expr.right, _ATOM)}"
    elif isinstance(expr, Comp):
        level = _COMP
        text = f"{_print(expr.outer, _SUM)} . {_print(expr.inner, _COMP)}"
    else:
        raise TypeError(f"Not a functor expression: {expr!r}")
    return f"({text})" if context > level else text


def const_names(expr: FunctorExpr) -> FrozenSet[str]:
    return frozenset(node.name for node in iter_nodes(expr) if isinstance(node, Const))


def iter_nodes(expr: FunctorExpr) -> Iterator[FunctorExpr]:
    yield expr
    if isinstance(expr, (Sum, Prod)):
        yield from iter_nodes(expr.left)
        yield from iter_nodes(expr.right)
    elif isinstance(expr, Comp):
        yield from iter_nodes(expr.outer)
        yield from iter_nodes(expr.inner)


def depth(expr: FunctorExpr) -> int:
    if isinstance(expr, (Sum, Prod)):
        return 1 + max(depth(expr.left), depth(expr.right))
    elif isinstance(expr, Comp):
        return 1 + max(depth(expr.outer), depth(expr.inner))
    return 1
