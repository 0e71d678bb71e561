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

"""Evaluation of functor expressions on finite spaces and continuous maps.

Evaluation works on carriers: spaces whose points stand for functor values. The
base carrier of X has the points of X standing for Pt values; applying Id
returns the carrier unchanged, so under a composition F . G the Id positions of
F hold G-values directly.
"""

from __future__ import annotations

from logging import getLogger
from typing import (
    AbstractSet,
    Callable,
    Dict,
    Iterable,
    Mapping,
    NamedTuple,
    Optional,
)

from typing_extensions import Final

from vietorised.functor.functor_expr import (
    Comp,
    Const,
    FunctorExpr,
    Hyper,
    Identity,
    Prod,
    Sum,
    const_names,
    print_functor,
)
from vietorised.functor.functor_parser import parse_functor
from vietorised.functor.functor_value import (
    ConstPt,
    FValue,
    Inl,
    Inr,
    Pair,
    Pt,
    SetOf,
    serialize_value,
)
from vietorised.topology import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    SizeLimits,
    coproduct,
    product,
)
from vietorised.vietoris import hyperspace_leq, hyperspace_masks
from vietorised.vietorised_error import VietorisedError

_LOGGER = getLogger(__name__)

Env = Mapping[str, FinSpace]
ValueMap = Callable[[FValue], FValue]
ValueTest = Callable[[FValue], bool]


class UnboundConstant(VietorisedError):
    def __init__(self, name: str):
        self.name = name

    def __str__(self) -> str:
        return f"Constant space '{self.name}' is not bound."


class NotInFunctorImage(VietorisedError):
    def __init__(self, value: FValue, functor: str):
        self.value = value
        self.functor = functor

    def __str__(self) -> str:
        return (
            f"Value {serialize_value(self.value)} is not an element of "
            f"{self.functor} applied to the carrier."
        )


class Carrier:
    """A space together with the functor value every point stands for."""

    def __init__(self, space: FinSpace, values: Mapping[str, FValue]):
        self.space: Final = space
        self.values: Final = dict(values)
        self._names: Final = {v: n for n, v in self.values.items()}

    @classmethod
    def base(cls, space: FinSpace) -> Carrier:
        return Carrier(space, {x: Pt(x) for x in space})

    @classmethod
    def build(
        cls,
        values: Mapping[str, FValue],
        leq: Callable[[str, str], bool],
        *,
        limits: SizeLimits,
        construction: str,
    ) -> Carrier:
        """A carrier named by serialized values, ordered by leq on the old names."""
        by_name = {serialize_value(v): old for old, v in values.items()}
        space = FinSpace.from_leq(
            by_name,
            lambda a, b: leq(by_name[a], by_name[b]),
            max_points=limits.max_derived_points,
            construction=construction,
        )
        return Carrier(space, {n: values[old] for n, old in by_name.items()})

    def __len__(self) -> int:
        return len(self.space)

    def __contains__(self, value: object) -> bool:
        return value in self._names

    def name(self, value: FValue) -> str:
        return self._names[value]

    def is_canonical(self) -> bool:
        return all(serialize_value(v) == n for n, v in self.values.items())

    def canonical(self) -> Carrier:
        if self.is_canonical():
            return self
        return Carrier.build(
            self.values,
            self.space.leq,
            limits=SizeLimits(max_derived_points=max(len(self), 1)),
            construction="Functor image",
        )


class Restriction(NamedTuple):
    """Image of F(S) -> F(X) for a subspace S of X.

    contains decides membership in the image, pull sends a member to its unique
    preimage in F(S).
    """

    contains: ValueTest
    pull: ValueMap


class Functor:
    """A parsed functor expression bound to an environment of constant spaces."""

    def __init__(
        self,
        expr: FunctorExpr,
        env: Optional[Env] = None,
        *,
        limits: SizeLimits = DEFAULT_LIMITS,
    ):
        env = dict(env or {})
        for name in sorted(const_names(expr)):
            if name not in env:
                raise UnboundConstant(name)
        self.expr: Final = expr
        self.env: Final = {name: env[name] for name in const_names(expr)}
        self.limits: Final = limits
        self._carriers: Dict[FinSpace, Carrier] = {}

    @classmethod
    def parse(
        cls,
        text: str,
        env: Optional[Env] = None,
        *,
        limits: SizeLimits = DEFAULT_LIMITS,
    ) -> Functor:
        return Functor(parse_functor(text), env, limits=limits)

    def __str__(self) -> str:
        return print_functor(self.expr)

    def __repr__(self) -> str:
        return f"Functor({print_functor(self.expr)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Functor):
            return False
        return self.expr == other.expr and self.env == other.env

    def __hash__(self) -> int:
        return hash(self.expr)

    def carrier(self, space: FinSpace) -> Carrier:
        """F(space) with its points named by the serialized values."""
        if space not in self._carriers:
            _LOGGER.debug(f"Building {self} of a {len(space)}-point space.")
            carrier = _apply(self.expr, Carrier.base(space), self.env, self.limits)
            self._carriers[space] = carrier.canonical()
            _LOGGER.debug(f"Done building {self}: {len(carrier)} points.")
        return self._carriers[space]

    def apply(self, space: FinSpace) -> FinSpace:
        return self.carrier(space).space

    def value_map(self, f: ContMap) -> ValueMap:
        """F(f) acting on values of F(f.dom)."""
        return _map(
            self.expr,
            Carrier.base(f.dom),
            Carrier.base(f.cod),
            lambda v: Pt(f(_point(v))),
            self.env,
            self.limits,
        )

    def apply_map(self, f: ContMap) -> ContMap:
        dom = self.carrier(f.dom)
        cod = self.carrier(f.cod)
        action = self.value_map(f)
        mapping: Dict[str, str] = {}
        for name, value in dom.values.items():
            image = action(value)
            if image not in cod:
                raise NotInFunctorImage(image, str(self))
            mapping[name] = cod.name(image)
        return ContMap(dom.space, cod.space, mapping)

    def contains(self, space: FinSpace, value: FValue) -> bool:
        return value in self.carrier(space)

    def restriction(self, space: FinSpace, subset: AbstractSet[str]) -> Restriction:
        """Membership in, and preimages under, F of the inclusion subset -> space."""
        kept = frozenset(subset)
        return _restriction(
            self.expr,
            Carrier.base(space),
            Restriction(lambda v: _point(v) in kept, lambda v: v),
            self.env,
            self.limits,
        )


def _point(value: FValue) -> str:
    if not isinstance(value, Pt):
        raise TypeError(f"Expected a point value, got {value!r}")
    return value.point


def _apply(
    expr: FunctorExpr, carrier: Carrier, env: Env, limits: SizeLimits
) -> Carrier:
    if isinstance(expr, Identity):
        return carrier

    elif isinstance(expr, Const):
        space = env[expr.name]
        return Carrier.build(
            {a: ConstPt(a) for a in space},
            space.leq,
            limits=limits,
            construction=f"Constant {expr.name}",
        )

    elif isinstance(expr, Sum):
        left = _apply(expr.left, carrier, env, limits)
        right = _apply(expr.right, carrier, env, limits)
        summed = coproduct(left.space, right.space, limits=limits)
        tagged: Dict[str, FValue] = {}
        for name, (side, point) in summed.components.items():
            tagged[name] = (
                Inl(left.values[point]) if side == 0 else Inr(right.values[point])
            )
        return Carrier.build(
            tagged, summed.space.leq, limits=limits, construction="Sum"
        )

    elif isinstance(expr, Prod):
        left = _apply(expr.left, carrier, env, limits)
        right = _apply(expr.right, carrier, env, limits)
        multiplied = product(left.space, right.space, limits=limits)
        pairs: Dict[str, FValue] = {
            name: Pair(left.values[x], right.values[y])
            for name, (x, y) in multiplied.components.items()
        }
        return Carrier.build(
            pairs, multiplied.space.leq, limits=limits, construction="Product"
        )

    elif isinstance(expr, Hyper):
        base = carrier.space
        masks = hyperspace_masks(
            base, expr.variant, limit=limits.max_derived_points
        )
        leq = hyperspace_leq(base, expr.variant)
        by_key = {str(m): m for m in masks}
        sets: Dict[str, FValue] = {
            str(m): SetOf.of(carrier.values[p] for p in base.subset(m)) for m in masks
        }
        return Carrier.build(
            sets,
            lambda a, b: leq(by_key[a], by_key[b]),
            limits=limits,
            construction=f"Hyperspace {expr.variant.value}",
        )

    elif isinstance(expr, Comp):
        inner = _apply(expr.inner, carrier, env, limits)
        return _apply(expr.outer, inner, env, limits)

    raise TypeError(f"Not a functor expression: {expr!r}")


def _map(
    expr: FunctorExpr,
    dom: Carrier,
    cod: Carrier,
    action: ValueMap,
    env: Env,
    limits: SizeLimits,
) -> ValueMap:
    """Lift action (dom values -> cod values) through expr."""
    if isinstance(expr, Identity):
        return action

    elif isinstance(expr, Const):
        return lambda v: v

    elif isinstance(expr, Sum):
        left = _map(expr.left, dom, cod, action, env, limits)
        right = _map(expr.right, dom, cod, action, env, limits)

        def sum_action(v: FValue) -> FValue:
            if isinstance(v, Inl):
                return Inl(left(v.value))
            elif isinstance(v, Inr):
                return Inr(right(v.value))
            raise TypeError(f"Expected a tagged value, got {v!r}")

        return sum_action

    elif isinstance(expr, Prod):
        first = _map(expr.left, dom, cod, action, env, limits)
        second = _map(expr.right, dom, cod, action, env, limits)

        def prod_action(v: FValue) -> FValue:
            if not isinstance(v, Pair):
                raise TypeError(f"Expected a pair value, got {v!r}")
            return Pair(first(v.first), second(v.second))

        return prod_action

    elif isinstance(expr, Hyper):
        if expr.variant.is_compact:
            return lambda v: SetOf.of(action(c) for c in _members(v))

        def lower_action(v: FValue) -> FValue:
            image = cod.space.mask(cod.name(action(c)) for c in _members(v))
            closed = cod.space.down_closure_mask(image)
            return SetOf.of(cod.values[p] for p in cod.space.subset(closed))

        return lower_action

    elif isinstance(expr, Comp):
        inner = _map(expr.inner, dom, cod, action, env, limits)
        return _map(
            expr.outer,
            _apply(expr.inner, dom, env, limits),
            _apply(expr.inner, cod, env, limits),
            inner,
            env,
            limits,
        )

    raise TypeError(f"Not a functor expression: {expr!r}")


def _members(value: FValue) -> Iterable[FValue]:
    if not isinstance(value, SetOf):
        raise TypeError(f"Expected a set value, got {value!r}")
    return value.values


def _restriction(
    expr: FunctorExpr,
    carrier: Carrier,
    base: Restriction,
    env: Env,
    limits: SizeLimits,
) -> Restriction:
    if isinstance(expr, Identity):
        return base

    elif isinstance(expr, Const):
        return Restriction(lambda v: True, lambda v: v)

    elif isinstance(expr, Sum):
        left = _restriction(expr.left, carrier, base, env, limits)
        right = _restriction(expr.right, carrier, base, env, limits)

        def sum_contains(v: FValue) -> bool:
            if isinstance(v, Inl):
                return left.contains(v.value)
            elif isinstance(v, Inr):
                return right.contains(v.value)
            return False

        def sum_pull(v: FValue) -> FValue:
            if isinstance(v, Inl):
                return Inl(left.pull(v.value))
            elif isinstance(v, Inr):
                return Inr(right.pull(v.value))
            raise TypeError(f"Expected a tagged value, got {v!r}")

        return Restriction(sum_contains, sum_pull)

    elif isinstance(expr, Prod):
        first = _restriction(expr.left, carrier, base, env, limits)
        second = _restriction(expr.right, carrier, base, env, limits)

        def prod_contains(v: FValue) -> bool:
            return (
                isinstance(v, Pair)
                and first.contains(v.first)
                and second.contains(v.second)
            )

        def prod_pull(v: FValue) -> FValue:
            if not isinstance(v, Pair):
                raise TypeError(f"Expected a pair value, got {v!r}")
            return Pair(first.pull(v.first), second.pull(v.second))

        return Restriction(prod_contains, prod_pull)

    elif isinstance(expr, Hyper):
        if expr.variant.is_compact:
            return Restriction(
                lambda v: all(base.contains(c) for c in _members(v)),
                lambda v: SetOf.of(base.pull(c) for c in _members(v)),
            )

        # A down-set A is the closure of the image of a down-set of the subspace
        # iff A lies below its own part inside the subspace.
        def lower_contains(v: FValue) -> bool:
            members = list(_members(v))
            whole = carrier.space.mask(carrier.name(c) for c in members)
            inside = carrier.space.mask(
                carrier.name(c) for c in members if base.contains(c)
            )
            return whole & ~carrier.space.down_closure_mask(inside) == 0

        return Restriction(
            lower_contains,
            lambda v: SetOf.of(base.pull(c) for c in _members(v) if base.contains(c)),
        )

    elif isinstance(expr, Comp):
        inner = _restriction(expr.inner, carrier, base, env, limits)
        return _restriction(
            expr.outer, _apply(expr.inner, carrier, env, limits), inner, env, limits
        )

    raise TypeError(f"Not a functor expression: {expr!r}")


def apply_functor(
    expr: FunctorExpr,
    space: FinSpace,
    env: Optional[Env] = None,
    *,
    limits: SizeLimits = DEFAULT_LIMITS,
) -> FinSpace:
    return Functor(expr, env, limits=limits).apply(space)


def apply_functor_map(
    expr: FunctorExpr,
    f: ContMap,
    env: Optional[Env] = None,
    *,
    limits: SizeLimits = DEFAULT_LIMITS,
) -> ContMap:
    return Functor(expr, env, limits=limits).apply_map(f)
