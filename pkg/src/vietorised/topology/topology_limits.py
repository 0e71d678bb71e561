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

from logging import getLogger
from typing import Iterable, List, Mapping, NamedTuple, Sequence, Tuple

from vietorised._utils import canonical_json
from vietorised.topology.topology_space import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    InvalidMap,
    SizeLimits,
    check_size,
    generate_topology,
)
from vietorised.vietorised_error import VietorisedError

_LOGGER = getLogger(__name__)


class NotParallel(VietorisedError):
    def __init__(self, what: str, first: FinSpace, second: FinSpace):
        self.what = what
        self.first = first
        self.second = second

    def __str__(self) -> str:
        return (
            f"Maps are not parallel, their {self.what}s differ: "
            f"{list(self.first.points)} vs {list(self.second.points)}."
        )


def pair_point(x: str, y: str) -> str:
    return canonical_json([x, y])


def inl_point(x: str) -> str:
    return canonical_json(["inl", x])


def inr_point(y: str) -> str:
    return canonical_json(["inr", y])


class Product(NamedTuple):
    space: FinSpace
    proj1: ContMap
    proj2: ContMap
    # Product point name -> (x, y).
    components: Mapping[str, Tuple[str, str]]

    def point(self, x: str, y: str) -> str:
        return pair_point(x, y)

    def pairing(self, f: ContMap, g: ContMap) -> ContMap:
        """The unique map <f, g> into the product."""
        if f.dom != g.dom:
            raise NotParallel("domain", f.dom, g.dom)
        return ContMap(f.dom, self.space, {z: pair_point(f(z), g(z)) for z in f.dom})


class Coproduct(NamedTuple):
    space: FinSpace
    inl: ContMap
    inr: ContMap
    # Coproduct point name -> (0 or 1, original point).
    components: Mapping[str, Tuple[int, str]]


class Equalizer(NamedTuple):
    space: FinSpace
    embedding: ContMap


class InitialCone(NamedTuple):
    space: FinSpace
    legs: Tuple[ContMap, ...]


def product(
    first: FinSpace, second: FinSpace, *, limits: SizeLimits = DEFAULT_LIMITS
) -> Product:
    check_size("Product", len(first) * len(second), limits.max_derived_points)
    components = {pair_point(x, y): (x, y) for x in first for y in second}
    space = FinSpace.from_leq(
        components,
        lambda a, b: first.leq(components[a][0], components[b][0])
        and second.leq(components[a][1], components[b][1]),
        max_points=limits.max_derived_points,
        construction="Product",
    )
    return Product(
        space=space,
        proj1=ContMap(space, first, {p: xy[0] for p, xy in components.items()}),
        proj2=ContMap(space, second, {p: xy[1] for p, xy in components.items()}),
        components=components,
    )


def coproduct(
    first: FinSpace, second: FinSpace, *, limits: SizeLimits = DEFAULT_LIMITS
) -> Coproduct:
    check_size("Coproduct", len(first) + len(second), limits.max_derived_points)
    components = {inl_point(x): (0, x) for x in first}
    components.update({inr_point(y): (1, y) for y in second})
    factors = (first, second)

    def leq(a: str, b: str) -> bool:
        (side_a, x), (side_b, y) = components[a], components[b]
        return side_a == side_b and factors[side_a].leq(x, y)

    space = FinSpace.from_leq(
        components,
        leq,
        max_points=limits.max_derived_points,
        construction="Coproduct",
    )
    return Coproduct(
        space=space,
        inl=ContMap(first, space, {x: inl_point(x) for x in first}),
        inr=ContMap(second, space, {y: inr_point(y) for y in second}),
        components=components,
    )


def equalizer(f: ContMap, g: ContMap) -> Equalizer:
    if f.dom != g.dom:
        raise NotParallel("domain", f.dom, g.dom)
    if f.cod != g.cod:
        raise NotParallel("codomain", f.cod, g.cod)
    carrier = f.dom.subspace(x for x in f.dom if f(x) == g(x))
    return Equalizer(
        space=carrier, embedding=ContMap(carrier, f.dom, {x: x for x in carrier})
    )


def initial_topology(
    point_set: Iterable[str],
    cone: Sequence[Tuple[Mapping[str, str], FinSpace]],
    *,
    limits: SizeLimits = DEFAULT_LIMITS,
) -> InitialCone:
    """The coarsest topology on point_set making every leg of cone continuous.

    It is generated by the preimages of all opens of the leg codomains.
    """
    points = sorted(set(point_set))
    subbasis: List[List[str]] = []
    for mapping, cod in cone:
        for x in points:
            if x not in mapping:
                raise InvalidMap("Cone leg is not total", x)
        for open_ in cod.opens(limits=limits):
            subbasis.append([x for x in points if mapping[x] in open_])
    space = generate_topology(
        points,
        subbasis,
        limits=limits,
        max_points=limits.max_derived_points,
    )
    legs = tuple(
        ContMap(space, cod, {x: mapping[x] for x in points}) for mapping, cod in cone
    )
    return InitialCone(space=space, legs=legs)
