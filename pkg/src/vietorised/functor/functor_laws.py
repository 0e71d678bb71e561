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

from itertools import product as cartesian
from logging import getLogger
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel as PydanticModel
from typing_extensions import Final, Protocol

from vietorised.functor.functor_eval import Env, Functor
from vietorised.functor.functor_expr import FunctorExpr
from vietorised.topology import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    SizeLimits,
    enumerate_monotone_maps,
    enumerate_small_spaces,
    find_discontinuity,
)
from vietorised.vietoris import ClassicVariant, Hyperspace, hyperspace_map

_LOGGER = getLogger(__name__)


class FunctorAction(Protocol):
    def apply(self, space: FinSpace) -> FinSpace:
        ...

    def apply_map(self, f: ContMap) -> ContMap:
        ...


class ClassicVietorisAction:
    """Closed sets with the hit-and-miss topology; fails the functor laws."""

    def __init__(self, *, limits: SizeLimits = DEFAULT_LIMITS):
        self._limits = limits

    def __str__(self) -> str:
        return "classic-vietoris"

    def apply(self, space: FinSpace) -> FinSpace:
        return Hyperspace(space, ClassicVariant.CLASSIC, limits=self._limits).space

    def apply_map(self, f: ContMap) -> ContMap:
        return hyperspace_map(f, ClassicVariant.CLASSIC, limits=self._limits)


CLASSIC: Final = ClassicVietorisAction()


class LawWitness(PydanticModel):
    law: str
    maps: List[Dict[str, str]]
    detail: str


class FunctorLawReport(PydanticModel):
    functor: str
    passed: bool
    spaces_checked: int
    maps_checked: int
    compositions_checked: int
    witness: Optional[LawWitness] = None


def _map_key(f: ContMap) -> Tuple[FinSpace, FinSpace, Tuple[Tuple[str, str], ...]]:
    return f.dom, f.cod, tuple(f.items())


def check_functor_laws(
    functor: Union[FunctorExpr, FunctorAction, Functor],
    spaces: Optional[Sequence[FinSpace]] = None,
    maps: Optional[Sequence[ContMap]] = None,
    env: Optional[Env] = None,
    *,
    max_points: int = 3,
    limits: SizeLimits = DEFAULT_LIMITS,
) -> FunctorLawReport:
    """Check F(id) = id, F(g . f) = F(g) . F(f) and continuity of every F(f).

    Without explicit test data, all spaces up to max_points points (up to
    isomorphism) and all continuous maps between them are used. The first
    failure is reported as witness.
    """
    action: FunctorAction
    if hasattr(functor, "apply_map"):
        action = functor  # type: ignore
    else:
        action = Functor(functor, env, limits=limits)  # type: ignore

    if spaces is None:
        spaces = list(enumerate_small_spaces(max_points))
    if maps is None:
        maps = [
            f
            for dom, cod in cartesian(spaces, spaces)
            for f in enumerate_monotone_maps(dom, cod)
        ]
    _LOGGER.debug(
        f"Checking functor laws of {action} on {len(spaces)} spaces and "
        f"{len(maps)} maps."
    )

    def report(
        compositions: int, witness: Optional[LawWitness] = None
    ) -> FunctorLawReport:
        return FunctorLawReport(
            functor=str(action),
            passed=witness is None,
            spaces_checked=len(spaces or ()),
            maps_checked=len(maps or ()),
            compositions_checked=compositions,
            witness=witness,
        )

    for space in spaces:
        identity = ContMap.identity(space)
        lifted = action.apply_map(identity)
        if lifted != ContMap.identity(action.apply(space)):
            return report(
                0,
                LawWitness(
                    law="identity",
                    maps=[identity.as_dict()],
                    detail=f"F(id) differs from id on {list(space.points)}",
                ),
            )

    lifted_maps: Dict[object, ContMap] = {}

    def lift(f: ContMap) -> ContMap:
        key = _map_key(f)
        if key not in lifted_maps:
            lifted_maps[key] = action.apply_map(f)
        return lifted_maps[key]

    for f in maps:
        discontinuity = find_discontinuity(lift(f))
        if discontinuity is not None:
            x, y = discontinuity
            return report(
                0,
                LawWitness(
                    law="continuity",
                    maps=[f.as_dict()],
                    detail=f"F(f) is not monotone on {x} <= {y}",
                ),
            )

    by_dom: Dict[FinSpace, List[ContMap]] = {}
    for g in maps:
        by_dom.setdefault(g.dom, []).append(g)

    compositions = 0
    for f in maps:
        lifted_f = lift(f)
        for g in by_dom.get(f.cod, ()):
            compositions += 1
            lifted_g = lift(g)
            lifted_gf = lift(g.compose(f))
            for p in lifted_f.dom:
                if lifted_g(lifted_f(p)) != lifted_gf(p):
                    return report(
                        compositions,
                        LawWitness(
                            law="composition",
                            maps=[f.as_dict(), g.as_dict()],
                            detail=f"F(g . f) and F(g) . F(f) differ at {p}",
                        ),
                    )
    return report(compositions)
