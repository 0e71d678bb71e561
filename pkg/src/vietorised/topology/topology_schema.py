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

from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel as PydanticModel
from pydantic import Extra, root_validator, validator

from vietorised.topology.topology_space import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    SizeLimits,
    space_from_opens,
)


class SpaceModel(PydanticModel):
    """JSON form of a space: its points plus either its opens or its preorder."""

    points: List[str]
    opens: Optional[List[List[str]]] = None
    leq: Optional[List[Tuple[str, str]]] = None

    class Config:
        extra = Extra.forbid

    @validator("points")
    def _check_points_unique(cls, points: List[str]) -> List[str]:  # noqa: N805
        if len(set(points)) != len(points):
            raise ValueError("points must be unique.")
        return points

    @root_validator(skip_on_failure=True)
    def _check_exactly_one_structure(  # noqa: N805
        cls, values: Dict[str, Any]
    ) -> Dict[str, Any]:
        if (values.get("opens") is None) == (values.get("leq") is None):
            raise ValueError("exactly one of 'opens' and 'leq' must be given.")
        return values

    @classmethod
    def from_space(cls, space: FinSpace) -> SpaceModel:
        return SpaceModel(
            points=list(space.points),
            leq=[(x, y) for x, y in space.relation() if x != y],
        )

    def to_space(self, *, limits: SizeLimits = DEFAULT_LIMITS) -> FinSpace:
        if self.opens is not None:
            return space_from_opens(self.points, self.opens, limits=limits)
        assert self.leq is not None
        return FinSpace.from_preorder(self.points, self.leq, limits=limits)


class MapModel(PydanticModel):
    """JSON form of a map; dom and cod are inline spaces or workspace references."""

    dom: Union[SpaceModel, str]
    cod: Union[SpaceModel, str]
    map: Dict[str, str]

    class Config:
        extra = Extra.forbid

    @classmethod
    def from_map(cls, f: ContMap) -> MapModel:
        return MapModel(
            dom=SpaceModel.from_space(f.dom),
            cod=SpaceModel.from_space(f.cod),
            map=f.as_dict(),
        )

    def to_map(self, dom: FinSpace, cod: FinSpace) -> ContMap:
        return ContMap(dom, cod, self.map)


def space_to_json(space: FinSpace) -> Mapping[str, object]:
    return {
        "points": list(space.points),
        "leq": [[x, y] for x, y in space.relation() if x != y],
    }
