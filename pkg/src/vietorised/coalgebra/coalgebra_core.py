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
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple, Union

from pydantic import BaseModel as PydanticModel
from pydantic import Extra
from typing_extensions import Final

from vietorised.functor import (
    Env,
    FValue,
    Functor,
    deserialize_value,
    serialize_value,
    value_from_json,
    value_to_json,
)
from vietorised.topology import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    InvalidMap,
    SizeLimits,
    SpaceModel,
    enumerate_monotone_maps,
    find_discontinuity,
)
from vietorised.vietorised_error import VietorisedError

_LOGGER = getLogger(__name__)


class FunctorMismatch(VietorisedError):
    def __init__(self, first: Functor, second: Functor):
        self.first = first
        self.second = second

    def __str__(self) -> str:
        return f"Coalgebras are for different functors: {self.first} vs {self.second}."


class NotACoalgebra(VietorisedError):
    def __init__(self, point: str, reason: str, witness: Tuple[str, ...] = ()):
        self.point = point
        self.reason = reason
        self.witness = witness

    def __str__(self) -> str:
        return f"Structure at point '{self.point}': {self.reason}"


class Coalgebra:
    """A carrier X with a structure map X -> F(X), given pointwise as values."""

    def __init__(
        self, functor: Functor, carrier: FinSpace, structure: Mapping[str, FValue]
    ):
        for x in carrier:
            if x not in structure:
                raise NotACoalgebra(x, "structure is not defined here.")
        for x in structure:
            if x not in carrier:
                raise NotACoalgebra(x, "point is not in the carrier.")
        self.functor: Final = functor
        self.carrier: Final = carrier
        self.structure: Final = {x: structure[x] for x in carrier}

    @classmethod
    def from_map(cls, functor: Functor, structure: ContMap) -> Coalgebra:
        """The coalgebra of a map X -> F(X) whose codomain has serialized names."""
        return Coalgebra(
            functor,
            structure.dom,
            {x: deserialize_value(y) for x, y in structure.items()},
        )

    @classmethod
    def empty(cls, functor: Functor) -> Coalgebra:
        return Coalgebra(functor, FinSpace.empty(), {})

    def __call__(self, point: str) -> FValue:
        try:
            return self.structure[point]
        except KeyError:
            raise InvalidMap("Point is not in the carrier", point) from None

    def __len__(self) -> int:
        return len(self.carrier)

    def __iter__(self) -> Iterator[str]:
        return iter(self.carrier)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coalgebra):
            return False
        return (
            self.functor == other.functor
            and self.carrier == other.carrier
            and self.structure == other.structure
        )

    def __hash__(self) -> int:
        return hash((self.functor, self.carrier))

    def __repr__(self) -> str:
        structure = {x: serialize_value(v) for x, v in self.structure.items()}
        return f"Coalgebra({self.functor}, {list(self.carrier.points)}, {structure})"

    def structure_map(self) -> ContMap:
        """The structure as a map into F(carrier); raises for values outside it."""
        image = self.functor.carrier(self.carrier)
        mapping: Dict[str, str] = {}
        for x, value in self.structure.items():
            if value not in image:
                raise NotACoalgebra(
                    x,
                    f"{serialize_value(value)} is not an element of "
                    f"{self.functor} applied to the carrier.",
                )
            mapping[x] = image.name(value)
        return ContMap(self.carrier, image.space, mapping)

    def validate(self) -> Coalgebra:
        discontinuity = find_discontinuity(self.structure_map())
        if discontinuity is not None:
            x, y = discontinuity
            raise NotACoalgebra(
                x,
                f"structure is not continuous: {x} <= {y} but their values are "
                f"not ordered in {self.functor} applied to the carrier.",
                witness=(x, y),
            )
        return self


class CoalgHom:
    """A map between the carriers of two coalgebras for the same functor."""

    def __init__(self, src: Coalgebra, dst: Coalgebra, map: ContMap):
        if src.functor != dst.functor:
            raise FunctorMismatch(src.functor, dst.functor)
        if map.dom != src.carrier or map.cod != dst.carrier:
            raise InvalidMap("Homomorphism does not go between the carriers")
        self.src: Final = src
        self.dst: Final = dst
        self.map: Final = map

    @classmethod
    def identity(cls, coalg: Coalgebra) -> CoalgHom:
        return CoalgHom(coalg, coalg, ContMap.identity(coalg.carrier))

    def __repr__(self) -> str:
        return f"CoalgHom({dict(self.map.items())})"


class HomWitness(PydanticModel):
    law: str
    point: str
    detail: str


def find_hom_failure(h: CoalgHom) -> Optional[HomWitness]:
    """First violation of continuity or of F(h) . c = d . h, if any."""
    discontinuity = find_discontinuity(h.map)
    if discontinuity is not None:
        x, y = discontinuity
        return HomWitness(
            law="continuity",
            point=x,
            detail=f"{x} <= {y} but {h.map(x)} is not below {h.map(y)}",
        )
    lifted = h.src.functor.value_map(h.map)
    for x in h.src.carrier:
        left = lifted(h.src(x))
        right = h.dst(h.map(x))
        if left != right:
            return HomWitness(
                law="square",
                point=x,
                detail=(
                    f"F(h)(c({x})) = {serialize_value(left)} but "
                    f"d(h({x})) = {serialize_value(right)}"
                ),
            )
    return None


def is_coalg_hom(h: CoalgHom) -> bool:
    return find_hom_failure(h) is None


def homomorphisms(src: Coalgebra, dst: Coalgebra) -> Iterator[CoalgHom]:
    """All homomorphisms src -> dst, by trying every continuous map."""
    for f in enumerate_monotone_maps(src.carrier, dst.carrier):
        h = CoalgHom(src, dst, f)
        if find_hom_failure(h) is None:
            yield h


class CoalgebraModel(PydanticModel):
    """JSON form of a coalgebra; constant spaces of the functor go into constants."""

    functor: str
    carrier: Union[SpaceModel, str]
    structure: Dict[str, Any]
    constants: Dict[str, Union[SpaceModel, str]] = {}

    class Config:
        extra = Extra.forbid

    @classmethod
    def from_coalgebra(cls, coalg: Coalgebra) -> CoalgebraModel:
        return CoalgebraModel(
            functor=str(coalg.functor),
            carrier=SpaceModel.from_space(coalg.carrier),
            structure={x: value_to_json(v) for x, v in coalg.structure.items()},
            constants={
                name: SpaceModel.from_space(space)
                for name, space in sorted(coalg.functor.env.items())
            },
        )

    def to_coalgebra(
        self,
        carrier: FinSpace,
        env: Optional[Env] = None,
        *,
        limits: SizeLimits = DEFAULT_LIMITS,
    ) -> Coalgebra:
        functor = Functor.parse(self.functor, env, limits=limits)
        structure = {
            x: value_from_json(obj, f"structure.{x}")
            for x, obj in self.structure.items()
        }
        return Coalgebra(functor, carrier, structure).validate()


class HomModel(PydanticModel):
    src: Union[CoalgebraModel, str]
    dst: Union[CoalgebraModel, str]
    map: Dict[str, str]

    class Config:
        extra = Extra.forbid


def coalgebra_to_json(coalg: Coalgebra) -> Mapping[str, object]:
    return CoalgebraModel.from_coalgebra(coalg).dict(exclude_none=True)
