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

"""Elements of F(X): tagged trees with a canonical JSON serialization.

The serialization is used as the point name inside the space F(X), so it must
be deterministic: object keys are sorted and set members are ordered by their
own serialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, FrozenSet, Iterable, Union

from vietorised._utils import canonical_json
from vietorised.vietorised_error import InvalidInput


@dataclass(frozen=True)
class Pt:
    point: str


@dataclass(frozen=True)
class ConstPt:
    point: str


@dataclass(frozen=True)
class Pair:
    first: FValue
    second: FValue


@dataclass(frozen=True)
class Inl:
    value: FValue


@dataclass(frozen=True)
class Inr:
    value: FValue


@dataclass(frozen=True)
class SetOf:
    values: FrozenSet[FValue]

    @classmethod
    def of(cls, values: Iterable[FValue]) -> SetOf:
        return SetOf(frozenset(values))


FValue = Union[Pt, ConstPt, Pair, Inl, Inr, SetOf]


def value_to_json(value: FValue) -> Any:
    if isinstance(value, Pt):
        return {"pt": value.point}
    elif isinstance(value, ConstPt):
        return {"const": value.point}
    elif isinstance(value, Pair):
        return {"pair": [value_to_json(value.first), value_to_json(value.second)]}
    elif isinstance(value, Inl):
        return {"inl": value_to_json(value.value)}
    elif isinstance(value, Inr):
        return {"inr": value_to_json(value.value)}
    elif isinstance(value, SetOf):
        return {
            "set": sorted(
                (value_to_json(v) for v in value.values), key=canonical_json
            )
        }
    raise TypeError(f"Not a functor value: {value!r}")


def value_from_json(obj: Any, path: str = "") -> FValue:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InvalidInput("Value must be an object with exactly one key", path=path)
    ((key, payload),) = obj.items()
    path = f"{path}.{key}" if path else key
    if key in ("pt", "const"):
        if not isinstance(payload, str):
            raise InvalidInput("Point must be a string", path=path)
        return Pt(payload) if key == "pt" else ConstPt(payload)
    elif key == "pair":
        if not isinstance(payload, list) or len(payload) != 2:
            raise InvalidInput("Pair must be a list of two values", path=path)
        return Pair(
            value_from_json(payload[0], f"{path}[0]"),
            value_from_json(payload[1], f"{path}[1]"),
        )
    elif key == "inl":
        return Inl(value_from_json(payload, path))
    elif key == "inr":
        return Inr(value_from_json(payload, path))
    elif key == "set":
        if not isinstance(payload, list):
            raise InvalidInput("Set must be a list of values", path=path)
        values = [value_from_json(v, f"{path}[{i}]") for i, v in enumerate(payload)]
        if len(set(values)) != len(values):
            raise InvalidInput("Set members must be pairwise distinct", path=path)
        return SetOf.of(values)
    raise InvalidInput(f"Unknown value tag '{key}'", path=path)


def serialize_value(value: FValue) -> str:
    return canonical_json(value_to_json(value))


def deserialize_value(text: str) -> FValue:
    return value_from_json(json.loads(text))
