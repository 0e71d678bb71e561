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

from hashlib import sha1
from io import BytesIO
from pathlib import Path

from pydantic import BaseModel as PydanticModel
from pydantic import Extra, ValidationError, validator

from vietorised._utils import canonical_json, hashsum
from vietorised.topology import SizeLimits
from vietorised.vietorised_error import InvalidInput


class VietorisedConfig(PydanticModel):
    limits: SizeLimits = SizeLimits()
    # Junction continuity and landing checks.
    tolerance: float = 1e-9
    gravity: float = 9.8
    csv_step: float = 0.1
    # Zeno guard for unfolding up to a time horizon.
    max_bounces: int = 10000
    # Samples per segment when computing sup distances.
    stability_grid: int = 101
    seed: int = 0

    class Config:
        extra = Extra.forbid

    @validator("tolerance", "gravity", "csv_step")
    def _check_positive_float(cls, value: float) -> float:  # noqa: N805
        if not value > 0:
            raise ValueError("must be positive.")
        return value

    @validator("max_bounces", "stability_grid")
    def _check_positive_int(cls, value: int) -> int:  # noqa: N805
        if value < 1:
            raise ValueError("must be positive.")
        return value

    @classmethod
    def load(cls, path: Path) -> VietorisedConfig:
        try:
            return cls.parse_file(path)
        except ValidationError as e:
            raise InvalidInput(str(e), file=path) from e
        except (OSError, ValueError) as e:
            raise InvalidInput(f"Could not read config: {e}", file=path) from e

    def to_json(self) -> str:
        return canonical_json(self.dict())

    def digest(self) -> str:
        return hashsum(BytesIO(self.to_json().encode("UTF-8")), sha1())
