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

"""Duration-truncated evolutions: f on [0, d] with f(t) = f(min(t, d)).

Durations are nonnegative floats; math.inf stands for the point at infinity of
the one-point compactified time axis.
"""

from __future__ import annotations

import math
from logging import getLogger
from typing import Callable, Dict, Iterable, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel as PydanticModel
from pydantic import validator
from typing_extensions import Final

_LOGGER = getLogger(__name__)

INFINITE_DURATION: Final = math.inf


class Evolution(PydanticModel):
    """The quadratic a0 + a1 t + a2 t^2, frozen from t = duration on."""

    a0: float
    a1: float = 0.0
    a2: float = 0.0
    duration: float = INFINITE_DURATION

    class Config:
        frozen = True

    @validator("duration")
    def _check_duration(cls, duration: float) -> float:  # noqa: N805
        if math.isnan(duration) or duration < 0:
            raise ValueError("duration must be nonnegative.")
        return duration

    @classmethod
    def constant(cls, value: float, duration: float = INFINITE_DURATION) -> Evolution:
        return Evolution(a0=value, duration=duration)

    @property
    def is_finite(self) -> bool:
        return not math.isinf(self.duration)

    def polynomial(self, t: float) -> float:
        """The untruncated polynomial, also past the duration."""
        return self.a0 + self.a1 * t + self.a2 * t * t

    def __call__(self, t: float) -> float:
        return truncate(self, t)

    def end_value(self) -> float:
        return self.polynomial(self.duration) if self.is_finite else math.nan

    def apex(self) -> float:
        """Largest value on [0, duration]."""
        candidates = [self.a0]
        if self.is_finite:
            candidates.append(self.end_value())
        if self.a2 < 0:
            vertex = -self.a1 / (2 * self.a2)
            if 0 < vertex < self.duration:
                candidates.append(self.polynomial(vertex))
        return max(candidates)


def mov(p: float, v: float, gravity: float, duration: float) -> Evolution:
    """Free flight from height p with velocity v under gravity of magnitude gravity."""
    return Evolution(a0=p, a1=v, a2=-gravity / 2, duration=duration)


def truncate(evolution: Evolution, t: float) -> float:
    if t < 0:
        raise ValueError("Time must be nonnegative.")
    return evolution.polynomial(min(t, evolution.duration))


Trace = Union[Evolution, Callable[[float], float]]


def h_member(f: Trace, duration: float, grid: Iterable[float]) -> bool:
    """Whether f(t) = f(min(t, duration)) on every grid point.

    An Evolution passes on its own duration by construction, which is checked
    exactly on top of the grid.
    """
    if math.isinf(duration):
        return True
    if isinstance(f, Evolution) and f.duration == duration:
        if f(duration + 1.0) != f.polynomial(duration):
            return False
    return all(f(t) == f(min(t, duration)) for t in grid)


def time_grid(horizon: float, n: int) -> Sequence[float]:
    """n equispaced times from 0 to horizon inclusive."""
    return [float(t) for t in np.linspace(0.0, horizon, n)]


class HybridInclusion:
    """Reads an evolution (f, d) as the plain pair of a trace and a duration.

    Traces are compared on a fixed time grid, which is the finite stand-in for
    the function space all traces live in.
    """

    def __init__(self, grid: Sequence[float]):
        self.grid: Final = tuple(grid)

    def __call__(self, evolution: Evolution) -> Tuple[Tuple[float, ...], float]:
        return tuple(evolution(t) for t in self.grid), evolution.duration

    def is_injective_on(self, evolutions: Iterable[Evolution]) -> bool:
        seen: Dict[Tuple[Tuple[float, ...], float], Evolution] = {}
        for evolution in evolutions:
            image = self(evolution)
            if image in seen and seen[image] != evolution:
                return False
            seen[image] = evolution
        return True

    def reflects_truncation(
        self, m: Callable[[float], float], f: Trace, duration: float
    ) -> bool:
        """If m . f is truncated at duration, so is f, for m injective on the grid.

        Returns False only when m . f is truncated but f is not, which requires m
        to identify two values of f.
        """
        if not h_member(lambda t: m(f(t)), duration, self.grid):
            return True
        return h_member(f, duration, self.grid)
