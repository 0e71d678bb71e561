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

"""The bouncing ball: free flight mov(p, v, t) = p + v t - g/2 t^2 until impact.

Gravity is stored as a positive magnitude g. A flight from (p, v) lasts
d = (v + sqrt(v^2 + 2 g p)) / g and hits the ground with speed sqrt(v^2 + 2 g p);
the rebound velocity is that speed times the restitution factor.
"""

from __future__ import annotations

import math
from logging import getLogger
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple

import numpy as np
from pydantic import BaseModel as PydanticModel
from pydantic import root_validator, validator
from typing_extensions import Final, Protocol

from vietorised.hybrid.hybrid_evolution import Evolution, mov
from vietorised.vietoris import strength
from vietorised.vietorised_error import VietorisedError

_LOGGER = getLogger(__name__)

DEFAULT_GRAVITY: Final = 9.8


class InvalidState(VietorisedError):
    def __init__(self, p: float, v: float, reason: str = "height must be >= 0"):
        self.p = p
        self.v = v
        self.reason = reason

    def __str__(self) -> str:
        return f"Invalid ball state (p={self.p}, v={self.v}): {self.reason}."


class BallState(NamedTuple):
    p: float
    v: float

    @property
    def is_rest(self) -> bool:
        return self.p == 0 and self.v == 0


REST: Final = BallState(0.0, 0.0)


def check_state(state: BallState) -> None:
    if math.isnan(state.p) or math.isnan(state.v):
        raise InvalidState(state.p, state.v, "not a number")
    if state.p < 0:
        raise InvalidState(state.p, state.v)


class BallParams(PydanticModel):
    gravity: float = DEFAULT_GRAVITY
    restitution: Tuple[float, float] = (0.5, 0.5)
    """Smallest and largest restitution factor; equal for a deterministic ball."""

    class Config:
        frozen = True

    @validator("gravity")
    def _check_gravity(cls, gravity: float) -> float:  # noqa: N805
        if not gravity > 0:
            raise ValueError("gravity must be positive.")
        return gravity

    @root_validator(skip_on_failure=True)
    def _check_restitution(  # noqa: N805
        cls, values: Dict[str, Any]
    ) -> Dict[str, Any]:
        low, high = values["restitution"]
        if not 0 < low <= high < 1:
            raise ValueError("restitution must be an interval inside (0, 1).")
        return values

    @classmethod
    def deterministic(
        cls, factor: float = 0.5, *, gravity: float = DEFAULT_GRAVITY
    ) -> BallParams:
        return BallParams(gravity=gravity, restitution=(factor, factor))

    @classmethod
    def interval(
        cls, low: float = 0.5, high: float = 0.7, *, gravity: float = DEFAULT_GRAVITY
    ) -> BallParams:
        return BallParams(gravity=gravity, restitution=(low, high))

    @property
    def is_deterministic(self) -> bool:
        return self.restitution[0] == self.restitution[1]

    @property
    def factor(self) -> float:
        if not self.is_deterministic:
            raise ValueError(
                f"Restitution {list(self.restitution)} is an interval, not a factor."
            )
        return self.restitution[0]


class Flight(NamedTuple):
    evolution: Evolution
    impact_speed: float


def flight(state: BallState, gravity: float) -> Flight:
    """The free flight from state until the ground is hit."""
    check_state(state)
    if state.is_rest:
        return Flight(Evolution.constant(0.0, 0.0), 0.0)
    impact_speed = math.sqrt(state.v * state.v + 2 * gravity * state.p)
    duration = (state.v + impact_speed) / gravity
    return Flight(mov(state.p, state.v, gravity, duration), impact_speed)


def bounce(
    state: BallState, factor: float, gravity: float
) -> Tuple[BallState, Evolution]:
    evolution, impact_speed = flight(state, gravity)
    return BallState(0.0, factor * impact_speed), evolution


def ball_step(state: BallState, params: BallParams) -> Tuple[BallState, Evolution]:
    """Next state after one flight and the flight's evolution."""
    return bounce(state, params.factor, params.gravity)


def restitution_samples(params: BallParams, k_samples: int = 0) -> List[float]:
    """Both interval endpoints with k_samples equispaced factors between them."""
    if k_samples < 0:
        raise ValueError("Number of samples must be nonnegative.")
    low, high = params.restitution
    return [float(c) for c in np.linspace(low, high, k_samples + 2)]


class NondetStep(NamedTuple):
    evolution: Evolution
    impact_speed: float
    low: BallState
    high: BallState
    """Next states at the smallest and largest restitution factor."""


def nondet_ball_step(state: BallState, params: BallParams) -> NondetStep:
    evolution, impact_speed = flight(state, params.gravity)
    low, high = params.restitution
    return NondetStep(
        evolution=evolution,
        impact_speed=impact_speed,
        low=BallState(0.0, low * impact_speed),
        high=BallState(0.0, high * impact_speed),
    )


def next_via_strength(
    state: BallState, params: BallParams, k_samples: int = 0
) -> List[BallState]:
    """Next states as the composite of the factor set, the strength and evaluation.

    The state yields the pair (C, g) of a set C of restitution factors and the
    continuation g(c) = (0, c * impact speed); the strength pairs every factor
    with g and evaluation applies g to it.
    """
    _, impact_speed = flight(state, params.gravity)

    def continuation(c: float) -> BallState:
        return BallState(0.0, c * impact_speed)

    factors = restitution_samples(params, k_samples)
    pairs = strength(factors, continuation)
    return sorted({g(c) for c, g in pairs}, key=lambda s: s.v)


class BallSystem(Protocol):
    def step(self, state: BallState) -> Tuple[BallState, Evolution]:
        ...


class BouncingBall:
    def __init__(self, params: BallParams):
        if not params.is_deterministic:
            raise ValueError("A deterministic ball needs a single restitution factor.")
        self.params: Final = params

    def step(self, state: BallState) -> Tuple[BallState, Evolution]:
        return ball_step(state, self.params)


class DiscontinuousBall:
    """A ball whose restitution factor jumps with the height it starts from.

    Any neighbourhood of a state at height threshold contains states that
    rebound with a different factor, so its behaviour is not continuous in the
    state.
    """

    def __init__(
        self,
        *,
        gravity: float = DEFAULT_GRAVITY,
        threshold: float = 5.0,
        below: float = 0.5,
        above: float = 0.7,
    ):
        self.gravity: Final = gravity
        self.threshold: Final = threshold
        self.below: Final = below
        self.above: Final = above

    def step(self, state: BallState) -> Tuple[BallState, Evolution]:
        factor = self.below if state.p <= self.threshold else self.above
        return bounce(state, factor, self.gravity)


class Segment(NamedTuple):
    evolution: Evolution
    offset: float


class Trajectory:
    """Evolutions laid end to end, each starting where the previous one lands."""

    def __init__(self, segments: Sequence[Segment]):
        self.segments: Final = tuple(segments)

    @classmethod
    def from_evolutions(cls, evolutions: Sequence[Evolution]) -> Trajectory:
        segments: List[Segment] = []
        offset = 0.0
        for evolution in evolutions:
            segments.append(Segment(evolution, offset))
            offset += evolution.duration
        return Trajectory(segments)

    def __len__(self) -> int:
        return len(self.segments)

    @property
    def horizon(self) -> float:
        if not self.segments:
            return 0.0
        last = self.segments[-1]
        return last.offset + last.evolution.duration

    @property
    def durations(self) -> List[float]:
        return [segment.evolution.duration for segment in self.segments]

    @property
    def velocities(self) -> List[float]:
        """Initial velocity of every segment."""
        return [segment.evolution.a1 for segment in self.segments]

    def _index(self, t: float) -> int:
        # Binary search for the last segment starting at or before t.
        left = 0  # Inclusive.
        right = len(self.segments)  # Exclusive.
        while left != right:
            i = left + (right - left) // 2
            if t < self.segments[i].offset:
                right = i
            else:
                left = i + 1
        return left - 1

    def position(self, t: float) -> float:
        if not self.segments:
            raise ValueError("Empty trajectory has no positions.")
        if t < 0:
            raise ValueError("Time must be nonnegative.")
        evolution, offset = self.segments[self._index(t)]
        return evolution(t - offset)

    def junction_gaps(self) -> List[float]:
        return [
            abs(first.evolution.end_value() - second.evolution.a0)
            for first, second in zip(self.segments, self.segments[1:])
        ]


def unfold(system: BallSystem, state: BallState, n_bounces: int) -> Trajectory:
    """The first n_bounces evolutions of the behaviour of state; stops at rest."""
    if n_bounces < 1:
        raise ValueError("Number of bounces must be at least 1.")
    check_state(state)
    evolutions: List[Evolution] = []
    for _ in range(n_bounces):
        state, evolution = system.step(state)
        evolutions.append(evolution)
        if evolution.duration == 0 and state.is_rest:
            break
    return Trajectory.from_evolutions(evolutions)


def unfold_ball(state: BallState, n_bounces: int, params: BallParams) -> Trajectory:
    return unfold(BouncingBall(params), state, n_bounces)


def unfold_until(
    system: BallSystem,
    state: BallState,
    horizon: float,
    *,
    max_bounces: int = 10000,
) -> Trajectory:
    """All evolutions starting before horizon, at most max_bounces of them."""
    check_state(state)
    evolutions: List[Evolution] = []
    elapsed = 0.0
    while elapsed < horizon or not evolutions:
        if len(evolutions) == max_bounces:
            _LOGGER.warning(
                f"Stopped unfolding after {max_bounces} bounces at time {elapsed}."
            )
            break
        state, evolution = system.step(state)
        evolutions.append(evolution)
        elapsed += evolution.duration
        if evolution.duration == 0 and state.is_rest:
            break
    return Trajectory.from_evolutions(evolutions)
