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

"""A numerical falsifier for continuity of a ball system in its initial state.

Small perturbations of the initial state are unfolded next to the nominal one
and compared segment by segment. Large deviations show a discontinuity; small
ones prove nothing.
"""

from __future__ import annotations

from logging import getLogger
from typing import List

import numpy as np
from pydantic import BaseModel as PydanticModel
from tqdm import tqdm  # type: ignore

from vietorised.hybrid.hybrid_ball import (
    BallState,
    BallSystem,
    Trajectory,
    check_state,
    unfold_until,
)

_LOGGER = getLogger(__name__)


class StabilityReport(PydanticModel):
    perturbations: int
    segments: int
    max_duration_dev: float
    max_per_segment_sup_dev: float
    duration_devs: List[float]
    """Largest duration deviation per segment index."""
    sup_devs: List[float]
    """Largest sup distance of positions per segment index."""


def _sup_distance(nominal: Trajectory, perturbed: Trajectory, i: int, n: int) -> float:
    first = nominal.segments[i].evolution
    second = perturbed.segments[i].evolution
    times = np.linspace(0.0, max(first.duration, second.duration), n)
    return max(abs(first(float(t)) - second(float(t))) for t in times)


def stability_probe(
    system: BallSystem,
    state: BallState,
    delta: float,
    horizon: float,
    n_perturbations: int,
    *,
    seed: int = 0,
    grid: int = 101,
    max_bounces: int = 10000,
) -> StabilityReport:
    """Deviations of perturbed behaviours within delta (max norm) of state's."""
    check_state(state)
    if delta < 0:
        raise ValueError("Perturbation size must be nonnegative.")
    if horizon <= 0:
        raise ValueError("Horizon must be positive.")

    nominal = unfold_until(system, state, horizon, max_bounces=max_bounces)
    duration_devs = [0.0] * len(nominal)
    sup_devs = [0.0] * len(nominal)

    rng = np.random.default_rng(seed)
    offsets = rng.uniform(-delta, delta, size=(n_perturbations, 2))
    _LOGGER.debug(
        f"Building {n_perturbations} perturbed behaviours of {state} up to {horizon}."
    )
    for dp, dv in tqdm(
        offsets, desc="Stability Probe", dynamic_ncols=True, disable=None
    ):
        perturbed_state = BallState(max(0.0, state.p + float(dp)), state.v + float(dv))
        perturbed = unfold_until(
            system, perturbed_state, horizon, max_bounces=max_bounces
        )
        for i in range(min(len(nominal), len(perturbed))):
            duration_devs[i] = max(
                duration_devs[i],
                abs(nominal.durations[i] - perturbed.durations[i]),
            )
            sup_devs[i] = max(sup_devs[i], _sup_distance(nominal, perturbed, i, grid))
    _LOGGER.debug("Done building perturbed behaviours.")

    return StabilityReport(
        perturbations=n_perturbations,
        segments=len(nominal),
        max_duration_dev=max(duration_devs, default=0.0),
        max_per_segment_sup_dev=max(sup_devs, default=0.0),
        duration_devs=duration_devs,
        sup_devs=sup_devs,
    )
