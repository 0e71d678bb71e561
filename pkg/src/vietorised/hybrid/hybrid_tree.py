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

"""Compactly branching behaviour trees of the non-deterministic bouncing ball.

Every node is one flight; its children are the flights after rebounding with
each sampled restitution factor. Children are only built when asked for.
"""

from __future__ import annotations

from logging import getLogger
from typing import List, NamedTuple, Optional, Sequence

from pydantic import BaseModel as PydanticModel
from tqdm import tqdm  # type: ignore
from typing_extensions import Final

from vietorised.hybrid.hybrid_ball import (
    BallParams,
    BallState,
    Trajectory,
    check_state,
    nondet_ball_step,
    restitution_samples,
)
from vietorised.vietorised_error import SizeCapExceeded

_LOGGER = getLogger(__name__)


class BehaviourNode:
    def __init__(
        self,
        state: BallState,
        params: BallParams,
        *,
        k_samples: int = 0,
        level: int = 1,
    ):
        check_state(state)
        step = nondet_ball_step(state, params)
        self.state: Final = state
        self.params: Final = params
        self.k_samples: Final = k_samples
        self.level: Final = level
        self.evolution: Final = step.evolution
        self.impact_speed: Final = step.impact_speed
        self._children: Optional[List[BehaviourNode]] = None

    @property
    def is_expanded(self) -> bool:
        return self._children is not None

    @property
    def children(self) -> Sequence[BehaviourNode]:
        return self._children or []

    def expand(self) -> Sequence[BehaviourNode]:
        """Children at both interval endpoints and k_samples factors in between."""
        if self._children is None:
            self._children = [
                BehaviourNode(
                    BallState(0.0, factor * self.impact_speed),
                    self.params,
                    k_samples=self.k_samples,
                    level=self.level + 1,
                )
                for factor in restitution_samples(self.params, self.k_samples)
            ]
        return self._children

    def path(self, choice: Sequence[int]) -> Trajectory:
        """The trajectory through this node and the chosen child at every level."""
        node = self
        evolutions = [node.evolution]
        for index in choice:
            node = node.expand()[index]
            evolutions.append(node.evolution)
        return Trajectory.from_evolutions(evolutions)


def endpoints_bracket(node: BehaviourNode) -> bool:
    """Whether the first and last child have the extreme rebound speeds."""
    speeds = [child.state.v for child in node.children]
    return not speeds or (speeds[0] == min(speeds) and speeds[-1] == max(speeds))


class Envelope(PydanticModel):
    level: int
    nodes: int
    min_speed: float
    max_speed: float
    min_apex: float
    max_apex: float
    min_duration: float
    max_duration: float

    @classmethod
    def of(cls, level: int, nodes: Sequence[BehaviourNode]) -> Envelope:
        speeds = [node.state.v for node in nodes]
        apexes = [node.evolution.apex() for node in nodes]
        durations = [node.evolution.duration for node in nodes]
        return Envelope(
            level=level,
            nodes=len(nodes),
            min_speed=min(speeds),
            max_speed=max(speeds),
            min_apex=min(apexes),
            max_apex=max(apexes),
            min_duration=min(durations),
            max_duration=max(durations),
        )


class BehaviourTree(NamedTuple):
    root: BehaviourNode
    envelopes: Sequence[Envelope]


def unfold_nondet(
    state: BallState,
    depth: int,
    k_samples: int,
    params: BallParams,
    *,
    max_nodes: int = 100000,
) -> BehaviourTree:
    """The behaviour tree of state expanded to depth levels, with level envelopes."""
    if depth < 1:
        raise ValueError("Depth must be at least 1.")
    if k_samples < 0:
        raise ValueError("Number of samples must be nonnegative.")
    total = sum((k_samples + 2) ** i for i in range(depth))
    if total > max_nodes:
        raise SizeCapExceeded(f"Behaviour tree of depth {depth}", total, max_nodes)

    _LOGGER.debug(f"Building behaviour tree of depth {depth} from {state}.")
    root = BehaviourNode(state, params, k_samples=k_samples)
    level = [root]
    envelopes = [Envelope.of(1, level)]
    for k in tqdm(
        range(2, depth + 1), desc="Behaviour Tree", dynamic_ncols=True, disable=None
    ):
        next_level: List[BehaviourNode] = []
        for node in level:
            next_level.extend(node.expand())
            if not endpoints_bracket(node):
                raise AssertionError(
                    f"Rebound speeds below {node.state} are not monotone in the "
                    f"restitution factor."
                )
        level = next_level
        envelopes.append(Envelope.of(k, level))
    _LOGGER.debug(f"Done building behaviour tree with {total} nodes.")
    return BehaviourTree(root=root, envelopes=envelopes)
