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

from vietorised.hybrid.hybrid_ball import (
    DEFAULT_GRAVITY,
    REST,
    BallParams,
    BallState,
    BallSystem,
    BouncingBall,
    DiscontinuousBall,
    Flight,
    InvalidState,
    NondetStep,
    Segment,
    Trajectory,
    ball_step,
    bounce,
    check_state,
    flight,
    next_via_strength,
    nondet_ball_step,
    restitution_samples,
    unfold,
    unfold_ball,
    unfold_until,
)
from vietorised.hybrid.hybrid_evolution import (
    INFINITE_DURATION,
    Evolution,
    HybridInclusion,
    h_member,
    mov,
    time_grid,
    truncate,
)
from vietorised.hybrid.hybrid_export import (
    TrajectoryFormat,
    UnsupportedFormat,
    export_trajectory,
    sample_times,
)
from vietorised.hybrid.hybrid_stability import StabilityReport, stability_probe
from vietorised.hybrid.hybrid_tree import (
    BehaviourNode,
    BehaviourTree,
    Envelope,
    endpoints_bracket,
    unfold_nondet,
)

__all__ = [
    "DEFAULT_GRAVITY",
    "REST",
    "BallParams",
    "BallState",
    "BallSystem",
    "BouncingBall",
    "DiscontinuousBall",
    "Flight",
    "InvalidState",
    "NondetStep",
    "Segment",
    "Trajectory",
    "ball_step",
    "bounce",
    "check_state",
    "flight",
    "next_via_strength",
    "nondet_ball_step",
    "restitution_samples",
    "unfold",
    "unfold_ball",
    "unfold_until",
    "INFINITE_DURATION",
    "Evolution",
    "HybridInclusion",
    "h_member",
    "mov",
    "time_grid",
    "truncate",
    "TrajectoryFormat",
    "UnsupportedFormat",
    "export_trajectory",
    "sample_times",
    "StabilityReport",
    "stability_probe",
    "BehaviourNode",
    "BehaviourTree",
    "Envelope",
    "endpoints_bracket",
    "unfold_nondet",
]
