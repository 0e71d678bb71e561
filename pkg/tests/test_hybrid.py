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

import math
from xml.etree import ElementTree

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from vietorised.hybrid import (
    REST,
    BallParams,
    BallState,
    BouncingBall,
    DiscontinuousBall,
    Evolution,
    HybridInclusion,
    InvalidState,
    Trajectory,
    UnsupportedFormat,
    ball_step,
    export_trajectory,
    h_member,
    mov,
    next_via_strength,
    nondet_ball_step,
    stability_probe,
    time_grid,
    truncate,
    unfold_ball,
    unfold_nondet,
)
from vietorised.vietorised_error import SizeCapExceeded

_G = 9.8
_DET = BallParams.deterministic(0.5, gravity=_G)
_NONDET = BallParams.interval(0.5, 0.7, gravity=_G)
_FALL_TIME = math.sqrt(98) / 9.8
_SVG_POLYLINE = "{http://www.w3.org/2000/svg}polyline"

_HEIGHTS = st.floats(min_value=0.0, max_value=100.0)
_VELOCITIES = st.floats(min_value=-30.0, max_value=30.0)
_FACTORS = st.floats(min_value=0.01, max_value=0.99)


def test_truncate_examples() -> None:
    assert truncate(Evolution.constant(3.0), 17.0) == 3.0
    falling = mov(5.0, 0.0, _G, _FALL_TIME)
    assert truncate(falling, 2.0) == falling.polynomial(_FALL_TIME)
    assert truncate(falling, 2.0) == pytest.approx(0.0, abs=1e-9)
    assert truncate(falling, 0.0) == 5.0
    with pytest.raises(ValueError):
        truncate(falling, -1.0)


def test_h_member_examples() -> None:
    falling = mov(5.0, 0.0, _G, _FALL_TIME)
    grid = [0.0, 0.5, _FALL_TIME, _FALL_TIME + 1.0]
    assert h_member(falling, _FALL_TIME, grid)
    assert not h_member(lambda t: 5.0 - 4.9 * t * t, _FALL_TIME, grid)
    assert h_member(lambda t: 5.0 - 4.9 * t * t, math.inf, grid)


@given(_HEIGHTS, _VELOCITIES, st.floats(min_value=0.0, max_value=1000.0))
def test_truncation_is_idempotent(p: float, v: float, t: float) -> None:
    _, evolution = ball_step(BallState(p, v), _DET)
    assert evolution(t) == evolution(min(t, evolution.duration))


def test_ball_step_from_ground() -> None:
    state, evolution = ball_step(BallState(0.0, 5.0), _DET)
    assert evolution.duration == pytest.approx(10 / 9.8, rel=1e-9)
    assert state == BallState(0.0, 2.5)
    assert abs(evolution(evolution.duration)) <= 1e-9


def test_ball_step_from_height() -> None:
    state, evolution = ball_step(BallState(5.0, 0.0), _DET)
    assert evolution.duration == pytest.approx(_FALL_TIME, rel=1e-9)
    assert state.p == 0.0
    assert state.v == pytest.approx(4.949747468, abs=1e-9)


def test_ball_step_at_rest() -> None:
    state, evolution = ball_step(REST, _DET)
    assert state == REST
    assert evolution.duration == 0.0
    assert evolution(3.0) == 0.0


def test_invalid_state() -> None:
    with pytest.raises(InvalidState):
        ball_step(BallState(-1.0, 0.0), _DET)
    with pytest.raises(InvalidState):
        unfold_ball(BallState(-0.5, 2.0), 3, _DET)


def test_ball_params_validation() -> None:
    with pytest.raises(ValidationError):
        BallParams.interval(0.7, 0.5)
    with pytest.raises(ValidationError):
        BallParams.deterministic(1.0)
    with pytest.raises(ValidationError):
        BallParams(gravity=0.0)
    with pytest.raises(ValueError):
        _ = _NONDET.factor
    with pytest.raises(ValueError):
        BouncingBall(_NONDET)


@given(_HEIGHTS, _VELOCITIES, _FACTORS)
@settings(max_examples=300)
def test_ball_step_properties(p: float, v: float, factor: float) -> None:
    params = BallParams.deterministic(factor, gravity=_G)
    state, evolution = ball_step(BallState(p, v), params)
    assert abs(evolution(evolution.duration)) <= 1e-9 * max(1.0, p)

    impact_velocity = v - _G * evolution.duration
    assert abs(state.v) == pytest.approx(
        factor * abs(impact_velocity), rel=1e-12, abs=1e-12
    )
    if impact_velocity != 0:
        assert state.v ** 2 < impact_velocity ** 2


def test_unfold_ball_from_ground() -> None:
    trajectory = unfold_ball(BallState(0.0, 5.0), 3, _DET)
    assert trajectory.velocities == [5.0, 2.5, 1.25]
    assert all(gap <= 1e-9 for gap in trajectory.junction_gaps())
    assert trajectory.horizon == pytest.approx(sum(trajectory.durations))


def test_unfold_ball_from_height() -> None:
    trajectory = unfold_ball(BallState(5.0, 0.0), 2, _DET)
    first, second = trajectory.durations
    assert first == pytest.approx(1.010153, abs=1e-6)
    assert second == pytest.approx(2 * 4.949747 / 9.8, abs=1e-6)


def test_unfold_ball_single_bounce() -> None:
    trajectory = unfold_ball(BallState(5.0, 0.0), 1, _DET)
    _, evolution = ball_step(BallState(5.0, 0.0), _DET)
    assert len(trajectory) == 1
    assert trajectory.segments[0].evolution == evolution
    with pytest.raises(ValueError):
        unfold_ball(BallState(5.0, 0.0), 0, _DET)


def test_trajectory_positions() -> None:
    trajectory = unfold_ball(BallState(0.0, 5.0), 2, _DET)
    first = trajectory.segments[0].evolution
    assert trajectory.position(0.5) == first(0.5)
    second, offset = trajectory.segments[1]
    assert trajectory.position(offset + 0.1) == pytest.approx(second(0.1))
    assert trajectory.position(trajectory.horizon + 5.0) == second(second.duration)
    with pytest.raises(ValueError):
        Trajectory([]).position(0.0)


def test_nondet_ball_step_examples() -> None:
    step = nondet_ball_step(BallState(5.0, 0.0), _NONDET)
    assert step.impact_speed == pytest.approx(9.899495, abs=1e-6)
    assert step.low.v == pytest.approx(4.949747, abs=1e-6)
    assert step.high.v == pytest.approx(6.929646, abs=1e-6)

    step = nondet_ball_step(BallState(0.0, 5.0), _NONDET)
    assert (step.low.v, step.high.v) == pytest.approx((2.5, 3.5))

    degenerate = nondet_ball_step(BallState(5.0, 0.0), BallParams.interval(0.5, 0.5))
    assert (degenerate.low, degenerate.evolution) == ball_step(
        BallState(5.0, 0.0), _DET
    )
    assert degenerate.high == degenerate.low


@given(_HEIGHTS, _VELOCITIES, st.integers(min_value=0, max_value=4))
def test_strength_composite_matches_endpoints(p: float, v: float, k: int) -> None:
    state = BallState(p, v)
    states = next_via_strength(state, _NONDET, k)
    step = nondet_ball_step(state, _NONDET)
    assert states[0] == step.low
    assert states[-1] == step.high


def test_unfold_nondet_single_level() -> None:
    tree = unfold_nondet(BallState(5.0, 0.0), 1, 3, _NONDET)
    assert not tree.root.is_expanded
    assert len(tree.envelopes) == 1
    assert tree.envelopes[0].max_apex == 5.0


def test_unfold_nondet_endpoints() -> None:
    tree = unfold_nondet(BallState(5.0, 0.0), 2, 0, _NONDET)
    speeds = [child.state.v for child in tree.root.children]
    assert speeds == pytest.approx([4.949747, 6.929646], abs=1e-6)
    assert all(child.state.p == 0.0 for child in tree.root.children)
    envelope = tree.envelopes[1]
    assert envelope.nodes == 2
    assert (envelope.min_apex, envelope.max_apex) == pytest.approx((1.25, 2.45))


def test_unfold_nondet_samples_lie_between_endpoints() -> None:
    tree = unfold_nondet(BallState(5.0, 0.0), 3, 3, _NONDET)
    assert len(tree.root.children) == 5
    assert tree.envelopes[2].nodes == 25
    for node in tree.root.children:
        speeds = [child.state.v for child in node.children]
        assert all(speeds[0] <= speed <= speeds[-1] for speed in speeds)
    endpoints_only = unfold_nondet(BallState(5.0, 0.0), 3, 0, _NONDET)
    for sampled, extreme in zip(tree.envelopes, endpoints_only.envelopes):
        assert sampled.min_apex == pytest.approx(extreme.min_apex)
        assert sampled.max_apex == pytest.approx(extreme.max_apex)


def test_unfold_nondet_degenerate_interval_is_deterministic() -> None:
    start = BallState(0.0, 5.0)
    tree = unfold_nondet(start, 4, 0, BallParams.interval(0.5, 0.5))
    path = tree.root.path([0, 0, 0])
    trajectory = unfold_ball(start, 4, _DET)
    assert [s.evolution for s in path.segments] == [
        s.evolution for s in trajectory.segments
    ]
    assert export_trajectory(path, "csv") == export_trajectory(trajectory, "csv")


def test_unfold_nondet_size_cap() -> None:
    with pytest.raises(SizeCapExceeded):
        unfold_nondet(BallState(5.0, 0.0), 10, 3, _NONDET, max_nodes=1000)


def test_stability_probe_without_perturbation() -> None:
    report = stability_probe(BouncingBall(_DET), BallState(5.0, 0.0), 0.0, 3.0, 5)
    assert report.max_duration_dev == 0.0
    assert report.max_per_segment_sup_dev == 0.0


def test_stability_probe_of_continuous_ball() -> None:
    report = stability_probe(BouncingBall(_DET), BallState(5.0, 0.0), 1e-3, 1.0, 10)
    assert report.segments == 1
    assert report.duration_devs[0] <= 2e-4


def test_stability_probe_flags_discontinuous_ball() -> None:
    report = stability_probe(DiscontinuousBall(), BallState(5.0, 0.0), 1e-3, 3.0, 20)
    assert report.max_duration_dev >= 0.1


def test_export_empty_trajectory() -> None:
    assert export_trajectory(Trajectory([]), "csv") == b"t,position\n"


def test_export_csv() -> None:
    trajectory = unfold_ball(BallState(0.0, 5.0), 1, _DET)
    lines = export_trajectory(trajectory, "csv", step=0.1).decode().splitlines()
    assert lines[0] == "t,position"
    assert len(lines) == 12
    assert lines[1] == "0.0,0.0"
    assert lines[2].startswith("0.1,")


def test_export_svg() -> None:
    trajectory = unfold_ball(BallState(0.0, 5.0), 3, _DET)
    data = export_trajectory(trajectory, "svg")
    root = ElementTree.fromstring(data)
    assert len(root.findall(_SVG_POLYLINE)) == 3
    assert export_trajectory(trajectory, "svg") == data


def test_export_unsupported_format() -> None:
    with pytest.raises(UnsupportedFormat):
        export_trajectory(Trajectory([]), "png")


def test_hybrid_inclusion() -> None:
    grid = time_grid(3.0, 31)
    inclusion = HybridInclusion(grid)
    evolutions = [
        ball_step(BallState(p, 0.0), _DET)[1] for p in (1.0, 2.0, 5.0)
    ] + [Evolution.constant(0.0, 1.0), Evolution.constant(0.0, 2.0)]
    assert inclusion.is_injective_on(evolutions)

    raw = lambda t: 5.0 - 4.9 * t * t  # noqa: E731
    assert inclusion.reflects_truncation(lambda x: 2 * x + 1, raw, 1.0)
    assert not inclusion.reflects_truncation(lambda x: 0.0, raw, 1.0)
