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

"""Trajectories as CSV samples or as an SVG plot with one polyline per segment."""

from __future__ import annotations

from enum import Enum
from logging import getLogger
from typing import List, Tuple, Union
from xml.etree import ElementTree

import numpy as np

from vietorised._utils import format_float
from vietorised.hybrid.hybrid_ball import Trajectory
from vietorised.vietorised_error import VietorisedError

_LOGGER = getLogger(__name__)

_SVG_WIDTH = 800
_SVG_HEIGHT = 400
_SVG_MARGIN = 20


class UnsupportedFormat(VietorisedError):
    def __init__(self, format: str):
        self.format = format

    def __str__(self) -> str:
        supported = ", ".join(f.value for f in TrajectoryFormat)
        return f"Unsupported trajectory format '{self.format}' (expected {supported})."


class TrajectoryFormat(Enum):
    CSV = "csv"
    SVG = "svg"

    @classmethod
    def parse(cls, value: Union[str, TrajectoryFormat]) -> TrajectoryFormat:
        if isinstance(value, TrajectoryFormat):
            return value
        try:
            return TrajectoryFormat(value.lower())
        except ValueError:
            raise UnsupportedFormat(value) from None


def sample_times(horizon: float, step: float) -> List[float]:
    """0, step, 2 step, ... up to horizon, rounded to nine significant digits."""
    if step <= 0:
        raise ValueError("Sampling step must be positive.")
    n = int(np.floor(horizon / step + 1e-9))
    return [format_float(i * step) for i in range(n + 1)]


def _export_csv(trajectory: Trajectory, step: float) -> bytes:
    lines = ["t,position"]
    if trajectory.segments:
        for t in sample_times(trajectory.horizon, step):
            lines.append(f"{t},{format_float(trajectory.position(t))}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _segment_points(
    trajectory: Trajectory, step: float
) -> List[List[Tuple[float, float]]]:
    polylines: List[List[Tuple[float, float]]] = []
    for evolution, offset in trajectory.segments:
        times = sample_times(evolution.duration, step)
        if times[-1] < evolution.duration:
            times.append(evolution.duration)
        polylines.append([(offset + t, evolution(t)) for t in times])
    return polylines


def _export_svg(trajectory: Trajectory, step: float) -> bytes:
    polylines = _segment_points(trajectory, step)
    horizon = trajectory.horizon or 1.0
    top = max((y for line in polylines for _, y in line), default=0.0) or 1.0
    x_scale = (_SVG_WIDTH - 2 * _SVG_MARGIN) / horizon
    y_scale = (_SVG_HEIGHT - 2 * _SVG_MARGIN) / top

    svg = ElementTree.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(_SVG_WIDTH),
            "height": str(_SVG_HEIGHT),
            "viewBox": f"0 0 {_SVG_WIDTH} {_SVG_HEIGHT}",
        },
    )
    for i, line in enumerate(polylines):
        points = " ".join(
            f"{format_float(_SVG_MARGIN + t * x_scale)},"
            f"{format_float(_SVG_HEIGHT - _SVG_MARGIN - y * y_scale)}"
            for t, y in line
        )
        ElementTree.SubElement(
            svg,
            "polyline",
            {
                "id": f"segment-{i}",
                "points": points,
                "fill": "none",
                "stroke": "black",
            },
        )
    return ElementTree.tostring(svg, encoding="utf-8")


def export_trajectory(
    trajectory: Trajectory,
    format: Union[str, TrajectoryFormat],
    *,
    step: float = 0.1,
) -> bytes:
    """Serialize trajectory; the same inputs always give the same bytes."""
    fmt = TrajectoryFormat.parse(format)
    _LOGGER.debug(
        f"Exporting trajectory with {len(trajectory)} segments as {fmt.value}."
    )
    if fmt == TrajectoryFormat.CSV:
        return _export_csv(trajectory, step)
    return _export_svg(trajectory, step)
