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

from logging import DEBUG, WARNING, FileHandler, Formatter
from logging import root as root_logger
from pathlib import Path
from typing import Iterable, Optional, Union

from tqdm.contrib.logging import _TqdmLoggingHandler  # type: ignore
from typing_extensions import Final

from vietorised.functor import Functor
from vietorised.hybrid import BallParams
from vietorised.vietorised_config import VietorisedConfig
from vietorised.vietorised_workspace import BUILTIN_SPACES, Workspace


class VietorisedManager:
    def __init__(self, config: Optional[VietorisedConfig] = None) -> None:
        self.config: Final = config or VietorisedConfig()

    def load_workspace(self, paths: Iterable[Path]) -> Workspace:
        return Workspace.load(paths, limits=self.config.limits)

    def functor(self, text: str, workspace: Optional[Workspace] = None) -> Functor:
        env = workspace.constants if workspace is not None else BUILTIN_SPACES
        return Functor.parse(text, env, limits=self.config.limits)

    def ball_params(
        self,
        low: float,
        high: Optional[float] = None,
        *,
        gravity: Optional[float] = None,
    ) -> BallParams:
        return BallParams(
            gravity=gravity if gravity is not None else self.config.gravity,
            restitution=(low, low if high is None else high),
        )

    def configure_logging(
        self,
        *,
        console: Union[bool, int] = True,
        console_fmt: str = "{asctime} {levelname:.1} {message}",
        file: Union[bool, int] = False,
        file_path: Optional[Path] = None,
        file_fmt: str = (
            "{asctime} {levelname} [{name}:{funcName}@{processName}] {message}"
        ),
    ) -> None:
        overall_level = root_logger.level

        if file is not False:
            level = DEBUG if file is True else file
            overall_level = min(overall_level, level)
            if not file_path:
                file_path = Path("vietorised.log")
            file_handler = FileHandler(file_path, encoding="UTF-8")
            file_handler.setLevel(level)
            file_handler.setFormatter(Formatter(file_fmt, style="{"))
            root_logger.addHandler(file_handler)

        if console is not False:
            level = WARNING if console is True else console
            overall_level = min(overall_level, level)
            # Writes through tqdm.write so progress bars on stderr stay intact.
            console_handler = _TqdmLoggingHandler()
            console_handler.setLevel(level)
            console_handler.setFormatter(Formatter(console_fmt, style="{"))
            root_logger.addHandler(console_handler)

        root_logger.setLevel(overall_level)
