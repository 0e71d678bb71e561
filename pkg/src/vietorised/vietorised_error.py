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

from pathlib import Path
from typing import Optional


class VietorisedError(Exception):
    """Base of all domain errors.

    Errors caused by malformed input make the CLI exit with code 2.
    """


class SizeCapExceeded(VietorisedError):
    def __init__(
        self, construction: str, size: int, limit: int, unit: str = "points"
    ):
        self.construction = construction
        self.size = size
        self.limit = limit
        self.unit = unit

    def __str__(self) -> str:
        return (
            f"{self.construction} would have {self.size} {self.unit}, "
            f"exceeding the limit of {self.limit}."
        )


class InvalidInput(VietorisedError):
    def __init__(self, reason: str, file: Optional[Path] = None, path: str = ""):
        self.reason = reason
        self.file = file
        self.path = path

    def __str__(self) -> str:
        location = f"{self.file}" if self.file else "<input>"
        if self.path:
            location += f" at '{self.path}'"
        return f"{location}: {self.reason}"
