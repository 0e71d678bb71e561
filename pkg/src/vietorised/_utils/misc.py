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

import json
from pathlib import Path
from typing import IO, Iterator, Union

from typing_extensions import Protocol


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def bit_count(mask: int) -> int:
    return bin(mask).count("1")


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, starting with 0 and ending with mask itself."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def canonical_json(value: object) -> str:
    """Compact, key-sorted JSON used wherever bytes must be reproducible."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def format_float(value: float) -> float:
    """Round to the nine significant digits all reports are printed with."""
    return float(f"{value:.9g}")


class Hash(Protocol):
    @property
    def name(self) -> str:
        ...

    def update(self, buffer: bytes) -> None:
        ...

    def hexdigest(self) -> str:
        ...


def hashsum(file: Union[Path, IO[bytes]], h: Hash) -> str:
    fd: IO[bytes]
    if isinstance(file, Path):
        fd = file.open("rb")
    else:
        fd = file

    try:
        for buffer in iter(lambda: fd.read(128 * 1024), b""):
            h.update(buffer)
    finally:
        if isinstance(file, Path):
            fd.close()

    return h.hexdigest()
