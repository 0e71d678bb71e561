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

"""Exhaustive generators for small spaces and maps.

Everything here is exponential and meant for spaces of a handful of points.
"""

from __future__ import annotations

from itertools import groupby, permutations, product
from logging import getLogger
from typing import Iterator, List, Sequence, Set, Tuple

from vietorised._utils import bit_count, iter_bits, iter_submasks
from vietorised.topology.topology_space import (
    ContMap,
    FinSpace,
    is_continuous,
    is_embedding,
)

_LOGGER = getLogger(__name__)


def point_names(n: int) -> List[str]:
    return [str(i) for i in range(n)]


def _is_closed(up: Sequence[int], mask: int) -> bool:
    return all(up[i] & ~mask == 0 for i in iter_bits(mask))


def _extensions(up: Sequence[int]) -> Iterator[List[int]]:
    """Every preorder on n + 1 points whose restriction to the first n is up."""
    n = len(up)
    down = [0] * n
    for i in range(n):
        for j in iter_bits(up[i]):
            down[j] |= 1 << i
    full = (1 << n) - 1
    up_sets = [m for m in iter_submasks(full) if _is_closed(up, m)]
    down_sets = [m for m in iter_submasks(full) if _is_closed(down, m)]
    new = 1 << n
    for above in up_sets:
        for below in down_sets:
            # Everything below the new point must lie below everything above it.
            if any(above & ~up[i] for i in iter_bits(below)):
                continue
            extended = [u | new if below >> i & 1 else u for i, u in enumerate(up)]
            extended.append(above | new)
            yield extended


def _relabelled(up: Sequence[int], sequence: Sequence[int]) -> Tuple[int, ...]:
    position = [0] * len(up)
    for k, i in enumerate(sequence):
        position[i] = k
    return tuple(sum(1 << position[j] for j in iter_bits(up[i])) for i in sequence)


def _canonical_code(up: Sequence[int]) -> Tuple[int, ...]:
    # Only relabelings that sort points by (up-set size, down-set size) are tried.
    down_sizes = [0] * len(up)
    for mask in up:
        for j in iter_bits(mask):
            down_sizes[j] += 1
    signature = [(bit_count(mask), down_sizes[i]) for i, mask in enumerate(up)]
    order = sorted(range(len(up)), key=signature.__getitem__)
    blocks = [list(block) for _, block in groupby(order, key=signature.__getitem__)]
    return min(
        _relabelled(up, [i for block in arrangement for i in block])
        for arrangement in product(*(permutations(block) for block in blocks))
    )


def enumerate_preorders(n: int, *, up_to_iso: bool = True) -> Iterator[FinSpace]:
    """All preorders on the points "0", ..., "n-1".

    Preorders are grown one point at a time. With up_to_iso, one representative
    per isomorphism class is produced (1, 1, 3, 9, 33, 139, 718 spaces for
    n = 0, ..., 6).
    """
    level: List[List[int]] = [[]]
    for _ in range(n):
        seen: Set[Tuple[int, ...]] = set()
        grown: List[List[int]] = []
        for up in level:
            for extended in _extensions(up):
                if up_to_iso:
                    code = _canonical_code(extended)
                    if code in seen:
                        continue
                    seen.add(code)
                grown.append(extended)
        level = grown
    _LOGGER.debug(f"Enumerated {len(level)} preorders on {n} points.")
    names = point_names(n)
    for up in level:
        yield FinSpace(names, lambda _: up, max_points=max(n, 1))


def enumerate_small_spaces(
    max_n: int, *, min_n: int = 1, up_to_iso: bool = True
) -> Iterator[FinSpace]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_preorders(n, up_to_iso=up_to_iso)


def enumerate_maps(dom: FinSpace, cod: FinSpace) -> Iterator[ContMap]:
    """All point functions dom -> cod, continuous or not."""
    for values in product(cod.points, repeat=len(dom)):
        yield ContMap(dom, cod, dict(zip(dom.points, values)))


def enumerate_monotone_maps(dom: FinSpace, cod: FinSpace) -> Iterator[ContMap]:
    return (f for f in enumerate_maps(dom, cod) if is_continuous(f))


def enumerate_embeddings(dom: FinSpace, cod: FinSpace) -> Iterator[ContMap]:
    if len(dom) > len(cod):
        return iter(())
    return (
        ContMap(dom, cod, dict(zip(dom.points, values)))
        for values in permutations(cod.points, len(dom))
        if is_embedding(ContMap(dom, cod, dict(zip(dom.points, values))))
    )
