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

"""The terminal sequence 1 <- F(1) <- F(F(1)) <- ... and the cone into it.

Level k is F^k(1) and connector k is the map F^(k+1)(1) -> F^k(1); connector 0
is the unique map into 1 and connector k+1 is F applied to connector k. Every
coalgebra (X, c) has the canonical cone b_0 = !, b_(k+1) = F(b_k) . c, whose
kernels are the depth-k behavioural equivalences.
"""

from __future__ import annotations

from logging import getLogger
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel as PydanticModel
from tqdm import tqdm  # type: ignore

from vietorised.coalgebra.coalgebra_core import Coalgebra, homomorphisms
from vietorised.functor import Functor, deserialize_value
from vietorised.topology import (
    ContMap,
    FinSpace,
    enumerate_monotone_maps,
    enumerate_small_spaces,
)
from vietorised.vietorised_error import SizeCapExceeded

_LOGGER = getLogger(__name__)


def is_isomorphism(f: ContMap) -> bool:
    """Bijective, continuous and with continuous inverse."""
    if not f.is_bijective():
        return False
    return all(f.dom.leq(x, y) == f.cod.leq(f(x), f(y)) for x in f.dom for y in f.dom)


class TerminalSequence(NamedTuple):
    functor: Functor
    levels: Sequence[FinSpace]
    connectors: Sequence[ContMap]
    stabilized_at: Optional[int]


def _next_level(functor: Functor, space: FinSpace, level: int) -> FinSpace:
    try:
        return functor.apply(space)
    except SizeCapExceeded as e:
        raise SizeCapExceeded(
            f"Terminal sequence level {level} ({e.construction})", e.size, e.limit
        ) from e


def terminal_sequence(functor: Functor, n: int) -> TerminalSequence:
    """Levels 0..n and connectors 0..n-1 of the terminal sequence of functor."""
    if n < 0:
        raise ValueError("Number of steps must be nonnegative.")
    _LOGGER.debug(f"Building terminal sequence of {functor} up to level {n}.")
    levels: List[FinSpace] = [FinSpace.one()]
    connectors: List[ContMap] = []
    stabilized_at: Optional[int] = None
    for k in tqdm(
        range(n), desc="Terminal Sequence", dynamic_ncols=True, disable=None
    ):
        levels.append(_next_level(functor, levels[k], k + 1))
        if k == 0:
            connector = ContMap.to_one(levels[1])
        else:
            connector = functor.apply_map(connectors[k - 1])
        connectors.append(connector)
        if stabilized_at is None and is_isomorphism(connector):
            stabilized_at = k
    _LOGGER.debug(
        f"Done building terminal sequence of {functor}, level sizes "
        f"{[len(level) for level in levels]}."
    )
    return TerminalSequence(
        functor=functor,
        levels=levels,
        connectors=connectors,
        stabilized_at=stabilized_at,
    )


def iter_behaviour_maps(coalg: Coalgebra) -> Iterator[ContMap]:
    """b_0, b_1, ... of the canonical cone from coalg into the terminal sequence."""
    structure = coalg.structure_map()
    behaviour = ContMap.to_one(coalg.carrier)
    while True:
        yield behaviour
        behaviour = coalg.functor.apply_map(behaviour).compose(structure)


def behaviour_map(coalg: Coalgebra, n: int) -> ContMap:
    """The depth-n behaviour b_n: carrier -> F^n(1)."""
    if n < 0:
        raise ValueError("Depth must be nonnegative.")
    for k, behaviour in enumerate(iter_behaviour_maps(coalg)):
        if k == n:
            return behaviour
    raise AssertionError("unreachable")


def kernel(f: ContMap) -> List[List[str]]:
    """Blocks of points with equal image, sorted."""
    blocks: Dict[str, List[str]] = {}
    for x, y in f.items():
        blocks.setdefault(y, []).append(x)
    return sorted(sorted(block) for block in blocks.values())


class BehaviouralPartition(PydanticModel):
    depth: int
    blocks: List[List[str]]
    stable_from: int
    """Least depth whose kernel already equals the depth-n kernel."""


def behavioural_partition(coalg: Coalgebra, n: int) -> BehaviouralPartition:
    if n < 0:
        raise ValueError("Depth must be nonnegative.")
    kernels: List[List[List[str]]] = []
    for k, behaviour in enumerate(iter_behaviour_maps(coalg)):
        kernels.append(kernel(behaviour))
        if k == n:
            break
    stable_from = len(kernels) - 1
    while stable_from > 0 and kernels[stable_from - 1] == kernels[-1]:
        stable_from -= 1
    return BehaviouralPartition(depth=n, blocks=kernels[-1], stable_from=stable_from)


def enumerate_coalgebras(
    functor: Functor, max_points: int, *, min_points: int = 0
) -> Iterator[Coalgebra]:
    """All coalgebras over carriers with up to max_points points, up to carrier iso."""
    for space in enumerate_small_spaces(max_points, min_n=min_points):
        for structure in enumerate_monotone_maps(space, functor.apply(space)):
            yield Coalgebra.from_map(functor, structure)


class FinalityReport(PydanticModel):
    passed: bool
    coalgebras_checked: int
    witness: Optional[str] = None


def verify_finality(final: Coalgebra, *, max_points: int = 4) -> FinalityReport:
    """Check that every small coalgebra has exactly one homomorphism into final."""
    checked = 0
    for coalg in enumerate_coalgebras(final.functor, max_points):
        checked += 1
        count = sum(1 for _ in homomorphisms(coalg, final))
        if count != 1:
            return FinalityReport(
                passed=False,
                coalgebras_checked=checked,
                witness=f"{coalg!r} has {count} homomorphisms into {final!r}",
            )
    return FinalityReport(passed=True, coalgebras_checked=checked)


class FinalCoalgebraResult(NamedTuple):
    sequence: TerminalSequence
    coalgebra: Optional[Coalgebra]
    finality: Optional[FinalityReport]


def final_coalgebra_if_stabilized(
    functor: Functor, max_n: int, *, verify_points: Optional[int] = 4
) -> FinalCoalgebraResult:
    """The final coalgebra (F^k(1), inverse of connector k) if the sequence stops.

    With verify_points set, finality is checked against all coalgebras on up to
    that many points.
    """
    sequence = terminal_sequence(functor, max_n)
    k = sequence.stabilized_at
    if k is None:
        return FinalCoalgebraResult(sequence, None, None)
    inverse: Dict[str, str] = {y: x for x, y in sequence.connectors[k].items()}
    final = Coalgebra(
        functor,
        sequence.levels[k],
        {y: deserialize_value(x) for y, x in sorted(inverse.items())},
    ).validate()
    finality = (
        verify_finality(final, max_points=verify_points)
        if verify_points is not None
        else None
    )
    return FinalCoalgebraResult(sequence, final, finality)


def level_sizes(sequence: TerminalSequence) -> Tuple[int, ...]:
    return tuple(len(level) for level in sequence.levels)
