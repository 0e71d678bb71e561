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

"""Subcoalgebras, and equalizers of coalgebra homomorphisms."""

from __future__ import annotations

from logging import getLogger
from typing import AbstractSet, FrozenSet, Iterable, NamedTuple, Set

from vietorised._utils import iter_submasks
from vietorised.coalgebra.coalgebra_core import Coalgebra, CoalgHom
from vietorised.topology import ContMap, NotParallel, equalizer

_LOGGER = getLogger(__name__)


class Subcoalgebra(NamedTuple):
    coalgebra: Coalgebra
    embedding: CoalgHom

    @property
    def points(self) -> FrozenSet[str]:
        return frozenset(self.coalgebra.carrier)


def restrict(coalg: Coalgebra, subset: AbstractSet[str]) -> Subcoalgebra:
    """The subcoalgebra on subset, which must be closed under the structure."""
    sub = coalg.carrier.subspace(subset)
    restriction = coalg.functor.restriction(coalg.carrier, subset)
    structure = {x: restriction.pull(coalg(x)) for x in sub}
    coalgebra = Coalgebra(coalg.functor, sub, structure)
    inclusion = ContMap(sub, coalg.carrier, {x: x for x in sub})
    return Subcoalgebra(
        coalgebra=coalgebra, embedding=CoalgHom(coalgebra, coalg, inclusion)
    )


def largest_subcoalgebra(coalg: Coalgebra, subset: Iterable[str]) -> Subcoalgebra:
    """Largest subcoalgebra of coalg whose carrier lies inside subset.

    Greatest fixpoint of S_(k+1) = {x in S_k | c(x) is in the image of
    F(S_k -> X)}, carrying the subspace topology.
    """
    current: Set[str] = set(subset)
    for x in current:
        coalg.carrier.index(x)
    _LOGGER.debug(
        f"Building largest subcoalgebra inside {len(current)} of {len(coalg)} points."
    )
    while True:
        restriction = coalg.functor.restriction(coalg.carrier, current)
        kept = {x for x in current if restriction.contains(coalg(x))}
        if kept == current:
            break
        current = kept
    _LOGGER.debug(f"Done building largest subcoalgebra with {len(current)} points.")
    return restrict(coalg, current)


def is_subcoalgebra(coalg: Coalgebra, subset: AbstractSet[str]) -> bool:
    """Whether every c(x), x in subset, is F(m)(v) for some v in F(subset).

    Decided by listing F(subset) outright, independently of the structural
    membership test used by largest_subcoalgebra.
    """
    sub = coalg.carrier.subspace(subset)
    inclusion = ContMap(sub, coalg.carrier, {x: x for x in sub})
    lifted = coalg.functor.value_map(inclusion)
    image = {lifted(v) for v in coalg.functor.carrier(sub).values.values()}
    return all(coalg(x) in image for x in sub)


def brute_force_largest_subcoalgebra(
    coalg: Coalgebra, subset: Iterable[str]
) -> FrozenSet[str]:
    """Carrier of the largest subcoalgebra inside subset, by trying every subset."""
    space = coalg.carrier
    best: FrozenSet[str] = frozenset()
    for mask in iter_submasks(space.mask(subset)):
        candidate = space.subset(mask)
        if len(candidate) > len(best) and is_subcoalgebra(coalg, candidate):
            best = candidate
    return best


def coalg_equalizer(h1: CoalgHom, h2: CoalgHom) -> Subcoalgebra:
    """Equalizer of two parallel homomorphisms in the category of coalgebras."""
    if h1.src != h2.src:
        raise NotParallel("domain", h1.src.carrier, h2.src.carrier)
    if h1.dst != h2.dst:
        raise NotParallel("codomain", h1.dst.carrier, h2.dst.carrier)
    agreement = equalizer(h1.map, h2.map)
    return largest_subcoalgebra(h1.src, agreement.space.points)
