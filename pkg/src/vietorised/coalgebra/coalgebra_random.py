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

"""Seeded random coalgebras for hyperspace functors, for the brute-force oracles.

Larger systems are built as covers of a small base coalgebra (Y, d): a surjection
pi: X -> Y is drawn, X gets the order pulled back along pi (possibly refined by
a random preorder), and every c(x) picks preimages of all members of
d(pi(x)). This makes pi a homomorphism, so pairs of parallel homomorphisms
always exist.
"""

from __future__ import annotations

from logging import getLogger
from typing import Dict, List, Sequence, Set, Tuple

import numpy as np

from vietorised.coalgebra.coalgebra_core import (
    Coalgebra,
    CoalgHom,
    NotACoalgebra,
    homomorphisms,
)
from vietorised.functor import FValue, Functor, Hyper, Pt, SetOf
from vietorised.topology import (
    ContMap,
    FinSpace,
    enumerate_monotone_maps,
    point_names,
)

_LOGGER = getLogger(__name__)

_ATTEMPTS = 20


def _check_compact_hyperspace(functor: Functor) -> None:
    expr = functor.expr
    if not (isinstance(expr, Hyper) and expr.variant.is_compact):
        raise ValueError(f"Random coalgebras need a compact hyperspace leaf: {functor}")


def random_preorder(
    points: Sequence[str], rng: np.random.Generator, *, density: float = 0.3
) -> FinSpace:
    relation = [
        (x, y) for x in points for y in points if x != y and rng.random() < density
    ]
    return FinSpace.from_relation(points, relation)


def random_base_coalgebra(
    functor: Functor, n_states: int, rng: np.random.Generator
) -> Coalgebra:
    """A uniformly drawn coalgebra on a random preorder with n_states points."""
    _check_compact_hyperspace(functor)
    space = random_preorder(point_names(n_states), rng)
    structures = list(enumerate_monotone_maps(space, functor.apply(space)))
    return Coalgebra.from_map(functor, structures[rng.integers(len(structures))])


def _members(value: FValue) -> List[str]:
    assert isinstance(value, SetOf)
    return sorted(v.point for v in value.values if isinstance(v, Pt))


def random_cover(
    base: Coalgebra, n_states: int, rng: np.random.Generator
) -> Tuple[Coalgebra, ContMap]:
    """A coalgebra X with n_states points and a homomorphism X -> base."""
    _check_compact_hyperspace(base.functor)
    targets = list(base.carrier.points)
    if not targets or n_states < len(targets):
        raise ValueError("A cover needs at least as many states as the base.")
    labels = targets + [
        targets[i] for i in rng.integers(len(targets), size=n_states - len(targets))
    ]
    rng.shuffle(labels)
    states = [f"x{i}" for i in range(n_states)]
    pi = dict(zip(states, labels))
    fibres: Dict[str, List[str]] = {y: [] for y in targets}
    for x in states:
        fibres[pi[x]].append(x)

    pulled_back = FinSpace.from_leq(
        states, lambda a, b: base.carrier.leq(pi[a], pi[b]), construction="Cover"
    )
    for _ in range(_ATTEMPTS):
        if rng.random() < 0.5:
            refinement = random_preorder(states, rng, density=0.5)
            carrier = FinSpace.from_leq(
                states,
                lambda a, b: pulled_back.leq(a, b) and refinement.leq(a, b),
                construction="Cover",
            )
        else:
            carrier = pulled_back
        structure: Dict[str, FValue] = {}
        for x in states:
            chosen: Set[str] = set()
            for y in _members(base(pi[x])):
                fibre = fibres[y]
                picks = rng.random(len(fibre)) < 0.5
                picks[rng.integers(len(fibre))] = True
                chosen.update(z for z, keep in zip(fibre, picks) if keep)
            structure[x] = SetOf.of(Pt(z) for z in chosen)
        try:
            coalg = Coalgebra(base.functor, carrier, structure).validate()
        except NotACoalgebra:
            continue
        return coalg, ContMap(carrier, base.carrier, pi)

    # Whole fibres over the pulled-back order always give a coalgebra.
    structure = {
        x: SetOf.of(Pt(z) for y in _members(base(pi[x])) for z in fibres[y])
        for x in states
    }
    coalg = Coalgebra(base.functor, pulled_back, structure).validate()
    return coalg, ContMap(pulled_back, base.carrier, pi)


def random_coalgebra(
    functor: Functor, n_states: int, rng: np.random.Generator
) -> Coalgebra:
    """Either a random system on a discrete carrier or a random cover."""
    _check_compact_hyperspace(functor)
    if n_states == 0:
        return Coalgebra.empty(functor)
    if rng.random() < 0.5:
        space = FinSpace.discrete(point_names(n_states))
        values = list(functor.carrier(space).values.values())
        return Coalgebra(
            functor,
            space,
            {x: values[rng.integers(len(values))] for x in space},
        ).validate()
    n_base = int(rng.integers(1, min(n_states, 3) + 1))
    base = random_base_coalgebra(functor, n_base, rng)
    coalg, _ = random_cover(base, n_states, rng)
    return coalg


def random_coalgebra_pair_with_homs(
    functor: Functor, rng: np.random.Generator, *, max_states: int = 5
) -> Tuple[CoalgHom, CoalgHom]:
    """Two (possibly equal) parallel homomorphisms between random coalgebras."""
    n_base = int(rng.integers(1, min(max_states, 3) + 1))
    base = random_base_coalgebra(functor, n_base, rng)
    cover, _ = random_cover(base, int(rng.integers(n_base, max_states + 1)), rng)
    homs = list(homomorphisms(cover, base))
    first = homs[int(rng.integers(len(homs)))]
    second = homs[int(rng.integers(len(homs)))]
    _LOGGER.debug(
        f"Drew homomorphisms between {len(cover)} and {len(base)} states out of "
        f"{len(homs)}."
    )
    return first, second
