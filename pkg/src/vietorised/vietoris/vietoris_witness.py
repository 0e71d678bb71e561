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

"""Executable counterexamples about Vietoris hyperspaces of finite spaces."""

from __future__ import annotations

from logging import getLogger
from typing import AbstractSet, Dict, Iterable, List

from pydantic import BaseModel as PydanticModel

from vietorised.topology import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    NotAnEmbedding,
    SizeLimits,
    find_embedding_failure,
    generate_topology,
    is_continuous,
    is_embedding,
    product,
)
from vietorised.vietoris.vietoris_hyperspace import (
    AnyVariant,
    ClassicVariant,
    Hyperspace,
    HyperVariant,
    hyperspace_map,
    miss_box,
)
from vietorised.vietorised_error import VietorisedError

_LOGGER = getLogger(__name__)


class TooSmall(VietorisedError):
    def __init__(self, size: int, minimum: int):
        self.size = size
        self.minimum = minimum

    def __str__(self) -> str:
        return f"Space has {self.size} points, at least {self.minimum} are needed."


class NotHausdorff(VietorisedError):
    def __str__(self) -> str:
        return "Space is not Hausdorff (finite Hausdorff spaces are discrete)."


def sorted_family(family: Iterable[AbstractSet[str]]) -> List[List[str]]:
    """Subsets as sorted lists, ordered by size and then lexicographically."""
    return sorted((sorted(s) for s in family), key=lambda s: (len(s), s))


class ClassicWitnessReport(PydanticModel):
    points: List[str]
    subbasis: List[List[str]]
    opens: List[List[str]]
    closed_sets: List[List[str]]
    subspace: List[str]
    box: List[List[str]]
    preimage: List[List[str]]
    preimage_is_open: bool
    neighbourhood_of_singleton: List[List[str]]
    map_is_continuous: bool
    reproduced: bool


def classic_nonfunctoriality_witness(
    *, limits: SizeLimits = DEFAULT_LIMITS
) -> ClassicWitnessReport:
    """Closed sets with the hit-and-miss topology do not give a functor.

    On X = {1,2,3} generated by {1,2} and {2,3}, mapping closed sets along the
    inclusion of {1,2} by closure of images is discontinuous: the preimage of
    the box of {1,2} is {{}, {1}}, while every open of the hyperspace of {1,2}
    containing {1} also contains {1,2}.
    """
    subbasis = [["1", "2"], ["2", "3"]]
    space = generate_topology(["1", "2", "3"], subbasis, limits=limits)
    subspace = space.subspace(["1", "2"])
    inclusion = ContMap(subspace, space, {x: x for x in subspace})

    hyper_space = Hyperspace(space, ClassicVariant.CLASSIC, limits=limits)
    hyper_subspace = Hyperspace(subspace, ClassicVariant.CLASSIC, limits=limits)
    hyper_inclusion = hyperspace_map(inclusion, ClassicVariant.CLASSIC, limits=limits)

    box = miss_box(space, ["1", "2"], ClassicVariant.CLASSIC)
    box_points = [hyper_space.point(s) for s in box]
    preimage_points = hyper_inclusion.preimage(box_points)
    preimage = [hyper_subspace.subset(p) for p in preimage_points]
    preimage_is_open = hyper_subspace.space.is_up_mask(
        hyper_subspace.space.mask(preimage_points)
    )
    neighbourhood = [
        hyper_subspace.subset(p)
        for p in hyper_subspace.space.upset([hyper_subspace.point(["1"])])
    ]

    report = ClassicWitnessReport(
        points=list(space.points),
        subbasis=subbasis,
        opens=sorted_family(space.opens(limits=limits)),
        closed_sets=sorted_family(hyper_space.subsets()),
        subspace=list(subspace.points),
        box=sorted_family(box),
        preimage=sorted_family(preimage),
        preimage_is_open=preimage_is_open,
        neighbourhood_of_singleton=sorted_family(neighbourhood),
        map_is_continuous=is_continuous(hyper_inclusion),
        reproduced=False,
    )
    report.reproduced = (
        report.closed_sets == [[], ["1"], ["3"], ["1", "3"], ["1", "2", "3"]]
        and report.preimage == [[], ["1"]]
        and not report.preimage_is_open
        and ["1", "2"] in report.neighbourhood_of_singleton
        and not report.map_is_continuous
    )
    _LOGGER.debug(f"Classic hyperspace witness reproduced: {report.reproduced}.")
    return report


class MonoconeWitnessReport(PydanticModel):
    points: List[str]
    diagonal: List[List[str]]
    square: List[List[str]]
    first_of_diagonal: List[str]
    first_of_square: List[str]
    second_of_diagonal: List[str]
    second_of_square: List[str]
    reproduced: bool


def monocone_failure_witness(
    space: FinSpace, *, limits: SizeLimits = DEFAULT_LIMITS
) -> MonoconeWitnessReport:
    """The projections of X x X stop being jointly monic after applying V.

    The diagonal and the whole square have the same images under both
    projections although they differ as points of V(X x X).
    """
    if len(space) < 2:
        raise TooSmall(len(space), 2)
    if not space.is_discrete():
        raise NotHausdorff()

    square = product(space, space, limits=limits)
    hyper_square = Hyperspace(square.space, HyperVariant.COMPACT, limits=limits)
    diagonal = [square.point(x, x) for x in space]
    whole = list(square.space.points)
    images: Dict[str, List[str]] = {}
    for name, proj in (("first", square.proj1), ("second", square.proj2)):
        action = hyperspace_map(proj, HyperVariant.COMPACT, limits=limits)
        target = Hyperspace(space, HyperVariant.COMPACT, limits=limits)
        for set_name, subset in (("diagonal", diagonal), ("square", whole)):
            images[f"{name}_of_{set_name}"] = sorted(
                target.subset(action(hyper_square.point(subset)))
            )

    report = MonoconeWitnessReport(
        points=list(space.points),
        diagonal=[list(square.components[p]) for p in sorted(diagonal)],
        square=[list(square.components[p]) for p in whole],
        reproduced=False,
        **images,
    )
    report.reproduced = (
        len(set(map(tuple, images.values()))) == 1
        and report.first_of_diagonal == list(space.points)
        and hyper_square.point(diagonal) != hyper_square.point(whole)
    )
    return report


def preserves_embeddings_check(
    variant: AnyVariant, m: ContMap, *, limits: SizeLimits = DEFAULT_LIMITS
) -> bool:
    """Whether the hyperspace construction sends the embedding m to an embedding."""
    failure = find_embedding_failure(m)
    if failure is not None:
        raise NotAnEmbedding(*failure)
    return is_embedding(hyperspace_map(m, variant, limits=limits))
