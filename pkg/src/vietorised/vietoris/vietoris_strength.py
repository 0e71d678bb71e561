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

"""The strength of compact Vietoris, (S, y) -> S x {y}, and its continuity checks."""

from __future__ import annotations

from functools import lru_cache
from logging import getLogger
from typing import (
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    Optional,
    Set,
    Tuple,
    TypeVar,
)

from pydantic import BaseModel as PydanticModel

from vietorised._utils import iter_bits
from vietorised.topology import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    SizeLimits,
    is_continuous,
    pair_point,
    product,
)
from vietorised.vietoris.vietoris_hyperspace import Hyperspace, HyperVariant

_LOGGER = getLogger(__name__)

_T_Element = TypeVar("_T_Element", bound=Hashable)
_T_Parameter = TypeVar("_T_Parameter", bound=Hashable)


def strength(
    subset: Iterable[_T_Element], parameter: _T_Parameter
) -> FrozenSet[Tuple[_T_Element, _T_Parameter]]:
    return frozenset((element, parameter) for element in subset)


def strength_tau(
    first: FinSpace, second: FinSpace, subset: Iterable[str], y: str
) -> FrozenSet[str]:
    """tau(S, y) as a subset of the points of first x second."""
    for x in subset:
        first.index(x)
    second.index(y)
    return frozenset(pair_point(x, z) for x, z in strength(subset, y))


class StrengthMap:
    """tau as a continuous map V(X) x Y -> V(X x Y), with the spaces involved."""

    def __init__(
        self,
        first: FinSpace,
        second: FinSpace,
        *,
        limits: SizeLimits = DEFAULT_LIMITS,
    ) -> None:
        self.first = first
        self.second = second
        self.hyper_first = Hyperspace(first, HyperVariant.COMPACT, limits=limits)
        self.dom = product(self.hyper_first.space, second, limits=limits)
        self.pairs = product(first, second, limits=limits)
        self.hyper_pairs = Hyperspace(
            self.pairs.space, HyperVariant.COMPACT, limits=limits
        )
        mapping: Dict[str, str] = {}
        for point, (s, y) in self.dom.components.items():
            subset = self.hyper_first.subset(s)
            mapping[point] = self.hyper_pairs.point(
                strength_tau(first, second, subset, y)
            )
        self.map = ContMap(self.dom.space, self.hyper_pairs.space, mapping)

    def dom_point(self, subset: Iterable[str], y: str) -> str:
        return pair_point(self.hyper_first.point(subset), y)


@lru_cache(maxsize=256)
def _strength_map_for(
    first: FinSpace, second: FinSpace, max_points: int, max_derived_points: int
) -> StrengthMap:
    limits = SizeLimits(max_points=max_points, max_derived_points=max_derived_points)
    return StrengthMap(first, second, limits=limits)


def _cached_strength_map(
    first: FinSpace, second: FinSpace, limits: SizeLimits
) -> StrengthMap:
    return _strength_map_for(
        first, second, limits.max_points, limits.max_derived_points
    )


def strength_map(
    first: FinSpace, second: FinSpace, *, limits: SizeLimits = DEFAULT_LIMITS
) -> ContMap:
    return StrengthMap(first, second, limits=limits).map


class StrengthReport(PydanticModel):
    continuous: bool
    hit_identity: bool
    box_identity: bool
    checked_opens: int
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.continuous and self.hit_identity and self.box_identity


def check_strength_identities(
    first: FinSpace,
    second: FinSpace,
    *,
    limits: SizeLimits = DEFAULT_LIMITS,
) -> StrengthReport:
    """Check tau's continuity through the preimages of hit and box sets.

    Every open W of first x second is the union of the rectangles U_i x V_i,
    i in I, of minimal neighbourhoods of its points, and
      tau^-1[W hit] = union over i of (U_i hit) x V_i
      tau^-1[W box] = union over F in I of (union_F U_i box) x (meet_F V_i)
    with the empty union being the empty set and the empty meet being Y.
    """
    tau = StrengthMap(first, second, limits=limits)
    dom_points = [(m, y) for m in tau.hyper_first.masks for y in range(len(second))]
    images = {
        (m, y): tau.hyper_pairs.mask(
            tau.map(pair_point(tau.hyper_first.point_of_mask(m), second.points[y]))
        )
        for m, y in dom_points
    }
    pairs = tau.pairs.space
    coordinates = [
        (first.index(x), second.index(y))
        for x, y in (tau.pairs.components[p] for p in pairs.points)
    ]

    hit_ok = box_ok = True
    witness: Optional[str] = None
    opens = pairs.open_masks(limits=limits)
    for w in opens:
        rectangles = {
            (first.up_mask_at(i), second.up_mask_at(j))
            for i, j in (coordinates[k] for k in iter_bits(w))
        }
        preimage_hit = {(m, y) for m, y in dom_points if images[m, y] & w}
        preimage_box = {(m, y) for m, y in dom_points if images[m, y] & ~w == 0}
        union_hit = {
            (m, y)
            for m, y in dom_points
            if any(m & u and v >> y & 1 for u, v in rectangles)
        }
        # For fixed y the union over F is largest for F = {i | y in V_i}.
        union_box: Set[Tuple[int, int]] = set()
        for m, y in dom_points:
            covered = 0
            for u, v in rectangles:
                if v >> y & 1:
                    covered |= u
            if m & ~covered == 0:
                union_box.add((m, y))
        if preimage_hit != union_hit and hit_ok:
            hit_ok = False
            witness = f"hit identity fails for W = {sorted(pairs.subset(w))}"
        if preimage_box != union_box and box_ok:
            box_ok = False
            witness = f"box identity fails for W = {sorted(pairs.subset(w))}"

    return StrengthReport(
        continuous=is_continuous(tau.map),
        hit_identity=hit_ok,
        box_identity=box_ok,
        checked_opens=len(opens),
        witness=witness,
    )


def check_strength_naturality(
    f: ContMap, g: ContMap, *, limits: SizeLimits = DEFAULT_LIMITS
) -> bool:
    """V(f x g) after tau equals tau after (V f x g), on every point."""
    hyper_dom = _cached_strength_map(f.dom, g.dom, limits).hyper_first
    tau_cod = _cached_strength_map(f.cod, g.cod, limits)
    for s in hyper_dom.space:
        subset = hyper_dom.subset(s)
        for y in g.dom:
            via_left = {pair_point(f(x), g(z)) for x, z in strength(subset, y)}
            image = f.image(subset)
            via_right = tau_cod.hyper_pairs.subset(
                tau_cod.map(tau_cod.dom_point(image, g(y)))
            )
            if via_left != via_right:
                return False
    return True
