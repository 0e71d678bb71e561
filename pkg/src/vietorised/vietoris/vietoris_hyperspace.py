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

from enum import Enum
from logging import getLogger
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Union

from typing_extensions import Final

from vietorised._utils import canonical_json, iter_submasks
from vietorised.topology import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    SizeLimits,
    check_size,
    generate_topology,
    is_connected,
)
from vietorised.vietorised_error import SizeCapExceeded, VietorisedError

_LOGGER = getLogger(__name__)


class HyperVariant(Enum):
    LOWER = "Vl"
    COMPACT = "V"
    COMPACT_NONEMPTY = "V+"
    COMPACT_CONNECTED = "Vc"

    @property
    def is_compact(self) -> bool:
        return self is not HyperVariant.LOWER


class ClassicVariant(Enum):
    """Closed subsets with the hit-and-miss topology, mapped by closure of images.

    This is not a functor on finite spaces and is only used to reproduce that
    failure; it is deliberately kept out of HyperVariant and the functor grammar.
    """

    CLASSIC = "classic"


AnyVariant = Union[HyperVariant, ClassicVariant]


class NotOpen(VietorisedError):
    def __init__(self, subset: Iterable[str]):
        self.subset = frozenset(subset)

    def __str__(self) -> str:
        return f"Set {{{','.join(sorted(self.subset))}}} is not open."


def subset_name(points: Iterable[str]) -> str:
    """Point name of a subset inside a hyperspace; same as its serialized value."""
    elements = sorted(({"pt": p} for p in points), key=canonical_json)
    return canonical_json({"set": elements})


def hyperspace_masks(
    space: FinSpace, variant: AnyVariant, *, limit: Optional[int] = None
) -> List[int]:
    """Masks of the subsets of space that are points of the hyperspace.

    With a limit, enumeration stops with SizeCapExceeded as soon as more than
    limit subsets qualify.
    """
    construction = f"Hyperspace {variant.value}"
    keep: Callable[[int], bool]
    if variant is HyperVariant.LOWER or variant is ClassicVariant.CLASSIC:
        keep = space.is_down_mask
    elif variant is HyperVariant.COMPACT:
        keep = lambda m: True  # noqa: E731
    elif variant is HyperVariant.COMPACT_NONEMPTY:
        keep = lambda m: m != 0  # noqa: E731
    elif variant is HyperVariant.COMPACT_CONNECTED:
        keep = lambda m: is_connected(space, space.subset(m))  # noqa: E731
    else:
        raise ValueError(f"Unknown variant: {variant}")

    if limit is not None and variant in (
        HyperVariant.COMPACT,
        HyperVariant.COMPACT_NONEMPTY,
    ):
        size = 2 ** len(space) - (variant is HyperVariant.COMPACT_NONEMPTY)
        check_size(construction, size, limit)

    masks: List[int] = []
    for mask in iter_submasks(space.full_mask):
        if keep(mask):
            masks.append(mask)
            if limit is not None and len(masks) > limit:
                raise SizeCapExceeded(construction, len(masks), limit)
    return masks


def hyperspace_leq(space: FinSpace, variant: AnyVariant) -> Callable[[int, int], bool]:
    """Specialization preorder of the hyperspace, on subset masks.

    Lower: inclusion. Compact variants and the classic construction: the
    Egli-Milner preorder, A <= B iff A is contained in the down-closure of B and B
    in the up-closure of A.
    """
    if variant is HyperVariant.LOWER:
        return lambda a, b: a & ~b == 0

    def egli_milner(a: int, b: int) -> bool:
        return (
            a & ~space.down_closure_mask(b) == 0
            and b & ~space.up_closure_mask(a) == 0
        )

    return egli_milner


def hyperspace_image_mask(f: ContMap, variant: AnyVariant, mask: int) -> int:
    """Map action of the hyperspace construction on a single subset."""
    image = f.image_mask(mask)
    if variant is HyperVariant.LOWER or variant is ClassicVariant.CLASSIC:
        return f.cod.down_closure_mask(image)
    return image


class Hyperspace:
    def __init__(
        self,
        base: FinSpace,
        variant: AnyVariant,
        *,
        limits: SizeLimits = DEFAULT_LIMITS,
    ) -> None:
        _LOGGER.debug(f"Building {variant.value} hyperspace of {len(base)} points.")
        masks = hyperspace_masks(base, variant, limit=limits.max_derived_points)
        leq = hyperspace_leq(base, variant)
        names = [subset_name(base.subset(m)) for m in masks]
        mask_of = dict(zip(names, masks))

        self.base: Final = base
        self.variant: Final = variant
        self.masks: Final = tuple(masks)
        self._mask_of: Final = mask_of
        self._name_of: Final = dict(zip(masks, names))
        self.space: Final = FinSpace.from_leq(
            names,
            lambda a, b: leq(mask_of[a], mask_of[b]),
            max_points=limits.max_derived_points,
            construction=f"Hyperspace {variant.value}",
        )
        _LOGGER.debug(
            f"Done building {variant.value} hyperspace with {len(self.space)} points."
        )

    def __len__(self) -> int:
        return len(self.space)

    def point(self, subset: Iterable[str]) -> str:
        return self.point_of_mask(self.base.mask(subset))

    def point_of_mask(self, mask: int) -> str:
        try:
            return self._name_of[mask]
        except KeyError:
            raise ValueError(
                f"Subset {sorted(self.base.subset(mask))} is not a point of the "
                f"{self.variant.value} hyperspace."
            ) from None

    def subset(self, point: str) -> FrozenSet[str]:
        return self.base.subset(self._mask_of[point])

    def mask(self, point: str) -> int:
        return self._mask_of[point]

    def subsets(self) -> List[FrozenSet[str]]:
        return [self.base.subset(m) for m in self.masks]


def lower_vietoris(
    space: FinSpace, *, limits: SizeLimits = DEFAULT_LIMITS
) -> Hyperspace:
    return Hyperspace(space, HyperVariant.LOWER, limits=limits)


def compact_vietoris(
    space: FinSpace, *, limits: SizeLimits = DEFAULT_LIMITS
) -> Hyperspace:
    return Hyperspace(space, HyperVariant.COMPACT, limits=limits)


def subfunctor_variant(
    space: FinSpace, variant: HyperVariant, *, limits: SizeLimits = DEFAULT_LIMITS
) -> Hyperspace:
    if variant not in (HyperVariant.COMPACT_NONEMPTY, HyperVariant.COMPACT_CONNECTED):
        raise ValueError(f"Not a subfunctor variant of V: {variant.value}")
    return Hyperspace(space, variant, limits=limits)


def classic_vietoris(
    space: FinSpace, *, limits: SizeLimits = DEFAULT_LIMITS
) -> Hyperspace:
    return Hyperspace(space, ClassicVariant.CLASSIC, limits=limits)


def hyperspace_map(
    f: ContMap, variant: AnyVariant, *, limits: SizeLimits = DEFAULT_LIMITS
) -> ContMap:
    dom = Hyperspace(f.dom, variant, limits=limits)
    cod = Hyperspace(f.cod, variant, limits=limits)
    return ContMap(
        dom.space,
        cod.space,
        {
            dom.point_of_mask(m): cod.point_of_mask(
                hyperspace_image_mask(f, variant, m)
            )
            for m in dom.masks
        },
    )


def inclusion_into_compact(
    space: FinSpace, variant: HyperVariant, *, limits: SizeLimits = DEFAULT_LIMITS
) -> ContMap:
    """Component at space of the inclusion of a compact subfunctor into V."""
    if not variant.is_compact:
        raise ValueError(f"Not a compact variant: {variant.value}")
    sub = Hyperspace(space, variant, limits=limits)
    whole = compact_vietoris(space, limits=limits)
    return ContMap(sub.space, whole.space, {p: p for p in sub.space})


def _check_open(space: FinSpace, subset: Iterable[str]) -> int:
    mask = space.mask(subset)
    if not space.is_up_mask(mask):
        raise NotOpen(space.subset(mask))
    return mask


def hit(
    space: FinSpace,
    open_: Iterable[str],
    variant: AnyVariant = HyperVariant.COMPACT,
) -> FrozenSet[FrozenSet[str]]:
    """The subsets (points of the variant's hyperspace) meeting open_."""
    u = _check_open(space, open_)
    return frozenset(
        space.subset(m) for m in hyperspace_masks(space, variant) if m & u
    )


def miss_box(
    space: FinSpace,
    open_: Iterable[str],
    variant: AnyVariant = HyperVariant.COMPACT,
) -> FrozenSet[FrozenSet[str]]:
    """The subsets (points of the variant's hyperspace) contained in open_."""
    u = _check_open(space, open_)
    return frozenset(
        space.subset(m) for m in hyperspace_masks(space, variant) if m & ~u == 0
    )


def hyperspace_oracle(
    space: FinSpace, variant: AnyVariant, *, limits: SizeLimits = DEFAULT_LIMITS
) -> FinSpace:
    """The hyperspace built literally from its hit (and, if compact, box) subbasis."""
    masks = hyperspace_masks(space, variant)
    check_size("Hyperspace oracle", len(masks), limits.max_derived_points)
    names: Dict[int, str] = {m: subset_name(space.subset(m)) for m in masks}
    subbasis: List[List[str]] = []
    for u in space.open_masks(limits=limits):
        subbasis.append([names[m] for m in masks if m & u])
        if variant is not HyperVariant.LOWER:
            subbasis.append([names[m] for m in masks if m & ~u == 0])
    return generate_topology(
        names.values(),
        subbasis,
        limits=limits,
        max_points=limits.max_derived_points,
    )


def check_hyperspace_against_oracle(
    space: FinSpace, variant: AnyVariant, *, limits: SizeLimits = DEFAULT_LIMITS
) -> bool:
    return Hyperspace(space, variant, limits=limits).space == hyperspace_oracle(
        space, variant, limits=limits
    )
