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

from itertools import combinations
from logging import getLogger
from typing import (
    AbstractSet,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    MutableSequence,
    Optional,
    Sequence,
    Set,
    Tuple,
)

import networkx as nx  # type: ignore
from pydantic import BaseModel as PydanticModel
from pydantic import Extra, validator
from typing_extensions import Final

from vietorised._utils import iter_bits
from vietorised.vietorised_error import SizeCapExceeded, VietorisedError

_LOGGER = getLogger(__name__)


class SizeLimits(PydanticModel):
    # Applies to spaces built from user data.
    max_points: int = 16
    # Applies to spaces built by constructions (products, hyperspaces, F(X), ...).
    max_derived_points: int = 1024

    class Config:
        extra = Extra.forbid
        allow_mutation = False

    @validator("max_points", "max_derived_points")
    def _check_positive(cls, value: int) -> int:  # noqa: N805
        if value < 1:
            raise ValueError("size limits must be positive.")
        return value


DEFAULT_LIMITS: Final = SizeLimits()


class NotATopology(VietorisedError):
    def __init__(self, reason: str, *witness: AbstractSet[str]):
        self.reason = reason
        self.witness = tuple(frozenset(w) for w in witness)

    def __str__(self) -> str:
        witness = ", ".join(_format_subset(w) for w in self.witness)
        return f"{self.reason} (witness: {witness})" if witness else self.reason


class NotAPreorder(VietorisedError):
    def __init__(self, reason: str, *witness: str):
        self.reason = reason
        self.witness = witness

    def __str__(self) -> str:
        return f"{self.reason} (witness: {', '.join(self.witness)})"


class NotT0(VietorisedError):
    def __init__(self, x: str, y: str):
        self.x = x
        self.y = y

    def __str__(self) -> str:
        return f"Points '{self.x}' and '{self.y}' are topologically indistinguishable."


class InvalidMap(VietorisedError):
    def __init__(self, reason: str, point: Optional[str] = None):
        self.reason = reason
        self.point = point

    def __str__(self) -> str:
        if self.point is None:
            return self.reason
        return f"{self.reason} (point: '{self.point}')"


class NotAnEmbedding(VietorisedError):
    def __init__(self, x: str, y: str):
        self.x = x
        self.y = y

    def __str__(self) -> str:
        return (
            f"Map is not a subspace embedding: fails to reflect the order or "
            f"injectivity on '{self.x}', '{self.y}'."
        )


def _format_subset(subset: AbstractSet[str]) -> str:
    return "{" + ",".join(sorted(subset)) + "}"


def check_size(
    construction: str, size: int, limit: int, unit: str = "points"
) -> None:
    if size > limit:
        raise SizeCapExceeded(construction, size, limit, unit)


class FinSpace:
    """A finite topological space stored as its specialization preorder.

    x <= y iff x lies in the closure of {y}; the open sets are exactly the up-sets.
    Points are kept in sorted order, subsets are handled as bitmasks over that order.
    """

    def __init__(
        self,
        points: Iterable[str],
        up_masks: Callable[[Sequence[str]], Sequence[int]],
        *,
        max_points: int,
        construction: str = "Space",
    ) -> None:
        sorted_points = tuple(sorted(set(points)))
        check_size(construction, len(sorted_points), max_points)
        self._points: Final = sorted_points
        self._index: Final = {p: i for i, p in enumerate(sorted_points)}
        self._up: Final = tuple(up_masks(sorted_points))
        down = [0] * len(sorted_points)
        for i, up in enumerate(self._up):
            for j in iter_bits(up):
                down[j] |= 1 << i
        self._down: Final = tuple(down)
        self._full: Final = (1 << len(sorted_points)) - 1

    @classmethod
    def from_leq(
        cls,
        points: Iterable[str],
        leq: Callable[[str, str], bool],
        *,
        max_points: int = DEFAULT_LIMITS.max_derived_points,
        construction: str = "Space",
    ) -> FinSpace:
        def up_masks(sorted_points: Sequence[str]) -> Sequence[int]:
            return [
                sum(1 << j for j, y in enumerate(sorted_points) if leq(x, y))
                for x in sorted_points
            ]

        return FinSpace(
            points, up_masks, max_points=max_points, construction=construction
        )

    @classmethod
    def from_preorder(
        cls,
        points: Iterable[str],
        leq: Iterable[Tuple[str, str]],
        *,
        limits: SizeLimits = DEFAULT_LIMITS,
    ) -> FinSpace:
        """Build a space from an explicit preorder.

        Reflexive pairs may be omitted; the relation must otherwise already be
        transitive, the error names a violating triple.
        """
        point_set = set(points)
        relation: Set[Tuple[str, str]] = {(p, p) for p in point_set}
        for x, y in leq:
            for p in (x, y):
                if p not in point_set:
                    raise NotAPreorder("Relation mentions an unknown point", p)
            relation.add((x, y))
        space = cls.from_leq(
            point_set,
            lambda x, y: (x, y) in relation,
            max_points=limits.max_points,
            construction="Preorder",
        )
        space.check_preorder()
        return space

    @classmethod
    def from_relation(
        cls,
        points: Iterable[str],
        relation: Iterable[Tuple[str, str]],
        *,
        limits: SizeLimits = DEFAULT_LIMITS,
    ) -> FinSpace:
        """The space of the reflexive-transitive closure of an arbitrary relation."""
        graph = nx.DiGraph()
        graph.add_nodes_from(points)
        graph.add_edges_from(relation)
        closure = nx.transitive_closure(graph, reflexive=True)
        return cls.from_leq(
            graph.nodes,
            closure.has_edge,
            max_points=limits.max_points,
            construction="Preorder",
        )

    @classmethod
    def discrete(cls, points: Iterable[str]) -> FinSpace:
        return cls.from_leq(points, lambda x, y: x == y, construction="Discrete space")

    @classmethod
    def indiscrete(cls, points: Iterable[str]) -> FinSpace:
        return cls.from_leq(points, lambda x, y: True, construction="Indiscrete space")

    @classmethod
    def chain(cls, points: Sequence[str]) -> FinSpace:
        """The chain points[0] <= points[1] <= ..."""
        position = {p: i for i, p in enumerate(points)}
        return cls.from_leq(
            points, lambda x, y: position[x] <= position[y], construction="Chain"
        )

    @classmethod
    def sierpinski(cls) -> FinSpace:
        return cls.chain(("0", "1"))

    @classmethod
    def one(cls) -> FinSpace:
        return cls.discrete(("*",))

    @classmethod
    def empty(cls) -> FinSpace:
        return cls.discrete(())

    @property
    def points(self) -> Tuple[str, ...]:
        return self._points

    @property
    def full_mask(self) -> int:
        return self._full

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[str]:
        return iter(self._points)

    def __contains__(self, point: object) -> bool:
        return point in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinSpace):
            return False
        return self._points == other._points and self._up == other._up

    def __hash__(self) -> int:
        return hash((self._points, self._up))

    def __repr__(self) -> str:
        return f"FinSpace(points={list(self._points)}, leq={self.relation()})"

    def index(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise InvalidMap("Point does not belong to the space", point) from None

    def leq(self, x: str, y: str) -> bool:
        return bool(self._up[self.index(x)] >> self.index(y) & 1)

    def up_mask_at(self, i: int) -> int:
        return self._up[i]

    def down_mask_at(self, i: int) -> int:
        return self._down[i]

    def mask(self, subset: Iterable[str]) -> int:
        result = 0
        for point in subset:
            result |= 1 << self.index(point)
        return result

    def subset(self, mask: int) -> FrozenSet[str]:
        return frozenset(self._points[i] for i in iter_bits(mask))

    def sorted_subset(self, mask: int) -> List[str]:
        return [self._points[i] for i in iter_bits(mask)]

    def up_closure_mask(self, mask: int) -> int:
        result = 0
        for i in iter_bits(mask):
            result |= self._up[i]
        return result

    def down_closure_mask(self, mask: int) -> int:
        result = 0
        for i in iter_bits(mask):
            result |= self._down[i]
        return result

    def is_up_mask(self, mask: int) -> bool:
        return self.up_closure_mask(mask) == mask

    def is_down_mask(self, mask: int) -> bool:
        return self.down_closure_mask(mask) == mask

    def upset(self, subset: Iterable[str]) -> FrozenSet[str]:
        return self.subset(self.up_closure_mask(self.mask(subset)))

    def downset(self, subset: Iterable[str]) -> FrozenSet[str]:
        return self.subset(self.down_closure_mask(self.mask(subset)))

    def relation(self) -> List[Tuple[str, str]]:
        return [
            (x, self._points[j])
            for i, x in enumerate(self._points)
            for j in iter_bits(self._up[i])
        ]

    def open_masks(self, *, limits: SizeLimits = DEFAULT_LIMITS) -> List[int]:
        """All open sets (up-sets), as masks in increasing numeric order.

        Derived spaces are accepted up to max_derived_points points, provided
        they have at most 2 ** max_points open sets.
        """
        check_size("Open set enumeration", len(self), limits.max_derived_points)
        max_opens = 1 << limits.max_points
        opens = {0}
        for up in self._up:
            opens |= {u | up for u in opens}
            check_size("Open set enumeration", len(opens), max_opens, "open sets")
        return sorted(opens)

    def opens(self, *, limits: SizeLimits = DEFAULT_LIMITS) -> List[FrozenSet[str]]:
        return [self.subset(m) for m in self.open_masks(limits=limits)]

    def subspace(self, subset: Iterable[str]) -> FinSpace:
        kept = set(subset)
        for point in kept:
            self.index(point)
        return FinSpace.from_leq(
            kept,
            self.leq,
            max_points=max(len(kept), 1),
            construction="Subspace",
        )

    def check_preorder(self) -> None:
        for i, x in enumerate(self._points):
            if not self._up[i] >> i & 1:
                raise NotAPreorder("Relation is not reflexive", x, x)
            for j in iter_bits(self._up[i]):
                missing = self._up[j] & ~self._up[i]
                if missing:
                    z = self._points[next(iter_bits(missing))]
                    raise NotAPreorder(
                        "Relation is not transitive", x, self._points[j], z
                    )

    def is_t0(self) -> bool:
        return self.find_indistinguishable() is None

    def find_indistinguishable(self) -> Optional[Tuple[str, str]]:
        for i, j in combinations(range(len(self)), 2):
            if self._up[i] >> j & 1 and self._up[j] >> i & 1:
                return self._points[i], self._points[j]
        return None

    def is_discrete(self) -> bool:
        return all(up == 1 << i for i, up in enumerate(self._up))


class ContMap:
    """A point function between finite spaces.

    Construction only checks totality; continuity (= monotonicity) is decided by
    is_continuous() so that discontinuous candidates can be inspected too.
    """

    def __init__(self, dom: FinSpace, cod: FinSpace, mapping: Mapping[str, str]):
        for x in dom:
            if x not in mapping:
                raise InvalidMap("Map is not total", x)
            if mapping[x] not in cod:
                raise InvalidMap("Map leaves its codomain", mapping[x])
        for x in mapping:
            if x not in dom:
                raise InvalidMap("Map is defined outside its domain", x)
        self.dom: Final = dom
        self.cod: Final = cod
        self._mapping: Final = {x: mapping[x] for x in dom}

    @classmethod
    def identity(cls, space: FinSpace) -> ContMap:
        return ContMap(space, space, {x: x for x in space})

    @classmethod
    def constant(cls, dom: FinSpace, cod: FinSpace, value: str) -> ContMap:
        return ContMap(dom, cod, {x: value for x in dom})

    @classmethod
    def to_one(cls, dom: FinSpace) -> ContMap:
        one = FinSpace.one()
        return cls.constant(dom, one, "*")

    def __call__(self, point: str) -> str:
        try:
            return self._mapping[point]
        except KeyError:
            raise InvalidMap("Point is not in the domain", point) from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ContMap):
            return False
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self._mapping == other._mapping
        )

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, tuple(sorted(self._mapping.items()))))

    def __repr__(self) -> str:
        return f"ContMap({dict(sorted(self._mapping.items()))})"

    def items(self) -> List[Tuple[str, str]]:
        return sorted(self._mapping.items())

    def as_dict(self) -> Dict[str, str]:
        return dict(self._mapping)

    def compose(self, first: ContMap) -> ContMap:
        """self after first."""
        if first.cod != self.dom:
            raise InvalidMap("Maps are not composable")
        return ContMap(first.dom, self.cod, {x: self(first(x)) for x in first.dom})

    def image_mask(self, mask: int) -> int:
        return self.cod.mask(self(x) for x in self.dom.subset(mask))

    def preimage_mask(self, mask: int) -> int:
        targets = self.cod.subset(mask)
        return self.dom.mask(x for x in self.dom if self(x) in targets)

    def image(self, subset: Iterable[str]) -> FrozenSet[str]:
        return frozenset(self(x) for x in subset)

    def preimage(self, subset: Iterable[str]) -> FrozenSet[str]:
        targets = set(subset)
        return frozenset(x for x in self.dom if self(x) in targets)

    def is_injective(self) -> bool:
        return len(set(self._mapping.values())) == len(self._mapping)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.dom) == len(self.cod)


def space_from_opens(
    points: Iterable[str],
    open_family: Iterable[Iterable[str]],
    *,
    limits: SizeLimits = DEFAULT_LIMITS,
) -> FinSpace:
    point_set = frozenset(points)
    check_size("Space", len(point_set), limits.max_points)
    family: List[FrozenSet[str]] = []
    for open_ in open_family:
        open_set = frozenset(open_)
        if not open_set <= point_set:
            raise NotATopology("Open set is not a subset of the points", open_set)
        if open_set not in family:
            family.append(open_set)

    for required in (frozenset(), point_set):
        if required not in family:
            raise NotATopology("Family misses a required set", required)
    family_set = set(family)
    for a, b in combinations(family, 2):
        if a | b not in family_set:
            raise NotATopology("Family is not closed under union", a, b)
        if a & b not in family_set:
            raise NotATopology("Family is not closed under intersection", a, b)

    return generate_topology(point_set, family, limits=limits)


def generate_topology(
    points: Iterable[str],
    subbasis: Iterable[Iterable[str]],
    *,
    limits: SizeLimits = DEFAULT_LIMITS,
    max_points: Optional[int] = None,
) -> FinSpace:
    """The space of the topology generated by subbasis.

    x <= y iff every subbasic set containing x contains y; the minimal
    neighbourhood of x is the intersection of the subbasic sets containing it.
    """
    point_set = set(points)
    subbasic_sets = [frozenset(s) for s in subbasis]

    def up_masks(sorted_points: Sequence[str]) -> Sequence[int]:
        index = {p: i for i, p in enumerate(sorted_points)}
        full = (1 << len(sorted_points)) - 1
        neighbourhoods: MutableSequence[int] = [full] * len(sorted_points)
        for subbasic in subbasic_sets:
            mask = 0
            for p in subbasic:
                mask |= 1 << index[p]
            for i in iter_bits(mask):
                neighbourhoods[i] &= mask
        return neighbourhoods

    return FinSpace(
        point_set,
        up_masks,
        max_points=limits.max_points if max_points is None else max_points,
        construction="Generated topology",
    )


def is_open(space: FinSpace, subset: Iterable[str]) -> bool:
    return space.is_up_mask(space.mask(subset))


def find_discontinuity(f: ContMap) -> Optional[Tuple[str, str]]:
    """A pair x <= y with f(x) not <= f(y), if any."""
    for x, y in f.dom.relation():
        if not f.cod.leq(f(x), f(y)):
            return x, y
    return None


def is_continuous(f: ContMap) -> bool:
    return find_discontinuity(f) is None


def is_continuous_by_preimages(
    f: ContMap, *, limits: SizeLimits = DEFAULT_LIMITS
) -> bool:
    return all(
        f.dom.is_up_mask(f.preimage_mask(open_))
        for open_ in f.cod.open_masks(limits=limits)
    )


def find_embedding_failure(f: ContMap) -> Optional[Tuple[str, str]]:
    """A pair witnessing that f is not injective or does not reflect the order."""
    for x in f.dom:
        for y in f.dom:
            if x != y and f(x) == f(y):
                return x, y
            if f.dom.leq(x, y) != f.cod.leq(f(x), f(y)):
                return x, y
    return None


def is_embedding(f: ContMap) -> bool:
    """Injective, continuous and initial, i.e. a homeomorphism onto its image."""
    return find_embedding_failure(f) is None


class SeparationReport(PydanticModel):
    is_t0: bool
    is_t2: bool
    is_discrete: bool
    # Finite spaces are compact and locally compact, every codirected family of
    # subsets of a finite set contains its intersection (well-filteredness) and
    # finite intersections of compact sets are compact, so stable compactness
    # reduces to T0.
    is_stably_compact_finite: bool


def separation(space: FinSpace) -> SeparationReport:
    is_t0 = space.is_t0()
    # Finite Hausdorff spaces are discrete.
    is_discrete = space.is_discrete()
    return SeparationReport(
        is_t0=is_t0,
        is_t2=is_discrete,
        is_discrete=is_discrete,
        is_stably_compact_finite=is_t0,
    )


def closure(space: FinSpace, subset: Iterable[str]) -> FrozenSet[str]:
    return space.downset(subset)


def saturation(space: FinSpace, subset: Iterable[str]) -> FrozenSet[str]:
    return space.upset(subset)


def is_connected(space: FinSpace, subset: Iterable[str]) -> bool:
    """Whether subset is nonempty and connected in the subspace topology.

    Subspaces of finite spaces are again specialization preorders, so this is
    connectedness of the comparability graph restricted to subset.
    """
    points = set(subset)
    if not points:
        return False
    graph = nx.Graph()
    graph.add_nodes_from(points)
    graph.add_edges_from(
        (x, y) for x, y in space.relation() if x != y and x in points and y in points
    )
    return bool(nx.is_connected(graph))


def patch_topology(
    space: FinSpace, *, limits: SizeLimits = DEFAULT_LIMITS
) -> FinSpace:
    """Topology generated by the opens and the complements of compact saturated sets.

    In a finite space every subset is compact, so the compact saturated sets are
    the up-sets.
    """
    indistinguishable = space.find_indistinguishable()
    if indistinguishable is not None:
        raise NotT0(*indistinguishable)
    opens = space.open_masks(limits=limits)
    subbasis = [space.subset(m) for m in opens] + [
        space.subset(space.full_mask & ~m) for m in opens
    ]
    patch = generate_topology(space.points, subbasis, limits=limits)
    assert patch.is_discrete()
    return patch
