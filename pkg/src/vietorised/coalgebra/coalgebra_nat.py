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

"""Natural transformations between functors, and coreflection along a mono one.

A mono transformation sigma: F -> G turns every F-coalgebra (X, c) into the
G-coalgebra I(X, c) = (X, sigma_X . c). The coreflection of a G-coalgebra (Y, d)
is the largest subcoalgebra of (Y, d) whose structure factors through sigma.
"""

from __future__ import annotations

from logging import getLogger
from typing import (
    AbstractSet,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    NamedTuple,
    Optional,
    Set,
    Tuple,
)

from typing_extensions import Final

from vietorised._utils import iter_submasks
from vietorised.coalgebra.coalgebra_core import Coalgebra, CoalgHom
from vietorised.functor import FValue, Functor, Hyper, serialize_value
from vietorised.topology import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    NotAnEmbedding,
    SizeLimits,
    find_embedding_failure,
)
from vietorised.vietoris import HyperVariant
from vietorised.vietorised_error import VietorisedError

_LOGGER = getLogger(__name__)


class ComponentUndefined(VietorisedError):
    def __init__(self, transformation: str, functor: str):
        self.transformation = transformation
        self.functor = functor

    def __str__(self) -> str:
        return (
            f"Transformation {self.transformation} has no component for "
            f"{self.functor}."
        )


class NotMono(VietorisedError):
    def __init__(self, transformation: str):
        self.transformation = transformation

    def __str__(self) -> str:
        return f"Transformation {self.transformation} is not mono."


class NatTransformation:
    """sigma: source -> target, given by one value-level rule for all spaces."""

    def __init__(
        self,
        name: str,
        source: Functor,
        target: Functor,
        rule: Callable[[FValue], FValue],
        *,
        mono: bool,
    ):
        self.name: Final = name
        self.source: Final = source
        self.target: Final = target
        self.mono: Final = mono
        self._rule: Final = rule

    def __str__(self) -> str:
        return self.name

    def __call__(self, value: FValue) -> FValue:
        return self._rule(value)

    def component(self, space: FinSpace) -> ContMap:
        """sigma at space, as a map source(space) -> target(space)."""
        dom = self.source.carrier(space)
        cod = self.target.carrier(space)
        mapping: Dict[str, str] = {}
        for name, value in dom.values.items():
            image = self(value)
            if image not in cod:
                raise ComponentUndefined(self.name, str(self.source))
            mapping[name] = cod.name(image)
        return ContMap(dom.space, cod.space, mapping)

    def preimages(self, space: FinSpace) -> Dict[FValue, FValue]:
        """Inverse of the component at space, on its image."""
        return {self(v): v for v in self.source.carrier(space).values.values()}

    def is_natural_at(self, f: ContMap) -> bool:
        lifted_source = self.source.value_map(f)
        lifted_target = self.target.value_map(f)
        return all(
            lifted_target(self(v)) == self(lifted_source(v))
            for v in self.source.carrier(f.dom).values.values()
        )


def identity_transformation(functor: Functor) -> NatTransformation:
    return NatTransformation(
        f"id_{functor}", functor, functor, lambda v: v, mono=True
    )


def subfunctor_inclusion(
    variant: HyperVariant, *, limits: SizeLimits = DEFAULT_LIMITS
) -> NatTransformation:
    """The inclusion of V+ or Vc into the compact Vietoris functor V."""
    if variant not in (HyperVariant.COMPACT_NONEMPTY, HyperVariant.COMPACT_CONNECTED):
        raise ValueError(f"Not a subfunctor of V: {variant.value}")
    return NatTransformation(
        f"{variant.value} -> V",
        Functor(Hyper(variant), limits=limits),
        Functor(Hyper(HyperVariant.COMPACT), limits=limits),
        lambda v: v,
        mono=True,
    )


def _check_source(sigma: NatTransformation, coalg: Coalgebra) -> None:
    if coalg.functor != sigma.source:
        raise ComponentUndefined(sigma.name, str(coalg.functor))


def induced_functor_I(  # noqa: N802
    sigma: NatTransformation, coalg: Coalgebra
) -> Coalgebra:
    """I(X, c) = (X, sigma_X . c)."""
    _check_source(sigma, coalg)
    return Coalgebra(
        sigma.target, coalg.carrier, {x: sigma(v) for x, v in coalg.structure.items()}
    )


def induced_hom(sigma: NatTransformation, h: CoalgHom) -> CoalgHom:
    """I(h) = h, between the induced coalgebras."""
    return CoalgHom(
        induced_functor_I(sigma, h.src), induced_functor_I(sigma, h.dst), h.map
    )


class Coreflection(NamedTuple):
    coalgebra: Coalgebra
    counit: CoalgHom


def coreflect(sigma: NatTransformation, gcoalg: Coalgebra) -> Coreflection:
    """The coreflection of a target-coalgebra into source-coalgebras."""
    if not sigma.mono:
        raise NotMono(sigma.name)
    if gcoalg.functor != sigma.target:
        raise ComponentUndefined(sigma.name, str(gcoalg.functor))

    carrier = gcoalg.carrier
    whole = sigma.preimages(carrier)
    current: Set[str] = {y for y in carrier if gcoalg(y) in whole}
    _LOGGER.debug(
        f"Building coreflection along {sigma} from {len(current)} of "
        f"{len(carrier)} points."
    )
    while True:
        sub = carrier.subspace(current)
        restriction = sigma.target.restriction(carrier, current)
        preimages = sigma.preimages(sub)
        structure: Dict[str, FValue] = {}
        for y in current:
            value = gcoalg(y)
            if restriction.contains(value):
                pulled = restriction.pull(value)
                if pulled in preimages:
                    structure[y] = preimages[pulled]
        if len(structure) == len(current):
            break
        current = set(structure)
    _LOGGER.debug(f"Done building coreflection with {len(current)} points.")

    coalgebra = Coalgebra(sigma.source, sub, structure)
    counit = CoalgHom(
        induced_functor_I(sigma, coalgebra),
        gcoalg,
        ContMap(sub, carrier, {y: y for y in sub}),
    )
    return Coreflection(coalgebra=coalgebra, counit=counit)


def _factors_through(
    sigma: NatTransformation, gcoalg: Coalgebra, subset: AbstractSet[str]
) -> bool:
    sub = gcoalg.carrier.subspace(subset)
    inclusion = ContMap(sub, gcoalg.carrier, {y: y for y in sub})
    lifted = sigma.target.value_map(inclusion)
    image = {lifted(sigma(v)) for v in sigma.source.carrier(sub).values.values()}
    return all(gcoalg(y) in image for y in sub)


def brute_force_coreflection(
    sigma: NatTransformation, gcoalg: Coalgebra
) -> FrozenSet[str]:
    """Carrier of the coreflection, by trying every subset of the carrier."""
    space = gcoalg.carrier
    best: FrozenSet[str] = frozenset()
    for mask in iter_submasks(space.full_mask):
        candidate = space.subset(mask)
        if len(candidate) > len(best) and _factors_through(sigma, gcoalg, candidate):
            best = candidate
    return best


def find_taut_failure(sigma: NatTransformation, m: ContMap) -> Optional[str]:
    """Why the naturality square of sigma at the embedding m is no pullback.

    The square has sigma_A and sigma_B horizontally and source(m), target(m)
    vertically. It is a pullback iff every pair (u, w) with target(m)(u) =
    sigma_B(w) has exactly one v in source(A) with sigma_A(v) = u and
    source(m)(v) = w, and source(A) carries the order induced by both legs.
    """
    failure = find_embedding_failure(m)
    if failure is not None:
        raise NotAnEmbedding(*failure)
    source_a = sigma.source.carrier(m.dom)
    target_a = sigma.target.carrier(m.dom)
    source_b = sigma.source.carrier(m.cod)
    lift_source = sigma.source.value_map(m)
    lift_target = sigma.target.value_map(m)

    legs: Dict[FValue, Tuple[FValue, FValue]] = {}
    for v in source_a.values.values():
        u = sigma(v)
        if u not in target_a:
            raise ComponentUndefined(sigma.name, str(sigma.source))
        legs[v] = (u, lift_source(v))
    fill_ins: Dict[Tuple[FValue, FValue], FValue] = {}
    for v, leg in legs.items():
        if leg in fill_ins:
            return (
                f"{serialize_value(v)} and {serialize_value(fill_ins[leg])} have "
                f"the same legs"
            )
        fill_ins[leg] = v

    for u in target_a.values.values():
        image = lift_target(u)
        for w in source_b.values.values():
            if sigma(w) == image and (u, w) not in fill_ins:
                return (
                    f"({serialize_value(u)}, {serialize_value(w)}) has no fill-in "
                    f"in {sigma.source} applied to the domain"
                )

    for v, (u, w) in legs.items():
        for v2, (u2, w2) in legs.items():
            induced = target_a.space.leq(
                target_a.name(u), target_a.name(u2)
            ) and source_b.space.leq(source_b.name(w), source_b.name(w2))
            if induced != source_a.space.leq(source_a.name(v), source_a.name(v2)):
                return (
                    f"order between {serialize_value(v)} and {serialize_value(v2)} "
                    f"is not induced by the legs"
                )
    return None


def taut_check(sigma: NatTransformation, m: ContMap) -> bool:
    return find_taut_failure(sigma, m) is None


def shipped_transformations(
    *, limits: SizeLimits = DEFAULT_LIMITS
) -> Iterable[NatTransformation]:
    yield subfunctor_inclusion(HyperVariant.COMPACT_NONEMPTY, limits=limits)
    yield subfunctor_inclusion(HyperVariant.COMPACT_CONNECTED, limits=limits)
