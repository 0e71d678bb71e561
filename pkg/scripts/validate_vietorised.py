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

from itertools import product as cartesian
from logging import INFO, getLogger
from typing import Dict, List, Sequence, Tuple

import numpy as np

from vietorised._utils import parallelize
from vietorised.coalgebra import (
    brute_force_coreflection,
    brute_force_largest_subcoalgebra,
    coalg_equalizer,
    coreflect,
    identity_transformation,
    is_coalg_hom,
    level_sizes,
    random_coalgebra,
    random_coalgebra_pair_with_homs,
    shipped_transformations,
    taut_check,
    terminal_sequence,
)
from vietorised.functor import check_functor_laws
from vietorised.topology import (
    ContMap,
    FinSpace,
    enumerate_embeddings,
    enumerate_maps,
    enumerate_monotone_maps,
    enumerate_preorders,
    enumerate_small_spaces,
    equalizer,
    is_continuous,
    is_continuous_by_preimages,
    is_embedding,
    product,
)
from vietorised.vietoris import (
    HyperVariant,
    check_hyperspace_against_oracle,
    check_strength_identities,
    check_strength_naturality,
    compact_vietoris,
    lower_vietoris,
)
from vietorised.vietorised_manager import VietorisedManager

_LOGGER = getLogger(__name__)

_MAX_ORACLE_POINTS = 4
_MAX_LAW_POINTS = 3
_MAX_LIMIT_POINTS = 4
_MAX_CONE_POINTS = 6
_MAX_FACTOR_POINTS = 2
_MAX_EQUALIZER_CODOMAIN_POINTS = 2
_LAW_FUNCTORS = ["Id", "C(two)", "Id + Id", "Id * Id", "V", "Vl", "V+", "Vc"]
_RANDOM_SYSTEMS = 200
_MAX_STATES = 5

Failures = List[str]


def _check_continuity(n: int) -> Failures:
    failures: Failures = []
    codomains = list(enumerate_small_spaces(_MAX_LIMIT_POINTS))
    for dom in enumerate_preorders(n):
        for cod in codomains:
            for f in enumerate_maps(dom, cod):
                if is_continuous(f) != is_continuous_by_preimages(f):
                    failures.append(f"Continuity tests disagree on {f.as_dict()}")
    return failures


def _check_equalizer_cones(n: int) -> Failures:
    # Any subset of dom is the agreement set of two maps into the indiscrete
    # two-point space, so these codomains reach every equalizer of dom.
    failures: Failures = []
    tests = list(enumerate_small_spaces(_MAX_LIMIT_POINTS))
    codomains = list(enumerate_small_spaces(_MAX_EQUALIZER_CODOMAIN_POINTS))
    for dom in enumerate_preorders(n):
        parallel: Dict[int, Tuple[ContMap, ContMap]] = {}
        for cod in codomains:
            maps = list(enumerate_monotone_maps(dom, cod))
            for f, g in cartesian(maps, repeat=2):
                eq = equalizer(f, g)
                agreement = dom.mask(x for x in dom if f(x) == g(x))
                if (
                    f.compose(eq.embedding) != g.compose(eq.embedding)
                    or eq.space != dom.subspace(dom.subset(agreement))
                    or not is_embedding(eq.embedding)
                ):
                    failures.append(f"Bad equalizer of {f.as_dict()}, {g.as_dict()}")
                parallel.setdefault(agreement, (f, g))
        # The cone condition only depends on the agreement set.
        test_maps = {test: list(enumerate_monotone_maps(test, dom)) for test in tests}
        for f, g in parallel.values():
            eq = equalizer(f, g)
            for test, maps in test_maps.items():
                for h in maps:
                    equalizes = f.compose(h) == g.compose(h)
                    inside = all(h(t) in eq.space for t in test)
                    if equalizes != inside:
                        failures.append(
                            f"Equalizing and factoring disagree at {h.as_dict()}"
                        )
                    elif inside:
                        # The embedding is injective, so k is the only candidate.
                        k = ContMap(test, eq.space, h.as_dict())
                        if not is_continuous(k) or eq.embedding.compose(k) != h:
                            failures.append(f"{h.as_dict()} does not factor")
    return failures


def _check_product_cones(test: FinSpace) -> Failures:
    failures: Failures = []
    factors = list(enumerate_small_spaces(_MAX_FACTOR_POINTS))
    for first, second in cartesian(factors, repeat=2):
        prod = product(first, second)
        # Jointly injective projections make any mediating map unique.
        pairs = {(prod.proj1(p), prod.proj2(p)) for p in prod.space}
        if len(pairs) != len(prod.space):
            failures.append(f"Projections of {first} x {second} are not injective")
            continue
        legs = list(enumerate_monotone_maps(test, second))
        for f in enumerate_monotone_maps(test, first):
            for g in legs:
                h = prod.pairing(f, g)
                if not (
                    is_continuous(h)
                    and prod.proj1.compose(h) == f
                    and prod.proj2.compose(h) == g
                ):
                    failures.append(
                        f"No mediating map for {f.as_dict()}, {g.as_dict()}"
                    )
    return failures


def _check_hyperspaces(n: int) -> Failures:
    failures: Failures = []
    for space in enumerate_preorders(n):
        for variant in (HyperVariant.LOWER, HyperVariant.COMPACT):
            if not check_hyperspace_against_oracle(space, variant):
                failures.append(f"{variant.value} differs from its oracle on {space}")
        if not lower_vietoris(space).space.is_t0():
            failures.append(f"Lower hyperspace of {space} is not T0")
        if space.is_discrete() and not compact_vietoris(space).space.is_discrete():
            failures.append(f"Compact hyperspace of {space} is not discrete")
    return failures


def _check_functor_laws(text: str) -> Failures:
    report = check_functor_laws(
        VietorisedManager().functor(text), max_points=_MAX_LAW_POINTS
    )
    if report.passed:
        return []
    return [f"Functor laws fail for {text}: {report.witness}"]


def _check_strength(sizes: Tuple[int, int]) -> Failures:
    failures: Failures = []
    for first in enumerate_preorders(sizes[0]):
        for second in enumerate_preorders(sizes[1]):
            report = check_strength_identities(first, second)
            if not (report.continuous and report.hit_identity and report.box_identity):
                failures.append(f"Strength on {first} x {second}: {report.witness}")
    return failures


def _check_strength_naturality(dom: FinSpace) -> Failures:
    spaces: Sequence[FinSpace] = list(enumerate_small_spaces(_MAX_LAW_POINTS))
    seconds = [
        g
        for dom2, cod2 in cartesian(spaces, repeat=2)
        for g in enumerate_monotone_maps(dom2, cod2)
    ]
    failures: Failures = []
    for cod in spaces:
        for f in enumerate_monotone_maps(dom, cod):
            for g in seconds:
                if not check_strength_naturality(f, g):
                    failures.append(f"Strength is not natural at {f}, {g}")
    return failures


def _check_equalizers(seed: int, *, text: str) -> Failures:
    functor = VietorisedManager().functor(text)
    rng = np.random.default_rng(seed)
    h1, h2 = random_coalgebra_pair_with_homs(functor, rng, max_states=_MAX_STATES)
    result = coalg_equalizer(h1, h2)
    agreement = equalizer(h1.map, h2.map).space.points
    if result.points != brute_force_largest_subcoalgebra(h1.src, agreement):
        return [f"Equalizer differs from brute force for {h1!r}, {h2!r}"]
    if not is_coalg_hom(result.embedding):
        return [f"Equalizer embedding is no homomorphism for {h1!r}, {h2!r}"]
    return []


def _check_coreflections(seed: int) -> Failures:
    failures: Failures = []
    rng = np.random.default_rng(seed)
    for sigma in shipped_transformations():
        n_states = int(rng.integers(0, _MAX_STATES + 1))
        gcoalg = random_coalgebra(sigma.target, n_states, rng)
        result = coreflect(sigma, gcoalg)
        expected = brute_force_coreflection(sigma, gcoalg)
        if frozenset(result.coalgebra.carrier) != expected:
            failures.append(f"Coreflection along {sigma} differs for {gcoalg!r}")
        if not is_coalg_hom(result.counit):
            failures.append(f"Counit along {sigma} is no homomorphism for {gcoalg!r}")
    return failures


def _check_tautness(n: int) -> Failures:
    failures: Failures = []
    sigmas = list(shipped_transformations())
    nonempty = sigmas[0]
    dom = FinSpace.discrete([str(i) for i in range(n)])
    for k in range(n, _MAX_ORACLE_POINTS + 1):
        cod = FinSpace.discrete([str(i) for i in range(k)])
        for m in enumerate_embeddings(dom, cod):
            if not taut_check(nonempty, m):
                failures.append(f"{nonempty} is not taut at {m}")
    for space in enumerate_preorders(n):
        identity = ContMap.identity(space)
        for sigma in [*sigmas, identity_transformation(nonempty.target)]:
            if not taut_check(sigma, identity):
                failures.append(f"{sigma} is not taut at the identity of {space}")
    return failures


def _check_lower_terminal_sequence() -> Failures:
    functor = VietorisedManager().functor("Vl")
    sequence = terminal_sequence(functor, 5)
    if (
        level_sizes(sequence) != (1, 2, 3, 4, 5, 6)
        or sequence.stabilized_at is not None
    ):
        return [f"Unexpected terminal sequence of Vl: {level_sizes(sequence)}"]
    return []


def _report(name: str, results: Sequence[Failures]) -> int:
    failures = [failure for result in results for failure in result]
    for failure in failures:
        _LOGGER.error(f"{name}: {failure}")
    _LOGGER.info(f"{name}: {len(results)} tasks, {len(failures)} failures.")
    return len(failures)


def _main() -> None:
    VietorisedManager().configure_logging(console=INFO)

    num_failures = 0
    num_failures += _report(
        "Continuity",
        parallelize(
            _check_continuity,
            range(1, _MAX_LIMIT_POINTS + 1),
            progress_bar_desc="Continuity",
        ),
    )
    num_failures += _report(
        "Equalizer cones",
        parallelize(
            _check_equalizer_cones,
            range(1, _MAX_LIMIT_POINTS + 1),
            progress_bar_desc="Equalizer Cones",
        ),
    )
    num_failures += _report(
        "Product cones",
        parallelize(
            _check_product_cones,
            list(enumerate_small_spaces(_MAX_CONE_POINTS)),
            progress_bar_desc="Product Cones",
        ),
    )
    num_failures += _report(
        "Hyperspace oracle",
        parallelize(
            _check_hyperspaces,
            range(1, _MAX_ORACLE_POINTS + 1),
            progress_bar_desc="Hyperspace Oracle",
        ),
    )
    num_failures += _report(
        "Functor laws",
        parallelize(
            _check_functor_laws, _LAW_FUNCTORS, progress_bar_desc="Functor Laws"
        ),
    )
    num_failures += _report(
        "Strength identities",
        parallelize(
            _check_strength,
            cartesian(range(1, _MAX_LAW_POINTS + 1), repeat=2),
            progress_bar_desc="Strength Identities",
        ),
    )
    num_failures += _report(
        "Strength naturality",
        parallelize(
            _check_strength_naturality,
            list(enumerate_small_spaces(_MAX_LAW_POINTS)),
            progress_bar_desc="Strength Naturality",
        ),
    )
    for text in ("V", "V+"):
        num_failures += _report(
            f"Equalizer oracle ({text})",
            parallelize(
                _check_equalizers,
                range(_RANDOM_SYSTEMS),
                extra_arguments={"text": text},
                progress_bar_desc=f"Equalizers {text}",
            ),
        )
    num_failures += _report(
        "Coreflection oracle",
        parallelize(
            _check_coreflections,
            range(_RANDOM_SYSTEMS),
            progress_bar_desc="Coreflections",
        ),
    )
    num_failures += _report(
        "Tautness",
        parallelize(
            _check_tautness,
            range(1, _MAX_ORACLE_POINTS + 1),
            progress_bar_desc="Tautness",
        ),
    )
    num_failures += _report("Terminal sequence", [_check_lower_terminal_sequence()])

    if num_failures:
        raise SystemExit(f"{num_failures} checks failed.")
    _LOGGER.info("All checks passed.")


if __name__ == "__main__":
    try:
        _main()
    except Exception:
        # Make exceptions show up in log.
        _LOGGER.exception("Exception occurred.")
        raise
