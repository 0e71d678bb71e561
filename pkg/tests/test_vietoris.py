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

import pytest

from vietorised.topology import (
    ContMap,
    FinSpace,
    NotAnEmbedding,
    enumerate_embeddings,
    enumerate_monotone_maps,
    enumerate_small_spaces,
    generate_topology,
    is_continuous,
    is_continuous_by_preimages,
    is_embedding,
    product,
)
from vietorised.vietoris import (
    ClassicVariant,
    Hyperspace,
    HyperVariant,
    NotHausdorff,
    NotOpen,
    TooSmall,
    check_hyperspace_against_oracle,
    check_strength_identities,
    check_strength_naturality,
    classic_nonfunctoriality_witness,
    compact_vietoris,
    hit,
    hyperspace_map,
    inclusion_into_compact,
    lower_vietoris,
    miss_box,
    monocone_failure_witness,
    preserves_embeddings_check,
    strength,
    strength_map,
    strength_tau,
    subfunctor_variant,
)

_ALL_VARIANTS = [*HyperVariant, ClassicVariant.CLASSIC]


def test_hit_and_miss_box() -> None:
    sierpinski = FinSpace.sierpinski()
    assert hit(sierpinski, ["1"]) == {frozenset({"1"}), frozenset({"0", "1"})}
    assert hit(sierpinski, []) == frozenset()
    assert miss_box(sierpinski, []) == {frozenset()}
    assert len(miss_box(sierpinski, ["0", "1"])) == 4
    with pytest.raises(NotOpen):
        hit(sierpinski, ["0"])


def test_lower_vietoris() -> None:
    one = lower_vietoris(FinSpace.one())
    assert one.subsets() == [frozenset(), frozenset({"*"})]
    assert one.space.leq(one.point([]), one.point(["*"]))
    assert not one.space.leq(one.point(["*"]), one.point([]))

    chain = lower_vietoris(FinSpace.sierpinski())
    empty, bottom, whole = (chain.point(s) for s in ([], ["0"], ["0", "1"]))
    assert len(chain) == 3
    assert chain.space.leq(empty, bottom) and chain.space.leq(bottom, whole)
    assert chain.space.is_t0()
    with pytest.raises(ValueError):
        chain.point(["1"])


def test_compact_vietoris_of_sierpinski() -> None:
    hyper = compact_vietoris(FinSpace.sierpinski())
    assert len(hyper) == 4
    bottom, top, whole = (hyper.point(s) for s in (["0"], ["1"], ["0", "1"]))
    assert hyper.space.leq(bottom, whole)
    assert hyper.space.leq(whole, top)
    empty = hyper.point([])
    assert hyper.space.upset([empty]) == {empty}
    assert hyper.space.downset([empty]) == {empty}


def test_subfunctor_variants() -> None:
    discrete = FinSpace.discrete("01")
    assert sorted(map(sorted, subfunctor_variant(
        discrete, HyperVariant.COMPACT_NONEMPTY
    ).subsets())) == [["0"], ["0", "1"], ["1"]]
    assert sorted(map(sorted, subfunctor_variant(
        discrete, HyperVariant.COMPACT_CONNECTED
    ).subsets())) == [["0"], ["1"]]
    assert sorted(map(sorted, subfunctor_variant(
        FinSpace.sierpinski(), HyperVariant.COMPACT_CONNECTED
    ).subsets())) == [["0"], ["0", "1"], ["1"]]
    with pytest.raises(ValueError):
        subfunctor_variant(discrete, HyperVariant.LOWER)


def test_hyperspaces_match_subbasis_oracle() -> None:
    for space in enumerate_small_spaces(4, min_n=0):
        for variant in _ALL_VARIANTS:
            assert check_hyperspace_against_oracle(space, variant), (space, variant)


def test_separation_preservation() -> None:
    for space in enumerate_small_spaces(4, min_n=0):
        assert lower_vietoris(space).space.is_t0()
    for n in range(5):
        discrete = FinSpace.discrete(str(i) for i in range(n))
        assert compact_vietoris(discrete).space.is_discrete()


def test_subfunctor_inclusions_are_natural_embeddings() -> None:
    spaces = list(enumerate_small_spaces(3))
    for space in spaces:
        for variant in (HyperVariant.COMPACT_NONEMPTY, HyperVariant.COMPACT_CONNECTED):
            assert is_embedding(inclusion_into_compact(space, variant))
    for dom, cod in cartesian(spaces, spaces):
        for f in enumerate_monotone_maps(dom, cod):
            whole = hyperspace_map(f, HyperVariant.COMPACT)
            for variant in (
                HyperVariant.COMPACT_NONEMPTY,
                HyperVariant.COMPACT_CONNECTED,
            ):
                part = hyperspace_map(f, variant)
                for point in part.dom:
                    assert part(point) == whole(point)


def test_map_actions_are_continuous() -> None:
    spaces = list(enumerate_small_spaces(3))
    for dom, cod in cartesian(spaces, spaces):
        for f in enumerate_monotone_maps(dom, cod):
            for variant in HyperVariant:
                assert is_continuous(hyperspace_map(f, variant))


def test_preserves_embeddings() -> None:
    spaces = list(enumerate_small_spaces(3))
    for dom, cod in cartesian(spaces, spaces):
        for m in enumerate_embeddings(dom, cod):
            assert preserves_embeddings_check(HyperVariant.LOWER, m)
    discrete = [FinSpace.discrete(str(i) for i in range(n)) for n in range(1, 5)]
    for dom, cod in cartesian(discrete, discrete):
        for m in enumerate_embeddings(dom, cod):
            assert preserves_embeddings_check(HyperVariant.COMPACT, m)

    space = generate_topology(["1", "2", "3"], [["1", "2"], ["2", "3"]])
    sub = space.subspace(["1", "2"])
    inclusion = ContMap(sub, space, {"1": "1", "2": "2"})
    assert not preserves_embeddings_check(ClassicVariant.CLASSIC, inclusion)

    with pytest.raises(NotAnEmbedding):
        preserves_embeddings_check(
            HyperVariant.COMPACT,
            ContMap(FinSpace.discrete("ab"), FinSpace.one(), {"a": "*", "b": "*"}),
        )


def test_classic_nonfunctoriality_witness() -> None:
    report = classic_nonfunctoriality_witness()
    assert report.closed_sets == [[], ["1"], ["3"], ["1", "3"], ["1", "2", "3"]]
    assert report.opens == [[], ["2"], ["1", "2"], ["2", "3"], ["1", "2", "3"]]
    assert report.box == [[], ["1"]]
    assert report.preimage == [[], ["1"]]
    assert not report.preimage_is_open
    assert report.neighbourhood_of_singleton == [["1"], ["1", "2"]]
    assert not report.map_is_continuous
    assert report.reproduced


@pytest.mark.parametrize("n", [2, 3])
def test_monocone_failure_witness(n: int) -> None:
    points = [str(i) for i in range(n)]
    report = monocone_failure_witness(FinSpace.discrete(points))
    assert report.first_of_diagonal == points
    assert report.first_of_square == points
    assert report.second_of_diagonal == points
    assert report.second_of_square == points
    assert len(report.diagonal) == n
    assert len(report.square) == n * n
    assert report.reproduced


def test_monocone_failure_witness_errors() -> None:
    with pytest.raises(TooSmall):
        monocone_failure_witness(FinSpace.one())
    with pytest.raises(NotHausdorff):
        monocone_failure_witness(FinSpace.sierpinski())


def test_strength_values() -> None:
    sierpinski = FinSpace.sierpinski()
    assert strength_tau(sierpinski, sierpinski, [], "0") == frozenset()
    assert strength_tau(FinSpace.one(), sierpinski, ["*"], "1") == {'["*","1"]'}
    assert strength(["a", "b"], 3) == {("a", 3), ("b", 3)}
    assert is_continuous(strength_map(sierpinski, FinSpace.chain("abc")))


def test_strength_identities_exhaustive() -> None:
    spaces = list(enumerate_small_spaces(3))
    for first, second in cartesian(spaces, spaces):
        report = check_strength_identities(first, second)
        assert report.passed, report.witness
        assert report.checked_opens == len(product(first, second).space.open_masks())


def test_strength_naturality_exhaustive() -> None:
    spaces = list(enumerate_small_spaces(2))
    maps = [
        f
        for dom, cod in cartesian(spaces, spaces)
        for f in enumerate_monotone_maps(dom, cod)
    ]
    for f, g in cartesian(maps, maps):
        assert check_strength_naturality(f, g)


def test_strength_naturality_with_three_point_spaces() -> None:
    spaces = list(enumerate_small_spaces(3))
    maps = [
        f
        for dom, cod in cartesian(spaces, spaces)
        if 3 in (len(dom), len(cod))
        for f in enumerate_monotone_maps(dom, cod)
    ]
    identity = ContMap.identity(FinSpace.sierpinski())
    for f in maps:
        assert check_strength_naturality(f, identity)
        assert check_strength_naturality(identity, f)


def test_open_masks_of_large_hyperspace() -> None:
    hyper = lower_vietoris(FinSpace.discrete("abcde")).space
    assert len(hyper) == 32
    assert is_continuous_by_preimages(ContMap.identity(hyper))


def test_hyperspace_point_names_are_serialized_values() -> None:
    hyper = Hyperspace(FinSpace.discrete("ab"), HyperVariant.COMPACT)
    assert hyper.point(["b", "a"]) == '{"set":[{"pt":"a"},{"pt":"b"}]}'
    assert hyper.point([]) == '{"set":[]}'
