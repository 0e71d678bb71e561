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

from typing import Dict, List

import numpy as np
import pytest

from vietorised.coalgebra import (
    Coalgebra,
    CoalgebraModel,
    CoalgHom,
    ComponentUndefined,
    FunctorMismatch,
    NatTransformation,
    NotACoalgebra,
    NotMono,
    behaviour_map,
    behavioural_partition,
    brute_force_coreflection,
    brute_force_largest_subcoalgebra,
    coalg_equalizer,
    coalgebra_to_json,
    coreflect,
    enumerate_coalgebras,
    final_coalgebra_if_stabilized,
    find_hom_failure,
    homomorphisms,
    induced_functor_I,
    induced_hom,
    is_coalg_hom,
    largest_subcoalgebra,
    level_sizes,
    random_coalgebra,
    random_coalgebra_pair_with_homs,
    shipped_transformations,
    subfunctor_inclusion,
    taut_check,
    terminal_sequence,
)
from vietorised.functor import ConstPt, FValue, Functor, Pair, Pt, SetOf
from vietorised.topology import (
    ContMap,
    FinSpace,
    NotAnEmbedding,
    NotParallel,
    enumerate_embeddings,
    equalizer,
)
from vietorised.vietoris import HyperVariant

_TWO = FinSpace.discrete(["a", "b"])
_ENV = {"two": _TWO, "one": FinSpace.one()}
_STREAMS = Functor.parse("C(two) * Id", _ENV)
_V = Functor.parse("V")


def _sets(structure: Dict[str, List[str]]) -> Dict[str, FValue]:
    return {x: SetOf.of(Pt(y) for y in ys) for x, ys in structure.items()}


def _v_system(structure: Dict[str, List[str]]) -> Coalgebra:
    return Coalgebra(_V, FinSpace.discrete(structure), _sets(structure)).validate()


def _stream_system(outputs: Dict[str, str], successors: Dict[str, str]) -> Coalgebra:
    return Coalgebra(
        _STREAMS,
        FinSpace.discrete(outputs),
        {x: Pair(ConstPt(outputs[x]), Pt(successors[x])) for x in outputs},
    ).validate()


def _hom(src: Coalgebra, dst: Coalgebra, mapping: Dict[str, str]) -> CoalgHom:
    return CoalgHom(src, dst, ContMap(src.carrier, dst.carrier, mapping))


def test_identity_is_homomorphism() -> None:
    coalg = _v_system({"x": ["y"], "y": ["y", "z"], "z": []})
    assert is_coalg_hom(CoalgHom.identity(coalg))


def test_constant_functor_homomorphisms() -> None:
    functor = Functor.parse("C(two)", _ENV)
    src = Coalgebra(functor, FinSpace.discrete(["p"]), {"p": ConstPt("a")})
    dst = Coalgebra(
        functor, FinSpace.discrete(["q", "r"]), {"q": ConstPt("a"), "r": ConstPt("b")}
    )
    assert is_coalg_hom(_hom(src, dst, {"p": "q"}))
    assert not is_coalg_hom(_hom(src, dst, {"p": "r"}))


def test_swapping_outputs_is_no_homomorphism() -> None:
    coalg = _stream_system({"x": "a", "y": "b"}, {"x": "y", "y": "y"})
    witness = find_hom_failure(_hom(coalg, coalg, {"x": "y", "y": "x"}))
    assert witness is not None
    assert witness.law == "square"
    assert witness.point in {"x", "y"}


def test_discontinuous_map_is_no_homomorphism() -> None:
    functor = Functor.parse("Id")
    chain = Coalgebra(functor, FinSpace.sierpinski(), {"0": Pt("0"), "1": Pt("1")})
    witness = find_hom_failure(_hom(chain, chain, {"0": "1", "1": "0"}))
    assert witness is not None
    assert witness.law == "continuity"


def test_functor_mismatch() -> None:
    coalg = _v_system({"x": ["x"]})
    lower = Coalgebra(Functor.parse("Vl"), coalg.carrier, coalg.structure)
    with pytest.raises(FunctorMismatch):
        CoalgHom(coalg, lower, ContMap.identity(coalg.carrier))


def test_invalid_coalgebras() -> None:
    with pytest.raises(NotACoalgebra):
        Coalgebra(_V, FinSpace.discrete(["x", "y"]), _sets({"x": []}))
    with pytest.raises(NotACoalgebra):
        _v_system({"x": ["w"]})
    with pytest.raises(NotACoalgebra) as error:
        Coalgebra(
            _V, FinSpace.sierpinski(), {"0": SetOf.of([Pt("0")]), "1": SetOf.of([])}
        ).validate()
    assert error.value.witness == ("0", "1")


def test_terminal_sequence_of_constant_functor() -> None:
    sequence = terminal_sequence(Functor.parse("C(two)", _ENV), 3)
    assert level_sizes(sequence) == (1, 2, 2, 2)
    assert sequence.stabilized_at == 1
    assert sequence.connectors[1] == ContMap.identity(sequence.levels[1])


def test_terminal_sequence_of_lower_vietoris_grows_chains() -> None:
    sequence = terminal_sequence(Functor.parse("Vl"), 5)
    assert level_sizes(sequence) == (1, 2, 3, 4, 5, 6)
    assert sequence.stabilized_at is None
    for level in sequence.levels:
        assert level.is_t0()
        assert all(level.leq(x, y) or level.leq(y, x) for x in level for y in level)


def test_terminal_sequence_of_streams() -> None:
    sequence = terminal_sequence(_STREAMS, 3)
    assert level_sizes(sequence) == (1, 2, 4, 8)
    assert sequence.stabilized_at is None


def test_terminal_sequence_of_trivial_product() -> None:
    sequence = terminal_sequence(Functor.parse("C(one) * Id", _ENV), 3)
    assert level_sizes(sequence) == (1, 1, 1, 1)
    assert sequence.stabilized_at == 0


def test_terminal_sequence_rejects_negative_steps() -> None:
    with pytest.raises(ValueError):
        terminal_sequence(_V, -1)


def test_final_coalgebra_of_constant_functor() -> None:
    result = final_coalgebra_if_stabilized(
        Functor.parse("C(two)", _ENV), 3, verify_points=3
    )
    assert result.coalgebra is not None
    assert result.coalgebra.structure == {
        '{"const":"a"}': ConstPt("a"),
        '{"const":"b"}': ConstPt("b"),
    }
    assert result.finality is not None
    assert result.finality.passed, result.finality.witness
    assert result.finality.coalgebras_checked > 0


def test_final_coalgebra_of_trivial_product() -> None:
    result = final_coalgebra_if_stabilized(
        Functor.parse("C(one) * Id", _ENV), 2, verify_points=3
    )
    assert result.coalgebra is not None
    assert len(result.coalgebra) == 1
    assert result.finality is not None and result.finality.passed


def test_no_final_coalgebra_for_lower_vietoris() -> None:
    result = final_coalgebra_if_stabilized(Functor.parse("Vl"), 5)
    assert result.coalgebra is None
    assert result.finality is None
    assert level_sizes(result.sequence) == (1, 2, 3, 4, 5, 6)


def test_behaviour_map_examples() -> None:
    coalg = _stream_system({"x": "a", "y": "b"}, {"x": "y", "y": "y"})
    assert set(behaviour_map(coalg, 0).as_dict().values()) == {"*"}

    first = behaviour_map(coalg, 1)
    assert first("x") == '{"pair":[{"const":"a"},{"pt":"*"}]}'
    assert first("y") == '{"pair":[{"const":"b"},{"pt":"*"}]}'

    second = behaviour_map(coalg, 2)
    assert second("x") == (
        '{"pair":[{"const":"a"},{"pt":"{\\"pair\\":[{\\"const\\":\\"b\\"},'
        '{\\"pt\\":\\"*\\"}]}"}]}'
    )
    assert second("x") != second("y")


def test_behaviour_map_commutes_with_connectors() -> None:
    systems = [
        _stream_system({"x": "a", "y": "b"}, {"x": "y", "y": "y"}),
        _stream_system({"x": "a", "y": "a", "z": "b"}, {"x": "y", "y": "z", "z": "x"}),
    ]
    sequence = terminal_sequence(_STREAMS, 3)
    for coalg in systems:
        for k in range(3):
            assert sequence.connectors[k].compose(
                behaviour_map(coalg, k + 1)
            ) == behaviour_map(coalg, k)


def test_behavioural_partition_examples() -> None:
    coalg = _stream_system({"x": "a", "y": "b"}, {"x": "y", "y": "y"})
    assert behavioural_partition(coalg, 0).blocks == [["x", "y"]]
    partition = behavioural_partition(coalg, 3)
    assert partition.blocks == [["x"], ["y"]]
    assert partition.stable_from == 1

    constant = _stream_system({"x": "a", "y": "a"}, {"x": "y", "y": "x"})
    for n in range(4):
        partition = behavioural_partition(constant, n)
        assert partition.blocks == [["x", "y"]]
        assert partition.stable_from == 0


def test_behavioural_partitions_refine() -> None:
    coalg = _stream_system(
        {"w": "a", "x": "a", "y": "a", "z": "b"},
        {"w": "x", "x": "y", "y": "z", "z": "z"},
    )
    blocks = [behavioural_partition(coalg, n).blocks for n in range(6)]
    for coarse, fine in zip(blocks, blocks[1:]):
        for block in fine:
            assert any(set(block) <= set(bigger) for bigger in coarse)
    partition = behavioural_partition(coalg, 5)
    assert partition.blocks == [["w"], ["x"], ["y"], ["z"]]
    assert partition.stable_from == 3 <= len(coalg)


def test_homomorphic_states_share_blocks() -> None:
    coalg = _stream_system({"x": "a", "y": "a"}, {"x": "y", "y": "x"})
    point = _stream_system({"z": "a"}, {"z": "z"})
    (h,) = homomorphisms(coalg, point)
    assert h.map.as_dict() == {"x": "z", "y": "z"}
    for n in range(4):
        assert behavioural_partition(coalg, n).blocks == [["x", "y"]]


def test_largest_subcoalgebra_examples() -> None:
    coalg = _v_system({"x": ["y"], "y": ["y", "z"], "z": []})
    assert largest_subcoalgebra(coalg, ["x", "y"]).points == frozenset()

    whole = largest_subcoalgebra(coalg, ["x", "y", "z"])
    assert whole.points == {"x", "y", "z"}
    assert whole.coalgebra == coalg
    assert is_coalg_hom(whole.embedding)

    closed = largest_subcoalgebra(coalg, ["y", "z"])
    assert closed.points == {"y", "z"}
    assert is_coalg_hom(closed.embedding)
    assert brute_force_largest_subcoalgebra(coalg, ["y", "z"]) == closed.points


def test_equalizer_of_equal_homomorphisms() -> None:
    coalg = _v_system({"x": ["y"], "y": ["y", "z"], "z": []})
    identity = CoalgHom.identity(coalg)
    result = coalg_equalizer(identity, identity)
    assert result.coalgebra == coalg


def test_equalizer_shrinks_below_agreement() -> None:
    src = _v_system({"p": ["q", "r"], "q": ["q"], "r": ["r"], "s": []})
    dst = _v_system({"u": ["v", "w"], "v": ["v"], "w": ["w"], "t": []})
    h1 = _hom(src, dst, {"p": "u", "q": "v", "r": "w", "s": "t"})
    h2 = _hom(src, dst, {"p": "u", "q": "w", "r": "v", "s": "t"})
    assert is_coalg_hom(h1) and is_coalg_hom(h2)
    assert set(equalizer(h1.map, h2.map).space.points) == {"p", "s"}
    result = coalg_equalizer(h1, h2)
    assert result.points == {"s"}
    assert is_coalg_hom(result.embedding)


def test_equalizer_of_disjoint_homomorphisms_is_empty() -> None:
    src = _v_system({"q": ["q"]})
    dst = _v_system({"v": ["v"], "w": ["w"]})
    result = coalg_equalizer(_hom(src, dst, {"q": "v"}), _hom(src, dst, {"q": "w"}))
    assert len(result.coalgebra) == 0


def test_equalizer_of_non_parallel_homomorphisms() -> None:
    first = _v_system({"x": ["x"]})
    second = _v_system({"y": ["y"]})
    with pytest.raises(NotParallel):
        coalg_equalizer(CoalgHom.identity(first), CoalgHom.identity(second))


@pytest.mark.parametrize("text", ["V", "V+"])
def test_equalizer_matches_brute_force(text: str) -> None:
    functor = Functor.parse(text)
    rng = np.random.default_rng(0)
    for _ in range(200):
        h1, h2 = random_coalgebra_pair_with_homs(functor, rng, max_states=5)
        result = coalg_equalizer(h1, h2)
        agreement = equalizer(h1.map, h2.map).space.points
        assert result.points == brute_force_largest_subcoalgebra(h1.src, agreement)
        assert is_coalg_hom(result.embedding)
        assert h1.map.compose(result.embedding.map) == h2.map.compose(
            result.embedding.map
        )


def test_induced_functor_keeps_data() -> None:
    sigma = subfunctor_inclusion(HyperVariant.COMPACT_NONEMPTY)
    coalg = Coalgebra(
        sigma.source, FinSpace.discrete(["x", "y"]), _sets({"x": ["y"], "y": ["x"]})
    ).validate()
    induced = induced_functor_I(sigma, coalg)
    assert induced.functor == _V
    assert induced.structure == coalg.structure
    assert induced_hom(sigma, CoalgHom.identity(coalg)).map == ContMap.identity(
        coalg.carrier
    )
    with pytest.raises(ComponentUndefined):
        induced_functor_I(sigma, _v_system({"x": []}))


def test_induced_functor_is_full() -> None:
    sigma = subfunctor_inclusion(HyperVariant.COMPACT_NONEMPTY)
    coalgebras = list(enumerate_coalgebras(sigma.source, 2))
    checked = 0
    for src in coalgebras:
        for dst in coalgebras:
            induced_src = induced_functor_I(sigma, src)
            induced_dst = induced_functor_I(sigma, dst)
            for h in homomorphisms(induced_src, induced_dst):
                assert is_coalg_hom(CoalgHom(src, dst, h.map))
                checked += 1
    assert checked > 0


def test_coreflect_nonempty_example() -> None:
    sigma = subfunctor_inclusion(HyperVariant.COMPACT_NONEMPTY)
    gcoalg = _v_system({"x": ["x", "y"], "y": [], "z": ["z"]})
    coreflection = coreflect(sigma, gcoalg)
    assert set(coreflection.coalgebra.carrier) == {"z"}
    assert coreflection.coalgebra.functor == sigma.source
    assert coreflection.coalgebra("z") == SetOf.of([Pt("z")])
    assert is_coalg_hom(coreflection.counit)


def test_coreflect_of_source_coalgebra_is_whole() -> None:
    sigma = subfunctor_inclusion(HyperVariant.COMPACT_NONEMPTY)
    gcoalg = _v_system({"x": ["y"], "y": ["x", "y"]})
    coreflection = coreflect(sigma, gcoalg)
    assert coreflection.coalgebra.carrier == gcoalg.carrier
    assert coreflection.counit.map == ContMap.identity(gcoalg.carrier)


def test_coreflect_connected_example() -> None:
    sigma = subfunctor_inclusion(HyperVariant.COMPACT_CONNECTED)
    gcoalg = _v_system({"x": ["y", "z"], "y": ["x"], "z": ["z"]})
    coreflection = coreflect(sigma, gcoalg)
    assert set(coreflection.coalgebra.carrier) == {"z"}
    assert brute_force_coreflection(sigma, gcoalg) == {"z"}


def test_coreflect_matches_brute_force() -> None:
    rng = np.random.default_rng(0)
    for sigma in shipped_transformations():
        for _ in range(200):
            gcoalg = random_coalgebra(_V, int(rng.integers(0, 6)), rng)
            coreflection = coreflect(sigma, gcoalg)
            assert frozenset(
                coreflection.coalgebra.carrier
            ) == brute_force_coreflection(sigma, gcoalg)
            assert is_coalg_hom(coreflection.counit)


def test_coreflect_errors() -> None:
    collapse = NatTransformation(
        "collapse", _V, _V, lambda value: SetOf.of([]), mono=False
    )
    with pytest.raises(NotMono):
        coreflect(collapse, _v_system({"x": ["x"]}))

    sigma = subfunctor_inclusion(HyperVariant.COMPACT_NONEMPTY)
    lower = Coalgebra(
        Functor.parse("Vl"), FinSpace.discrete(["x"]), _sets({"x": ["x"]})
    )
    with pytest.raises(ComponentUndefined):
        coreflect(sigma, lower)

    with pytest.raises(ValueError):
        subfunctor_inclusion(HyperVariant.LOWER)


def test_shipped_transformations_are_natural() -> None:
    space = FinSpace.chain(["0", "1", "2"])
    maps = [
        ContMap.identity(space),
        ContMap.constant(space, space, "1"),
        ContMap(space, space, {"0": "0", "1": "0", "2": "2"}),
    ]
    for sigma in shipped_transformations():
        assert all(sigma.is_natural_at(f) for f in maps)


def test_taut_nonempty_on_discrete_embeddings() -> None:
    sigma = subfunctor_inclusion(HyperVariant.COMPACT_NONEMPTY)
    checked = 0
    for n in range(0, 5):
        for k in range(n, 5):
            dom = FinSpace.discrete([f"p{i}" for i in range(n)])
            cod = FinSpace.discrete([f"q{i}" for i in range(k)])
            for m in enumerate_embeddings(dom, cod):
                assert taut_check(sigma, m)
                checked += 1
    # Injections of an n-set into a k-set, summed over 0 <= n <= k <= 4.
    assert checked == 89


def test_taut_on_identities() -> None:
    for sigma in shipped_transformations():
        for space in [FinSpace.sierpinski(), FinSpace.chain(["0", "1", "2"])]:
            assert taut_check(sigma, ContMap.identity(space))


def test_taut_connected_on_chain_endpoints() -> None:
    sigma = subfunctor_inclusion(HyperVariant.COMPACT_CONNECTED)
    chain = FinSpace.chain(["0", "1", "2"])
    endpoints = chain.subspace(["0", "2"])
    assert taut_check(sigma, ContMap(endpoints, chain, {"0": "0", "2": "2"}))


def test_taut_needs_embedding() -> None:
    sigma = subfunctor_inclusion(HyperVariant.COMPACT_NONEMPTY)
    with pytest.raises(NotAnEmbedding):
        taut_check(sigma, ContMap.to_one(FinSpace.discrete(["x", "y"])))


def test_coalgebra_model_round_trip() -> None:
    coalg = _stream_system({"x": "a", "y": "b"}, {"x": "y", "y": "y"})
    obj = coalgebra_to_json(coalg)
    assert obj["functor"] == "C(two) * Id"
    assert set(obj["constants"]) == {"two"}
    assert obj["structure"]["x"] == {"pair": [{"const": "a"}, {"pt": "y"}]}
    model = CoalgebraModel.parse_obj(obj)
    assert model.to_coalgebra(coalg.carrier, _ENV) == coalg
