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

from typing import List

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vietorised.functor import (
    CLASSIC,
    Comp,
    Const,
    Functor,
    FunctorExpr,
    Hyper,
    Identity,
    Pair,
    ParseError,
    Prod,
    Pt,
    SetOf,
    Sum,
    UnboundConstant,
    apply_functor,
    check_functor_laws,
    deserialize_value,
    parse_functor,
    print_functor,
    serialize_value,
    value_from_json,
)
from vietorised.topology import (
    ContMap,
    FinSpace,
    SizeLimits,
    generate_topology,
    is_continuous,
    product,
)
from vietorised.vietoris import HyperVariant
from vietorised.vietorised_error import InvalidInput, SizeCapExceeded

_TWO = FinSpace.discrete(["a", "b"])
_ENV = {"two": _TWO}
_LEAVES: List[FunctorExpr] = [
    Identity(),
    Hyper(HyperVariant.COMPACT),
    Hyper(HyperVariant.LOWER),
    Hyper(HyperVariant.COMPACT_NONEMPTY),
    Hyper(HyperVariant.COMPACT_CONNECTED),
    Const("two"),
]


def test_parse_examples() -> None:
    assert parse_functor("C(two) * Id") == Prod(Const("two"), Identity())
    assert parse_functor("V . (C(two) * Id)") == Comp(
        Hyper(HyperVariant.COMPACT), Prod(Const("two"), Identity())
    )
    assert parse_functor("C(two)*Id+Id") == Sum(
        Prod(Const("two"), Identity()), Identity()
    )
    assert parse_functor("Vl . V . Id") == Comp(
        Hyper(HyperVariant.LOWER), Comp(Hyper(HyperVariant.COMPACT), Identity())
    )


def test_parse_v_plus() -> None:
    assert parse_functor("V+") == Hyper(HyperVariant.COMPACT_NONEMPTY)
    assert parse_functor("V+ + Id") == Sum(
        Hyper(HyperVariant.COMPACT_NONEMPTY), Identity()
    )
    assert parse_functor("V+Id") == Sum(Hyper(HyperVariant.COMPACT), Identity())
    assert parse_functor("V + (Id)") == Sum(Hyper(HyperVariant.COMPACT), Identity())


def test_parse_errors() -> None:
    with pytest.raises(ParseError) as error:
        parse_functor("V(Id) + Id")
    assert error.value.offset == 1
    assert "end of input" in error.value.expected

    with pytest.raises(ParseError) as error:
        parse_functor("C(two * Id")
    assert error.value.offset == 6
    assert error.value.expected == {")"}

    with pytest.raises(ParseError):
        parse_functor("C(two *")
    with pytest.raises(ParseError):
        parse_functor("")
    with pytest.raises(ParseError):
        parse_functor("Id $ Id")


def test_parse_error_offset_counts_bytes() -> None:
    with pytest.raises(ParseError) as error:
        parse_functor("Id\u00a0\u00a0+")
    assert error.value.offset == 7


def _trees(depth: int) -> List[FunctorExpr]:
    if depth == 1:
        return list(_LEAVES)
    smaller = _trees(depth - 1)
    trees = list(_LEAVES)
    for left in smaller:
        for right in smaller:
            trees.extend([Sum(left, right), Prod(left, right), Comp(left, right)])
    return trees


def test_print_parse_round_trip_exhaustive() -> None:
    trees = _trees(3)
    assert len(trees) == 6 + 3 * (6 + 3 * 36) ** 2
    for tree in trees:
        assert parse_functor(print_functor(tree)) == tree


_EXPRESSIONS = st.recursive(
    st.sampled_from(_LEAVES),
    lambda children: st.one_of(
        st.builds(Sum, children, children),
        st.builds(Prod, children, children),
        st.builds(Comp, children, children),
    ),
    max_leaves=24,
)


@given(_EXPRESSIONS)
@settings(max_examples=300)
def test_print_parse_round_trip(expr: FunctorExpr) -> None:
    printed = print_functor(expr)
    assert parse_functor(printed) == expr
    assert print_functor(parse_functor(printed)) == printed


def test_apply_examples() -> None:
    sierpinski = FinSpace.sierpinski()
    applied = apply_functor(Identity(), sierpinski)
    assert applied.points == ('{"pt":"0"}', '{"pt":"1"}')
    assert applied.leq('{"pt":"0"}', '{"pt":"1"}')
    assert not applied.leq('{"pt":"1"}', '{"pt":"0"}')

    pairs = apply_functor(parse_functor("C(two) * Id"), FinSpace.one(), _ENV)
    assert len(pairs) == 2 and pairs.is_discrete()

    subsets = apply_functor(parse_functor("V"), FinSpace.discrete("01"))
    assert len(subsets) == 4 and subsets.is_discrete()
    assert '{"set":[]}' in subsets


def test_prod_is_product() -> None:
    sierpinski = FinSpace.sierpinski()
    applied = apply_functor(parse_functor("Id * Id"), sierpinski)
    expected = product(sierpinski, sierpinski).space
    assert len(applied) == len(expected)
    assert len(applied.relation()) == len(expected.relation())


def test_apply_map_examples() -> None:
    sierpinski = FinSpace.sierpinski()
    swap = ContMap(_TWO, _TWO, {"a": "b", "b": "a"})
    functor = Functor.parse("C(two)", _ENV)
    lifted = functor.apply_map(ContMap.constant(sierpinski, sierpinski, "1"))
    assert lifted == ContMap.identity(functor.apply(sierpinski))

    identity = Functor.parse("Id")
    assert identity.value_map(swap)(Pt("a")) == Pt("b")


def test_lower_vietoris_map_takes_closure_of_image() -> None:
    space = generate_topology(["1", "2", "3"], [["1", "2"], ["2", "3"]])
    sub = space.subspace(["1", "2"])
    inclusion = ContMap(sub, space, {"1": "1", "2": "2"})
    lower = Functor.parse("Vl")
    action = lower.value_map(inclusion)
    assert action(SetOf.of([])) == SetOf.of([])
    assert action(SetOf.of([Pt("1")])) == SetOf.of([Pt("1")])
    assert action(SetOf.of([Pt("1"), Pt("2")])) == SetOf.of(
        [Pt("1"), Pt("2"), Pt("3")]
    )
    assert is_continuous(lower.apply_map(inclusion))


@pytest.mark.parametrize(
    "text", ["Id", "C(two)", "Id + Id", "Id * C(two)", "V", "Vl", "V+", "Vc"]
)
def test_functor_laws(text: str) -> None:
    report = check_functor_laws(parse_functor(text), env=_ENV, max_points=3)
    assert report.passed, report.witness
    assert report.compositions_checked > 0


def test_functor_laws_of_composites() -> None:
    report = check_functor_laws(
        parse_functor("Vl . (C(two) * Id)"), env=_ENV, max_points=2
    )
    assert report.passed, report.witness


def test_classic_vietoris_fails_functor_laws() -> None:
    space = generate_topology(["1", "2", "3"], [["1", "2"], ["2", "3"]])
    sub = space.subspace(["1", "2"])
    inclusion = ContMap(sub, space, {"1": "1", "2": "2"})
    report = check_functor_laws(CLASSIC, spaces=[sub, space], maps=[inclusion])
    assert not report.passed
    assert report.witness is not None
    assert report.witness.law == "continuity"
    assert report.witness.maps == [{"1": "1", "2": "2"}]


def test_unbound_constant() -> None:
    with pytest.raises(UnboundConstant) as error:
        Functor.parse("C(two) + C(three)", _ENV)
    assert error.value.name == "three"


def test_size_cap() -> None:
    with pytest.raises(SizeCapExceeded):
        apply_functor(
            parse_functor("V . V"),
            FinSpace.discrete("0123"),
            limits=SizeLimits(max_derived_points=1024),
        )


def test_value_serialization() -> None:
    value = Pair(SetOf.of([Pt("b"), Pt("a")]), Pt("x"))
    text = serialize_value(value)
    assert text == '{"pair":[{"set":[{"pt":"a"},{"pt":"b"}]},{"pt":"x"}]}'
    assert deserialize_value(text) == value


@pytest.mark.parametrize(
    "obj",
    [
        {"pt": 1},
        {"pt": "a", "const": "b"},
        {"pair": [{"pt": "a"}]},
        {"set": [{"pt": "a"}, {"pt": "a"}]},
        {"wat": "a"},
        ["pt", "a"],
    ],
)
def test_invalid_values(obj: object) -> None:
    with pytest.raises(InvalidInput):
        value_from_json(obj)
