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

from vietorised.functor.functor_eval import (
    Carrier,
    Env,
    Functor,
    NotInFunctorImage,
    Restriction,
    UnboundConstant,
    apply_functor,
    apply_functor_map,
)
from vietorised.functor.functor_expr import (
    Comp,
    Const,
    FunctorExpr,
    Hyper,
    Identity,
    Prod,
    Sum,
    const_names,
    depth,
    iter_nodes,
    print_functor,
)
from vietorised.functor.functor_laws import (
    CLASSIC,
    ClassicVietorisAction,
    FunctorAction,
    FunctorLawReport,
    LawWitness,
    check_functor_laws,
)
from vietorised.functor.functor_parser import ParseError, parse_functor
from vietorised.functor.functor_value import (
    ConstPt,
    FValue,
    Inl,
    Inr,
    Pair,
    Pt,
    SetOf,
    deserialize_value,
    serialize_value,
    value_from_json,
    value_to_json,
)

__all__ = [
    "Carrier",
    "Env",
    "Functor",
    "NotInFunctorImage",
    "Restriction",
    "UnboundConstant",
    "apply_functor",
    "apply_functor_map",
    "Comp",
    "Const",
    "FunctorExpr",
    "Hyper",
    "Identity",
    "Prod",
    "Sum",
    "const_names",
    "depth",
    "iter_nodes",
    "print_functor",
    "CLASSIC",
    "ClassicVietorisAction",
    "FunctorAction",
    "FunctorLawReport",
    "LawWitness",
    "check_functor_laws",
    "ParseError",
    "parse_functor",
    "ConstPt",
    "FValue",
    "Inl",
    "Inr",
    "Pair",
    "Pt",
    "SetOf",
    "deserialize_value",
    "serialize_value",
    "value_from_json",
    "value_to_json",
]
