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

from vietorised.topology.topology_enumerate import (
    enumerate_embeddings,
    enumerate_maps,
    enumerate_monotone_maps,
    enumerate_preorders,
    enumerate_small_spaces,
    point_names,
)
from vietorised.topology.topology_limits import (
    Coproduct,
    Equalizer,
    InitialCone,
    NotParallel,
    Product,
    coproduct,
    equalizer,
    initial_topology,
    inl_point,
    inr_point,
    pair_point,
    product,
)
from vietorised.topology.topology_schema import MapModel, SpaceModel, space_to_json
from vietorised.topology.topology_space import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    InvalidMap,
    NotAnEmbedding,
    NotAPreorder,
    NotATopology,
    NotT0,
    SeparationReport,
    SizeLimits,
    check_size,
    closure,
    find_discontinuity,
    find_embedding_failure,
    generate_topology,
    is_connected,
    is_continuous,
    is_continuous_by_preimages,
    is_embedding,
    is_open,
    patch_topology,
    saturation,
    separation,
    space_from_opens,
)

__all__ = [
    "enumerate_embeddings",
    "enumerate_maps",
    "enumerate_monotone_maps",
    "enumerate_preorders",
    "enumerate_small_spaces",
    "point_names",
    "Coproduct",
    "Equalizer",
    "InitialCone",
    "NotParallel",
    "Product",
    "coproduct",
    "equalizer",
    "initial_topology",
    "inl_point",
    "inr_point",
    "pair_point",
    "product",
    "MapModel",
    "SpaceModel",
    "space_to_json",
    "DEFAULT_LIMITS",
    "ContMap",
    "FinSpace",
    "InvalidMap",
    "NotAnEmbedding",
    "NotAPreorder",
    "NotATopology",
    "NotT0",
    "SeparationReport",
    "SizeLimits",
    "check_size",
    "closure",
    "find_discontinuity",
    "find_embedding_failure",
    "generate_topology",
    "is_connected",
    "is_continuous",
    "is_continuous_by_preimages",
    "is_embedding",
    "is_open",
    "patch_topology",
    "saturation",
    "separation",
    "space_from_opens",
]
