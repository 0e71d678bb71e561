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

from vietorised.vietoris.vietoris_hyperspace import (
    AnyVariant,
    ClassicVariant,
    Hyperspace,
    HyperVariant,
    NotOpen,
    check_hyperspace_against_oracle,
    classic_vietoris,
    compact_vietoris,
    hit,
    hyperspace_image_mask,
    hyperspace_leq,
    hyperspace_map,
    hyperspace_masks,
    hyperspace_oracle,
    inclusion_into_compact,
    lower_vietoris,
    miss_box,
    subfunctor_variant,
    subset_name,
)
from vietorised.vietoris.vietoris_strength import (
    StrengthMap,
    StrengthReport,
    check_strength_identities,
    check_strength_naturality,
    strength,
    strength_map,
    strength_tau,
)
from vietorised.vietoris.vietoris_witness import (
    ClassicWitnessReport,
    MonoconeWitnessReport,
    NotHausdorff,
    TooSmall,
    classic_nonfunctoriality_witness,
    monocone_failure_witness,
    preserves_embeddings_check,
    sorted_family,
)

__all__ = [
    "AnyVariant",
    "ClassicVariant",
    "Hyperspace",
    "HyperVariant",
    "NotOpen",
    "check_hyperspace_against_oracle",
    "classic_vietoris",
    "compact_vietoris",
    "hit",
    "hyperspace_image_mask",
    "hyperspace_leq",
    "hyperspace_map",
    "hyperspace_masks",
    "hyperspace_oracle",
    "inclusion_into_compact",
    "lower_vietoris",
    "miss_box",
    "subfunctor_variant",
    "subset_name",
    "StrengthMap",
    "StrengthReport",
    "check_strength_identities",
    "check_strength_naturality",
    "strength",
    "strength_map",
    "strength_tau",
    "ClassicWitnessReport",
    "MonoconeWitnessReport",
    "NotHausdorff",
    "TooSmall",
    "classic_nonfunctoriality_witness",
    "monocone_failure_witness",
    "preserves_embeddings_check",
    "sorted_family",
]
