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

from vietorised.coalgebra.coalgebra_core import (
    Coalgebra,
    CoalgebraModel,
    CoalgHom,
    FunctorMismatch,
    HomModel,
    HomWitness,
    NotACoalgebra,
    coalgebra_to_json,
    find_hom_failure,
    homomorphisms,
    is_coalg_hom,
)
from vietorised.coalgebra.coalgebra_nat import (
    ComponentUndefined,
    Coreflection,
    NatTransformation,
    NotMono,
    brute_force_coreflection,
    coreflect,
    find_taut_failure,
    identity_transformation,
    induced_functor_I,
    induced_hom,
    shipped_transformations,
    subfunctor_inclusion,
    taut_check,
)
from vietorised.coalgebra.coalgebra_random import (
    random_base_coalgebra,
    random_coalgebra,
    random_coalgebra_pair_with_homs,
    random_cover,
    random_preorder,
)
from vietorised.coalgebra.coalgebra_sub import (
    Subcoalgebra,
    brute_force_largest_subcoalgebra,
    coalg_equalizer,
    is_subcoalgebra,
    largest_subcoalgebra,
    restrict,
)
from vietorised.coalgebra.coalgebra_terminal import (
    BehaviouralPartition,
    FinalCoalgebraResult,
    FinalityReport,
    TerminalSequence,
    behaviour_map,
    behavioural_partition,
    enumerate_coalgebras,
    final_coalgebra_if_stabilized,
    is_isomorphism,
    iter_behaviour_maps,
    kernel,
    level_sizes,
    terminal_sequence,
    verify_finality,
)

__all__ = [
    "Coalgebra",
    "CoalgebraModel",
    "CoalgHom",
    "FunctorMismatch",
    "HomModel",
    "HomWitness",
    "NotACoalgebra",
    "coalgebra_to_json",
    "find_hom_failure",
    "homomorphisms",
    "is_coalg_hom",
    "ComponentUndefined",
    "Coreflection",
    "NatTransformation",
    "NotMono",
    "brute_force_coreflection",
    "coreflect",
    "find_taut_failure",
    "identity_transformation",
    "induced_functor_I",
    "induced_hom",
    "shipped_transformations",
    "subfunctor_inclusion",
    "taut_check",
    "random_base_coalgebra",
    "random_coalgebra",
    "random_coalgebra_pair_with_homs",
    "random_cover",
    "random_preorder",
    "Subcoalgebra",
    "brute_force_largest_subcoalgebra",
    "coalg_equalizer",
    "is_subcoalgebra",
    "largest_subcoalgebra",
    "restrict",
    "BehaviouralPartition",
    "FinalCoalgebraResult",
    "FinalityReport",
    "TerminalSequence",
    "behaviour_map",
    "behavioural_partition",
    "enumerate_coalgebras",
    "final_coalgebra_if_stabilized",
    "is_isomorphism",
    "iter_behaviour_maps",
    "kernel",
    "level_sizes",
    "terminal_sequence",
    "verify_finality",
]
