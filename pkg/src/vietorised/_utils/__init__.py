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

from vietorised._utils.misc import (
    Hash,
    bit_count,
    canonical_json,
    format_float,
    hashsum,
    iter_bits,
    iter_submasks,
)
from vietorised._utils.parallelize import ParallelizeFunc, parallelize

__all__ = [
    "Hash",
    "bit_count",
    "canonical_json",
    "format_float",
    "hashsum",
    "iter_bits",
    "iter_submasks",
    "ParallelizeFunc",
    "parallelize",
]
