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

from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, Future, ProcessPoolExecutor, wait
from logging import getLogger
from multiprocessing import cpu_count
from typing import (
    Dict,
    Iterable,
    Mapping,
    MutableSequence,
    Optional,
    Sequence,
    Set,
    TypeVar,
)

from tqdm import tqdm  # type: ignore
from typing_extensions import Protocol

_LOGGER = getLogger(__name__)

_T_Argument = TypeVar("_T_Argument", contravariant=True)
_T_Return = TypeVar("_T_Return", covariant=True)


class ParallelizeFunc(Protocol[_T_Argument, _T_Return]):
    def __call__(
        self, argument: _T_Argument, **extra_arguments: object
    ) -> _T_Return:
        ...


def parallelize(
    func: ParallelizeFunc[_T_Argument, _T_Return],
    arguments: Iterable[_T_Argument],
    *,
    extra_arguments: Optional[Mapping[str, object]] = None,
    max_workers: Optional[int] = None,
    update_frequency: float = 5.0,
    progress_bar_desc: Optional[str] = None,
) -> Sequence[_T_Return]:
    """Run func over all arguments in worker processes.

    Results are returned in the order of the arguments, regardless of the order in
    which the workers finish, so that reports built from them stay deterministic.
    With max_workers=1 everything runs in the calling process.
    """
    arguments = list(arguments)
    if max_workers is None:
        max_workers = cpu_count()
    max_workers = max(1, min(max_workers, len(arguments) or 1))

    if extra_arguments is None:
        extra_arguments = {}

    if max_workers == 1:
        results: MutableSequence[_T_Return] = []
        for argument in tqdm(
            arguments, desc=progress_bar_desc, dynamic_ncols=True, leave=False
        ):
            results.append(func(argument, **extra_arguments))
        return results

    _LOGGER.debug(
        f"Running {len(arguments)} tasks of '{progress_bar_desc or 'parallelize'}' "
        f"on {max_workers} workers."
    )
    with ProcessPoolExecutor(max_workers=max_workers) as pool, tqdm(
        total=len(arguments), desc=progress_bar_desc, dynamic_ncols=True, leave=False
    ) as progress_bar:
        futures: Dict[Future[_T_Return], int] = {
            pool.submit(func, argument, **extra_arguments): i
            for i, argument in enumerate(arguments)
        }
        results_by_index: Dict[int, _T_Return] = {}
        futures_not_done: Set[Future[_T_Return]] = set(futures)
        while futures_not_done:
            futures_done, futures_not_done = wait(
                futures_not_done, timeout=update_frequency, return_when=FIRST_COMPLETED
            )
            for future in futures_done:
                try:
                    results_by_index[futures[future]] = future.result()
                except BaseException as e:
                    _LOGGER.exception(
                        f"Exception during parallelize: {type(e).__name__} {e}"
                    )
                    raise
                progress_bar.update(1)

    return [results_by_index[i] for i in range(len(arguments))]
