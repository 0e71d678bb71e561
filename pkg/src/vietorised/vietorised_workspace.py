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

import json
from logging import getLogger
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, TypeVar, Union

from pydantic import BaseModel as PydanticModel
from pydantic import Extra, ValidationError
from typing_extensions import Final

from vietorised.coalgebra import (
    Coalgebra,
    CoalgebraModel,
    CoalgHom,
    HomModel,
    find_hom_failure,
)
from vietorised.topology import (
    DEFAULT_LIMITS,
    ContMap,
    FinSpace,
    MapModel,
    SizeLimits,
    SpaceModel,
    find_discontinuity,
)
from vietorised.vietorised_error import InvalidInput, VietorisedError

_LOGGER = getLogger(__name__)

_T = TypeVar("_T")

# Always available as functor constants and space references; files may shadow them.
BUILTIN_SPACES: Final[Mapping[str, FinSpace]] = {
    "one": FinSpace.one(),
    "two": FinSpace.discrete(["a", "b"]),
    "sierpinski": FinSpace.sierpinski(),
}

_SECTIONS: Final = ("spaces", "maps", "coalgebras", "homs")


class WorkspaceDocument(PydanticModel):
    """A file holding several named objects, grouped by kind."""

    spaces: Dict[str, SpaceModel] = {}
    maps: Dict[str, MapModel] = {}
    coalgebras: Dict[str, CoalgebraModel] = {}
    homs: Dict[str, HomModel] = {}

    class Config:
        extra = Extra.forbid

    @classmethod
    def parse_single(cls, name: str, obj: Mapping[str, Any]) -> WorkspaceDocument:
        """Wrap a file holding exactly one object, named after the file."""
        if "functor" in obj:
            return WorkspaceDocument(coalgebras={name: obj})
        elif "src" in obj:
            return WorkspaceDocument(homs={name: obj})
        elif "dom" in obj:
            return WorkspaceDocument(maps={name: obj})
        return WorkspaceDocument(spaces={name: obj})


class _Source:
    def __init__(self, file: Path, path: str):
        self.file = file
        self.path = path

    def error(self, reason: str, path: str = "") -> InvalidInput:
        if path:
            path = f"{self.path}.{path}"
        return InvalidInput(reason, file=self.file, path=path or self.path)


class Workspace:
    """Named spaces, maps, coalgebras and homomorphisms loaded from JSON files.

    Names are unique across all files and kinds. Every reference is resolved and
    every object validated while loading, so commands only ever see consistent
    data.
    """

    def __init__(self, *, limits: SizeLimits = DEFAULT_LIMITS) -> None:
        self.limits: Final = limits
        self.spaces: Final[Dict[str, FinSpace]] = {}
        self.maps: Final[Dict[str, ContMap]] = {}
        self.coalgebras: Final[Dict[str, Coalgebra]] = {}
        self.homs: Final[Dict[str, CoalgHom]] = {}
        self._sources: Dict[str, _Source] = {}

    @classmethod
    def load(
        cls, paths: Iterable[Path], *, limits: SizeLimits = DEFAULT_LIMITS
    ) -> Workspace:
        workspace = Workspace(limits=limits)
        documents = [(path, _read_document(path)) for path in paths]

        pending: Dict[str, Dict[str, Any]] = {section: {} for section in _SECTIONS}
        for path, document in documents:
            for section in _SECTIONS:
                for name, model in getattr(document, section).items():
                    if name in workspace._sources:
                        other = workspace._sources[name]
                        raise InvalidInput(
                            f"Name '{name}' is already defined in {other.file}.",
                            file=path,
                            path=f"{section}.{name}",
                        )
                    workspace._sources[name] = _Source(path, f"{section}.{name}")
                    pending[section][name] = model

        _LOGGER.debug(
            f"Building workspace from {len(documents)} files with "
            f"{len(workspace._sources)} named objects."
        )
        for name, space_model in pending["spaces"].items():
            workspace.spaces[name] = workspace._build_space(space_model, name)
        for name, map_model in pending["maps"].items():
            workspace.maps[name] = workspace._build_map(map_model, name)
        for name, coalg_model in pending["coalgebras"].items():
            workspace.coalgebras[name] = workspace._build_coalgebra(coalg_model, name)
        for name, hom_model in pending["homs"].items():
            workspace.homs[name] = workspace._build_hom(hom_model, name)
        _LOGGER.debug("Done building workspace.")
        return workspace

    @property
    def constants(self) -> Mapping[str, FinSpace]:
        """Spaces usable as constants in functor expressions."""
        return {**BUILTIN_SPACES, **self.spaces}

    def space(self, name: str) -> FinSpace:
        return _lookup(self.constants, name, "space")

    def map(self, name: str) -> ContMap:
        return _lookup(self.maps, name, "map")

    def coalgebra(self, name: str) -> Coalgebra:
        return _lookup(self.coalgebras, name, "coalgebra")

    def hom(self, name: str) -> CoalgHom:
        return _lookup(self.homs, name, "homomorphism")

    def _wrap(self, name: str, e: VietorisedError, path: str = "") -> InvalidInput:
        if isinstance(e, InvalidInput):
            inner = ".".join(p for p in (path, e.path) if p)
            return self._sources[name].error(e.reason, inner)
        return self._sources[name].error(f"{type(e).__name__}: {e}", path)

    def _space_ref(
        self, name: str, ref: Union[SpaceModel, str], path: str
    ) -> FinSpace:
        if isinstance(ref, str):
            if ref not in self.constants:
                raise self._sources[name].error(f"Unknown space '{ref}'.", path)
            return self.constants[ref]
        try:
            return ref.to_space(limits=self.limits)
        except VietorisedError as e:
            raise self._wrap(name, e, path) from e

    def _build_space(self, model: SpaceModel, name: str) -> FinSpace:
        try:
            return model.to_space(limits=self.limits)
        except VietorisedError as e:
            raise self._wrap(name, e) from e

    def _build_map(self, model: MapModel, name: str) -> ContMap:
        dom = self._space_ref(name, model.dom, "dom")
        cod = self._space_ref(name, model.cod, "cod")
        try:
            f = model.to_map(dom, cod)
        except VietorisedError as e:
            raise self._wrap(name, e, "map") from e
        discontinuity = find_discontinuity(f)
        if discontinuity is not None:
            x, y = discontinuity
            raise self._sources[name].error(
                f"Map is not continuous: {x} <= {y} but {f(x)} is not below {f(y)}.",
                "map",
            )
        return f

    def _build_coalgebra(
        self, model: CoalgebraModel, name: str, path: str = ""
    ) -> Coalgebra:
        prefix = f"{path}." if path else ""
        carrier = self._space_ref(name, model.carrier, f"{prefix}carrier")
        env: Dict[str, FinSpace] = dict(self.constants)
        for const, ref in model.constants.items():
            env[const] = self._space_ref(name, ref, f"{prefix}constants.{const}")
        try:
            return model.to_coalgebra(carrier, env, limits=self.limits)
        except VietorisedError as e:
            raise self._wrap(name, e, path) from e

    def _coalgebra_ref(
        self, name: str, ref: Union[CoalgebraModel, str], path: str
    ) -> Coalgebra:
        if isinstance(ref, str):
            if ref not in self.coalgebras:
                raise self._sources[name].error(f"Unknown coalgebra '{ref}'.", path)
            return self.coalgebras[ref]
        return self._build_coalgebra(ref, name, path)

    def _build_hom(self, model: HomModel, name: str) -> CoalgHom:
        src = self._coalgebra_ref(name, model.src, "src")
        dst = self._coalgebra_ref(name, model.dst, "dst")
        try:
            h = CoalgHom(src, dst, ContMap(src.carrier, dst.carrier, model.map))
        except VietorisedError as e:
            raise self._wrap(name, e, "map") from e
        failure = find_hom_failure(h)
        if failure is not None:
            raise self._sources[name].error(
                f"Not a homomorphism ({failure.law} fails at "
                f"'{failure.point}'): {failure.detail}.",
                "map",
            )
        return h


def _lookup(objects: Mapping[str, _T], name: str, kind: str) -> _T:
    try:
        return objects[name]
    except KeyError:
        raise InvalidInput(f"No {kind} named '{name}' in the workspace.") from None


def _read_document(path: Path) -> WorkspaceDocument:
    try:
        with path.open("r", encoding="UTF-8") as fin:
            obj = json.load(fin)
    except (OSError, ValueError) as e:
        raise InvalidInput(f"Could not read JSON: {e}", file=path) from e
    if not isinstance(obj, dict):
        raise InvalidInput("Top level must be a JSON object.", file=path)
    try:
        if any(section in obj for section in _SECTIONS):
            return WorkspaceDocument.parse_obj(obj)
        return WorkspaceDocument.parse_single(path.stem, obj)
    except ValidationError as e:
        raise InvalidInput(str(e), file=path) from e
