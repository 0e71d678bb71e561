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

"""Command line entry point: JSON in, one JSON report out.

Global options go before the subcommand, e.g.::

    vietorised -i examples.json behaviour --coalg streams --depth 3
"""

from __future__ import annotations

import math
import sys
from argparse import SUPPRESS, ArgumentParser, Namespace
from hashlib import sha1
from logging import getLevelName, getLogger
from logging import root as root_logger
from pathlib import Path
from time import perf_counter
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence

from pydantic import BaseModel as PydanticModel
from typing_extensions import Final

from vietorised import __version__
from vietorised._utils import canonical_json, format_float, hashsum
from vietorised.coalgebra import (
    behavioural_partition,
    coalg_equalizer,
    coalgebra_to_json,
    coreflect,
    final_coalgebra_if_stabilized,
    is_coalg_hom,
    level_sizes,
    subfunctor_inclusion,
)
from vietorised.functor import const_names, depth, parse_functor, print_functor
from vietorised.hybrid import (
    BallState,
    BallSystem,
    BouncingBall,
    DiscontinuousBall,
    Trajectory,
    TrajectoryFormat,
    export_trajectory,
    stability_probe,
    unfold,
    unfold_nondet,
    unfold_until,
)
from vietorised.topology import (
    FinSpace,
    SizeLimits,
    is_embedding,
    separation,
    space_to_json,
)
from vietorised.vietoris import (
    Hyperspace,
    HyperVariant,
    check_hyperspace_against_oracle,
    classic_nonfunctoriality_witness,
    monocone_failure_witness,
    sorted_family,
)
from vietorised.vietorised_config import VietorisedConfig
from vietorised.vietorised_error import VietorisedError
from vietorised.vietorised_manager import VietorisedManager
from vietorised.vietorised_workspace import Workspace

_LOGGER = getLogger(__name__)

EXIT_OK: Final = 0
EXIT_CHECK_FAILED: Final = 1
EXIT_INVALID_INPUT: Final = 2

# Options that name a workspace object; values ending in .json are loaded as files
# and refer to the object named after the file.
_REFERENCE_OPTIONS: Final = ("space", "map", "coalg", "h1", "h2")
_GLOBAL_OPTIONS: Final = frozenset(
    [
        "input",
        "config",
        "show_config",
        "version",
        "log_level",
        "timing",
        "out",
        "max_points",
        "max_derived_points",
        "handler",
        "command",
    ]
)

_SIGMAS: Final = {
    "v+": HyperVariant.COMPACT_NONEMPTY,
    "vc": HyperVariant.COMPACT_CONNECTED,
}


class RunReport(PydanticModel):
    command: str
    arguments: Dict[str, Any]
    inputs_digest: str
    result: Any
    timing: Optional[float] = None

    def to_json(self) -> str:
        obj = _rounded(self.dict())
        if self.timing is None:
            del obj["timing"]
        return canonical_json(obj)


class _Outcome(NamedTuple):
    result: Any
    exit_code: int = EXIT_OK
    # Written to --out instead of the report when present.
    artifact: Optional[bytes] = None


_Handler = Callable[[Namespace, VietorisedManager, Workspace], _Outcome]


def _rounded(value: Any) -> Any:
    if isinstance(value, float):
        return format_float(value) if math.isfinite(value) else str(value)
    elif isinstance(value, dict):
        return {str(k): _rounded(v) for k, v in value.items()}
    elif isinstance(value, (list, tuple)):
        return [_rounded(v) for v in value]
    return value


def _space_check(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    names = [args.space] if args.space else sorted(workspace.spaces)
    spaces = {}
    for name in names:
        space = workspace.space(name)
        spaces[name] = {
            **space_to_json(space),
            "opens": sorted_family(space.opens(limits=manager.config.limits)),
            "separation": separation(space).dict(),
        }
    return _Outcome(
        {
            "spaces": spaces,
            "maps": {
                name: {"map": f.as_dict(), "embedding": is_embedding(f)}
                for name, f in sorted(workspace.maps.items())
            },
            "coalgebras": {
                name: {"functor": str(c.functor), "points": list(c.carrier.points)}
                for name, c in sorted(workspace.coalgebras.items())
            },
            "homs": {
                name: {"map": h.map.as_dict()}
                for name, h in sorted(workspace.homs.items())
            },
        }
    )


def _functor_parse(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    expr = parse_functor(args.expr)
    return _Outcome(
        {
            "functor": print_functor(expr),
            "constants": sorted(const_names(expr)),
            "depth": depth(expr),
        }
    )


def _functor_apply(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    functor = manager.functor(args.expr, workspace)
    if args.map:
        image = functor.apply_map(workspace.map(args.map))
        return _Outcome(
            {
                "functor": str(functor),
                "dom": space_to_json(image.dom),
                "cod": space_to_json(image.cod),
                "map": image.as_dict(),
            }
        )
    image_space = functor.apply(workspace.space(args.space))
    return _Outcome({"functor": str(functor), "space": space_to_json(image_space)})


def _vietoris_build(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    variant = HyperVariant(args.variant)
    space = workspace.space(args.space)
    hyperspace = Hyperspace(space, variant, limits=manager.config.limits)
    result: Dict[str, Any] = {
        "variant": variant.value,
        "space": space_to_json(hyperspace.space),
        "separation": separation(hyperspace.space).dict(),
    }
    if not args.check_oracle:
        return _Outcome(result)
    agrees = check_hyperspace_against_oracle(
        space, variant, limits=manager.config.limits
    )
    result["oracle_agrees"] = agrees
    return _Outcome(result, EXIT_OK if agrees else EXIT_CHECK_FAILED)


def _witness_classic(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    report = classic_nonfunctoriality_witness(limits=manager.config.limits)
    return _Outcome(
        report.dict(), EXIT_OK if report.reproduced else EXIT_CHECK_FAILED
    )


def _witness_monocone(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    if args.space:
        space = workspace.space(args.space)
    else:
        space = FinSpace.discrete(["0", "1"])
    report = monocone_failure_witness(space, limits=manager.config.limits)
    return _Outcome(
        report.dict(), EXIT_OK if report.reproduced else EXIT_CHECK_FAILED
    )


def _terminal_seq(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    functor = manager.functor(args.functor, workspace)
    sequence, final, finality = final_coalgebra_if_stabilized(
        functor, args.steps, verify_points=args.verify_points
    )
    result = {
        "functor": str(functor),
        "level_sizes": list(level_sizes(sequence)),
        "stabilized_at": sequence.stabilized_at,
        "final_coalgebra": coalgebra_to_json(final) if final is not None else None,
        "finality": finality.dict() if finality is not None else None,
    }
    failed = finality is not None and not finality.passed
    return _Outcome(result, EXIT_CHECK_FAILED if failed else EXIT_OK)


def _behaviour(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    coalg = workspace.coalgebra(args.coalg)
    partition = behavioural_partition(coalg, args.depth)
    return _Outcome({"functor": str(coalg.functor), **partition.dict()})


def _equalizer(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    sub = coalg_equalizer(workspace.hom(args.h1), workspace.hom(args.h2))
    return _Outcome(
        {
            "points": sorted(sub.points),
            "coalgebra": coalgebra_to_json(sub.coalgebra),
        }
    )


def _coreflect(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    sigma = subfunctor_inclusion(_SIGMAS[args.sigma], limits=manager.config.limits)
    coreflection = coreflect(sigma, workspace.coalgebra(args.coalg))
    counit_ok = is_coalg_hom(coreflection.counit)
    return _Outcome(
        {
            "sigma": str(sigma),
            "points": list(coreflection.coalgebra.carrier.points),
            "coalgebra": coalgebra_to_json(coreflection.coalgebra),
            "counit_is_homomorphism": counit_ok,
        },
        EXIT_OK if counit_ok else EXIT_CHECK_FAILED,
    )


def _ball_system(args: Namespace, manager: VietorisedManager) -> BallSystem:
    gravity = args.g if args.g is not None else manager.config.gravity
    if args.system == "discontinuous":
        return DiscontinuousBall(gravity=gravity)
    return BouncingBall(manager.ball_params(args.factor, gravity=gravity))


def _trajectory_json(trajectory: Trajectory) -> Dict[str, Any]:
    return {
        "segments": [
            {
                "offset": segment.offset,
                "duration": segment.evolution.duration,
                "p": segment.evolution.a0,
                "v": segment.evolution.a1,
                "apex": segment.evolution.apex(),
            }
            for segment in trajectory.segments
        ],
        "horizon": trajectory.horizon,
        "velocities": trajectory.velocities,
        "durations": trajectory.durations,
    }


def _ball_simulate(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    system = _ball_system(args, manager)
    state = BallState(args.p, args.v)
    if args.horizon is not None:
        trajectory = unfold_until(
            system, state, args.horizon, max_bounces=manager.config.max_bounces
        )
    else:
        trajectory = unfold(system, state, args.bounces)
    artifact = None
    if args.out:
        artifact = export_trajectory(
            trajectory,
            TrajectoryFormat.parse(args.out.suffix.lstrip(".")),
            step=manager.config.csv_step,
        )
    return _Outcome(_trajectory_json(trajectory), artifact=artifact)


def _ball_nondet(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    tree = unfold_nondet(
        BallState(args.p, args.v),
        args.depth,
        args.samples,
        manager.ball_params(args.lo, args.hi, gravity=args.g),
    )
    return _Outcome({"envelopes": [envelope.dict() for envelope in tree.envelopes]})


def _ball_stability(
    args: Namespace, manager: VietorisedManager, workspace: Workspace
) -> _Outcome:
    report = stability_probe(
        _ball_system(args, manager),
        BallState(args.p, args.v),
        args.delta,
        args.horizon,
        args.n,
        seed=manager.config.seed,
        grid=manager.config.stability_grid,
        max_bounces=manager.config.max_bounces,
    )
    return _Outcome(report.dict())


def _add_command(
    subparsers: Any, name: str, handler: _Handler, help: str
) -> ArgumentParser:
    parser: ArgumentParser = subparsers.add_parser(name, help=help)
    parser.set_defaults(handler=handler)
    # Also accepted after the command; absent, it leaves the global value alone.
    parser.add_argument("--out", type=Path, default=SUPPRESS, help=SUPPRESS)
    return parser


def _add_ball_options(parser: ArgumentParser) -> None:
    parser.add_argument("--p", type=float, required=True, help="Initial height.")
    parser.add_argument("--v", type=float, required=True, help="Initial velocity.")
    parser.add_argument("--g", type=float, help="Gravity (default from config).")


def _add_system_options(parser: ArgumentParser) -> None:
    parser.add_argument("--factor", type=float, default=0.5, help="Restitution.")
    parser.add_argument(
        "--system", choices=["ball", "discontinuous"], default="ball"
    )


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="vietorised",
        description="Finite Vietoris coalgebras and hybrid systems.",
    )
    parser.add_argument(
        "-i",
        "--input",
        type=Path,
        action="append",
        default=[],
        help="Workspace JSON file (repeatable).",
    )
    parser.add_argument("--config", type=Path, help="JSON config file.")
    parser.add_argument("--show-config", action="store_true")
    parser.add_argument("--version", action="store_true")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
    )
    parser.add_argument(
        "--timing", action="store_true", help="Add wall time to the report."
    )
    parser.add_argument(
        "--out", type=Path, help="Write the output to this file instead of stdout."
    )
    parser.add_argument("--max-points", type=int)
    parser.add_argument("--max-derived-points", type=int)

    commands = parser.add_subparsers(dest="command", metavar="command")

    space = commands.add_parser("space").add_subparsers(dest="action", required=True)
    space_check = _add_command(
        space, "check", _space_check, "Validate and describe workspace spaces."
    )
    space_check.add_argument("--space")

    functor = commands.add_parser("functor").add_subparsers(
        dest="action", required=True
    )
    functor_parse = _add_command(functor, "parse", _functor_parse, "Parse E.")
    functor_parse.add_argument("--expr", required=True)
    functor_apply = _add_command(functor, "apply", _functor_apply, "Compute F(X).")
    functor_apply.add_argument("--expr", required=True)
    target = functor_apply.add_mutually_exclusive_group(required=True)
    target.add_argument("--space")
    target.add_argument("--map")

    vietoris = commands.add_parser("vietoris").add_subparsers(
        dest="action", required=True
    )
    vietoris_build = _add_command(
        vietoris, "build", _vietoris_build, "Build a hyperspace."
    )
    vietoris_build.add_argument(
        "--variant", choices=[v.value for v in HyperVariant], required=True
    )
    vietoris_build.add_argument("--space", required=True)
    vietoris_build.add_argument("--check-oracle", action="store_true")

    witness = commands.add_parser("witness").add_subparsers(
        dest="action", required=True
    )
    _add_command(
        witness,
        "classic-vietoris",
        _witness_classic,
        "Closed sets with hit-and-miss topology are not functorial.",
    )
    monocone = _add_command(
        witness,
        "monocone",
        _witness_monocone,
        "V does not preserve the monocone of product projections.",
    )
    monocone.add_argument("--space", help="A discrete space (default: 2 points).")

    terminal = _add_command(
        commands, "terminal-seq", _terminal_seq, "Terminal sequence of a functor."
    )
    terminal.add_argument("--functor", required=True)
    terminal.add_argument("--steps", type=int, required=True)
    terminal.add_argument("--verify-points", type=int)

    behaviour = _add_command(
        commands, "behaviour", _behaviour, "Depth-n behavioural partition."
    )
    behaviour.add_argument("--coalg", required=True)
    behaviour.add_argument("--depth", type=int, required=True)

    equalizer = _add_command(
        commands, "equalizer", _equalizer, "Equalizer of two homomorphisms."
    )
    equalizer.add_argument("--h1", required=True)
    equalizer.add_argument("--h2", required=True)

    coreflect_parser = _add_command(
        commands, "coreflect", _coreflect, "Coreflect a V-coalgebra."
    )
    coreflect_parser.add_argument("--sigma", choices=sorted(_SIGMAS), required=True)
    coreflect_parser.add_argument("--coalg", required=True)

    ball = commands.add_parser("ball").add_subparsers(dest="action", required=True)
    simulate = _add_command(ball, "simulate", _ball_simulate, "Unfold the ball.")
    _add_ball_options(simulate)
    _add_system_options(simulate)
    until = simulate.add_mutually_exclusive_group(required=True)
    until.add_argument("--bounces", type=int)
    until.add_argument("--horizon", type=float)

    nondet = _add_command(
        ball, "nondet", _ball_nondet, "Behaviour tree for interval restitution."
    )
    _add_ball_options(nondet)
    nondet.add_argument("--depth", type=int, required=True)
    nondet.add_argument("--samples", type=int, default=0)
    nondet.add_argument("--lo", type=float, default=0.5)
    nondet.add_argument("--hi", type=float, default=0.7)

    stability = _add_command(
        ball, "stability", _ball_stability, "Perturbation stability falsifier."
    )
    _add_ball_options(stability)
    _add_system_options(stability)
    stability.add_argument("--delta", type=float, required=True)
    stability.add_argument("--horizon", type=float, required=True)
    stability.add_argument("--n", type=int, required=True)

    return parser


def _effective_config(args: Namespace) -> VietorisedConfig:
    config = VietorisedConfig.load(args.config) if args.config else VietorisedConfig()
    overrides = {
        name: getattr(args, name)
        for name in ("max_points", "max_derived_points")
        if getattr(args, name) is not None
    }
    if not overrides:
        return config
    limits = SizeLimits(**{**config.limits.dict(), **overrides})
    return VietorisedConfig(**{**config.dict(), "limits": limits})


def _resolve_references(args: Namespace) -> List[Path]:
    inputs: List[Path] = list(args.input)
    for option in _REFERENCE_OPTIONS:
        value = getattr(args, option, None)
        if isinstance(value, str) and value.endswith(".json"):
            path = Path(value)
            if path not in inputs:
                inputs.append(path)
            setattr(args, option, path.stem)
    return inputs


def _inputs_digest(config: VietorisedConfig, inputs: Sequence[Path]) -> str:
    h = sha1(config.to_json().encode("UTF-8"))
    for path in inputs:
        hashsum(path, h)
    return h.hexdigest()


def _command_name(args: Namespace) -> str:
    action = getattr(args, "action", None)
    return f"{args.command} {action}" if action else args.command


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID_INPUT if e.code else EXIT_OK

    handlers = list(root_logger.handlers)
    level = root_logger.level
    try:
        config = _effective_config(args)
        if args.version:
            sys.stdout.write(f"vietorised {__version__} (config {config.digest()})\n")
            return EXIT_OK
        if args.show_config:
            sys.stdout.write(config.to_json() + "\n")
            return EXIT_OK
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_INVALID_INPUT

        manager = VietorisedManager(config)
        manager.configure_logging(console=getLevelName(args.log_level))
        inputs = _resolve_references(args)
        workspace = manager.load_workspace(inputs)

        _LOGGER.info(f"Running '{_command_name(args)}'.")
        start = perf_counter()
        outcome: _Outcome = args.handler(args, manager, workspace)
        elapsed = perf_counter() - start

        report = RunReport(
            command=_command_name(args),
            arguments={
                k: v
                for k, v in sorted(vars(args).items())
                if k not in _GLOBAL_OPTIONS and k != "action"
            },
            inputs_digest=_inputs_digest(config, inputs),
            result=outcome.result,
            timing=elapsed if args.timing else None,
        )
        if args.out is None:
            sys.stdout.write(report.to_json() + "\n")
        elif outcome.artifact is not None:
            args.out.write_bytes(outcome.artifact)
        else:
            args.out.write_text(report.to_json() + "\n", encoding="UTF-8")
        return outcome.exit_code
    except (VietorisedError, ValueError) as e:
        sys.stderr.write(f"vietorised: error: {type(e).__name__}: {e}\n")
        return EXIT_INVALID_INPUT
    finally:
        for handler in list(root_logger.handlers):
            if handler not in handlers:
                root_logger.removeHandler(handler)
        root_logger.setLevel(level)


def main() -> None:
    try:
        sys.exit(run())
    except Exception:
        _LOGGER.exception("Unexpected error.")
        raise
