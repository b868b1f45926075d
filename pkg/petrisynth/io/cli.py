# Copyright 2026 The petrisynth Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
petrisynth command line.

Exit codes: 0 success, 1 usage or net file error, 2 exploration or synthesis
failure, 3 verification failure.
"""

import logging
import os
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Optional, Sequence, Tuple
from dotenv import dotenv_values, find_dotenv
from petrisynth import __version__
from petrisynth.errors import MissingSpecification, NetFileError, PetriSynthError
from petrisynth.net import (ExplorationLimits, PetriNet, ReachGraph, add_limit_arguments, build_reach_graph,
                            make_limits, make_options)
from petrisynth.net.constants import ENV_PETRISYNTH_LOG_LEVEL
from petrisynth.control import (Classification, Controller, ForbiddenSpec, check_maximal_permissive,
                                critical_set, forbidden_closure, sound_set, synthesize_all)
from petrisynth.fixtures import FIXTURES, fixture_path
from .dot import graph_to_dot, net_to_dot
from .netfile import parse_condition, parse_net, render_condition
from .report import build_report, dumps_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SYNTHESIS = 2
EXIT_VERIFICATION = 3


class _Parser(ArgumentParser):
    """ArgumentParser reporting usage errors with exit code 1"""
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def make_parser() -> ArgumentParser:
    """Builds the argument parser with one sub-command per operation"""
    parser = _Parser(prog="petrisynth", description="Feedback control logic synthesis for Petri nets")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Logging level (default WARNING)", type=str)
    parser.add_argument("--env-file", help="dotenv file with PETRISYNTH_* settings", type=str)
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    def command(name: str, help_text: str) -> ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--net", help=f"Net file, or one of {', '.join(FIXTURES)}", required=True)
        add_limit_arguments(sub)
        return sub

    command("reach", "Build the reachability graph")
    command("classify", "Classify reachable states and list critical and sound states")
    synth = command("synth", "Synthesize transition conditions and verify them")
    synth.add_argument("--report", help="Write the JSON report to this file instead of stdout")
    synth.add_argument("--dot", help="Write the classified reachability graph in DOT format")
    verify = command("verify", "Verify hand-written or synthesized conditions")
    verify.add_argument("--condition", help="Condition in the serialized grammar; repeatable",
                        action="append", default=[])
    verify.add_argument("--report", help="Write the JSON report to this file")
    export = command("export-dot", "Export the reachability graph or the controlled net in DOT format")
    export.add_argument("--kind", help="What to export", choices=("graph", "net"), default="graph")
    export.add_argument("--out", help="Output file (default stdout)")
    return parser


def _read_net(source: str) -> Tuple[PetriNet, Optional[ForbiddenSpec]]:
    path = Path(source)
    if not path.exists() and source in FIXTURES:
        path = fixture_path(source)
    return parse_net(path.read_text(encoding="utf-8"))


def _require_spec(spec: Optional[ForbiddenSpec]) -> ForbiddenSpec:
    if spec is None:
        raise MissingSpecification()
    return spec


def _log_level(name: str) -> int:
    level = logging.getLevelName(name.upper())
    if not isinstance(level, int):
        raise ValueError(f"unknown log level {name!r}")
    return level


def _write(text: str, target: Optional[str]) -> None:
    if target:
        Path(target).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _classified(net: PetriNet,
                spec: Optional[ForbiddenSpec],
                limits: ExplorationLimits) -> Tuple[ReachGraph, Classification]:
    graph = build_reach_graph(net, limits)
    return graph, forbidden_closure(graph, net, _require_spec(spec))


def _reach(args: Namespace, env_values: dict) -> int:
    net, _ = _read_net(args.net)
    graph = build_reach_graph(net, make_limits(args, env_values))
    print(f"states: {len(graph.nodes)}")
    print(f"edges: {len(graph.edges)}")
    for node, marking in enumerate(graph.nodes):
        flags = (" initial" if node == graph.initial else "") + (" deadlock" if node in graph.deadlocks else "")
        print(f"  {net.format_marking(marking)}{flags}")
    return EXIT_OK


def _classify(args: Namespace, env_values: dict) -> int:
    net, spec = _read_net(args.net)
    graph, cls = _classified(net, spec, make_limits(args, env_values))
    for label, nodes in (("M_A", cls.admissible), ("M_F", cls.forbidden), ("M_B", cls.border)):
        print(f"{label}: {{{', '.join(net.format_marking(m) for m in sorted(graph.nodes[n] for n in nodes))}}}")
    for transition in net.controllable():
        name = net.transitions[transition].name
        criticals = sorted(critical_set(net, graph, cls, transition))
        sounds = sorted(sound_set(net, graph, cls, transition))
        print(f"{name} critical: {{{', '.join(net.format_marking(m) for m in criticals)}}}")
        print(f"{name} sound: {{{', '.join(net.format_marking(m) for m in sounds)}}}")
    return EXIT_OK


def _synth(args: Namespace, env_values: dict) -> int:
    net, spec = _read_net(args.net)
    limits = make_limits(args, env_values)
    graph, cls = _classified(net, spec, limits)
    result = synthesize_all(net, graph, cls, make_options(args, env_values))
    verification = check_maximal_permissive(net, Controller.from_result(result), graph, cls, limits)
    report = dumps_report(build_report(net, graph, cls, result, verification))
    if args.report:
        _write(report, args.report)
        for entry in result.transitions:
            for condition in (entry.primal, entry.dual):
                if condition is not None:
                    print(render_condition(net, condition))
            print(f"chosen: {render_condition(net, entry.chosen)}")
    else:
        _write(report, None)
    if args.dot:
        _write(graph_to_dot(net, graph, cls), args.dot)
    return EXIT_OK if verification.passed else EXIT_VERIFICATION


def _verify(args: Namespace, env_values: dict) -> int:
    net, spec = _read_net(args.net)
    limits = make_limits(args, env_values)
    graph, cls = _classified(net, spec, limits)
    if args.condition:
        controller = Controller(tuple(parse_condition(net, text) for text in args.condition))
        result = None
    else:
        result = synthesize_all(net, graph, cls, make_options(args, env_values))
        controller = Controller.from_result(result)
    verification = check_maximal_permissive(net, controller, graph, cls, limits)
    print("PASS" if verification.passed else "FAIL")
    for divergence in verification.divergences:
        controller_word = "allows" if divergence.controller_allows else "blocks"
        print(f"  {divergence.transition} at {net.format_marking(divergence.marking)}: controller {controller_word}")
    for marking in verification.induced_blocking:
        print(f"  warning: every transition blocked at {net.format_marking(marking)}")
    if args.report:
        _write(dumps_report(build_report(net, graph, cls, result, verification)), args.report)
    return EXIT_OK if verification.passed else EXIT_VERIFICATION


def _export_dot(args: Namespace, env_values: dict) -> int:
    net, spec = _read_net(args.net)
    limits = make_limits(args, env_values)
    if args.kind == "net":
        controller = None
        if spec is not None:
            graph, cls = _classified(net, spec, limits)
            controller = Controller.from_result(synthesize_all(net, graph, cls, make_options(args, env_values)))
        _write(net_to_dot(net, controller), args.out)
    elif spec is None:
        _write(graph_to_dot(net, build_reach_graph(net, limits)), args.out)
    else:
        graph, cls = _classified(net, spec, limits)
        _write(graph_to_dot(net, graph, cls), args.out)
    return EXIT_OK


COMMANDS = {
    "reach": _reach,
    "classify": _classify,
    "synth": _synth,
    "verify": _verify,
    "export-dot": _export_dot,
}


def cli(argv: Sequence[str] = None) -> int:
    """Runs one command and returns its exit code"""
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_USAGE
    env_values = dotenv_values(args.env_file or find_dotenv(usecwd=True))
    try:
        level = args.log_level or env_values.get(ENV_PETRISYNTH_LOG_LEVEL) or os.getenv(ENV_PETRISYNTH_LOG_LEVEL)
        logging.basicConfig(level=_log_level(level or "WARNING"), format="%(levelname)s %(name)s: %(message)s")
        return COMMANDS[args.command](args, env_values)
    except (NetFileError, OSError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    except PetriSynthError as ex:
        print(f"error: {ex.message()}", file=sys.stderr)
        return EXIT_SYNTHESIS


def main() -> None:
    """Console script entry point"""
    sys.exit(cli())


if __name__ == "__main__":
    main()
