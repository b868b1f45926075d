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
Closed-loop execution under a controller and comparison against the optimal
state-avoidance supervisor.
"""

import dataclasses
import logging
from typing import Dict, FrozenSet, Iterable, Optional, Tuple
from petrisynth.errors import NotControllable
from petrisynth.net import ExplorationLimits, Marking, PetriNet, ReachGraph, build_reach_graph, enabled
from .classification import Classification
from .synthesis import SynthesisResult, TransitionCondition

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Controller:
    """Conditions attached to controllable transitions; uncontrollable transitions are never gated"""
    conditions: Tuple[TransitionCondition, ...] = ()

    def __post_init__(self) -> None:
        conditions = tuple(sorted(self.conditions, key=lambda c: c.transition))
        if len({c.transition for c in conditions}) != len(conditions):
            raise ValueError("ERROR: at most one condition per transition")
        object.__setattr__(self, "conditions", conditions)

    @classmethod
    def from_result(cls, result: SynthesisResult) -> "Controller":
        """Controller made of the chosen condition of every synthesized transition"""
        return cls(tuple(result.conditions().values()))

    def validate(self, net: PetriNet) -> None:
        """Checks that every condition is attached to a controllable transition"""
        for condition in self.conditions:
            if not net.transitions[condition.transition].controllable:
                raise NotControllable(condition.name)

    def condition(self, transition: int) -> Optional[TransitionCondition]:
        """Returns the condition of a transition, or None"""
        for condition in self.conditions:
            if condition.transition == transition:
                return condition
        return None


@dataclasses.dataclass(frozen=True)
class Divergence:
    """A (state, transition) pair on which the controller and the optimal supervisor disagree"""
    marking: Marking
    transition: str
    controller_allows: bool
    oracle_allows: bool


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of the maximal permissiveness check

    Class members:
    passed -- True iff the closed loop reaches exactly the supervised state set and no decision diverges
    divergences -- Decisions that differ from the optimal supervisor
    missing -- States the optimal supervisor reaches but the controller does not
    extra -- States the controller reaches but the optimal supervisor does not
    unreachable_admissible -- Admissible states that no admissible path reaches
    induced_blocking -- Admissible states where the controller blocks every enabled transition
    """
    passed: bool
    divergences: Tuple[Divergence, ...] = ()
    missing: Tuple[Marking, ...] = ()
    extra: Tuple[Marking, ...] = ()
    unreachable_admissible: Tuple[Marking, ...] = ()
    induced_blocking: Tuple[Marking, ...] = ()


def controlled_enabled(net: PetriNet, controller: Controller, marking: Marking, transition: int) -> bool:
    """Model-enabled and, for a controllable transition, allowed by its condition"""
    if not enabled(net, marking, transition):
        return False
    if not net.transitions[transition].controllable:
        return True
    condition = controller.condition(transition)
    return condition is None or condition.allows(marking)


def controlled_reach(net: PetriNet, controller: Controller, limits: ExplorationLimits = None) -> ReachGraph:
    """Reachability graph of the closed loop"""
    controller.validate(net)
    return build_reach_graph(net, limits,
                             guard=lambda marking, t: controlled_enabled(net, controller, marking, t))


def oracle_supervisor(net: PetriNet, graph: ReachGraph, cls: Classification) -> Dict[Tuple[int, int], bool]:
    """Optimal state-avoidance decisions: allow a controllable firing iff its successor is admissible.
    Keys are (node, transition) for admissible nodes and controllable transitions enabled there."""
    table = {}
    for node in sorted(cls.admissible):
        for transition, target in graph.successors(node):
            if net.transitions[transition].controllable:
                table[(node, transition)] = target in cls.admissible
    return table


def _oracle_reach(graph: ReachGraph, cls: Classification) -> FrozenSet[int]:
    """Nodes reachable from the initial node through admissible nodes only"""
    seen = {graph.initial}
    pending = [graph.initial]
    while pending:
        node = pending.pop()
        for _, target in graph.successors(node):
            if target in cls.admissible and target not in seen:
                seen.add(target)
                pending.append(target)
    return frozenset(seen)


def _sorted(markings: Iterable[Marking]) -> Tuple[Marking, ...]:
    return tuple(sorted(markings))


def check_maximal_permissive(net: PetriNet,
                             controller: Controller,
                             graph: ReachGraph,
                             cls: Classification,
                             limits: ExplorationLimits = None) -> VerificationReport:
    """Compares the closed loop with the optimal supervisor.
    Induced blocking is reported but does not fail the check."""
    closed_loop = controlled_reach(net, controller, limits)
    reached = set(closed_loop.nodes)
    supervised = {graph.nodes[n] for n in _oracle_reach(graph, cls)}
    admissible = {graph.nodes[n] for n in cls.admissible}

    divergences = []
    for (node, transition), oracle_allows in oracle_supervisor(net, graph, cls).items():
        marking = graph.nodes[node]
        allows = controlled_enabled(net, controller, marking, transition)
        if allows != oracle_allows:
            divergences.append(Divergence(marking, net.transitions[transition].name, allows, oracle_allows))

    blocking = []
    for node in sorted(cls.admissible):
        marking = graph.nodes[node]
        fireable = [t for t, _ in graph.successors(node)]
        if fireable and not any(controlled_enabled(net, controller, marking, t) for t in fireable):
            blocking.append(marking)
    for marking in blocking:
        logger.warning("Controller blocks every transition in admissible state %s", net.format_marking(marking))

    report = VerificationReport(
        passed=not divergences and reached == supervised,
        divergences=tuple(sorted(divergences, key=lambda d: (d.marking, d.transition))),
        missing=_sorted(supervised - reached),
        extra=_sorted(reached - supervised),
        unreachable_admissible=_sorted(admissible - supervised),
        induced_blocking=tuple(blocking))
    if report.passed:
        logger.info("Controller is maximally permissive on %d admissible states", len(admissible))
    else:
        logger.warning("Controller diverges from the optimal supervisor on %d decisions", len(divergences))
    return report
