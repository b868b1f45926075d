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
Admissible, forbidden and border-forbidden states, and per-transition
critical and sound states.
"""

import dataclasses
import logging
from typing import FrozenSet, Iterable, Mapping, Set, Tuple
from petrisynth.errors import InitialForbidden, NotControllable, UncontrollableBreach, UnknownPlace
from petrisynth.net import Marking, PetriNet, ReachGraph

logger = logging.getLogger(__name__)

ADMISSIBLE = "admissible"
FORBIDDEN = "forbidden"
BORDER = "border"

OPERATORS = (">=", "<=", "=")


@dataclasses.dataclass(frozen=True)
class Atom:
    """Atomic comparison m(place) op value"""
    place: int
    op: str
    value: int

    def __post_init__(self) -> None:
        if self.op not in OPERATORS:
            raise ValueError(f"ERROR: unknown comparison {self.op}")
        if self.value < 0:
            raise ValueError(f"ERROR: comparison threshold must be non-negative, got {self.value}")

    def holds(self, marking: Marking) -> bool:
        """Evaluates the comparison on a marking"""
        count = marking[self.place]
        if self.op == ">=":
            return count >= self.value
        if self.op == "<=":
            return count <= self.value
        return count == self.value


@dataclasses.dataclass(frozen=True)
class ForbiddenSpec:
    """
    Forbidden-state specification. A marking is base-forbidden if any clause holds,
    if it equals one of the explicit markings, or if it is a deadlock and
    forbid_deadlocks is set.

    Keyword arguments:
    clauses -- Conjunctions of atomic comparisons
    explicit -- Exact forbidden markings
    forbid_deadlocks -- Whether pre-existing deadlocks are forbidden
    """
    clauses: Tuple[Tuple[Atom, ...], ...] = ()
    explicit: Tuple[Marking, ...] = ()
    forbid_deadlocks: bool = False

    def __post_init__(self) -> None:
        clauses = tuple(tuple(clause) for clause in self.clauses)
        if any(not clause for clause in clauses):
            raise ValueError("ERROR: empty forbidden clause")
        if not clauses and not self.explicit and not self.forbid_deadlocks:
            raise ValueError("ERROR: a forbidden specification needs a clause, a marking or the deadlock flag")
        object.__setattr__(self, "clauses", clauses)
        object.__setattr__(self, "explicit", tuple(self.explicit))

    @classmethod
    def from_names(cls,
                   net: PetriNet,
                   clauses: Iterable[Iterable[Tuple[str, str, int]]] = (),
                   explicit: Iterable[Mapping[str, int]] = (),
                   forbid_deadlocks: bool = False) -> "ForbiddenSpec":
        """Builds a specification from place names, raising UnknownPlace for names the net lacks"""
        names = net.place_names()

        def index(name: str) -> int:
            if name not in names:
                raise UnknownPlace(name)
            return names.index(name)

        def marking(counts: Mapping[str, int]) -> Marking:
            dense = [0] * len(names)
            for name, count in counts.items():
                dense[index(name)] = count
            return Marking(tuple(dense))

        return cls(
            clauses=tuple(tuple(Atom(index(p), op, k) for p, op, k in clause) for clause in clauses),
            explicit=tuple(marking(m) for m in explicit),
            forbid_deadlocks=forbid_deadlocks)

    def validate(self, net: PetriNet) -> None:
        """Checks that every referenced place exists in the net"""
        size = len(net.places)
        for clause in self.clauses:
            for atom in clause:
                if not 0 <= atom.place < size:
                    raise UnknownPlace(f"#{atom.place}")
        for marking in self.explicit:
            if len(marking) != size:
                raise UnknownPlace(f"marking of {len(marking)} places for a net of {size}")


@dataclasses.dataclass(frozen=True)
class Classification:
    """Partition of the reachability graph nodes.

    Class members:
    admissible -- M_A
    forbidden -- M_F, the uncontrollable backward closure of the base-forbidden nodes
    border -- M_B, forbidden nodes entered directly from an admissible node
    """
    admissible: FrozenSet[int]
    forbidden: FrozenSet[int]
    border: FrozenSet[int]

    def __post_init__(self) -> None:
        if self.admissible & self.forbidden:
            raise ValueError("ERROR: admissible and forbidden states overlap")
        if not self.border <= self.forbidden:
            raise ValueError("ERROR: border states must be forbidden")

    def label(self, node: int) -> str:
        """Returns admissible, forbidden or border"""
        if node in self.border:
            return BORDER
        if node in self.forbidden:
            return FORBIDDEN
        return ADMISSIBLE


def base_forbidden(spec: ForbiddenSpec, marking: Marking, deadlock: bool = False) -> bool:
    """True iff some clause holds, the marking is listed explicitly, or it is a forbidden deadlock"""
    if any(all(atom.holds(marking) for atom in clause) for clause in spec.clauses):
        return True
    if marking in spec.explicit:
        return True
    return spec.forbid_deadlocks and deadlock


def forbidden_closure(graph: ReachGraph, net: PetriNet, spec: ForbiddenSpec) -> Classification:
    """Closes the base-forbidden nodes backwards under uncontrollable edges"""
    spec.validate(net)
    forbidden: Set[int] = {n for n, marking in enumerate(graph.nodes)
                           if base_forbidden(spec, marking, n in graph.deadlocks)}
    logger.debug("%d base-forbidden states", len(forbidden))
    pending = list(forbidden)
    while pending:
        node = pending.pop()
        for source, transition in graph.predecessors(node):
            if source not in forbidden and not net.transitions[transition].controllable:
                forbidden.add(source)
                pending.append(source)

    admissible = frozenset(range(len(graph.nodes))) - forbidden
    border = set()
    for source, transition, target in graph.edges:
        if source in admissible and target in forbidden:
            if not net.transitions[transition].controllable:
                raise UncontrollableBreach(net.format_marking(graph.nodes[source]),
                                           net.transitions[transition].name,
                                           net.format_marking(graph.nodes[target]))
            border.add(target)
    if graph.initial in forbidden:
        raise InitialForbidden(net.format_marking(graph.nodes[graph.initial]))
    logger.info("Classification: %d admissible, %d forbidden, %d border",
                len(admissible), len(forbidden), len(border))
    return Classification(admissible=admissible, forbidden=frozenset(forbidden), border=frozenset(border))


def _split(net: PetriNet, graph: ReachGraph, cls: Classification, transition: int) -> Tuple[Set[int], Set[int]]:
    if not net.transitions[transition].controllable:
        raise NotControllable(net.transitions[transition].name)
    critical, sound = set(), set()
    for node in cls.admissible:
        target = graph.successor(node, transition)
        if target is None:
            continue
        if target in cls.border:
            critical.add(node)
        elif target in cls.admissible:
            sound.add(node)
    return critical, sound


def critical_set(net: PetriNet, graph: ReachGraph, cls: Classification, transition: int) -> FrozenSet[Marking]:
    """Admissible markings whose transition-successor is border forbidden"""
    critical, _ = _split(net, graph, cls, transition)
    return frozenset(graph.nodes[n] for n in critical)


def sound_set(net: PetriNet, graph: ReachGraph, cls: Classification, transition: int) -> FrozenSet[Marking]:
    """Admissible markings whose transition-successor is admissible"""
    _, sound = _split(net, graph, cls, transition)
    return frozenset(graph.nodes[n] for n in sound)
