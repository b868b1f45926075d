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
Explicit-state reachability graph of a bounded Petri net.
"""

import dataclasses
import logging
from collections import deque
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Tuple
from petrisynth.errors import StateLimitExceeded, TokenLimitExceeded, Unbounded
from .limits import ExplorationLimits
from .model import Marking, PetriNet, enabled, fire

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]
# Extra gate applied on top of the firing rule, e.g. a supervisor
Guard = Callable[[Marking, int], bool]


@dataclasses.dataclass(frozen=True)
class ReachGraph:
    """Reachability graph with nodes sorted lexicographically by marking.

    Class members:
    nodes -- Distinct reachable markings
    edges -- Sorted (source node, transition index, target node) triples
    initial -- Index of the node holding M0
    deadlocks -- Nodes without an outgoing edge
    classification -- Optional classification attached for reporting
    """
    nodes: Tuple[Marking, ...]
    edges: Tuple[Edge, ...]
    initial: int
    deadlocks: FrozenSet[int]
    classification: Optional[Any] = None

    def __post_init__(self) -> None:
        index = {marking: i for i, marking in enumerate(self.nodes)}
        if len(index) != len(self.nodes):
            raise ValueError("ERROR: duplicate marking in reachability graph")
        successors: Dict[int, List[Tuple[int, int]]] = {i: [] for i in range(len(self.nodes))}
        predecessors: Dict[int, List[Tuple[int, int]]] = {i: [] for i in range(len(self.nodes))}
        for source, transition, target in self.edges:
            successors[source].append((transition, target))
            predecessors[target].append((source, transition))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_successors", successors)
        object.__setattr__(self, "_predecessors", predecessors)

    def __len__(self) -> int:
        return len(self.nodes)

    def index_of(self, marking: Marking) -> int:
        """Returns the node index of a marking"""
        return self._index[marking]

    def __contains__(self, marking: Marking) -> bool:
        return marking in self._index

    def successors(self, node: int) -> List[Tuple[int, int]]:
        """Returns the (transition, target) pairs leaving a node"""
        return self._successors[node]

    def predecessors(self, node: int) -> List[Tuple[int, int]]:
        """Returns the (source, transition) pairs entering a node"""
        return self._predecessors[node]

    def successor(self, node: int, transition: int) -> Optional[int]:
        """Returns the target of the transition-labeled edge leaving node, if any"""
        for label, target in self._successors[node]:
            if label == transition:
                return target
        return None


def build_reach_graph(net: PetriNet,
                      limits: ExplorationLimits = None,
                      guard: Guard = None) -> ReachGraph:
    """Breadth-first exploration from M0.

    Keyword arguments:
    net -- The net to explore
    limits -- State and token guards; defaults to ExplorationLimits()
    guard -- Optional extra condition a transition must satisfy to fire"""
    limits = limits or ExplorationLimits()
    initial = net.initial_marking
    _check_tokens(net, initial, limits)
    discovered: Dict[Marking, int] = {initial: 0}
    order: List[Marking] = [initial]
    parent: List[Optional[int]] = [None]
    edges: List[Edge] = []
    queue = deque([0])
    logger.info("Exploring net %s with %d places and %d transitions",
                net.name, len(net.places), len(net.transitions))

    while queue:
        node = queue.popleft()
        marking = order[node]
        for transition in range(len(net.transitions)):
            if not enabled(net, marking, transition):
                continue
            if guard is not None and not guard(marking, transition):
                continue
            successor = fire(net, marking, transition)
            target = discovered.get(successor)
            if target is None:
                _check_tokens(net, successor, limits)
                _check_unbounded(net, successor, node, order, parent)
                if len(order) >= limits.max_states:
                    raise StateLimitExceeded(limits.max_states)
                target = len(order)
                discovered[successor] = target
                order.append(successor)
                parent.append(node)
                queue.append(target)
            edges.append((node, transition, target))

    graph = _canonical(order, edges)
    logger.info("Reachability graph of %s: %d nodes, %d edges, %d deadlocks",
                net.name, len(graph.nodes), len(graph.edges), len(graph.deadlocks))
    return graph


def deadlock_nodes(graph: ReachGraph) -> FrozenSet[int]:
    """Nodes without an outgoing edge"""
    return graph.deadlocks


def _canonical(order: List[Marking], edges: List[Edge]) -> ReachGraph:
    """Re-indexes nodes in lexicographic marking order"""
    ranking = sorted(range(len(order)), key=lambda i: order[i])
    renumber = {old: new for new, old in enumerate(ranking)}
    nodes = tuple(order[old] for old in ranking)
    canonical_edges = tuple(sorted((renumber[s], t, renumber[d]) for s, t, d in edges))
    with_exit = {source for source, _, _ in canonical_edges}
    deadlocks = frozenset(i for i in range(len(nodes)) if i not in with_exit)
    return ReachGraph(nodes=nodes, edges=canonical_edges, initial=renumber[0], deadlocks=deadlocks)


def _check_tokens(net: PetriNet, marking: Marking, limits: ExplorationLimits) -> None:
    if limits.max_tokens_per_place is None:
        return
    for place, count in enumerate(marking.counts):
        if count > limits.max_tokens_per_place:
            raise TokenLimitExceeded(net.places[place].name, count, limits.max_tokens_per_place)


def _check_unbounded(net: PetriNet,
                     successor: Marking,
                     node: int,
                     order: List[Marking],
                     parent: List[Optional[int]]) -> None:
    """A new marking strictly dominating an ancestor on its firing path means the net is unbounded"""
    ancestor = node
    while ancestor is not None:
        previous = order[ancestor]
        if successor != previous and successor.dominates(previous):
            raise Unbounded(net.format_marking(previous), net.format_marking(successor))
        ancestor = parent[ancestor]
