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

import dataclasses
import random
import re
from typing import FrozenSet, Iterable, Iterator, Optional, Set, Tuple
import numpy as np
import pytest
from petrisynth.control import Atom, Classification, ForbiddenSpec, forbidden_closure
from petrisynth.errors import ClassificationError, ExplorationError
from petrisynth.fixtures import load_fixture
from petrisynth.io import parse_net
from petrisynth.net import (ExplorationLimits, Marking, PetriNet, Place, ReachGraph, SubMarking, Transition,
                            build_reach_graph, support)

# A sound marking dominates the only critical marking of t1, so no over-state separates them
FALLBACK_NET = """\
net fallback
place S init=1
place A
place B
place X
trans ta ctrl
trans tb ctrl
trans t1 ctrl
arc S -> ta
arc ta -> A
arc S -> tb
arc tb -> A
arc tb -> B
arc A -> t1
arc t1 -> X
forbid clause: m(X)>=1 & m(B)<=0
"""

_POWERED = re.compile(r"([A-Z][0-9]*)(?:\^(\d+))?")


@dataclasses.dataclass(frozen=True)
class Case:
    """A parsed net with its graph and classification, plus powered-notation helpers"""
    net: PetriNet
    spec: Optional[ForbiddenSpec]
    graph: ReachGraph
    cls: Optional[Classification]

    def marking(self, text: str) -> Marking:
        counts = [0] * len(self.net.places)
        if text != "{}":
            for name, power in _POWERED.findall(text):
                counts[self.net.place_index(name)] += int(power or 1)
        return Marking(tuple(counts))

    def markings(self, *texts: str) -> FrozenSet[Marking]:
        return frozenset(self.marking(t) for t in texts)

    def sub(self, text: str) -> SubMarking:
        return support(self.marking(text))

    def names(self, markings: Iterable[Marking]) -> Set[str]:
        return {self.net.format_marking(m) for m in markings}

    def node_names(self, nodes: Iterable[int]) -> Set[str]:
        return {self.net.format_marking(self.graph.nodes[n]) for n in nodes}

    def sub_names(self, sub_markings: Iterable[SubMarking]) -> Set[str]:
        return {self.net.format_sub_marking(s) for s in sub_markings}

    def transition(self, name: str) -> int:
        return self.net.transition_index(name)


def load_case(text: str) -> Case:
    net, spec = parse_net(text)
    graph = build_reach_graph(net)
    cls = forbidden_closure(graph, net, spec) if spec is not None else None
    return Case(net, spec, graph, cls)


@pytest.fixture(scope="session")
def cap1() -> Case:
    return load_case(load_fixture("two-machines-cap1"))


@pytest.fixture(scope="session")
def cap2() -> Case:
    return load_case(load_fixture("two-machines-cap2"))


@pytest.fixture(scope="session")
def fallback() -> Case:
    return load_case(FALLBACK_NET)


RANDOM_LIMITS = ExplorationLimits(max_states=2_000, max_tokens_per_place=3)


def random_net(rng: random.Random) -> PetriNet:
    """Input and output arcs drawn independently with weights up to 2, so token counts may grow"""
    size = rng.randint(2, 6)
    width = rng.randint(1, 6)
    pre = np.zeros((size, width), dtype=np.int64)
    post = np.zeros((width, size), dtype=np.int64)
    for t in range(width):
        for p in rng.sample(range(size), rng.randint(1, 2)):
            pre[p, t] = rng.randint(1, 2)
        for p in rng.sample(range(size), rng.randint(0, 2)):
            post[t, p] = rng.randint(1, 2)
    initial = [0] * size
    for _ in range(rng.randint(1, 3)):
        initial[rng.randrange(size)] += 1
    places = tuple(Place(f"P{p}", initial[p]) for p in range(size))
    transitions = tuple(Transition(f"t{t}", rng.random() < 0.6) for t in range(width))
    return PetriNet("random", places, transitions, pre, post)


def random_clause(rng: random.Random, net: PetriNet) -> Tuple[Atom, ...]:
    return tuple(Atom(rng.randrange(len(net.places)), rng.choice((">=", "<=", "=")), rng.randint(0, 2))
                 for _ in range(rng.randint(1, 2)))


def random_spec(rng: random.Random, net: PetriNet) -> ForbiddenSpec:
    clauses = tuple(random_clause(rng, net) for _ in range(rng.randint(1, 2)))
    return ForbiddenSpec(clauses, forbid_deadlocks=rng.random() < 0.2)


def random_instances(seed: int, count: int) -> Iterator[Tuple[PetriNet, ForbiddenSpec, ReachGraph, Classification]]:
    """Yields classified random nets within RANDOM_LIMITS; nets beyond the limits or with
    a forbidden initial marking are drawn again"""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        net = random_net(rng)
        spec = random_spec(rng, net)
        try:
            graph = build_reach_graph(net, RANDOM_LIMITS)
            cls = forbidden_closure(graph, net, spec)
        except (ExplorationError, ClassificationError):
            continue
        produced += 1
        yield net, spec, graph, cls
