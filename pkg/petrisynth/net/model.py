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
Petri net value types, firing semantics and the over-state partial order.

A SubMarking is a sparse map from place index to a threshold k >= 1. It plays two
roles: an over-state of a marking, and the conjunctive condition "m(P) >= k for all
entries". A sub-marking s is an over-state of s' when every place of s appears in s'
with at least s's threshold; the relation is reflexive.
"""

import dataclasses
import math
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Sequence, Tuple
import numpy as np
from petrisynth.errors import EnumerationTooLarge, NetDefinitionError, NotEnabled
from .constants import DEFAULT_ENUMERATION_CAP


@dataclasses.dataclass(frozen=True)
class Place:
    """A place with its initial token count"""
    name: str
    initial: int = 0


@dataclasses.dataclass(frozen=True)
class Transition:
    """A transition, its controllability flag and optional event label (c1, f1, ...)"""
    name: str
    controllable: bool = True
    event: Optional[str] = None


@dataclasses.dataclass(frozen=True, order=True)
class Marking:
    """Token counts, one per place, indexed like PetriNet.places.
    Markings compare lexicographically and hash by value."""
    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ValueError(f"ERROR: negative token count in marking {list(counts)}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def of(cls, counts: Iterable[int]) -> "Marking":
        """Builds a marking from any sequence of counts"""
        return cls(tuple(counts))

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, place: int) -> int:
        return self.counts[place]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def dominates(self, other: "Marking") -> bool:
        """True iff every count of self is at least the count of other"""
        return all(a >= b for a, b in zip(self.counts, other.counts))

    def as_array(self) -> np.ndarray:
        """Returns the counts as an integer vector"""
        return np.asarray(self.counts, dtype=np.int64)


@dataclasses.dataclass(frozen=True, order=True)
class SubMarking:
    """Sparse place -> threshold map, stored as (place index, threshold) pairs
    in ascending place order. A zero threshold is represented by absence."""
    thresholds: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        items = tuple((int(p), int(k)) for p, k in self.thresholds)
        places = [p for p, _ in items]
        if places != sorted(set(places)):
            raise ValueError(f"ERROR: sub-marking places must be unique and ascending, got {places}")
        if any(k < 1 for _, k in items):
            raise ValueError(f"ERROR: sub-marking thresholds must be at least 1, got {items}")
        object.__setattr__(self, "thresholds", items)

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "SubMarking":
        """Builds a sub-marking from a place index -> threshold mapping, dropping zeros"""
        return cls(tuple(sorted((p, k) for p, k in mapping.items() if k > 0)))

    def as_dict(self) -> Dict[int, int]:
        """Returns the thresholds as a dictionary"""
        return dict(self.thresholds)

    def places(self) -> Tuple[int, ...]:
        """Returns the place indices in ascending order"""
        return tuple(p for p, _ in self.thresholds)

    def threshold_sum(self) -> int:
        """Returns the sum of all thresholds"""
        return sum(k for _, k in self.thresholds)

    def __len__(self) -> int:
        return len(self.thresholds)

    def __bool__(self) -> bool:
        return bool(self.thresholds)


@dataclasses.dataclass(frozen=True, eq=False)
class PetriNet:
    """
    Place/transition net with controllability flags

    Keyword arguments:
    name -- Name of the net
    places -- Places in index order, with their initial token counts
    transitions -- Transitions in index order
    pre -- places x transitions matrix of consumed tokens
    post -- transitions x places matrix of produced tokens
    """
    name: str
    places: Tuple[Place, ...]
    transitions: Tuple[Transition, ...]
    pre: np.ndarray
    post: np.ndarray

    def __post_init__(self) -> None:
        places = tuple(self.places)
        transitions = tuple(self.transitions)
        if not places or not transitions:
            raise NetDefinitionError("A net needs at least one place and one transition")
        _check_unique("place", [p.name for p in places])
        _check_unique("transition", [t.name for t in transitions])
        for place in places:
            if place.initial < 0:
                raise NetDefinitionError(f"Place {place.name} has a negative initial count")
        pre = _frozen_matrix(self.pre, (len(places), len(transitions)), "pre")
        post = _frozen_matrix(self.post, (len(transitions), len(places)), "post")
        object.__setattr__(self, "places", places)
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "post", post)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PetriNet):
            return NotImplemented
        return (self.name == other.name
                and self.places == other.places
                and self.transitions == other.transitions
                and np.array_equal(self.pre, other.pre)
                and np.array_equal(self.post, other.post))

    __hash__ = None

    @property
    def initial_marking(self) -> Marking:
        """Returns M0"""
        return Marking(tuple(p.initial for p in self.places))

    @property
    def incidence(self) -> np.ndarray:
        """Returns the places x transitions incidence matrix post^T - pre"""
        return self.post.T - self.pre

    def place_names(self) -> Tuple[str, ...]:
        """Returns the place names in index order"""
        return tuple(p.name for p in self.places)

    def place_index(self, name: str) -> int:
        """Returns the index of the named place"""
        for index, place in enumerate(self.places):
            if place.name == name:
                return index
        raise KeyError(name)

    def transition_index(self, name: str) -> int:
        """Returns the index of the named transition"""
        for index, transition in enumerate(self.transitions):
            if transition.name == name:
                return index
        raise KeyError(name)

    def controllable(self) -> Tuple[int, ...]:
        """Returns the indices of the controllable transitions"""
        return tuple(i for i, t in enumerate(self.transitions) if t.controllable)

    def format_marking(self, marking: Marking) -> str:
        """Renders a marking in powered-support notation, e.g. P1P3^2P6"""
        return self.format_sub_marking(support(marking))

    def format_sub_marking(self, sub_marking: SubMarking) -> str:
        """Renders a sub-marking in powered-support notation"""
        if not sub_marking:
            return "{}"
        return "".join(self.places[p].name + (f"^{k}" if k > 1 else "")
                       for p, k in sub_marking.thresholds)


def _check_unique(kind: str, names: Sequence[str]) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise NetDefinitionError(f"Duplicate {kind} name: {name}")
        seen.add(name)


def _frozen_matrix(values, shape: Tuple[int, int], label: str) -> np.ndarray:
    matrix = np.array(values, dtype=np.int64).reshape(shape)
    if (matrix < 0).any():
        raise NetDefinitionError(f"Negative weight in the {label} matrix")
    matrix.setflags(write=False)
    return matrix


def support(marking: Marking) -> SubMarking:
    """Marked places of a marking, each with its token count as threshold"""
    return SubMarking(tuple((p, k) for p, k in enumerate(marking.counts) if k > 0))


def covers(sub_marking: SubMarking, marking: Marking) -> bool:
    """True iff m(P) >= k for every (P, k) of the sub-marking"""
    counts = marking.counts
    return all(counts[p] >= k for p, k in sub_marking.thresholds)


def is_over_state(s2: SubMarking, s1: SubMarking) -> bool:
    """True iff s2 is an over-state of s1: every place of s2 is in s1 with at least s2's threshold"""
    larger = dict(s1.thresholds)
    return all(larger.get(p, 0) >= k for p, k in s2.thresholds)


def enabled(net: PetriNet, marking: Marking, transition: int) -> bool:
    """Standard firing rule: every input place holds at least the arc weight"""
    return bool((marking.as_array() >= net.pre[:, transition]).all())


def fire(net: PetriNet, marking: Marking, transition: int) -> Marking:
    """Returns m - pre(., t) + post(t, .); raises NotEnabled if t is not enabled"""
    if not enabled(net, marking, transition):
        raise NotEnabled(net.transitions[transition].name, marking.counts)
    result = marking.as_array() - net.pre[:, transition] + net.post[transition, :]
    return Marking(tuple(int(c) for c in result))


def sub_marking_count(sub_marking: SubMarking) -> int:
    """Number of non-empty over-states of a sub-marking"""
    return math.prod(k + 1 for _, k in sub_marking.thresholds) - 1


def sub_markings(sub_marking: SubMarking, cap: int = DEFAULT_ENUMERATION_CAP) -> FrozenSet[SubMarking]:
    """Every non-empty over-state of the sub-marking, itself included"""
    size = sub_marking_count(sub_marking)
    if size > cap:
        raise EnumerationTooLarge(size, cap)
    places = sub_marking.places()
    ranges = [range(k + 1) for _, k in sub_marking.thresholds]
    result = set()
    for levels in product(*ranges):
        if any(levels):
            result.add(SubMarking(tuple((p, k) for p, k in zip(places, levels) if k > 0)))
    return frozenset(result)
