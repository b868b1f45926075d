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
Over-state simplification of transition conditions.

For a controllable transition t with critical states C (admissible states whose
t-successor is border forbidden) and sound states S (admissible states whose
t-successor is admissible):

    C1 -- every over-state of every critical state
    C2 -- the members of C1 that cover no sound state
    C3 -- the minimal members of C2
    C4 -- a selection from C3 covering every critical state

Blocking t whenever some member of C4 covers the current marking blocks every
critical state and no sound state. The enable form swaps the roles of C and S.
"""

import dataclasses
import logging
from enum import Enum
from typing import Collection, Dict, FrozenSet, Iterable, List, Optional, Tuple
from petrisynth.errors import SynthesisError, UncoverableColumn
from petrisynth.net import Marking, PetriNet, ReachGraph, SubMarking, covers, is_over_state, sub_markings, support
from petrisynth.net import SynthesisOptions
from petrisynth.net.constants import METHOD_DISABLE, METHOD_ENABLE
from .classification import Classification, critical_set, sound_set
from .cover import row_rank, select_cover

logger = logging.getLogger(__name__)


class ConditionForm(Enum):
    """How the terms of a transition condition gate the transition"""
    DISABLE = "disable"
    ENABLE = "enable"
    DISABLE_EXACT = "disable_exact"
    ENABLE_EXACT = "enable_exact"

    def is_disable(self) -> bool:
        """True for the forms that block when a term matches"""
        return self in (ConditionForm.DISABLE, ConditionForm.DISABLE_EXACT)


@dataclasses.dataclass(frozen=True)
class TransitionCondition:
    """
    Condition attached to a controllable transition

    Keyword arguments:
    transition -- Transition index
    name -- Transition name
    form -- Disable or enable, threshold or exact
    terms -- Threshold conjunctions, in canonical order
    exact -- Markings matched by full equality (fallback forms only)
    """
    transition: int
    name: str
    form: ConditionForm
    terms: Tuple[SubMarking, ...] = ()
    exact: Tuple[Marking, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(sorted(set(self.terms))))
        object.__setattr__(self, "exact", tuple(sorted(set(self.exact))))
        if self.exact and self.form not in (ConditionForm.DISABLE_EXACT, ConditionForm.ENABLE_EXACT):
            raise ValueError("ERROR: exact markings need an exact condition form")

    def matches(self, marking: Marking) -> bool:
        """True iff some term covers the marking or the marking is one of the exact markings"""
        return any(covers(term, marking) for term in self.terms) or marking in self.exact

    def allows(self, marking: Marking) -> bool:
        """Evaluates the control: True when the transition may fire"""
        if self.form.is_disable():
            return not self.matches(marking)
        return self.matches(marking)

    def term_count(self) -> int:
        """Number of disjuncts"""
        return len(self.terms) + len(self.exact)

    def literal_count(self) -> int:
        """Number of atomic comparisons; exact markings pin every place"""
        return sum(len(term) for term in self.terms) + sum(len(m) for m in self.exact)

    def complexity(self) -> Tuple[int, int]:
        """Simplicity metric used to choose between the disable and enable forms"""
        return (self.term_count(), self.literal_count())


@dataclasses.dataclass(frozen=True)
class CandidateSets:
    """Intermediate over-state sets; C4 is a subset of C3, C3 of C2 and C2 of C1"""
    c1: FrozenSet[SubMarking]
    c2: FrozenSet[SubMarking]
    c3: FrozenSet[SubMarking]
    c4: FrozenSet[SubMarking] = frozenset()

    def sizes(self) -> Tuple[int, int, int, int]:
        """Returns |C1|, |C2|, |C3|, |C4|"""
        return (len(self.c1), len(self.c2), len(self.c3), len(self.c4))


@dataclasses.dataclass(frozen=True)
class TransitionSynthesis:
    """Synthesis outcome for one controllable transition"""
    transition: int
    name: str
    criticals: Tuple[Marking, ...]
    sounds: Tuple[Marking, ...]
    raw: TransitionCondition
    chosen: TransitionCondition
    primal: Optional[TransitionCondition] = None
    dual: Optional[TransitionCondition] = None
    primal_sets: Optional[CandidateSets] = None
    dual_sets: Optional[CandidateSets] = None

    def statistics(self) -> Dict[str, int]:
        """Set sizes of the primal (C) and dual (S) pipelines"""
        stats = {"critical": len(self.criticals), "sound": len(self.sounds)}
        for prefix, sets in (("C", self.primal_sets), ("S", self.dual_sets)):
            if sets is not None:
                for i, size in enumerate(sets.sizes(), start=1):
                    stats[f"{prefix}{i}"] = size
        return stats


@dataclasses.dataclass(frozen=True)
class SynthesisResult:
    """Per-transition outcomes for the controllable transitions that need control

    Class members:
    method -- disable, enable or both
    transitions -- Outcomes for transitions with critical states, in transition order
    unconstrained -- Names of controllable transitions that need no condition
    """
    method: str
    transitions: Tuple[TransitionSynthesis, ...]
    unconstrained: Tuple[str, ...]

    def conditions(self) -> Dict[int, TransitionCondition]:
        """Chosen condition per transition index"""
        return {entry.transition: entry.chosen for entry in self.transitions}

    def get(self, name: str) -> Optional[TransitionSynthesis]:
        """Returns the outcome for the named transition, if it needs control"""
        for entry in self.transitions:
            if entry.name == name:
                return entry
        return None


def raw_condition(transition: int, name: str, criticals: Collection[Marking]) -> TransitionCondition:
    """Unsimplified condition: block when the marking covers the support of some critical state"""
    if not criticals:
        raise ValueError(f"ERROR: transition {name} has no critical state")
    return TransitionCondition(transition, name, ConditionForm.DISABLE,
                               terms=tuple(support(m) for m in criticals))


def minimal_elements(candidates: Iterable[SubMarking]) -> FrozenSet[SubMarking]:
    """Candidates that have no other candidate as over-state"""
    ordered = sorted(set(candidates), key=row_rank)
    minimal: List[SubMarking] = []
    for candidate in ordered:
        # an over-state of candidate never ranks after it
        if not any(is_over_state(kept, candidate) for kept in minimal):
            minimal.append(candidate)
    return frozenset(minimal)


def candidate_pipeline(criticals: Collection[Marking],
                       sounds: Collection[Marking],
                       cap: int = None) -> CandidateSets:
    """Computes C1, C2 and C3; sound coverage is tested directly against the sound states"""
    if not criticals:
        raise ValueError("ERROR: the candidate pipeline needs at least one critical state")
    c1 = set()
    for marking in criticals:
        if cap is None:
            c1 |= sub_markings(support(marking))
        else:
            c1 |= sub_markings(support(marking), cap)
    c2 = frozenset(s for s in c1 if not any(covers(s, m) for m in sounds))
    return CandidateSets(c1=frozenset(c1), c2=c2, c3=minimal_elements(c2))


def _simplify(criticals: Collection[Marking],
              sounds: Collection[Marking],
              options: SynthesisOptions) -> Tuple[CandidateSets, Tuple[SubMarking, ...], Tuple[Marking, ...]]:
    """Runs the pipeline and cover selection; returns the sets, the cover and the uncoverable markings"""
    sets = candidate_pipeline(criticals, sounds, options.enumeration_cap)
    columns = sorted(criticals)
    try:
        cover = select_cover(sets.c3, columns, options.exact_cover)
        uncoverable: Tuple[Marking, ...] = ()
    except UncoverableColumn as ex:
        uncoverable = tuple(columns[j] for j in ex.columns())
        coverable = [m for m in columns if m not in uncoverable]
        cover = select_cover(sets.c3, coverable, options.exact_cover) if coverable else ()
    return dataclasses.replace(sets, c4=frozenset(cover)), cover, uncoverable


def synthesize_disable(transition: int,
                       name: str,
                       criticals: Collection[Marking],
                       sounds: Collection[Marking],
                       options: SynthesisOptions = None) -> Tuple[TransitionCondition, CandidateSets]:
    """Simplified forbidding condition; critical states dominated by a sound state are pinned exactly"""
    options = options or SynthesisOptions()
    sets, cover, uncoverable = _simplify(criticals, sounds, options)
    if uncoverable:
        logger.warning("%s: %d critical states cannot be simplified, using exact markings",
                       name, len(uncoverable))
        condition = TransitionCondition(transition, name, ConditionForm.DISABLE_EXACT, cover, uncoverable)
    else:
        condition = TransitionCondition(transition, name, ConditionForm.DISABLE, cover)
    _check(condition, criticals, sounds)
    return condition, sets


def synthesize_enable(transition: int,
                      name: str,
                      criticals: Collection[Marking],
                      sounds: Collection[Marking],
                      options: SynthesisOptions = None) -> Tuple[TransitionCondition, Optional[CandidateSets]]:
    """Simplified firing condition, the dual of synthesize_disable"""
    options = options or SynthesisOptions()
    if not sounds:
        return TransitionCondition(transition, name, ConditionForm.ENABLE), None
    sets, cover, uncoverable = _simplify(sounds, criticals, options)
    if uncoverable:
        logger.warning("%s: %d sound states cannot be simplified, using exact markings",
                       name, len(uncoverable))
        condition = TransitionCondition(transition, name, ConditionForm.ENABLE_EXACT, cover, uncoverable)
    else:
        condition = TransitionCondition(transition, name, ConditionForm.ENABLE, cover)
    _check(condition, criticals, sounds)
    return condition, sets


def _check(condition: TransitionCondition, criticals: Iterable[Marking], sounds: Iterable[Marking]) -> None:
    for marking in criticals:
        if condition.allows(marking):
            raise SynthesisError(condition.name, f"critical state {list(marking.counts)} is not blocked")
    for marking in sounds:
        if not condition.allows(marking):
            raise SynthesisError(condition.name, f"sound state {list(marking.counts)} is blocked")


def synthesize_transition(net: PetriNet,
                          graph: ReachGraph,
                          cls: Classification,
                          transition: int,
                          options: SynthesisOptions = None) -> Optional[TransitionSynthesis]:
    """Synthesis for one controllable transition; None when it needs no control"""
    options = options or SynthesisOptions()
    name = net.transitions[transition].name
    criticals = tuple(sorted(critical_set(net, graph, cls, transition)))
    if not criticals:
        return None
    sounds = tuple(sorted(sound_set(net, graph, cls, transition)))
    primal = primal_sets = dual = dual_sets = None
    if options.method != METHOD_ENABLE:
        primal, primal_sets = synthesize_disable(transition, name, criticals, sounds, options)
    if options.method != METHOD_DISABLE:
        dual, dual_sets = synthesize_enable(transition, name, criticals, sounds, options)
    if primal is None:
        chosen = dual
    elif dual is None:
        chosen = primal
    else:
        chosen = dual if dual.complexity() < primal.complexity() else primal
    logger.info("%s: %d critical, %d sound, %s form with %d terms",
                name, len(criticals), len(sounds), chosen.form.value, chosen.term_count())
    return TransitionSynthesis(transition=transition, name=name, criticals=criticals, sounds=sounds,
                               raw=raw_condition(transition, name, criticals), chosen=chosen,
                               primal=primal, dual=dual, primal_sets=primal_sets, dual_sets=dual_sets)


def synthesize_all(net: PetriNet,
                   graph: ReachGraph,
                   cls: Classification,
                   options: SynthesisOptions = None) -> SynthesisResult:
    """Synthesizes a condition for every controllable transition that has critical states"""
    options = options or SynthesisOptions()
    entries, unconstrained = [], []
    for transition in net.controllable():
        entry = synthesize_transition(net, graph, cls, transition, options)
        if entry is None:
            unconstrained.append(net.transitions[transition].name)
        else:
            entries.append(entry)
    return SynthesisResult(method=options.method, transitions=tuple(entries), unconstrained=tuple(unconstrained))
