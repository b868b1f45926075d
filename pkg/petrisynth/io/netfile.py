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
Line-oriented net files and the transition condition grammar.

Net file statements, one per line, `#` starts a comment:

    net <name>
    place <P> init=<n>
    trans <t> ctrl|unctrl [event=<e>]
    arc <P> -> <t> [weight=<n>]
    arc <t> -> <P> [weight=<n>]
    forbid clause: m(P2)>=1 & m(P3)<=0
    forbid marking: P2 P4^2 P5
    forbid deadlock

Conditions:

    disable(t1) := (m(P4)>=1) | (m(P1)>=1 & m(P6)>=2)
    enable(t1) := (m(P3)>=1)
    enable(t1) := false
    disable_exact(t1) := [P1=1,P2=0,P3=0,P4=2,P5=1,P6=0]
"""

import re
from typing import Dict, List, Optional, Tuple
import numpy as np
from petrisynth.errors import NetDefinitionError, ParseError, SemanticError
from petrisynth.net import Marking, PetriNet, Place, SubMarking, Transition
from petrisynth.control import Atom, ConditionForm, ForbiddenSpec, TransitionCondition

_TOKEN = re.compile(r"\s*(:=|->|>=|<=|==|-?\d+|[A-Za-z_](?:[A-Za-z0-9_.]|-(?!>))*|\S)")
_NAME = re.compile(r"[A-Za-z_](?:[A-Za-z0-9_.]|-(?!>))*$")
_INTEGER = re.compile(r"-?\d+$")


class _Cursor:
    """Token stream of one line with 1-based column positions"""
    def __init__(self, line: int, text: str) -> None:
        self.line = line
        self._end = len(text.rstrip()) + 1
        self._tokens: List[Tuple[str, int]] = []
        position = 0
        while position < len(text) and text[position:].strip():
            match = _TOKEN.match(text, position)
            self._tokens.append((match.group(1), match.start(1) + 1))
            position = match.end()
        self._next = 0

    def at_end(self) -> bool:
        """True when every token has been consumed"""
        return self._next >= len(self._tokens)

    def peek(self) -> Optional[str]:
        """Returns the next token without consuming it"""
        return None if self.at_end() else self._tokens[self._next][0]

    def column(self) -> int:
        """Column of the next token, or one past the end of the line"""
        return self._end if self.at_end() else self._tokens[self._next][1]

    def error(self, message: str) -> ParseError:
        """ParseError located at the next token"""
        found = self.peek()
        detail = f"found {found!r}" if found else "found end of line"
        return ParseError(self.line, self.column(), f"{message}, {detail}")

    def take(self) -> str:
        """Consumes and returns the next token"""
        if self.at_end():
            raise self.error("unexpected end of line")
        token = self._tokens[self._next][0]
        self._next += 1
        return token

    def accept(self, token: str) -> bool:
        """Consumes the next token if it equals token"""
        if self.peek() == token:
            self._next += 1
            return True
        return False

    def expect(self, *tokens: str) -> str:
        """Consumes the next token, which must be one of tokens"""
        if self.peek() not in tokens:
            raise self.error(f"expected {' or '.join(repr(t) for t in tokens)}")
        return self.take()

    def name(self) -> str:
        """Consumes an identifier"""
        if self.peek() is None or not _NAME.match(self.peek()):
            raise self.error("expected a name")
        return self.take()

    def integer(self) -> int:
        """Consumes a (possibly negative) integer"""
        if self.peek() is None or not _INTEGER.match(self.peek()):
            raise self.error("expected an integer")
        return int(self.take())

    def finish(self) -> None:
        """Fails unless every token has been consumed"""
        if not self.at_end():
            raise self.error("unexpected trailing input")


def _strip_comment(text: str) -> str:
    index = text.find("#")
    return text if index < 0 else text[:index]


class _NetBuilder:
    """Collects statements and checks them against each other"""
    def __init__(self) -> None:
        self.name = "net"
        self.places: Dict[str, Tuple[int, int]] = {}
        self.transitions: Dict[str, Tuple[Transition, int]] = {}
        self.arcs: Dict[Tuple[str, str], Tuple[int, int]] = {}
        self.clauses: List[Tuple[int, List[Tuple[str, str, int]]]] = []
        self.markings: List[Tuple[int, Dict[str, int]]] = []
        self.forbid_deadlocks = False
        self.last_line = 0

    def statement(self, cursor: _Cursor) -> None:
        """Parses one non-empty statement"""
        keyword = cursor.expect("net", "place", "trans", "arc", "forbid")
        getattr(self, f"_{keyword}")(cursor)
        cursor.finish()

    def _net(self, cursor: _Cursor) -> None:
        self.name = cursor.name()

    def _place(self, cursor: _Cursor) -> None:
        name = cursor.name()
        initial = 0
        if cursor.accept("init"):
            cursor.expect("=")
            initial = cursor.integer()
        if name in self.places or name in self.transitions:
            raise SemanticError(cursor.line, f"duplicate name {name}")
        if initial < 0:
            raise SemanticError(cursor.line, f"negative initial count for place {name}")
        self.places[name] = (initial, cursor.line)

    def _trans(self, cursor: _Cursor) -> None:
        name = cursor.name()
        controllable = cursor.expect("ctrl", "unctrl") == "ctrl"
        event = None
        if cursor.accept("event"):
            cursor.expect("=")
            event = cursor.name()
        if name in self.places or name in self.transitions:
            raise SemanticError(cursor.line, f"duplicate name {name}")
        self.transitions[name] = (Transition(name, controllable, event), cursor.line)

    def _arc(self, cursor: _Cursor) -> None:
        source = cursor.name()
        cursor.expect("->")
        target = cursor.name()
        weight = 1
        if cursor.accept("weight"):
            cursor.expect("=")
            weight = cursor.integer()
        if weight < 0:
            raise SemanticError(cursor.line, f"negative weight on arc {source} -> {target}")
        if (source, target) in self.arcs:
            raise SemanticError(cursor.line, f"duplicate arc {source} -> {target}")
        self.arcs[(source, target)] = (weight, cursor.line)

    def _forbid(self, cursor: _Cursor) -> None:
        kind = cursor.expect("clause", "marking", "deadlock")
        if kind == "deadlock":
            self.forbid_deadlocks = True
            return
        cursor.expect(":")
        if kind == "clause":
            atoms = [_atom(cursor)]
            while cursor.accept("&"):
                atoms.append(_atom(cursor))
            self.clauses.append((cursor.line, atoms))
        else:
            counts: Dict[str, int] = {}
            while not cursor.at_end():
                place = cursor.name()
                counts[place] = counts.get(place, 0) + (cursor.integer() if cursor.accept("^") else 1)
            if not counts:
                raise cursor.error("expected a marking")
            self.markings.append((cursor.line, counts))

    def build(self) -> Tuple[PetriNet, Optional[ForbiddenSpec]]:
        """Resolves names and builds the net and its forbidden specification"""
        place_names = list(self.places)
        transition_names = list(self.transitions)
        pre = np.zeros((len(place_names), len(transition_names)), dtype=np.int64)
        post = np.zeros((len(transition_names), len(place_names)), dtype=np.int64)
        for (source, target), (weight, line) in self.arcs.items():
            if source in self.places and target in self.transitions:
                pre[place_names.index(source), transition_names.index(target)] = weight
            elif source in self.transitions and target in self.places:
                post[transition_names.index(source), place_names.index(target)] = weight
            else:
                unknown = [n for n in (source, target) if n not in self.places and n not in self.transitions]
                if unknown:
                    raise SemanticError(line, f"unknown place or transition {unknown[0]}")
                raise SemanticError(line, f"arc {source} -> {target} must join a place and a transition")
        try:
            net = PetriNet(name=self.name,
                           places=tuple(Place(n, self.places[n][0]) for n in place_names),
                           transitions=tuple(self.transitions[n][0] for n in transition_names),
                           pre=pre, post=post)
        except NetDefinitionError as ex:
            raise SemanticError(self.last_line, ex.message()) from ex
        return net, self._spec(net)

    def _spec(self, net: PetriNet) -> Optional[ForbiddenSpec]:
        if not self.clauses and not self.markings and not self.forbid_deadlocks:
            return None
        clauses = []
        for line, atoms in self.clauses:
            clauses.append(tuple(Atom(self._place_index(place, line), op, value)
                                 for place, op, value in atoms))
        explicit = []
        for line, counts in self.markings:
            dense = [0] * len(net.places)
            for place, count in counts.items():
                dense[self._place_index(place, line)] = count
            explicit.append(Marking(tuple(dense)))
        return ForbiddenSpec(tuple(clauses), tuple(explicit), self.forbid_deadlocks)

    def _place_index(self, name: str, line: int) -> int:
        if name not in self.places:
            raise SemanticError(line, f"unknown place {name}")
        return list(self.places).index(name)


def _atom(cursor: _Cursor) -> Tuple[str, str, int]:
    cursor.expect("m")
    cursor.expect("(")
    place = cursor.name()
    cursor.expect(")")
    op = cursor.expect(">=", "<=", "=", "==")
    value = cursor.integer()
    if value < 0:
        raise SemanticError(cursor.line, f"negative threshold for place {place}")
    return place, ("=" if op == "==" else op), value


def parse_net(text: str) -> Tuple[PetriNet, Optional[ForbiddenSpec]]:
    """Parses a net file; the forbidden-state specification is None when the file has no forbid statement"""
    builder = _NetBuilder()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        builder.last_line = number
        if line.strip():
            builder.statement(_Cursor(number, line))
    return builder.build()


def serialize_net(net: PetriNet, spec: ForbiddenSpec = None) -> str:
    """Canonical net file text"""
    lines = [f"net {net.name}"]
    lines += [f"place {p.name} init={p.initial}" for p in net.places]
    for transition in net.transitions:
        event = f" event={transition.event}" if transition.event else ""
        lines.append(f"trans {transition.name} {'ctrl' if transition.controllable else 'unctrl'}{event}")
    for t, transition in enumerate(net.transitions):
        for p, place in enumerate(net.places):
            if net.pre[p, t]:
                lines.append(f"arc {place.name} -> {transition.name}{_weight(net.pre[p, t])}")
        for p, place in enumerate(net.places):
            if net.post[t, p]:
                lines.append(f"arc {transition.name} -> {place.name}{_weight(net.post[t, p])}")
    if spec is not None:
        for clause in spec.clauses:
            atoms = " & ".join(f"m({net.places[a.place].name}){a.op}{a.value}" for a in clause)
            lines.append(f"forbid clause: {atoms}")
        for marking in spec.explicit:
            lines.append(f"forbid marking: {powered(net, marking, ' ')}")
        if spec.forbid_deadlocks:
            lines.append("forbid deadlock")
    return "\n".join(lines) + "\n"


def _weight(weight: int) -> str:
    return "" if weight == 1 else f" weight={weight}"


def powered(net: PetriNet, marking: Marking, separator: str = "") -> str:
    """Powered-support notation of a marking: P1P3^2P6, or with a separator P1 P3^2 P6"""
    parts = [net.places[p].name + (f"^{k}" if k > 1 else "") for p, k in enumerate(marking.counts) if k > 0]
    return separator.join(parts) if parts else "{}"


def render_term(net: PetriNet, term: SubMarking) -> str:
    """(m(P1)>=1 & m(P4)>=2)"""
    return "(" + " & ".join(f"m({net.places[p].name})>={k}" for p, k in term.thresholds) + ")"


def render_exact(net: PetriNet, marking: Marking) -> str:
    """[P1=1,P2=0,...] with every place pinned"""
    return "[" + ",".join(f"{place.name}={count}" for place, count in zip(net.places, marking.counts)) + "]"


def render_condition(net: PetriNet, condition: TransitionCondition) -> str:
    """Serializes a condition, e.g. disable(t1) := (m(P4)>=2)"""
    parts = [render_term(net, term) for term in condition.terms]
    parts += [render_exact(net, marking) for marking in condition.exact]
    body = " | ".join(parts) if parts else "false"
    return f"{condition.form.value}({condition.name}) := {body}"


def parse_condition(net: PetriNet, text: str) -> TransitionCondition:
    """Parses a serialized condition against a net"""
    cursor = _Cursor(1, text)
    forms = {form.value: form for form in ConditionForm}
    form = forms[cursor.expect(*forms)]
    cursor.expect("(")
    name = cursor.name()
    cursor.expect(")")
    cursor.expect(":=")
    try:
        transition = net.transition_index(name)
    except KeyError as ex:
        raise SemanticError(1, f"unknown transition {name}") from ex
    terms: List[SubMarking] = []
    exact: List[Marking] = []
    if cursor.accept("false"):
        cursor.finish()
        return TransitionCondition(transition, name, form)
    while True:
        if cursor.peek() == "[":
            exact.append(_exact(net, cursor))
        else:
            terms.append(_term(net, cursor))
        if not cursor.accept("|"):
            break
    cursor.finish()
    try:
        return TransitionCondition(transition, name, form, tuple(terms), tuple(exact))
    except ValueError as ex:
        raise SemanticError(1, str(ex)) from ex


def _resolve_place(net: PetriNet, name: str) -> int:
    try:
        return net.place_index(name)
    except KeyError as ex:
        raise SemanticError(1, f"unknown place {name}") from ex


def _term(net: PetriNet, cursor: _Cursor) -> SubMarking:
    cursor.expect("(")
    thresholds: Dict[int, int] = {}
    while True:
        cursor.expect("m")
        cursor.expect("(")
        place = _resolve_place(net, cursor.name())
        cursor.expect(")")
        cursor.expect(">=")
        value = cursor.integer()
        if value < 1:
            raise SemanticError(1, "condition thresholds must be at least 1")
        thresholds[place] = max(value, thresholds.get(place, 0))
        if not cursor.accept("&"):
            break
    cursor.expect(")")
    return SubMarking.of(thresholds)


def _exact(net: PetriNet, cursor: _Cursor) -> Marking:
    cursor.expect("[")
    counts: Dict[int, int] = {}
    while True:
        place = _resolve_place(net, cursor.name())
        cursor.expect("=")
        value = cursor.integer()
        if value < 0:
            raise SemanticError(1, "exact token counts must be non-negative")
        counts[place] = value
        if not cursor.accept(","):
            break
    cursor.expect("]")
    if len(counts) != len(net.places):
        raise SemanticError(1, "an exact marking must pin every place")
    return Marking(tuple(counts[p] for p in range(len(net.places))))
