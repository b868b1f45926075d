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
Errors raised by the petrisynth library.
"""

from typing import Sequence, Tuple


class PetriSynthError(Exception):
    """Base class of all petrisynth errors"""
    def __init__(self, message: str) -> None:
        super().__init__(message)
        self._message = message

    def message(self) -> str:
        """Returns the error message"""
        return self._message


class NetDefinitionError(PetriSynthError):
    """Raised when a Petri net definition is not well-formed"""


class UnknownPlace(PetriSynthError):
    """Raised when a forbidden-state specification names a place the net does not have"""
    def __init__(self, place: str) -> None:
        super().__init__(f"Unknown place: {place}")
        self._place = place

    def place(self) -> str:
        """Returns the offending place name"""
        return self._place


class NotEnabled(PetriSynthError):
    """Raised when firing a transition that is not enabled in the given marking"""
    def __init__(self, transition: str, marking: Tuple[int, ...]) -> None:
        super().__init__(f"Transition {transition} is not enabled in marking {list(marking)}")
        self._transition = transition
        self._marking = marking

    def transition(self) -> str:
        """Returns the name of the transition"""
        return self._transition

    def marking(self) -> Tuple[int, ...]:
        """Returns the token counts of the marking"""
        return self._marking


class NotControllable(PetriSynthError):
    """Raised when a controllable-only operation receives an uncontrollable transition"""
    def __init__(self, transition: str) -> None:
        super().__init__(f"Transition {transition} is not controllable")
        self._transition = transition

    def transition(self) -> str:
        """Returns the name of the transition"""
        return self._transition


class EnumerationTooLarge(PetriSynthError):
    """Raised when the over-state enumeration of a sub-marking would exceed the configured cap"""
    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"Over-state enumeration of {size} elements exceeds the cap of {cap}")
        self._size = size
        self._cap = cap

    def size(self) -> int:
        """Returns the number of elements the enumeration would have produced"""
        return self._size

    def cap(self) -> int:
        """Returns the configured cap"""
        return self._cap


class ExplorationError(PetriSynthError):
    """Base class of reachability exploration failures"""


class StateLimitExceeded(ExplorationError):
    """Raised when the reachability graph grows beyond the configured number of states"""
    def __init__(self, max_states: int) -> None:
        super().__init__(f"Reachability exploration exceeded {max_states} states")
        self._max_states = max_states

    def max_states(self) -> int:
        """Returns the state limit that was hit"""
        return self._max_states


class TokenLimitExceeded(ExplorationError):
    """Raised when a reachable marking holds more tokens in a place than allowed"""
    def __init__(self, place: str, count: int, limit: int) -> None:
        super().__init__(f"Place {place} reached {count} tokens, above the limit of {limit}")
        self._place = place
        self._count = count
        self._limit = limit

    def place(self) -> str:
        """Returns the name of the place"""
        return self._place

    def count(self) -> int:
        """Returns the token count that was reached"""
        return self._count


class Unbounded(ExplorationError):
    """Raised when a generated marking strictly dominates one of its ancestors"""
    def __init__(self, ancestor: str, successor: str) -> None:
        super().__init__(f"""The net is unbounded: marking {successor} strictly dominates
        its ancestor {ancestor} on the same firing path""")
        self._ancestor = ancestor
        self._successor = successor

    def ancestor(self) -> str:
        """Returns the dominated ancestor marking, in powered-support notation"""
        return self._ancestor

    def successor(self) -> str:
        """Returns the dominating marking, in powered-support notation"""
        return self._successor


class ClassificationError(PetriSynthError):
    """Base class of forbidden-state classification failures"""


class InitialForbidden(ClassificationError):
    """Raised when the initial marking is forbidden; no supervisor exists"""
    def __init__(self, marking: str) -> None:
        super().__init__(f"The initial marking {marking} is forbidden; no supervisor exists")
        self._marking = marking

    def marking(self) -> str:
        """Returns the initial marking, in powered-support notation"""
        return self._marking


class UncontrollableBreach(ClassificationError):
    """Raised when an uncontrollable transition leads from an admissible to a forbidden state"""
    def __init__(self, source: str, transition: str, target: str) -> None:
        super().__init__(f"Uncontrollable transition {transition} leads from admissible {source} "
                         f"to forbidden {target}")
        self._edge = (source, transition, target)

    def edge(self) -> Tuple[str, str, str]:
        """Returns the offending (source, transition, target) edge"""
        return self._edge


class UncoverableColumn(PetriSynthError):
    """Raised when some column of a covering table is covered by no row"""
    def __init__(self, columns: Sequence[int]) -> None:
        super().__init__(f"Columns {list(columns)} are covered by no candidate")
        self._columns = tuple(columns)

    def columns(self) -> Tuple[int, ...]:
        """Returns the indices of the uncovered columns"""
        return self._columns


class NetFileError(PetriSynthError):
    """Base class of net file errors"""


class ParseError(NetFileError):
    """Raised when a net file or condition does not follow the grammar"""
    def __init__(self, line: int, column: int, message: str) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self._line = line
        self._column = column

    def line(self) -> int:
        """Returns the 1-based line number"""
        return self._line

    def column(self) -> int:
        """Returns the 1-based column number"""
        return self._column


class SemanticError(NetFileError):
    """Raised when a net file is grammatical but describes an invalid net"""
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self._line = line

    def line(self) -> int:
        """Returns the 1-based line number"""
        return self._line


class MissingSpecification(NetFileError):
    """Raised when a command needs a forbidden-state specification and the net file has none"""
    def __init__(self) -> None:
        super().__init__("the net file has no forbid statement")


class SynthesisError(PetriSynthError):
    """Raised when a synthesized condition fails its blocking or permissiveness self-check"""
    def __init__(self, transition: str, message: str) -> None:
        super().__init__(f"Synthesis of {transition} is inconsistent: {message}")
        self._transition = transition

    def transition(self) -> str:
        """Returns the name of the transition"""
        return self._transition
