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
Exploration limits and synthesis options, resolved from arguments and environment
"""

import os
from argparse import ArgumentParser, Namespace
import dataclasses
from typing import Any, Optional, OrderedDict
from .constants import (DEFAULT_MAX_STATES, DEFAULT_ENUMERATION_CAP, METHODS, METHOD_BOTH,
                        ENV_PETRISYNTH_MAX_STATES, ENV_PETRISYNTH_MAX_TOKENS,
                        ENV_PETRISYNTH_ENUMERATION_CAP, ENV_PETRISYNTH_METHOD)


@dataclasses.dataclass(frozen=True)
class ExplorationLimits:
    """
    Guards for the reachability exploration

    Keyword arguments:
    max_states -- Maximum number of distinct markings before the exploration aborts
    max_tokens_per_place -- Optional maximum token count of any place in any reachable marking
    """
    max_states: int = DEFAULT_MAX_STATES
    max_tokens_per_place: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_states < 1:
            raise ValueError(f"ERROR: max_states must be at least 1, got {self.max_states}")
        if self.max_tokens_per_place is not None and self.max_tokens_per_place < 0:
            raise ValueError(f"ERROR: max_tokens_per_place must be non-negative, got {self.max_tokens_per_place}")


@dataclasses.dataclass(frozen=True)
class SynthesisOptions:
    """
    Synthesis configuration

    Keyword arguments:
    method -- disable, enable or both (compute both forms and keep the simpler)
    exact_cover -- Use the exhaustive minimum cover instead of the essential-then-greedy selection
    enumeration_cap -- Maximum number of over-states enumerated for a single critical state
    """
    method: str = METHOD_BOTH
    exact_cover: bool = False
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"ERROR: method must be one of {', '.join(METHODS)}, got {self.method}")
        if self.enumeration_cap < 1:
            raise ValueError(f"ERROR: enumeration_cap must be at least 1, got {self.enumeration_cap}")


def add_limit_arguments(parser: ArgumentParser) -> None:
    """Augments an ArgumentParser with arguments for exploration limits and synthesis options."""
    parser.add_argument("--max-states", help="Maximum number of reachable markings", type=int)
    parser.add_argument("--max-tokens", help="Maximum token count of a place", type=int)
    parser.add_argument("--enumeration-cap", help="Maximum number of over-states per critical state", type=int)
    parser.add_argument("--method", help="Condition form to synthesize", choices=METHODS)
    parser.add_argument("--exact-cover", help="Select a minimum cover exhaustively", action="store_true")


def _resolve(arg_value: Any, var_name: str, env_values: OrderedDict) -> Optional[str]:
    if arg_value is not None:
        return arg_value
    return env_values.get(var_name) or os.getenv(var_name)


def _as_int(value: Any, var_name: str) -> Optional[int]:
    if value is None or isinstance(value, int):
        return value
    try:
        return int(value)
    except ValueError as ex:
        raise ValueError(f"ERROR: {var_name} must be an integer, got {value!r}") from ex


def make_limits(args: Namespace = None,
                env_values: OrderedDict = None) -> ExplorationLimits:
    """Returns ExplorationLimits based on parsed arguments or environment variable values.

    Keyword arguments:
    args -- Parsed arguments from ArgumentParser
    env_values -- Ordered dictionary of variable values from dotenv_values"""
    args = args or NoArgs()
    env_values = env_values or OrderedDict()

    max_states = _as_int(_resolve(args.max_states, ENV_PETRISYNTH_MAX_STATES, env_values),
                         ENV_PETRISYNTH_MAX_STATES)
    max_tokens = _as_int(_resolve(args.max_tokens, ENV_PETRISYNTH_MAX_TOKENS, env_values),
                         ENV_PETRISYNTH_MAX_TOKENS)
    return ExplorationLimits(
        max_states=DEFAULT_MAX_STATES if max_states is None else max_states,
        max_tokens_per_place=max_tokens)


def make_options(args: Namespace = None,
                 env_values: OrderedDict = None) -> SynthesisOptions:
    """Returns SynthesisOptions based on parsed arguments or environment variable values.

    Keyword arguments:
    args -- Parsed arguments from ArgumentParser
    env_values -- Ordered dictionary of variable values from dotenv_values"""
    args = args or NoArgs()
    env_values = env_values or OrderedDict()

    cap = _as_int(_resolve(args.enumeration_cap, ENV_PETRISYNTH_ENUMERATION_CAP, env_values),
                  ENV_PETRISYNTH_ENUMERATION_CAP)
    method = _resolve(args.method, ENV_PETRISYNTH_METHOD, env_values)
    return SynthesisOptions(
        method=method or METHOD_BOTH,
        exact_cover=bool(args.exact_cover),
        enumeration_cap=DEFAULT_ENUMERATION_CAP if cap is None else cap)


class NoArgs(Namespace):
    """Empty namespace object with all None values"""
    def __init__(self, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        self.max_states = None
        self.max_tokens = None
        self.enumeration_cap = None
        self.method = None
        self.exact_cover = False
