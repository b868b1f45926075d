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
Petri net model, firing semantics and reachability
"""

from .limits import ExplorationLimits, NoArgs, SynthesisOptions, add_limit_arguments, make_limits, make_options
from .model import (Marking, PetriNet, Place, SubMarking, Transition, covers, enabled, fire,
                    is_over_state, sub_marking_count, sub_markings, support)
from .reachability import ReachGraph, build_reach_graph, deadlock_nodes
