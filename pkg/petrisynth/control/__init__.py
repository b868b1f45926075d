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
Forbidden-state classification, condition synthesis and closed-loop verification
"""

from .classification import (ADMISSIBLE, BORDER, FORBIDDEN, Atom, Classification, ForbiddenSpec,
                             base_forbidden, critical_set, forbidden_closure, sound_set)
from .cover import select_cover
from .synthesis import (CandidateSets, ConditionForm, SynthesisResult, TransitionCondition,
                        TransitionSynthesis, candidate_pipeline, minimal_elements, raw_condition,
                        synthesize_all, synthesize_disable, synthesize_enable, synthesize_transition)
from .verification import (Controller, Divergence, VerificationReport, check_maximal_permissive,
                           controlled_enabled, controlled_reach, oracle_supervisor)
