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
petrisynth constants
"""

from petrisynth import __version__

TOOL_NAME="petrisynth/" + __version__

DEFAULT_MAX_STATES=1_000_000
DEFAULT_ENUMERATION_CAP=2**20
# Exact minimum cover is only attempted up to this many critical states
EXACT_COVER_MAX_COLUMNS=24

METHOD_DISABLE="disable"
METHOD_ENABLE="enable"
METHOD_BOTH="both"
METHODS=(METHOD_DISABLE, METHOD_ENABLE, METHOD_BOTH)

ENV_PETRISYNTH_MAX_STATES="PETRISYNTH_MAX_STATES"
ENV_PETRISYNTH_MAX_TOKENS="PETRISYNTH_MAX_TOKENS"
ENV_PETRISYNTH_ENUMERATION_CAP="PETRISYNTH_ENUMERATION_CAP"
ENV_PETRISYNTH_METHOD="PETRISYNTH_METHOD"
ENV_PETRISYNTH_LOG_LEVEL="PETRISYNTH_LOG_LEVEL"
