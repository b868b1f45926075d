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
Net files, conditions, reports and DOT export
"""

from .netfile import (parse_condition, parse_net, powered, render_condition, render_exact, render_term,
                      serialize_net)
from .report import FAIL, PASS, build_report, dumps_report
from .dot import graph_to_dot, net_to_dot
