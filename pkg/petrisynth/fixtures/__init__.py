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
Shipped example nets
"""

from pathlib import Path

FIXTURE_DIR = Path(__file__).parent
FIXTURES = ("two-machines-cap1", "two-machines-cap2")


def fixture_path(name: str) -> Path:
    """Returns the path of a shipped net file"""
    if name not in FIXTURES:
        raise KeyError(name)
    return FIXTURE_DIR / f"{name}.pn"


def load_fixture(name: str) -> str:
    """Returns the text of a shipped net file"""
    return fixture_path(name).read_text(encoding="utf-8")
