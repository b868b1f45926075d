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

import json
from petrisynth.control import Controller, check_maximal_permissive, synthesize_all
from petrisynth.fixtures import load_fixture
from petrisynth.io import FAIL, PASS, build_report, dumps_report, graph_to_dot, net_to_dot, parse_condition
from petrisynth.net.constants import TOOL_NAME
from conftest import load_case


def _report(case) -> str:
    result = synthesize_all(case.net, case.graph, case.cls)
    verification = check_maximal_permissive(case.net, Controller.from_result(result), case.graph, case.cls)
    return dumps_report(build_report(case.net, case.graph, case.cls, result, verification))


class TestReport:
    def test_byte_stable(self, cap2):
        assert _report(cap2) == _report(load_case(load_fixture("two-machines-cap2")))

    def test_cap1_sections(self, cap1):
        report = json.loads(_report(cap1))
        assert report["tool"] == TOOL_NAME
        assert report["graph"] == {"states": 8, "edges": 12, "deadlocks": []}
        assert set(report["classification"]["border"]) == {"P2P4P5", "P2P4P6"}
        t1 = report["synthesis"]["transitions"]["t1"]
        assert t1["chosen"] == "disable(t1) := (m(P4)>=1)"
        assert t1["enable"] == "enable(t1) := (m(P3)>=1)"
        assert t1["form"] == "disable"
        assert t1["candidates"]["C3"] == ["P4"]
        assert t1["candidates"]["S3"] == ["P3"]
        assert report["synthesis"]["unconstrained"] == ["t3"]
        assert report["verification"]["verdict"] == PASS

    def test_cap2_condition(self, cap2):
        report = json.loads(_report(cap2))
        assert report["synthesis"]["transitions"]["t1"]["disable"] == "disable(t1) := (m(P4)>=2)"
        assert report["synthesis"]["transitions"]["t1"]["statistics"]["C3"] == 1

    def test_failed_verification(self, cap2):
        controller = Controller((parse_condition(cap2.net, "disable(t1) := (m(P4)>=1)"),))
        verification = check_maximal_permissive(cap2.net, controller, cap2.graph, cap2.cls)
        report = build_report(cap2.net, cap2.graph, cap2.cls, verification=verification)
        assert "synthesis" not in report
        assert report["verification"]["verdict"] == FAIL
        assert {d["state"] for d in report["verification"]["divergences"]} == {"P1P3P4P5", "P1P3P4P6"}

    def test_graph_only(self, cap1):
        report = build_report(cap1.net, cap1.graph)
        assert set(report) == {"tool", "net", "graph"}
        assert report["net"]["initial"] == "P1P3P5"


class TestDot:
    def test_graph_styles(self, cap1):
        dot = graph_to_dot(cap1.net, cap1.graph, cap1.cls)
        assert dot.startswith('digraph "two-machines-cap1 reachability" {')
        border = cap1.graph.index_of(cap1.marking("P2P4P5"))
        initial = cap1.graph.initial
        assert f'n{border} [label="P2P4P5",shape=ellipse,style="filled,bold"' in dot
        assert f'n{initial} [label="P1P3P5",shape=ellipse,peripheries=2];' in dot
        assert '[label="t1"];' in dot
        assert dot.count(" -> ") == 12

    def test_net_annotations(self, cap2):
        controller = Controller.from_result(synthesize_all(cap2.net, cap2.graph, cap2.cls))
        dot = net_to_dot(cap2.net, controller)
        assert "disable(t1) := (m(P4)>=2)" in dot
        assert 'p2 [shape=circle,label="P3\\n2"];' in dot
        assert 'fillcolor=black' in dot
