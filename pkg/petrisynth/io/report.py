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
JSON report of a synthesis run. Keys are sorted and every list is in canonical
order so that identical inputs give byte-identical reports.
"""

import json
from typing import Iterable, List, Optional
from petrisynth.net import Marking, PetriNet, ReachGraph, SubMarking
from petrisynth.net.constants import TOOL_NAME
from petrisynth.control import (CandidateSets, Classification, SynthesisResult, TransitionSynthesis,
                                VerificationReport)
from .netfile import render_condition

PASS = "PASS"
FAIL = "FAIL"


def _markings(net: PetriNet, markings: Iterable[Marking]) -> List[str]:
    return [net.format_marking(m) for m in sorted(markings)]


def _sub_markings(net: PetriNet, sub_markings: Iterable[SubMarking]) -> List[str]:
    return [net.format_sub_marking(s) for s in sorted(sub_markings)]


def _candidates(net: PetriNet, prefix: str, sets: Optional[CandidateSets]) -> dict:
    if sets is None:
        return {}
    return {f"{prefix}{i}": _sub_markings(net, members)
            for i, members in enumerate((sets.c1, sets.c2, sets.c3, sets.c4), start=1)}


def _transition(net: PetriNet, entry: TransitionSynthesis) -> dict:
    return {
        "critical": _markings(net, entry.criticals),
        "sound": _markings(net, entry.sounds),
        "raw": render_condition(net, entry.raw),
        "disable": render_condition(net, entry.primal) if entry.primal else None,
        "enable": render_condition(net, entry.dual) if entry.dual else None,
        "chosen": render_condition(net, entry.chosen),
        "form": entry.chosen.form.value,
        "candidates": {**_candidates(net, "C", entry.primal_sets), **_candidates(net, "S", entry.dual_sets)},
        "statistics": entry.statistics(),
    }


def build_report(net: PetriNet,
                 graph: ReachGraph,
                 cls: Classification = None,
                 result: SynthesisResult = None,
                 verification: VerificationReport = None) -> dict:
    """Assembles the report sections available for a run"""
    report = {
        "tool": TOOL_NAME,
        "net": {
            "name": net.name,
            "places": list(net.place_names()),
            "transitions": [{"name": t.name, "controllable": t.controllable, "event": t.event}
                            for t in net.transitions],
            "initial": net.format_marking(net.initial_marking),
        },
        "graph": {
            "states": len(graph.nodes),
            "edges": len(graph.edges),
            "deadlocks": _markings(net, (graph.nodes[n] for n in graph.deadlocks)),
        },
    }
    if cls is not None:
        report["classification"] = {
            "admissible": _markings(net, (graph.nodes[n] for n in cls.admissible)),
            "forbidden": _markings(net, (graph.nodes[n] for n in cls.forbidden)),
            "border": _markings(net, (graph.nodes[n] for n in cls.border)),
        }
    if result is not None:
        report["synthesis"] = {
            "method": result.method,
            "unconstrained": list(result.unconstrained),
            "transitions": {entry.name: _transition(net, entry) for entry in result.transitions},
        }
    if verification is not None:
        report["verification"] = {
            "verdict": PASS if verification.passed else FAIL,
            "divergences": [{"state": net.format_marking(d.marking), "transition": d.transition,
                             "controller": "allow" if d.controller_allows else "block",
                             "oracle": "allow" if d.oracle_allows else "block"}
                            for d in verification.divergences],
            "missing": _markings(net, verification.missing),
            "extra": _markings(net, verification.extra),
            "unreachable_admissible": _markings(net, verification.unreachable_admissible),
            "induced_blocking": _markings(net, verification.induced_blocking),
        }
    return report


def dumps_report(report: dict) -> str:
    """Canonical JSON text of a report"""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
