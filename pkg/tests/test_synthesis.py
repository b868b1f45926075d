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
Candidate pipeline, disable and enable synthesis and the form choice.
"""

import pytest
from petrisynth.control import (ConditionForm, TransitionCondition, candidate_pipeline, forbidden_closure,
                                minimal_elements, raw_condition, synthesize_all, synthesize_disable, synthesize_enable,
                                synthesize_transition)
from petrisynth.errors import EnumerationTooLarge
from petrisynth.io import parse_net, render_condition
from petrisynth.net import SynthesisOptions, build_reach_graph, covers, is_over_state

# Critical and sound sets of t1 on the capacity-one net as they are usually listed,
# with only one of the two sound states
LISTED_CRITICALS = ("P1P4P5", "P1P4P6")
LISTED_SOUNDS = ("P1P3P5",)


class TestRawCondition:
    def test_one_term_per_critical_state(self, cap1):
        t1 = cap1.transition("t1")
        condition = raw_condition(t1, "t1", cap1.markings(*LISTED_CRITICALS))
        assert render_condition(cap1.net, condition) == \
            "disable(t1) := (m(P1)>=1 & m(P4)>=1 & m(P5)>=1) | (m(P1)>=1 & m(P4)>=1 & m(P6)>=1)"

    def test_keeps_thresholds(self, cap2):
        condition = raw_condition(0, "t1", cap2.markings("P1P4^2P5", "P1P4^2P6"))
        assert all(dict(term.thresholds)[cap2.net.place_index("P4")] == 2 for term in condition.terms)

    def test_single_critical_state(self, cap1):
        condition = raw_condition(0, "t1", cap1.markings("P1P4P5"))
        assert condition.terms == (cap1.sub("P1P4P5"),)

    def test_needs_a_critical_state(self):
        with pytest.raises(ValueError):
            raw_condition(0, "t1", [])


class TestCandidatePipeline:
    def test_listed_sets(self, cap1):
        sets = candidate_pipeline(cap1.markings(*LISTED_CRITICALS), cap1.markings(*LISTED_SOUNDS))
        assert len(sets.c1) == 11
        assert cap1.sub_names(sets.c2) == {"P4", "P1P4", "P4P5", "P1P4P5", "P6", "P1P6", "P4P6", "P1P4P6"}
        assert cap1.sub_names(sets.c3) == {"P4", "P6"}

    def test_listed_sets_dual(self, cap1):
        sets = candidate_pipeline(cap1.markings(*LISTED_SOUNDS), cap1.markings(*LISTED_CRITICALS))
        assert len(sets.c1) == 7
        assert cap1.sub_names(sets.c2) == {"P3", "P1P3", "P3P5", "P1P3P5"}
        assert cap1.sub_names(sets.c3) == {"P3"}

    def test_derived_sets(self, cap1):
        sets = candidate_pipeline(cap1.markings(*LISTED_CRITICALS), cap1.markings("P1P3P5", "P1P3P6"))
        assert cap1.sub_names(sets.c2) == {"P4", "P1P4", "P4P5", "P1P4P5", "P4P6", "P1P4P6"}
        assert cap1.sub_names(sets.c3) == {"P4"}

    def test_non_safe_sets(self, cap2):
        sets = candidate_pipeline(cap2.markings("P1P4^2P5", "P1P4^2P6"),
                                  cap2.markings("P1P3^2P5", "P1P3P4P5", "P1P3^2P6", "P1P3P4P6"))
        assert cap2.sub_names(sets.c2) == {"P4^2", "P1P4^2", "P4^2P5", "P1P4^2P5", "P4^2P6", "P1P4^2P6"}
        assert cap2.sub_names(sets.c3) == {"P4^2"}

    def test_dominated_critical_state(self, fallback):
        sets = candidate_pipeline(fallback.markings("A"), fallback.markings("AB"))
        assert sets.c2 == frozenset()
        assert sets.c3 == frozenset()

    def test_enumeration_cap(self, cap2):
        with pytest.raises(EnumerationTooLarge):
            candidate_pipeline(cap2.markings("P1P4^2P5"), (), cap=5)

    def test_c3_is_an_antichain(self, cap2):
        sets = candidate_pipeline(cap2.markings("P1P4^2P5", "P1P4^2P6"), cap2.markings("P1P3P4P5"))
        for a in sets.c3:
            for b in sets.c3:
                assert a == b or not is_over_state(a, b)
        for member in sets.c2:
            assert any(is_over_state(minimal, member) for minimal in sets.c3)

    def test_minimal_elements(self, cap2):
        assert minimal_elements([cap2.sub("P4^2"), cap2.sub("P1P4^2"), cap2.sub("P4")]) == \
            frozenset({cap2.sub("P4")})


class TestDisable:
    def test_listed_sets_cover(self, cap1):
        condition, sets = synthesize_disable(0, "t1", cap1.markings(*LISTED_CRITICALS),
                                             cap1.markings(*LISTED_SOUNDS))
        assert cap1.sub_names(sets.c4) == {"P4"}
        assert render_condition(cap1.net, condition) == "disable(t1) := (m(P4)>=1)"

    def test_cap2(self, cap2):
        condition, sets = synthesize_disable(0, "t1", cap2.markings("P1P4^2P5", "P1P4^2P6"),
                                             cap2.markings("P1P3^2P5", "P1P3P4P5", "P1P3^2P6", "P1P3P4P6"))
        assert sets.c3 == sets.c4
        assert render_condition(cap2.net, condition) == "disable(t1) := (m(P4)>=2)"

    def test_exact_fallback(self, fallback):
        condition, sets = synthesize_disable(fallback.transition("t1"), "t1", fallback.markings("A"),
                                             fallback.markings("AB"))
        assert condition.form is ConditionForm.DISABLE_EXACT
        assert not sets.c4
        assert render_condition(fallback.net, condition) == "disable_exact(t1) := [S=0,A=1,B=0,X=0]"
        assert not condition.allows(fallback.marking("A"))
        assert condition.allows(fallback.marking("AB"))

    def test_exact_cover_option(self, cap1):
        condition, _ = synthesize_disable(0, "t1", cap1.markings(*LISTED_CRITICALS),
                                          cap1.markings(*LISTED_SOUNDS), SynthesisOptions(exact_cover=True))
        assert condition.terms == (cap1.sub("P4"),)


class TestEnable:
    def test_listed_sets(self, cap1):
        condition, sets = synthesize_enable(0, "t1", cap1.markings(*LISTED_CRITICALS),
                                            cap1.markings(*LISTED_SOUNDS))
        assert cap1.sub_names(sets.c3) == cap1.sub_names(sets.c4) == {"P3"}
        assert render_condition(cap1.net, condition) == "enable(t1) := (m(P3)>=1)"

    def test_cap2(self, cap2):
        condition, _ = synthesize_enable(0, "t1", cap2.markings("P1P4^2P5", "P1P4^2P6"),
                                         cap2.markings("P1P3^2P5", "P1P3P4P5", "P1P3^2P6", "P1P3P4P6"))
        assert render_condition(cap2.net, condition) == "enable(t1) := (m(P3)>=1)"

    def test_no_sound_state(self, cap1):
        condition, sets = synthesize_enable(0, "t1", cap1.markings(*LISTED_CRITICALS), ())
        assert sets is None
        assert condition.form is ConditionForm.ENABLE
        assert condition.complexity() == (0, 0)
        assert not condition.allows(cap1.marking("P1P4P5"))
        assert render_condition(cap1.net, condition) == "enable(t1) := false"

    def test_exact_fallback(self, fallback):
        condition, _ = synthesize_enable(0, "t1", fallback.markings("AB"), fallback.markings("A"))
        assert condition.form is ConditionForm.ENABLE_EXACT
        assert condition.exact == (fallback.marking("A"),)


class TestSynthesizeAll:
    def test_cap1(self, cap1):
        result = synthesize_all(cap1.net, cap1.graph, cap1.cls)
        assert result.unconstrained == ("t3",)
        entry = result.get("t1")
        assert render_condition(cap1.net, entry.chosen) == "disable(t1) := (m(P4)>=1)"
        assert render_condition(cap1.net, entry.dual) == "enable(t1) := (m(P3)>=1)"
        assert entry.primal.complexity() == entry.dual.complexity()
        assert entry.statistics()["C2"] == 6
        assert entry.statistics()["S2"] == 6

    def test_cap2(self, cap2):
        result = synthesize_all(cap2.net, cap2.graph, cap2.cls)
        assert render_condition(cap2.net, result.get("t1").chosen) == "disable(t1) := (m(P4)>=2)"
        assert result.get("t3") is None
        assert list(result.conditions()) == [cap2.transition("t1")]

    def test_enable_method(self, cap2):
        result = synthesize_all(cap2.net, cap2.graph, cap2.cls, SynthesisOptions(method="enable"))
        entry = result.get("t1")
        assert entry.primal is None and entry.primal_sets is None
        assert render_condition(cap2.net, entry.chosen) == "enable(t1) := (m(P3)>=1)"

    def test_fallback_prefers_simpler_enable(self, fallback):
        result = synthesize_all(fallback.net, fallback.graph, fallback.cls)
        entry = result.get("t1")
        assert entry.primal.form is ConditionForm.DISABLE_EXACT
        assert render_condition(fallback.net, entry.chosen) == "enable(t1) := (m(B)>=1)"
        assert result.unconstrained == ("ta", "tb")

    def test_no_controllable_transitions(self):
        net, spec = parse_net("place P init=1\nplace Q\ntrans u unctrl\narc P -> u\narc u -> Q\n"
                              "forbid marking: P Q\n")
        graph = build_reach_graph(net)
        result = synthesize_all(net, graph, forbidden_closure(graph, net, spec))
        assert result.transitions == ()
        assert result.unconstrained == ()

    def test_unconstrained_transition(self, cap1):
        assert synthesize_transition(cap1.net, cap1.graph, cap1.cls, cap1.transition("t3")) is None

    @pytest.mark.parametrize("method", ["disable", "enable", "both"])
    def test_blocks_critical_allows_sound(self, cap2, method):
        result = synthesize_all(cap2.net, cap2.graph, cap2.cls, SynthesisOptions(method=method))
        for entry in result.transitions:
            assert not any(entry.chosen.allows(m) for m in entry.criticals)
            assert all(entry.chosen.allows(m) for m in entry.sounds)

    def test_primal_and_dual_agree_on_admissible_states(self, cap2):
        entry = synthesize_all(cap2.net, cap2.graph, cap2.cls).get("t1")
        for node in cap2.cls.admissible:
            marking = cap2.graph.nodes[node]
            assert entry.primal.allows(marking) == entry.dual.allows(marking)


class TestTransitionCondition:
    def test_exact_needs_exact_form(self, cap1):
        with pytest.raises(ValueError):
            TransitionCondition(0, "t1", ConditionForm.DISABLE, exact=(cap1.marking("P1"),))

    def test_canonical_terms(self, cap1):
        a = TransitionCondition(0, "t1", ConditionForm.DISABLE, (cap1.sub("P6"), cap1.sub("P4")))
        b = TransitionCondition(0, "t1", ConditionForm.DISABLE, (cap1.sub("P4"), cap1.sub("P6"), cap1.sub("P4")))
        assert a == b
        assert a.literal_count() == 2

    def test_matches(self, cap1):
        condition = TransitionCondition(0, "t1", ConditionForm.DISABLE, (cap1.sub("P4"),))
        assert condition.matches(cap1.marking("P1P4P5"))
        assert covers(cap1.sub("P4"), cap1.marking("P1P4P5"))
        assert condition.allows(cap1.marking("P1P3P5"))
