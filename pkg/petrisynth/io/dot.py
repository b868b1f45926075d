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
Graphviz DOT export of reachability graphs and of nets annotated with their conditions.
"""

from typing import List
from petrisynth.net import PetriNet, ReachGraph
from petrisynth.control import ADMISSIBLE, BORDER, FORBIDDEN, Classification, Controller
from .netfile import render_condition

NODE_STYLES = {
    ADMISSIBLE: 'shape=ellipse',
    FORBIDDEN: 'shape=ellipse,style=filled,fillcolor="#f4b6b6"',
    BORDER: 'shape=ellipse,style="filled,bold",fillcolor="#e06666",penwidth=2',
}


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def graph_to_dot(net: PetriNet, graph: ReachGraph, cls: Classification = None) -> str:
    """Reachability graph; with a classification, admissible, forbidden and border
    nodes get distinct styles"""
    lines: List[str] = [f"digraph {_quote(net.name + ' reachability')} {{", "  rankdir=LR;"]
    for node, marking in enumerate(graph.nodes):
        style = NODE_STYLES[cls.label(node) if cls is not None else ADMISSIBLE]
        if node == graph.initial:
            style += ",peripheries=2"
        lines.append(f"  n{node} [label={_quote(net.format_marking(marking))},{style}];")
    for source, transition, target in graph.edges:
        lines.append(f"  n{source} -> n{target} [label={_quote(net.transitions[transition].name)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def net_to_dot(net: PetriNet, controller: Controller = None) -> str:
    """Net structure; controlled transitions carry their condition as an annotation"""
    lines: List[str] = [f"digraph {_quote(net.name)} {{", "  rankdir=LR;"]
    for p, place in enumerate(net.places):
        tokens = f"\\n{place.initial}" if place.initial else ""
        lines.append(f"  p{p} [shape=circle,label=\"{place.name}{tokens}\"];")
    for t, transition in enumerate(net.transitions):
        label = transition.name + (f" ({transition.event})" if transition.event else "")
        condition = controller.condition(t) if controller is not None else None
        if condition is not None:
            label += "\\n" + render_condition(net, condition)
        fill = "white" if transition.controllable else "black"
        font = "black" if transition.controllable else "white"
        lines.append(f"  t{t} [shape=box,style=filled,fillcolor={fill},fontcolor={font},"
                     f"label={_quote(label)}];")
    for t in range(len(net.transitions)):
        for p in range(len(net.places)):
            if net.pre[p, t]:
                lines.append(f"  p{p} -> t{t}{_arc_label(net.pre[p, t])};")
            if net.post[t, p]:
                lines.append(f"  t{t} -> p{p}{_arc_label(net.post[t, p])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _arc_label(weight: int) -> str:
    return "" if weight == 1 else f" [label=\"{weight}\"]"
