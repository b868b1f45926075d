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
Covering-table selection of over-states: essential rows first, then the row
covering the most uncovered columns, then removal of redundant rows.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple
from petrisynth.errors import UncoverableColumn
from petrisynth.net import Marking, SubMarking, covers
from petrisynth.net.constants import EXACT_COVER_MAX_COLUMNS

logger = logging.getLogger(__name__)


def row_rank(row: SubMarking) -> Tuple[int, int, Tuple[Tuple[int, int], ...]]:
    """Tie-break order between rows: fewer places, lower threshold sum, lexicographic places"""
    return (len(row), row.threshold_sum(), row.thresholds)


def covering_table(rows: Iterable[SubMarking], columns: Sequence[Marking]) -> Dict[SubMarking, FrozenSet[int]]:
    """Maps every row to the indices of the columns it covers"""
    return {row: frozenset(j for j, column in enumerate(columns) if covers(row, column))
            for row in rows}


def select_cover(rows: Iterable[SubMarking],
                 columns: Iterable[Marking],
                 exact: bool = False) -> Tuple[SubMarking, ...]:
    """Returns rows covering every column, in canonical order.

    Keyword arguments:
    rows -- Candidate over-states
    columns -- Markings to cover
    exact -- Search a minimum cover by branch and bound (up to EXACT_COVER_MAX_COLUMNS columns)"""
    columns = sorted(set(columns))
    table = covering_table(sorted(set(rows), key=row_rank), columns)
    uncovered = [j for j in range(len(columns)) if not any(j in hit for hit in table.values())]
    if uncovered:
        raise UncoverableColumn(uncovered)
    if not columns:
        return ()

    essential = _essential_rows(table, len(columns))
    if exact and len(columns) <= EXACT_COVER_MAX_COLUMNS:
        chosen = _minimum_cover(table, essential, len(columns))
    else:
        if exact:
            logger.warning("Exact cover skipped for %d columns, above the limit of %d",
                           len(columns), EXACT_COVER_MAX_COLUMNS)
        chosen = _prune(table, essential, _greedy(table, essential, len(columns)))
    return tuple(sorted(chosen))


def _essential_rows(table: Dict[SubMarking, FrozenSet[int]], width: int) -> Set[SubMarking]:
    """Rows that are the sole coverer of some column"""
    essential = set()
    for column in range(width):
        coverers = [row for row, hit in table.items() if column in hit]
        if len(coverers) == 1:
            essential.add(coverers[0])
    return essential


def _greedy(table: Dict[SubMarking, FrozenSet[int]], essential: Set[SubMarking], width: int) -> List[SubMarking]:
    chosen = sorted(essential, key=row_rank)
    covered: Set[int] = set()
    for row in chosen:
        covered |= table[row]
    while len(covered) < width:
        best = min((row for row in table if row not in chosen),
                   key=lambda row: (-len(table[row] - covered), row_rank(row)))
        chosen.append(best)
        covered |= table[best]
    return chosen


def _prune(table: Dict[SubMarking, FrozenSet[int]],
           essential: Set[SubMarking],
           chosen: List[SubMarking]) -> List[SubMarking]:
    """Drops greedy rows whose columns are all covered by the other selected rows"""
    kept = list(chosen)
    for row in sorted(chosen, key=row_rank, reverse=True):
        if row in essential:
            continue
        others: Set[int] = set()
        for other in kept:
            if other != row:
                others |= table[other]
        if table[row] <= others:
            kept.remove(row)
    return kept


def _cost(rows: Iterable[SubMarking]) -> Tuple[int, int, int, Tuple]:
    rows = sorted(rows)
    return (len(rows), sum(len(r) for r in rows), sum(r.threshold_sum() for r in rows),
            tuple(r.thresholds for r in rows))


def _minimum_cover(table: Dict[SubMarking, FrozenSet[int]],
                   essential: Set[SubMarking],
                   width: int) -> List[SubMarking]:
    """Smallest cover by row count, then literal count, then threshold sum.

    Branches on the rows covering the lowest uncovered column, starting from the
    greedy cover, and abandons a branch once it cannot stay within the best row count."""
    covered: Set[int] = set()
    for row in essential:
        covered |= table[row]
    remaining = frozenset(range(width)) - covered
    if not remaining:
        return list(essential)
    candidates = sorted((row for row in table if row not in essential and table[row] & remaining),
                        key=row_rank)
    widest = max(len(table[row] & remaining) for row in candidates)
    best = tuple(row for row in _prune(table, essential, _greedy(table, essential, width))
                 if row not in essential)

    def search(chosen: Tuple[SubMarking, ...], uncovered: FrozenSet[int]) -> None:
        nonlocal best
        if not uncovered:
            if _cost(chosen) < _cost(best):
                best = chosen
            return
        if len(chosen) + -(-len(uncovered) // widest) > len(best):
            return
        column = min(uncovered)
        for row in candidates:
            if column in table[row] and row not in chosen:
                search(chosen + (row,), uncovered - table[row])

    search((), remaining)
    return list(essential) + list(best)
