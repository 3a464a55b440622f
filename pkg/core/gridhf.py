"""
The grid chain complex over F2 with both X and O markings blocked.

Generators are grid states: one lattice point per column, read as a
permutation (points[c] is the row). The differential counts empty rectangles
on the torus. theta-hat is the class of the state sitting at the upper-right
corners of the X markings.

Gradings use doubled coordinates: a state point (c, r) sits at (2c, 2r) and
the marking in cell (c, r) at (2c + 1, 2r + 1), so "strictly below-left" never
ties.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple
import logging

import numpy as np

from core.braid_core import closure_neighbours, free_reduce
from core.constants import (
    DEFAULT_MAX_MATRIX_ENTRIES, DEFAULT_N_MAX, LAYOUT_COMPACT, LAYOUT_ISOLATED,
    get_default_max_matrix_entries, get_default_n_max, get_default_spelling_cap,
)
from core.dehornoy import shortest_spelling
from core.grid import braid_to_grid, grid_components
from core.logging_config import LoggingContext
from core.models import (
    Bigrading, BraidWord, ChainF2, GridDiagram, GridState, NonvanishingResult, NonzeroReason,
)
from core.validation import (
    InvalidGrid, LimitExceeded, MemoryBudgetExceeded, SizeLimitExceeded, ValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverLimits:
    """Caps on the full boundary solve; the fast path ignores them"""
    n_max: int = DEFAULT_N_MAX
    max_matrix_entries: int = DEFAULT_MAX_MATRIX_ENTRIES

    @classmethod
    def from_config(cls) -> 'SolverLimits':
        return cls(n_max=get_default_n_max(), max_matrix_entries=get_default_max_matrix_entries())


# ---------------------------------------------------------------- geometry

class _Markings:
    """Prefix counts of X and O cells on a doubled copy of the torus"""

    def __init__(self, grid: GridDiagram):
        n = grid.n
        self.n = n
        cells = np.zeros((2 * n, 2 * n), dtype=np.int32)
        columns = np.arange(n)
        for rows in (np.asarray(grid.X), np.asarray(grid.O)):
            for dc in (0, n):
                for dr in (0, n):
                    cells[columns + dc, rows + dr] += 1
        prefix = np.zeros((2 * n + 1, 2 * n + 1), dtype=np.int32)
        prefix[1:, 1:] = cells.cumsum(axis=0).cumsum(axis=1)
        self.prefix: List[List[int]] = prefix.tolist()

    def count(self, column: int, row: int, width: int, height: int) -> int:
        """Markings in the width x height block of cells whose lower-left cell is (column, row)"""
        p = self.prefix
        c1, r1 = column + width, row + height
        return p[c1][r1] - p[column][r1] - p[c1][row] + p[column][row]


def _empty_rectangle(marks: _Markings, points: Sequence[int],
                     column: int, row: int, width: int, height: int) -> bool:
    """Rectangle with lower-left lattice corner (column, row) avoids markings and state points"""
    if marks.count(column, row, width, height):
        return False
    n = marks.n
    for step in range(1, width):
        offset = (points[(column + step) % n] - row) % n
        if 0 < offset < height:
            return False
    return True


def _check_state(grid: GridDiagram, state: GridState) -> None:
    if state.n != grid.n:
        raise InvalidGrid(f"State of size {state.n} on a grid of size {grid.n}")


def theta_state(grid: GridDiagram) -> GridState:
    """Upper-right corners of the X markings"""
    n = grid.n
    points = [0] * n
    for column in range(n):
        points[(column + 1) % n] = (grid.X[column] + 1) % n
    return GridState(tuple(points))


def _boundary_points(marks: _Markings, points: Sequence[int]) -> Set[Tuple[int, ...]]:
    """Target states of empty rectangles leaving points, with F2 cancellation"""
    n = marks.n
    result: Set[Tuple[int, ...]] = set()
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            width = (b - a) % n
            height = (points[b] - points[a]) % n
            if _empty_rectangle(marks, points, a, points[a], width, height):
                target = list(points)
                target[a], target[b] = points[b], points[a]
                # a pair can bound two empty rectangles that cancel
                result ^= {tuple(target)}
    return result


def boundary(grid: GridDiagram, state: GridState) -> ChainF2:
    _check_state(grid, state)
    marks = _Markings(grid)
    return ChainF2(frozenset(GridState(p) for p in _boundary_points(marks, state.points)))


def chain_boundary(grid: GridDiagram, chain: ChainF2) -> ChainF2:
    """Boundary of a sum of states"""
    marks = _Markings(grid)
    total: Set[Tuple[int, ...]] = set()
    for state in chain.states:
        _check_state(grid, state)
        total ^= _boundary_points(marks, state.points)
    return ChainF2(frozenset(GridState(p) for p in total))


def is_cycle(grid: GridDiagram, chain: ChainF2) -> bool:
    return chain_boundary(grid, chain).is_zero()


def has_incoming_rectangle(grid: GridDiagram, state: GridState) -> bool:
    """
    True iff some empty rectangle ends at state.

    Candidates have their top-left corner at the point of column a and their
    bottom-right corner at the point of column b. False certifies that state
    is not a boundary.
    """
    _check_state(grid, state)
    marks = _Markings(grid)
    points = state.points
    n = grid.n
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            width = (b - a) % n
            height = (points[a] - points[b]) % n
            if _empty_rectangle(marks, points, a, points[b], width, height):
                return True
    return False


# ---------------------------------------------------------------- gradings

def _count_below_left(p: np.ndarray, q: np.ndarray) -> int:
    """Pairs (u, v) in P x Q with u strictly below and left of v"""
    below_left = (p[:, None, 0] < q[None, :, 0]) & (p[:, None, 1] < q[None, :, 1])
    return int(below_left.sum())


def _state_points(points: Sequence[int]) -> np.ndarray:
    columns = np.arange(len(points))
    return np.stack([2 * columns, 2 * np.asarray(points)], axis=1)


def _marking_points(rows: Sequence[int]) -> np.ndarray:
    columns = np.arange(len(rows))
    return np.stack([2 * columns + 1, 2 * np.asarray(rows) + 1], axis=1)


def _grading_against(points: np.ndarray, markings: np.ndarray) -> int:
    return (_count_below_left(points, points)
            - _count_below_left(points, markings)
            - _count_below_left(markings, points)
            + _count_below_left(markings, markings)
            + 1)


def maslov(grid: GridDiagram, state: GridState) -> int:
    """Maslov grading measured against the O markings"""
    _check_state(grid, state)
    return _grading_against(_state_points(state.points), _marking_points(grid.O))


def alexander2(grid: GridDiagram, state: GridState, components: Optional[int] = None) -> int:
    """Twice the Alexander grading"""
    _check_state(grid, state)
    if components is None:
        components = grid_components(grid)
    points = _state_points(state.points)
    m_o = _grading_against(points, _marking_points(grid.O))
    m_x = _grading_against(points, _marking_points(grid.X))
    return m_o - m_x - (grid.n - components)


def bigrading(grid: GridDiagram, state: GridState, components: Optional[int] = None) -> Bigrading:
    return Bigrading(maslov(grid, state), alexander2(grid, state, components))


def theta_bigrading(grid: GridDiagram) -> Bigrading:
    return bigrading(grid, theta_state(grid))


# ---------------------------------------------------------------- state enumeration

def _ge_lt_tables(rows: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """ge[c][y] = #{j >= c : rows[j] >= y} and lt[c][y] = #{j < c : rows[j] < y}"""
    n = len(rows)
    marks = np.asarray(rows)[:, None]
    levels = np.arange(n)[None, :]
    at_or_above = (marks >= levels).astype(np.int64)
    below = (marks < levels).astype(np.int64)
    ge = at_or_above[::-1].cumsum(axis=0)[::-1]
    lt = np.vstack([np.zeros((1, n), dtype=np.int64), below.cumsum(axis=0)[:-1]])
    return ge, lt


def _popcount(value: int) -> int:
    return bin(value).count("1")


class _StateEnumerator:
    """Column-by-column construction of states with grading bookkeeping.

    Placing row y in column c adds #{earlier rows below y} - geO[c][y] - ltO[c][y]
    to the Maslov grading. The Alexander contribution of that choice does not
    depend on the other columns, so suffix extremes bound what is still reachable.
    """

    def __init__(self, grid: GridDiagram, components: int):
        n = grid.n
        self.n = n
        ge_o, lt_o = _ge_lt_tables(grid.O)
        ge_x, lt_x = _ge_lt_tables(grid.X)
        o_term = -(ge_o + lt_o)
        a_term = ge_x + lt_x - ge_o - lt_o
        self.o_term: List[List[int]] = o_term.tolist()
        self.a_term: List[List[int]] = a_term.tolist()

        zero = np.zeros(1, dtype=np.int64)
        self.o_min = np.concatenate([o_term.min(axis=1)[::-1].cumsum()[::-1], zero]).tolist()
        self.o_max = np.concatenate([o_term.max(axis=1)[::-1].cumsum()[::-1], zero]).tolist()
        self.a_min = np.concatenate([a_term.min(axis=1)[::-1].cumsum()[::-1], zero]).tolist()
        self.a_max = np.concatenate([a_term.max(axis=1)[::-1].cumsum()[::-1], zero]).tolist()

        o_points = _marking_points(grid.O)
        x_points = _marking_points(grid.X)
        self.m_const = _count_below_left(o_points, o_points) + 1
        self.a_const = (_count_below_left(o_points, o_points)
                        - _count_below_left(x_points, x_points)
                        - (n - components))
        self.full_mask = (1 << n) - 1
        self._targets: List[Tuple[int, int]] = []
        self._found: Dict[Bigrading, List[Tuple[int, ...]]] = {}

    def collect(self, targets: Iterable[Bigrading]) -> Dict[Bigrading, List[Tuple[int, ...]]]:
        """All states at each target bigrading, in lexicographic order"""
        wanted = set(targets)
        found: Dict[Bigrading, List[Tuple[int, ...]]] = {target: [] for target in wanted}
        self._targets = [(t.maslov, t.alexander2) for t in wanted]
        self._found = found
        self._search(0, 0, [], 0, 0)
        return found

    def _reachable(self, c: int, used: int, m_known: int, a_known: int) -> bool:
        remaining = self.n - c
        cross = 0
        free = self.full_mask & ~used
        while free:
            low = free & -free
            cross += _popcount(used & (low - 1))
            free ^= low
        m_base = m_known + self.m_const + cross
        m_lo = m_base + self.o_min[c]
        m_hi = m_base + remaining * (remaining - 1) // 2 + self.o_max[c]
        a_lo = a_known + self.a_const + self.a_min[c]
        a_hi = a_known + self.a_const + self.a_max[c]
        return any(m_lo <= m <= m_hi and a_lo <= a <= a_hi for m, a in self._targets)

    def _search(self, c: int, used: int, rows: List[int], m_known: int, a_known: int) -> None:
        if c == self.n:
            grading = Bigrading(m_known + self.m_const, a_known + self.a_const)
            if grading in self._found:
                self._found[grading].append(tuple(rows))
            return
        if not self._reachable(c, used, m_known, a_known):
            return
        o_row = self.o_term[c]
        a_row = self.a_term[c]
        for y in range(self.n):
            bit = 1 << y
            if used & bit:
                continue
            below = _popcount(used & (bit - 1))
            rows.append(y)
            self._search(c + 1, used | bit, rows, m_known + below + o_row[y], a_known + a_row[y])
            rows.pop()


def _check_size(grid: GridDiagram, limits: SolverLimits) -> None:
    if grid.n > limits.n_max:
        logger.warning(f"Grid of size {grid.n} exceeds n_max={limits.n_max}")
        raise SizeLimitExceeded(
            f"Grid size {grid.n} exceeds the solver limit {limits.n_max}", limit="n_max"
        )


def enumerate_states(grid: GridDiagram, grading: Bigrading,
                     limits: Optional[SolverLimits] = None) -> Iterator[GridState]:
    """Every state with the given bigrading, in lexicographic order"""
    if limits is None:
        limits = SolverLimits.from_config()
    _check_size(grid, limits)
    enumerator = _StateEnumerator(grid, grid_components(grid))
    for points in enumerator.collect([grading])[grading]:
        yield GridState(points)


# ---------------------------------------------------------------- solver

def _reduce(pivots: Dict[int, Tuple[int, int]], vector: int, combo: int) -> Tuple[int, int]:
    while vector:
        lead = vector.bit_length() - 1
        pivot = pivots.get(lead)
        if pivot is None:
            break
        vector ^= pivot[0]
        combo ^= pivot[1]
    return vector, combo


def _chain_grading(grid: GridDiagram, chain: ChainF2, components: int) -> Bigrading:
    gradings = {bigrading(grid, state, components) for state in chain.states}
    if len(gradings) != 1:
        raise ValidationError("Chain is not homogeneous in the bigrading")
    return gradings.pop()


def _solve(grid: GridDiagram, chain: ChainF2, limits: SolverLimits) -> Optional[ChainF2]:
    """A chain v with boundary(v) = chain, or None when there is none"""
    _check_size(grid, limits)
    components = grid_components(grid)
    grading = _chain_grading(grid, chain, components)
    source_grading = Bigrading(grading.maslov + 1, grading.alexander2)

    enumerator = _StateEnumerator(grid, components)
    sources = enumerator.collect([source_grading])[source_grading]
    logger.info(f"{len(sources)} generators at {source_grading} for a size-{grid.n} grid")

    marks = _Markings(grid)
    target_index: Dict[Tuple[int, ...], int] = {}
    pivots: Dict[int, Tuple[int, int]] = {}
    entries = 0
    for position, source in enumerate(sources):
        vector = 0
        for target in _boundary_points(marks, source):
            index = target_index.setdefault(target, len(target_index))
            vector |= 1 << index
            entries += 1
        if entries > limits.max_matrix_entries:
            logger.warning(f"Boundary matrix passed {limits.max_matrix_entries} entries")
            raise MemoryBudgetExceeded(
                f"Boundary matrix exceeds {limits.max_matrix_entries} entries",
                limit="max_matrix_entries",
            )
        vector, combo = _reduce(pivots, vector, 1 << position)
        if vector:
            pivots[vector.bit_length() - 1] = (vector, combo)
    logger.debug(f"Boundary matrix: {entries} entries, rank {len(pivots)}")

    goal = 0
    for state in chain.states:
        index = target_index.get(state.points)
        if index is None:
            return None
        goal |= 1 << index
    remainder, combo = _reduce(pivots, goal, 0)
    if remainder:
        return None
    witness = frozenset(GridState(sources[i]) for i in range(len(sources)) if combo >> i & 1)
    return ChainF2(witness)


def is_boundary(grid: GridDiagram, chain: ChainF2,
                limits: Optional[SolverLimits] = None) -> NonvanishingResult:
    """
    Decide whether a homogeneous cycle is a boundary.

    Args:
        grid: Grid diagram
        chain: Cycle concentrated in one bigrading
        limits: Solver caps (config defaults if None)

    Returns:
        zero with a replayable witness, nonzero (no solution), or aborted naming
        the limit that fired
    """
    if limits is None:
        limits = SolverLimits.from_config()
    if chain.is_zero():
        return NonvanishingResult.zero(ChainF2())
    try:
        with LoggingContext(f"boundary solve on a size-{grid.n} grid", logger):
            witness = _solve(grid, chain, limits)
    except LimitExceeded as e:
        return NonvanishingResult.aborted(e.limit)
    if witness is None:
        return NonvanishingResult.nonzero(NonzeroReason.SOLVER_NO_SOLUTION)
    return NonvanishingResult.zero(witness)


def theta_nonvanishing(grid: GridDiagram, limits: Optional[SolverLimits] = None) -> NonvanishingResult:
    """Fast path first, then the full solve at theta's bigrading"""
    theta = theta_state(grid)
    if not has_incoming_rectangle(grid, theta):
        return NonvanishingResult.nonzero(NonzeroReason.NO_INCOMING_RECTANGLE)
    return is_boundary(grid, ChainF2(frozenset({theta})), limits)


def fast_path_fires(w: BraidWord) -> bool:
    """theta of the isolated grid of w has no incoming rectangle"""
    grid = braid_to_grid(w, LAYOUT_ISOLATED)
    return not has_incoming_rectangle(grid, theta_state(grid))


def fast_path_search(w: BraidWord, cap: Optional[int] = None) -> Optional[BraidWord]:
    """
    Breadth-first search through spellings of the closed braid of w.

    Spellings come from closure_neighbours, so all have the length of w.

    Returns:
        The first spelling whose isolated grid passes the fast path, or None
        after cap spellings
    """
    if cap is None:
        cap = get_default_spelling_cap()
    seen: Set[Tuple[int, ...]] = {w.letters}
    queue = deque([w])
    examined = 0
    while queue and examined < cap:
        word = queue.popleft()
        examined += 1
        if fast_path_fires(word):
            logger.debug(f"Fast path fires on spelling {word} after {examined} tries")
            return word
        for neighbour in closure_neighbours(word):
            if neighbour.letters not in seen:
                seen.add(neighbour.letters)
                queue.append(neighbour)
    logger.debug(f"No fast-path spelling of {w} among {examined}")
    return None


def braid_theta_nonvanishing(w: BraidWord, limits: Optional[SolverLimits] = None,
                             extra: Sequence[BraidWord] = (),
                             cap: Optional[int] = None,
                             max_grid_size: Optional[int] = None) -> NonvanishingResult:
    """
    theta-hat of the closure of w.

    Tries the fast path on w and its closure spellings, then runs the full
    solver on the compact grid of the shortest known spelling. extra holds
    words the caller knows to have the same closure. A compact grid larger
    than max_grid_size is not solved and reports aborted("max_grid_size").
    """
    if limits is None:
        limits = SolverLimits.from_config()
    if fast_path_search(free_reduce(w), cap) is not None:
        return NonvanishingResult.nonzero(NonzeroReason.NO_INCOMING_RECTANGLE)
    for word in extra:
        if fast_path_fires(word):
            return NonvanishingResult.nonzero(NonzeroReason.NO_INCOMING_RECTANGLE)

    spelling = shortest_spelling(w, extra)
    grid = braid_to_grid(spelling, LAYOUT_COMPACT)
    if max_grid_size is not None and grid.n > max_grid_size:
        logger.info(f"Compact grid of size {grid.n} for {spelling} is over {max_grid_size}")
        return NonvanishingResult.aborted("max_grid_size")
    logger.info(f"Solving theta for {spelling} on a compact grid of size {grid.n}")
    return theta_nonvanishing(grid, limits)


__all__ = [
    'SolverLimits', 'theta_state', 'maslov', 'alexander2', 'bigrading', 'theta_bigrading',
    'boundary', 'chain_boundary', 'is_cycle', 'has_incoming_rectangle', 'enumerate_states',
    'is_boundary', 'theta_nonvanishing', 'fast_path_fires', 'fast_path_search',
    'braid_theta_nonvanishing',
]
