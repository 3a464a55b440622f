"""
Grid diagrams for closed braids.

Rows and columns are counted from the bottom-left corner starting at 0. In each
column a vertical segment runs upward from the X marking to the O marking,
wrapping through the top edge when the X sits above the O; those wrapped
columns are the strands of the braid. In each row a horizontal segment joins
the O to the X and passes over every vertical segment between them. A
rightward over-pass is a positive crossing.
"""

from __future__ import annotations

import json
from typing import Callable, List, Tuple
import logging

import networkx as nx

from core.braid_core import free_reduce
from core.constants import (
    GLYPH_EMPTY, GLYPH_O, GLYPH_X, GRID_LAYOUTS, LAYOUT_COMPACT, LAYOUT_ISOLATED,
)
from core.models import BraidWord, GridDiagram
from core.validation import InputValidator, MalformedJson, ValidationError

logger = logging.getLogger(__name__)


def validate(grid: GridDiagram) -> None:
    """Raise InvalidGrid unless grid has one X and one O per row and column, never sharing a cell"""
    InputValidator.validate_grid(grid.n, grid.X, grid.O)


def wrapped_columns(grid: GridDiagram) -> List[int]:
    """Columns whose X sits above their O, left to right"""
    return [column for column in range(grid.n) if grid.X[column] > grid.O[column]]


def _row_markings(grid: GridDiagram) -> Tuple[List[int], List[int]]:
    """Column of the X and of the O in each row"""
    x_column = [0] * grid.n
    o_column = [0] * grid.n
    for column in range(grid.n):
        x_column[grid.X[column]] = column
        o_column[grid.O[column]] = column
    return x_column, o_column


def grid_to_braid(grid: GridDiagram) -> BraidWord:
    """Read the closed braid off a grid, one row at a time from the bottom"""
    validate(grid)
    x_column, o_column = _row_markings(grid)
    active = set(wrapped_columns(grid))
    strands = len(active)

    letters: List[int] = []
    for row in range(grid.n):
        a, b = o_column[row], x_column[row]
        ordered = sorted(active)
        pa = ordered.index(a)
        low, high = min(a, b), max(a, b)
        crossed = sum(1 for column in ordered if low < column < high)
        if b > a:
            letters.extend(pa + j for j in range(1, crossed + 1))
        else:
            letters.extend(-(pa - j) for j in range(crossed))
        active.discard(a)
        active.add(b)

    return BraidWord(strands, tuple(letters))


class _GridBuilder:
    """Column bookkeeping for braid_to_grid.

    Columns are opaque ids; order holds them left to right. Strand p currently
    runs in column cols[p]; rows are (X column, O column) pairs, bottom first.
    """

    def __init__(self, strands: int, isolate: bool):
        self.strands = strands
        self.isolate = isolate
        self.home = list(range(strands))
        self.order: List[int] = list(range(strands))
        self.cols: List[int] = list(range(strands))
        self.rows: List[Tuple[int, int]] = []
        self.next_id = strands

    def index(self, column: int) -> int:
        return self.order.index(column)

    def move(self, p: int, slot: int) -> Callable[[], None]:
        """Send strand p into a fresh column inserted at slot; returns an undo"""
        fresh = self.next_id
        self.next_id += 1
        self.order.insert(slot, fresh)
        self.rows.append((fresh, self.cols[p]))
        previous = self.cols[p]
        self.cols[p] = fresh

        def undo() -> None:
            self.cols[p] = previous
            self.rows.pop()
            self.order.remove(fresh)
            self.next_id -= 1

        return undo

    def move_to(self, p: int, column: int) -> None:
        self.rows.append((column, self.cols[p]))
        self.cols[p] = column

    def swap(self, q: int) -> None:
        self.cols[q], self.cols[q + 1] = self.cols[q + 1], self.cols[q]

    def _in_interval(self, column: int, start: int, end: int) -> bool:
        """column lies in the cyclic interval (start, end] of the column order"""
        size = len(self.order)
        ia, ib, ic = self.index(start), self.index(end), self.index(column)
        offset = (ic - ia) % size
        return 0 < offset <= (ib - ia) % size

    def newest_row_isolated(self) -> bool:
        """No earlier X is visible to the right of the newest X without a marking in between"""
        if not self.isolate:
            return True
        i = len(self.rows) - 1
        xi = self.rows[i][0]
        for j in range(i - 1, -1, -1):
            xj = self.rows[j][0]
            blocked = any(
                self._in_interval(self.rows[k][0], xi, xj) or self._in_interval(self.rows[k][1], xi, xj)
                for k in range(j + 1, i + 1)
            )
            if not blocked:
                return False
        return True

    def positive_letter(self, q: int) -> None:
        b = self.cols[q + 1]
        undo = self.move(q, self.index(b) + 1)
        self.swap(q)
        if self.newest_row_isolated():
            return
        self.swap(q)
        undo()
        # kink strand q+1 out of the way first
        self.move(q + 1, self.index(b))
        self.move(q, self.index(b))
        self.swap(q)

    def negative_letter(self, q: int) -> None:
        c = self.cols[q]
        slots = [self.index(c), self.index(self.cols[q - 1]) + 1 if q >= 1 else 0]
        for slot in slots:
            undo = self.move(q + 1, slot)
            self.swap(q)
            if self.newest_row_isolated():
                return
            self.swap(q)
            undo()
        if q >= 1:
            d = self.cols[q - 1]
            self.move(q - 1, self.index(d))
            self.move(q + 1, self.index(d))
        else:
            self.move(q + 1, self.index(c))
        self.swap(q)

    def leave_home(self) -> None:
        """Every strand still in its home column takes one step left"""
        for p in range(self.strands):
            if self.cols[p] == self.home[p]:
                self.move(p, self.index(self.cols[p]))

    def _between_neighbours(self, p: int, column: int) -> bool:
        low = self.index(self.cols[p - 1]) if p > 0 else -1
        high = self.index(self.cols[p + 1]) if p < self.strands - 1 else len(self.order)
        return low < self.index(column) < high

    def _isolated_closure(self) -> bool:
        m = self.strands
        if not self._between_neighbours(0, self.home[0]):
            return False
        self.move_to(0, self.home[0])
        for p in range(1, m - 1):
            slot = self.index(self.home[p + 1])
            if not self.index(self.cols[p - 1]) < slot <= self.index(self.cols[p + 1]):
                return False
            self.move(p, slot)
        for p in range(m - 1, 0, -1):
            if not self._between_neighbours(p, self.home[p]):
                return False
            self.move_to(p, self.home[p])
        return True

    def _plain_closure(self) -> None:
        position = self.index
        left = [p for p in range(self.strands) if position(self.cols[p]) > position(self.home[p])]
        right = [p for p in range(self.strands) if position(self.cols[p]) <= position(self.home[p])]
        for p in left + right[::-1]:
            self.move_to(p, self.home[p])

    def close(self) -> None:
        """Return every strand to its home column"""
        if self.isolate and self.strands >= 2:
            saved = (len(self.rows), list(self.order), list(self.cols), self.next_id)
            if self._isolated_closure():
                return
            row_count, order, cols, next_id = saved
            del self.rows[row_count:]
            self.order, self.cols, self.next_id = order, cols, next_id
            logger.debug("Isolated closure blocked, using plain closure")
        self._plain_closure()

    def diagram(self) -> GridDiagram:
        n = len(self.order)
        xs = [0] * n
        os_ = [0] * n
        for row, (x_id, o_id) in enumerate(self.rows):
            xs[self.index(x_id)] = row
            os_[self.index(o_id)] = row
        return GridDiagram(n, tuple(xs), tuple(os_))


def braid_to_grid(w: BraidWord, layout: str = LAYOUT_ISOLATED) -> GridDiagram:
    """
    Build a grid whose braid reading is the free reduction of w.

    Each letter moves one strand into a fresh column one row up. The
    "isolated" layout places fresh columns (adding kink rows where needed) so
    that the upper-right corners of the X markings admit as few empty
    rectangles as possible; the "compact" layout always uses the column next
    to the strand being crossed.

    Args:
        w: Braid word
        layout: "isolated" or "compact"

    Returns:
        Grid diagram of the closed braid
    """
    if layout not in GRID_LAYOUTS:
        raise ValidationError(f"Unknown grid layout {layout!r}; expected one of {GRID_LAYOUTS}")

    reduced = free_reduce(w)
    builder = _GridBuilder(w.strands, isolate=(layout == LAYOUT_ISOLATED))
    for letter in reduced.letters:
        if letter > 0:
            builder.positive_letter(letter - 1)
        else:
            builder.negative_letter(-letter - 1)
    builder.leave_home()
    builder.close()

    grid = builder.diagram()
    logger.debug(f"{layout} grid of size {grid.n} for {reduced}")
    return grid


def grid_components(grid: GridDiagram) -> int:
    """Number of components of the link the grid represents"""
    validate(grid)
    x_column, o_column = _row_markings(grid)
    graph = nx.Graph()
    graph.add_nodes_from(range(grid.n))
    graph.add_edges_from((o_column[row], x_column[row]) for row in range(grid.n))
    return nx.number_connected_components(graph)


def _covers(grid: GridDiagram, column: int, row: int) -> bool:
    x_row, o_row = grid.X[column], grid.O[column]
    if x_row < o_row:
        return x_row < row < o_row
    return row > x_row or row < o_row


def grid_writhe(grid: GridDiagram) -> int:
    """Signed count of horizontal over vertical crossings"""
    validate(grid)
    x_column, o_column = _row_markings(grid)
    writhe = 0
    for row in range(grid.n):
        a, b = o_column[row], x_column[row]
        sign = 1 if b > a else -1
        for column in range(min(a, b) + 1, max(a, b)):
            if _covers(grid, column, row):
                writhe += sign
    return writhe


def grid_self_linking(grid: GridDiagram) -> int:
    """writhe minus the number of strands"""
    return grid_writhe(grid) - len(wrapped_columns(grid))


def to_json(grid: GridDiagram) -> str:
    return json.dumps(grid.to_dict(), separators=(",", ":"))


def from_json(text: str) -> GridDiagram:
    """Decode {"n": n, "X": [...], "O": [...]}"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        logger.warning(f"Grid JSON does not parse: {e}")
        raise MalformedJson(f"Invalid grid JSON: {e}")

    if not isinstance(data, dict):
        raise MalformedJson("Grid JSON must be an object")
    missing = [key for key in ('n', 'X', 'O') if key not in data]
    if missing:
        raise MalformedJson(f"Grid JSON is missing {', '.join(missing)}")
    if not isinstance(data['X'], list) or not isinstance(data['O'], list):
        raise MalformedJson("Grid JSON fields X and O must be arrays")

    return GridDiagram(data['n'], tuple(data['X']), tuple(data['O']))


def render_ascii(grid: GridDiagram) -> str:
    """Rows from top to bottom, one glyph per column"""
    lines = []
    for row in range(grid.n - 1, -1, -1):
        glyphs = []
        for column in range(grid.n):
            if grid.X[column] == row:
                glyphs.append(GLYPH_X)
            elif grid.O[column] == row:
                glyphs.append(GLYPH_O)
            else:
                glyphs.append(GLYPH_EMPTY)
        lines.append(" ".join(glyphs))
    return "\n".join(lines)


__all__ = [
    'validate', 'wrapped_columns', 'grid_to_braid', 'braid_to_grid', 'grid_components',
    'grid_writhe', 'grid_self_linking', 'to_json', 'from_json', 'render_ascii',
    'LAYOUT_ISOLATED', 'LAYOUT_COMPACT',
]
