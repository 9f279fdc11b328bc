"""Toroidal grid diagrams, their states, and the bigradings.

Conventions, fixed once for the whole package:

* columns 0..n-1 left to right, rows 0..n-1 bottom to top;
* the marker of column i sits at the cell center (i + 1/2, sigma(i) + 1/2);
* a state places one lattice point per column, at (i, x(i));
* all point counts are taken in the planar fundamental domain [0,n) x [0,n).

With I(P,Q) = #{(p,q) : p strictly southwest of q} and
J(P,Q) = (I(P,Q) + I(Q,P))/2, the Maslov grading is
M(x) = J(x,x) - 2 J(x,O) + J(O,O) + 1, and the Alexander grading is
A(x) = (M_O(x) - M_X(x))/2 - (n-1)/2, an integer whenever the diagram
presents a knot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..errors import ParseError, SizeMismatch

GridState = tuple  # permutation tuple: column i holds the point (i, x[i])


@dataclass(frozen=True)
class GridDiagram:
    """Two marker permutations: column i carries X in row x_cols[i], O in o_cols[i]."""

    x_cols: tuple[int, ...]
    o_cols: tuple[int, ...]

    def __post_init__(self):
        n = len(self.x_cols)
        if n < 2:
            raise SizeMismatch("grids have size at least 2")
        if len(self.o_cols) != n:
            raise SizeMismatch("X and O permutations differ in length")
        if sorted(self.x_cols) != list(range(n)) or sorted(self.o_cols) != list(range(n)):
            raise ParseError("marker rows must each be a permutation of 0..n-1")
        if any(x == o for x, o in zip(self.x_cols, self.o_cols)):
            raise ParseError("X and O may not share a cell")

    @property
    def size(self) -> int:
        return len(self.x_cols)

    # ------------------------------------------------------------ link data

    def components(self) -> int:
        """Components of the associated link (column -> row -> column cycles)."""
        n = self.size
        x_row_to_col = {r: c for c, r in enumerate(self.x_cols)}
        seen = [False] * n
        count = 0
        for start in range(n):
            if seen[start]:
                continue
            count += 1
            c = start
            while not seen[c]:
                seen[c] = True
                c = x_row_to_col[self.o_cols[c]]
        return count

    def is_knot(self) -> bool:
        return self.components() == 1

    # ------------------------------------------------------------ gradings

    def _maslov_against(self, x: GridState, rows: tuple[int, ...]) -> int:
        # J(x,x) - 2J(x,P) + J(P,P) + 1, with P the centers (j+1/2, rows[j]+1/2).
        # State points are lattice points, so J(x,x) = I(x,x); against centers
        # the strict-southwest tests reduce to <= and < on the integer parts,
        # and 2J(x,P) = I(x,P) + I(P,x) exactly.
        n = self.size
        jxx = sum(1 for i in range(n) for j in range(i + 1, n) if x[i] < x[j])
        jpp = sum(1 for i in range(n) for j in range(i + 1, n) if rows[i] < rows[j])
        ixp = sum(1 for i in range(n) for j in range(i, n) if x[i] <= rows[j])
        ipx = sum(1 for i in range(n) for j in range(i + 1, n) if rows[i] < x[j])
        return jxx - ixp - ipx + jpp + 1

    def gradings(self, x: GridState) -> tuple[int, Fraction]:
        """(Maslov, Alexander) of a state; Alexander is integral for knots."""
        n = self.size
        if len(x) != n or sorted(x) != list(range(n)):
            raise SizeMismatch("state must be a permutation matching the grid size")
        m_o = self._maslov_against(x, self.o_cols)
        m_x = self._maslov_against(x, self.x_cols)
        alex = Fraction(m_o - m_x, 2) - Fraction(n - 1, 2)
        return m_o, alex

    # ------------------------------------------------------------ file format

    def to_text(self) -> str:
        """Bit-exact format: 1-indexed marker rows per column."""
        x = " ".join(str(r + 1) for r in self.x_cols)
        o = " ".join(str(r + 1) for r in self.o_cols)
        return f"X: {x}\nO: {o}\n"

    @classmethod
    def from_text(cls, text: str) -> "GridDiagram":
        rows = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            m = line.split(":", 1)
            if len(m) != 2 or m[0].strip() not in ("X", "O"):
                raise ParseError(f"unexpected line {line!r}")
            try:
                rows[m[0].strip()] = tuple(int(tok) - 1 for tok in m[1].split())
            except ValueError:
                raise ParseError(f"bad marker row in {line!r}") from None
        if set(rows) != {"X", "O"}:
            raise ParseError("grid file needs one X: line and one O: line")
        return cls(rows["X"], rows["O"])


def unknot_grid() -> GridDiagram:
    return GridDiagram((0, 1), (1, 0))


# ---------------------------------------------------------------- grid moves


def cyclic_columns(g: GridDiagram, k: int = 1) -> GridDiagram:
    n = g.size
    k %= n
    return GridDiagram(g.x_cols[k:] + g.x_cols[:k], g.o_cols[k:] + g.o_cols[:k])


def cyclic_rows(g: GridDiagram, k: int = 1) -> GridDiagram:
    n = g.size
    k %= n
    return GridDiagram(tuple((r - k) % n for r in g.x_cols),
                       tuple((r - k) % n for r in g.o_cols))


def _interleaved(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (a1, a2), (b1, b2) = sorted(a), sorted(b)
    return (a1 < b1 < a2 < b2) or (b1 < a1 < b2 < a2) or a1 == b1 or a2 == b2 \
        or a1 == b2 or a2 == b1


def commute_columns(g: GridDiagram, i: int) -> GridDiagram:
    """Swap columns i and i+1; valid when their marker spans do not interleave."""
    n = g.size
    j = (i + 1) % n
    if j == 0:
        raise ParseError("commute the planar pair; cyclic-permute first")
    span_i = (g.x_cols[i], g.o_cols[i])
    span_j = (g.x_cols[j], g.o_cols[j])
    if _interleaved(span_i, span_j):
        raise ParseError(f"columns {i},{j} interleave; commutation is not a grid move")
    x = list(g.x_cols)
    o = list(g.o_cols)
    x[i], x[j] = x[j], x[i]
    o[i], o[j] = o[j], o[i]
    return GridDiagram(tuple(x), tuple(o))


def commute_rows(g: GridDiagram, i: int) -> GridDiagram:
    """Swap rows i and i+1 when their marker spans do not interleave."""
    n = g.size
    j = (i + 1) % n
    if j == 0:
        raise ParseError("commute the planar pair; cyclic-permute first")
    x_col = {r: c for c, r in enumerate(g.x_cols)}
    o_col = {r: c for c, r in enumerate(g.o_cols)}
    if _interleaved((x_col[i], o_col[i]), (x_col[j], o_col[j])):
        raise ParseError(f"rows {i},{j} interleave; commutation is not a grid move")
    swap = {i: j, j: i}
    return GridDiagram(tuple(swap.get(r, r) for r in g.x_cols),
                       tuple(swap.get(r, r) for r in g.o_cols))


def stabilize(g: GridDiagram, col: int) -> GridDiagram:
    """Stabilize at the X marker of the given column.

    The X at (c, r) is replaced by a 2x2 block: new X's at (c, r') and
    (c', r), a new O at (c', r'), where c' and r' are fresh column and row
    slots inserted just after c and r.  Inverse of destabilization; preserves
    the link type.
    """
    n = g.size
    r = g.x_cols[col]

    def bump_row(v: int) -> int:
        return v + 1 if v > r else v

    def bump_col_entry(values: list[int]) -> list[int]:
        return values[:col + 1] + [None] + values[col + 1:]

    x = bump_col_entry([bump_row(v) for v in g.x_cols])
    o = bump_col_entry([bump_row(v) for v in g.o_cols])
    # column col currently holds the old X at bumped row r; move it
    x[col] = r + 1          # X_b at (c, r')
    x[col + 1] = r          # X_a at (c', r)
    o[col + 1] = r + 1      # O_new at (c', r')
    return GridDiagram(tuple(x), tuple(o))


def _destabilize_block(g: GridDiagram, c: int, r: int) -> GridDiagram | None:
    """Merge the 2x2 block with lower-left corner (c, r) if it holds 3 markers.

    In a three-marker block the corner opposite the empty one is the single
    minority marker; deleting its row and column and restoring one majority
    marker at the empty corner undoes a stabilization of the matching type.
    """
    n = g.size
    c2, r2 = (c + 1) % n, (r + 1) % n
    cells = {}
    for cc in (c, c2):
        for rr in (r, r2):
            if g.x_cols[cc] == rr:
                cells[(cc, rr)] = "X"
            elif g.o_cols[cc] == rr:
                cells[(cc, rr)] = "O"
    if len(cells) != 3:
        return None
    corners = [(c, r), (c, r2), (c2, r), (c2, r2)]
    empty = next(p for p in corners if p not in cells)
    del_c = c if empty[0] == c2 else c2
    del_r = r if empty[1] == r2 else r2
    tags = list(cells.values())
    majority = "X" if tags.count("X") == 2 else "O"
    ex_c, ex_r = empty
    x = list(g.x_cols)
    o = list(g.o_cols)
    # the majority marker sharing the empty corner's column sits in the
    # deleted row; pull it back to the empty corner
    if majority == "X":
        if x[ex_c] != del_r:
            return None
        x[ex_c] = ex_r
    else:
        if o[ex_c] != del_r:
            return None
        o[ex_c] = ex_r
    x = [x[i] for i in range(n) if i != del_c]
    o = [o[i] for i in range(n) if i != del_c]
    x = [v - 1 if v > del_r else v for v in x]
    o = [v - 1 if v > del_r else v for v in o]
    if sorted(x) != list(range(n - 1)) or sorted(o) != list(range(n - 1)):
        return None
    if any(a == b for a, b in zip(x, o)):
        return None
    return GridDiagram(tuple(x), tuple(o))


def destabilize(g: GridDiagram) -> GridDiagram | None:
    """Remove one stabilization block if any exists; None when fully reduced."""
    if g.size <= 2:
        return None
    for c in range(g.size):
        for r in range(g.size):
            merged = _destabilize_block(g, c, r)
            if merged is not None:
                return merged
    return None
