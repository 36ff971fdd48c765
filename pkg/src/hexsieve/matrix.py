"""The composite-generating grid g(i,j) = i + j(6i+1) and its structure.

Lifting a grid value through 6g+1 factors exactly:

    6*(i + j*(6i+1)) + 1 == (6i+1)*(6j+1)

so every off-axis cell is the index of a composite candidate — both factors
have absolute value >= 5 once i and j are nonzero.  The grid is symmetric
(g(i,j) == g(j,i)), its axes reproduce the integers themselves (g(i,0) == i,
g(0,j) == j), and the sign of an off-axis cell is determined by its quadrant.

Coordinates are Cartesian: i is the column, j the row, j increases upward.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .residues import _check_int64


class Quadrant(enum.Enum):
    I = "I"        # i >= 1, j >= 1
    II = "II"      # i <= -1, j >= 1
    III = "III"    # i >= 1, j <= -1
    IV = "IV"      # i <= -1, j <= -1
    AXIS = "axis"  # i == 0 or j == 0


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    EITHER = "either"


class ProductForm(enum.Enum):
    """Residue classes of the two factors of 6*g(i,j)+1."""

    ALPHA_ALPHA = "alpha*alpha"
    BETA_BETA = "beta*beta"
    ALPHA_BETA = "alpha*beta"


@dataclass(frozen=True)
class MatrixCell:
    i: int
    j: int
    value: int


@dataclass(frozen=True)
class MatrixWindow:
    """Dense rectangular view of the grid; rows stored with j ascending."""

    i_min: int
    i_max: int
    j_min: int
    j_max: int
    rows: tuple[tuple[int, ...], ...]

    def value_at(self, i: int, j: int) -> int:
        if not (self.i_min <= i <= self.i_max and self.j_min <= j <= self.j_max):
            raise ValueError(f"({i}, {j}) outside window")
        return self.rows[j - self.j_min][i - self.i_min]

    def cells(self) -> Iterator[MatrixCell]:
        for j in range(self.j_min, self.j_max + 1):
            for i in range(self.i_min, self.i_max + 1):
                yield MatrixCell(i, j, self.value_at(i, j))

    def render_text(self) -> str:
        """Plain-text grid, j decreasing downward (Cartesian orientation)."""
        width = max(len(str(v)) for row in self.rows for v in row)
        lines = []
        for j in range(self.j_max, self.j_min - 1, -1):
            row = self.rows[j - self.j_min]
            lines.append(" ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


def cell_value(i: int, j: int) -> int:
    """g(i,j) = i + j*(6i+1), overflow-checked."""
    return _check_int64(i + j * (6 * i + 1), "grid cell")


def lifted(i: int, j: int) -> int:
    """6*g(i,j) + 1, which equals (6i+1)*(6j+1); rejected on the axes.

    Off the axes |6i+1| and |6j+1| are both >= 5, so |lifted(i, j)| is
    always composite.
    """
    if i == 0 or j == 0:
        raise ValueError("lifted(i, j) requires i != 0 and j != 0")
    return _check_int64((6 * i + 1) * (6 * j + 1), "lifted cell")


def quadrant_of(i: int, j: int) -> Quadrant:
    if i == 0 or j == 0:
        return Quadrant.AXIS
    if i > 0:
        return Quadrant.I if j > 0 else Quadrant.III
    return Quadrant.II if j > 0 else Quadrant.IV


def predicted_sign(q: Quadrant) -> Sign:
    """Sign of every off-axis cell in the quadrant.

    Quadrants I and IV are positive (for IV, i+j <= -1 and ij >= |i+j|, so
    6ij + i + j >= 5|i+j| > 0).  II and III are negative: j(6i+1) dominates i
    and carries the opposite sign, and the cell value is never 0 off-axis
    because |6i+1| > |i| forces |j| < 1 at a zero.
    """
    if q is Quadrant.AXIS:
        return Sign.EITHER
    if q in (Quadrant.I, Quadrant.IV):
        return Sign.POSITIVE
    return Sign.NEGATIVE


def product_form(i: int, j: int) -> ProductForm:
    """Residue classes of the factor pair (6i+1, 6j+1) by quadrant.

    Positive indices give positive alpha factors; negative indices give
    factors whose absolute value 6|i|-1 is beta.  Signs cancel in pairs, so
    the class of |lifted(i, j)| is the class product of the factors.
    """
    if i == 0 or j == 0:
        raise ValueError("product_form(i, j) requires i != 0 and j != 0")
    if i > 0 and j > 0:
        return ProductForm.ALPHA_ALPHA
    if i < 0 and j < 0:
        return ProductForm.BETA_BETA
    return ProductForm.ALPHA_BETA


def window(i_min: int, i_max: int, j_min: int, j_max: int) -> MatrixWindow:
    """Dense window of cell values over [i_min, i_max] x [j_min, j_max]."""
    if i_min > i_max or j_min > j_max:
        raise ValueError("window bounds must satisfy i_min <= i_max and j_min <= j_max")
    rows = tuple(
        tuple(cell_value(i, j) for i in range(i_min, i_max + 1))
        for j in range(j_min, j_max + 1)
    )
    return MatrixWindow(i_min=i_min, i_max=i_max, j_min=j_min, j_max=j_max, rows=rows)
