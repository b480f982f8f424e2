"""Linear complementarity front end over exact rationals.

Solving w - Mz = q with the complementarity pattern of a cube vertex
selects one basic variable per index; the signs of the basic values
orient the cube directly, and that orientation agrees vertexwise with the
one derived from the realization [I; -M; -q].  A symbolic two-level
q-vector (q1 then infinitesimally weighted q2) mirrors first-nonzero
composition of localizations without ever choosing a numeric epsilon.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from . import linalg
from .cube import Orientation, vertex_bit
from .realize import RationalMatrix, RealizedOM, Vector, parse_vector
from .signs import MINUS, PLUS, ZERO, SignedSet


@dataclass(frozen=True)
class SymbolicQ:
    """Lexicographically layered right-hand side: earlier levels dominate."""

    levels: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if not self.levels:
            raise ValueError("need at least one level")
        if len({len(v) for v in self.levels}) != 1:
            raise ValueError("levels must have equal length")

    @property
    def length(self) -> int:
        return len(self.levels[0])


def _as_levels(q) -> tuple[Vector, ...]:
    if isinstance(q, SymbolicQ):
        return q.levels
    return (tuple(q),)


def compose_q(q1, q2) -> SymbolicQ:
    """Two-level composition: sign queries read q1 first, then q2."""
    levels = _as_levels(q1) + _as_levels(q2)
    if len({len(v) for v in levels}) != 1:
        raise ValueError("q-vectors must have equal length")
    return SymbolicQ(levels)


@dataclass(frozen=True)
class PlcpInstance:
    matrix: RationalMatrix
    q: Vector

    def __post_init__(self) -> None:
        if self.matrix.rows != self.matrix.cols or len(self.q) != self.matrix.rows:
            raise ValueError("need a square M and a matching q")

    @property
    def n(self) -> int:
        return self.matrix.rows

    def to_json_dict(self) -> dict:
        return {"M": self.matrix.to_json_rows(), "q": [str(v) for v in self.q]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "PlcpInstance":
        return cls(RationalMatrix.from_rows(d["M"]), parse_vector(d["q"]))


def is_p_matrix(m: RationalMatrix) -> tuple[bool, tuple[int, ...] | None]:
    """All 2^n - 1 principal minors positive; witness index set on failure."""
    if m.rows != m.cols:
        raise ValueError("P-matrix check needs a square matrix")
    n = m.rows
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            sub = [[m.entries[i][j] for j in combo] for i in combo]
            if linalg.det(sub) <= 0:
                return False, combo
    return True, None


def _basis_columns(m: RationalMatrix, basis: frozenset[str]) -> list[list[Fraction]]:
    """Columns of [I; -M] selected by a complementary basis, in dimension order."""
    n = m.rows
    cols = []
    for i in range(n):
        if f"s{i + 1}" in basis:
            cols.append([Fraction(int(r == i)) for r in range(n)])
        elif f"t{i + 1}" in basis:
            cols.append([-m.entries[r][i] for r in range(n)])
        else:
            raise ValueError(f"basis misses dimension {i + 1}")
    return [[cols[j][r] for j in range(n)] for r in range(n)]


def basic_solution(
    m: RationalMatrix, q: Vector, basis: frozenset[str]
) -> tuple[Vector, Vector] | None:
    """Solve w - Mz = q with z_i = 0 for s_i in B, w_i = 0 for t_i in B.

    None when the selected column basis is singular.
    """
    n = m.rows
    rows = _basis_columns(m, basis)
    u = linalg.solve(rows, list(q))
    if u is None:
        return None
    w = [Fraction(0)] * n
    z = [Fraction(0)] * n
    for i in range(n):
        if f"s{i + 1}" in basis:
            w[i] = u[i]
        else:
            z[i] = u[i]
    return tuple(w), tuple(z)


def is_lcp_solution(m: RationalMatrix, q: Vector, w: Vector, z: Vector) -> bool:
    n = m.rows
    for i in range(n):
        lhs = w[i] - sum(m.entries[i][j] * z[j] for j in range(n))
        if lhs != q[i]:
            return False
    return all(v >= 0 for v in w) and all(v >= 0 for v in z) and all(
        w[i] * z[i] == 0 for i in range(n)
    )


def plcp_orientation(m: RationalMatrix, q, v: int) -> tuple[int, ...]:
    """Half-edge signs at vertex v from the basic-solution signs at B(v).

    Degenerate (zero) basic values stay unoriented; with a symbolic q the
    sign of each basic value is the first non-zero sign across levels.
    """
    n = m.rows
    levels = _as_levels(q)
    basis = frozenset(
        f"t{i + 1}" if vertex_bit(v, i, n) else f"s{i + 1}" for i in range(n)
    )
    rows = _basis_columns(m, basis)
    inv = linalg.invert(rows)
    if inv is None:
        raise ValueError(f"basis at vertex {v:0{n}b} is singular")
    out = []
    for i in range(n):
        sign = ZERO
        for level in levels:
            value = sum(inv[i][r] * level[r] for r in range(n))
            if value != 0:
                sign = PLUS if value > 0 else MINUS
                break
        # incoming half-edge for a positive basic value, outgoing for negative
        out.append(ZERO if sign == ZERO else (MINUS if sign == PLUS else PLUS))
    return tuple(out)


def plcp_ppu(m: RationalMatrix, q, n: int | None = None) -> Orientation:
    n = n if n is not None else m.rows
    return Orientation(n, fn=lambda v: plcp_orientation(m, q, v)).materialize()


def localization_from_q(base: RealizedOM, q: Vector):
    """Explicit localization table induced by a q-vector on a realized base.

    Each cocircuit of [I; -M] is the sign vector of some covector y; the
    induced extension assigns that cocircuit the sign of y . (-q), matching
    the circuits of [I; -M; -q].
    """
    from .extend import Localization

    n = base.rank
    cols = [base.matrix.column(j) for j in range(base.matrix.cols)]
    table: dict[SignedSet, int] = {}
    for combo in itertools.combinations(range(base.matrix.cols), n - 1):
        sub = [cols[j] for j in combo]
        if sub and linalg.mat_rank([[c[i] for c in sub] for i in range(n)]) != n - 1:
            continue
        y = linalg.kernel_vector_of_columns(
            [[col[i] for col in sub] for i in range(n)] if sub else []
        )
        if y is None:
            if sub:
                continue
            y = [Fraction(1)] + [Fraction(0)] * (n - 1)
        signs = []
        for col in cols:
            val = sum(y[i] * col[i] for i in range(n))
            signs.append(PLUS if val > 0 else (MINUS if val < 0 else ZERO))
        if all(s == ZERO for s in signs):
            continue
        d = SignedSet(base.ground, tuple(signs))
        q_val = sum(y[i] * -q[i] for i in range(n))
        sigma = PLUS if q_val > 0 else (MINUS if q_val < 0 else ZERO)
        table[d] = sigma
        table[d.negate()] = -sigma
    return Localization(base, (), table)


def random_p_matrix(n: int, rng: random.Random, spread: int = 3) -> RationalMatrix:
    """Strictly diagonally dominant with positive diagonal, hence a P-matrix.

    Off-diagonal entries are non-zero rationals with varied denominators so
    that realizations [I; -M] come out generic with high probability.
    """
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            sign = -1 if rng.random() < 0.5 else 1
            row.append(
                Fraction(sign * rng.randint(1, 3 * spread), rng.randint(1, spread))
            )
        row[i] = sum(abs(v) for v in row) + Fraction(
            rng.randint(1, 2 * spread), rng.randint(1, spread)
        )
        rows.append(row)
    return RationalMatrix(tuple(tuple(r) for r in rows))


def random_q(n: int, rng: random.Random, spread: int = 4) -> Vector:
    return tuple(Fraction(rng.randint(-spread, spread)) for _ in range(n))
