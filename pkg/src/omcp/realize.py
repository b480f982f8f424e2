"""Exact-rational realizations of oriented matroids.

A column configuration over the rationals realizes an oriented matroid
whose circuits are the sign patterns of the minimal linear dependencies
among columns.  Besides materializing that circuit set, this module
provides :class:`RealizedOM`, an oracle-grade representation that answers
basis and fundamental circuit/cocircuit queries directly from the matrix
without ever enumerating circuits, and the construction producing the
complementarity instance [I; -M; -q] from an LCP pair (M, q).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .guards import MATRIX_COLUMNS, check
from .om import NOT_A_BASIS, ExplicitOM, NotABasis
from .signs import MINUS, PLUS, ZERO, GroundSet, SignedSet

Vector = tuple[Fraction, ...]


def parse_rational(value) -> Fraction:
    """Fraction from int, string 'p/q', or float-free decimal string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.replace("−", "-").strip())
    raise ValueError(f"cannot parse rational from {value!r}")


def parse_vector(values: Iterable) -> Vector:
    return tuple(parse_rational(v) for v in values)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable matrix of exact rationals, stored row-major."""

    entries: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.entries and len({len(r) for r in self.entries}) != 1:
            raise ValueError("rows must have equal length")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        return cls(tuple(parse_vector(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(
            tuple(
                tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
            )
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.entries]

    def columns(self, js: Sequence[int]) -> list[list[Fraction]]:
        return [[row[j] for j in js] for row in self.entries]

    def row_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def scale_column(self, j: int, factor: Fraction) -> "RationalMatrix":
        return RationalMatrix(
            tuple(
                tuple(v * factor if k == j else v for k, v in enumerate(row))
                for row in self.entries
            )
        )

    def to_json_rows(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.entries]


def hstack(*parts: RationalMatrix) -> RationalMatrix:
    rows = parts[0].rows
    if any(p.rows != rows for p in parts):
        raise ValueError("row counts differ")
    return RationalMatrix(
        tuple(
            tuple(itertools.chain.from_iterable(p.entries[i] for p in parts))
            for i in range(rows)
        )
    )


def negated(m: RationalMatrix) -> RationalMatrix:
    return RationalMatrix(tuple(tuple(-v for v in row) for row in m.entries))


def circuits_from_matrix(
    matrix: RationalMatrix, ground: GroundSet, limit: int | None = None
) -> ExplicitOM:
    """Oriented matroid of the column configuration.

    Column subsets are scanned in increasing size; a subset that contains no
    previously found circuit support and is linearly dependent is minimal,
    and its (one-dimensional) exact kernel yields the dependency signs.
    Both sign variants are emitted, normalized so the first non-zero
    coefficient of the representative is positive.
    """
    if matrix.cols != ground.size:
        raise ValueError("column count does not match ground-set size")
    check(matrix.cols, MATRIX_COLUMNS, limit, "matrix columns")

    found_supports: list[int] = []
    circuits: set[SignedSet] = set()
    indices = range(matrix.cols)
    for size in range(1, matrix.cols + 1):
        for combo in itertools.combinations(indices, size):
            mask = 0
            for j in combo:
                mask |= 1 << j
            if any(s & ~mask == 0 for s in found_supports):
                continue
            kernel = linalg.kernel_vector_of_columns(
                [matrix.column(j) for j in combo]
            )
            if kernel is None:
                continue
            if any(v == 0 for v in kernel):
                raise RuntimeError("kernel of a minimal dependent set must have full support")
            if kernel[0] < 0:
                kernel = [-v for v in kernel]
            signs = [ZERO] * ground.size
            for j, v in zip(combo, kernel):
                signs[j] = PLUS if v > 0 else MINUS
            circuit = SignedSet(ground, tuple(signs))
            circuits.add(circuit)
            circuits.add(circuit.negate())
            found_supports.append(mask)
    return ExplicitOM(ground, frozenset(circuits))


def is_generic(matrix: RationalMatrix) -> bool:
    """Every row-count-sized column subset is nonsingular (uniform realization)."""
    r = matrix.rows
    for combo in itertools.combinations(range(matrix.cols), r):
        sub = matrix.columns(combo)
        if linalg.det(sub) == 0:
            return False
    return True


def plcp_matrix(m: RationalMatrix, q: Vector) -> RationalMatrix:
    """The configuration [I; -M; -q] with columns s_1..s_n, t_1..t_n, q."""
    n = m.rows
    if m.cols != n or len(q) != n:
        raise ValueError("need a square M and a matching q")
    neg_q = RationalMatrix(tuple((-v,) for v in q))
    return hstack(RationalMatrix.identity(n), negated(m), neg_q)


def omcp_from_plcp(
    m: RationalMatrix, q: Vector, limit: int | None = None
) -> ExplicitOM:
    """Explicit circuit set of the complementarity instance built from (M, q)."""
    ground = GroundSet.complementary(m.rows, with_q=True)
    return circuits_from_matrix(plcp_matrix(m, q), ground, limit=limit)


@dataclass(frozen=True, eq=False)
class RealizedOM:
    """Circuit oracle backed by a full-row-rank rational realization.

    Queries are answered by exact solves against column submatrices, so no
    part of the circuit collection has to be materialized up front.  The
    full-row-rank restriction covers every configuration this package
    builds ([I; ...] blocks); rank-deficient realizations go through
    :func:`circuits_from_matrix` and :class:`ExplicitOM` instead.
    """

    matrix: RationalMatrix
    ground: GroundSet

    def __post_init__(self) -> None:
        if self.matrix.cols != self.ground.size:
            raise ValueError("column count does not match ground-set size")
        if linalg.mat_rank(self.matrix.row_lists()) != self.matrix.rows:
            raise ValueError("realization oracle requires full row rank")

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def _cache(self) -> dict:
        return self.__dict__.setdefault("_basis_cache", {})

    def _column_indices(self, names: Iterable[str]) -> list[int]:
        return sorted(self.ground.index(name) for name in names)

    def _basis_inverse(self, names: frozenset[str]):
        """Inverse of the basis submatrix, cached; None when singular."""
        cache = self._cache()
        if names not in cache:
            js = self._column_indices(names)
            cache[names] = (js, linalg.invert(self.matrix.columns(js)))
        return cache[names]

    def is_basis(self, subset: Iterable[str]) -> bool:
        names = frozenset(subset)
        if len(names) != self.rank:
            return False
        return self._basis_inverse(names)[1] is not None

    def is_independent(self, subset: Iterable[str]) -> bool:
        js = self._column_indices(subset)
        cols = self.matrix.columns(js)
        return linalg.mat_rank(cols) == len(js)

    def is_uniform(self) -> bool:
        return is_generic(self.matrix)

    def query(self, basis: Iterable[str], e: str) -> SignedSet | NotABasis:
        """NotABasis, or the fundamental circuit C(B, e) from an exact solve."""
        names = frozenset(basis)
        if e in names:
            raise ValueError("oracle element must lie outside the queried set")
        j_e = self.ground.index(e)
        if len(names) != self.rank:
            return NOT_A_BASIS
        js, inv = self._basis_inverse(names)
        if inv is None:
            return NOT_A_BASIS
        target = self.matrix.column(j_e)
        coeffs = [
            sum(inv[r][i] * target[i] for i in range(self.rank))
            for r in range(self.rank)
        ]
        signs = [ZERO] * self.ground.size
        signs[j_e] = PLUS
        for j, c in zip(js, coeffs):
            signs[j] = MINUS if c > 0 else (PLUS if c < 0 else ZERO)
        return SignedSet(self.ground, tuple(signs))

    def fundamental_circuit(self, basis: Iterable[str], e: str) -> SignedSet | NotABasis:
        return self.query(basis, e)

    def fundamental_cocircuit(self, basis: Iterable[str], e: str) -> SignedSet:
        """Signs of the basis covector vanishing on B minus e, positive at e."""
        names = frozenset(basis)
        if e not in names:
            raise ValueError("fundamental cocircuits need an element of the basis")
        js, inv = self._basis_inverse(names)
        if inv is None:
            raise ValueError("fundamental cocircuits are defined for bases only")
        row = inv[js.index(self.ground.index(e))]
        signs = []
        for j in range(self.ground.size):
            col = self.matrix.column(j)
            v = sum(row[i] * col[i] for i in range(self.rank))
            signs.append(PLUS if v > 0 else (MINUS if v < 0 else ZERO))
        return SignedSet(self.ground, tuple(signs))

    def cocircuits(self, limit: int | None = None) -> frozenset[SignedSet]:
        """All cocircuits, one ± pair per hyperplane spanned by columns."""
        if "_cocircuits" in self.__dict__:
            return self.__dict__["_cocircuits"]
        n = self.rank
        cols = [self.matrix.column(j) for j in range(self.matrix.cols)]
        result: set[SignedSet] = set()
        for combo in itertools.combinations(range(self.matrix.cols), n - 1):
            sub = [cols[j] for j in combo]
            if sub and linalg.mat_rank([[c[i] for c in sub] for i in range(n)]) != n - 1:
                continue
            # y spans the orthogonal complement of the chosen columns.
            y = linalg.kernel_vector_of_columns(
                [[col[i] for col in sub] for i in range(n)] if sub else []
            )
            if y is None:
                if sub:
                    continue
                y = [Fraction(1)] + [Fraction(0)] * (n - 1)
            signs = []
            for col in cols:
                v = sum(y[i] * col[i] for i in range(n))
                signs.append(PLUS if v > 0 else (MINUS if v < 0 else ZERO))
            if all(s == ZERO for s in signs):
                continue
            first = next(s for s in signs if s != ZERO)
            if first == MINUS:
                signs = [-s for s in signs]
            d = SignedSet(self.ground, tuple(signs))
            result.add(d)
            result.add(d.negate())
        out = frozenset(result)
        self.__dict__["_cocircuits"] = out
        return out

    def circuit_set(self, limit: int | None = None) -> frozenset[SignedSet]:
        if "_circuits" in self.__dict__:
            return self.__dict__["_circuits"]
        out = circuits_from_matrix(self.matrix, self.ground, limit=limit).circuits
        self.__dict__["_circuits"] = out
        return out

    def to_explicit(self, limit: int | None = None) -> ExplicitOM:
        return ExplicitOM(self.ground, self.circuit_set(limit))
