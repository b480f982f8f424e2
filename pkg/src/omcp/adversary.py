"""Adversarial lower-bound games for deterministic sink-finding.

The main adversary plays against a sink-finding algorithm over a uniform
base (given by a generic realization): it starts from the all-zero
localization, and whenever a vertex inside the still-unoriented hypersink
subcube U is queried, it composes one negative lexicographic atom on the
lowest dimension spanning U.  That orients the queried vertex's facet of U
completely, keeps the other facet an unoriented hypersink, and shrinks U
by one dimension, so the first n queried vertices are never the sink.
Finalization composes negative t-atoms for the remaining dimensions,
yielding a non-degenerate instance consistent with the whole transcript.

The second construction is the collision-driven first phase that answers
queries through a growing dimension set L and a USO on the cube spanned
by L; a fixed five-query schedule forces it to build a 3-cube orientation
that is a USO but admits only two vertex-disjoint source-sink paths.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .cube import (
    ALGORITHMS,
    CountingOracle,
    Face,
    Orientation,
    holt_klee_value,
    is_uso_exhaustive,
    vertex_bit,
)
from .extend import ExtensionOM, LexAtom, Localization
from .guards import GAME_DIM, check
from .plcp import random_p_matrix
from .realize import RealizedOM, RationalMatrix, hstack, is_generic, negated
from .reduction import orient_vertex_total
from .signs import MINUS, PLUS, ZERO, GroundSet


class AdversaryState:
    """Mutable game state: current localization, hypersink subcube, transcript."""

    def __init__(self, base, limit: int | None = None):
        ground: GroundSet = base.ground
        if ground.pairs is None or ground.q is not None:
            raise ValueError("adversary base must live on a complementary ground set")
        if not base.is_uniform():
            raise ValueError("adversary base must be uniform")
        self.base = base
        self.n = ground.n_pairs
        check(self.n, GAME_DIM, limit, "game dimension")
        self.sigma = Localization(base)
        self.hypersink = Face.whole(self.n)
        self.transcript: list[tuple[int, tuple[int, ...]]] = []

    @property
    def oracle(self) -> ExtensionOM:
        return ExtensionOM(self.sigma)

    def answer(self, v: int) -> tuple[int, ...]:
        """Zero-free orientation of v, composing one atom if v lies in U."""
        u = self.hypersink
        if u.dim > 0 and u.contains(v):
            i = min(u.spanned)
            s_name, t_name = self.base.ground.pair(i)
            bit = vertex_bit(v, i, self.n)
            element = t_name if bit == 0 else s_name
            self.sigma = self.sigma.compose(
                Localization(self.base, (LexAtom(element, MINUS),))
            )
            self.hypersink = u.fix_dim(i, 1 - bit)
        out = orient_vertex_total(self.oracle, v, self.n)
        if ZERO in out:
            raise RuntimeError("adversary produced an unoriented half-edge; base not uniform?")
        self.transcript.append((v, out))
        return out

    def finalize(self) -> ExtensionOM:
        """Orient the remaining hypersink with negative t-atoms, ascending."""
        sigma = self.sigma
        for i in sorted(self.hypersink.spanned):
            _, t_name = self.base.ground.pair(i)
            sigma = sigma.compose(Localization(self.base, (LexAtom(t_name, MINUS),)))
        return ExtensionOM(sigma)


@dataclass(frozen=True)
class GameResult:
    query_count: int
    transcript: tuple[tuple[int, tuple[int, ...]], ...]
    oracle: ExtensionOM
    sink: int


def run_game(algo, state: AdversaryState) -> GameResult:
    """Play until the algorithm claims a sink; verify the claim and transcript."""
    if isinstance(algo, str):
        algo = ALGORITHMS[algo]
    counter = CountingOracle(state.answer)
    claimed = algo(counter, state.n)
    oracle = state.finalize()
    if any(s != MINUS for s in orient_vertex_total(oracle, claimed, state.n)):
        raise RuntimeError("algorithm claimed a vertex that is not the sink")
    for v, recorded in state.transcript:
        if orient_vertex_total(oracle, v, state.n) != recorded:
            raise RuntimeError("finalized instance contradicts the transcript")
    return GameResult(counter.count, tuple(state.transcript), oracle, claimed)


def random_uniform_base(n: int, rng: random.Random, max_tries: int = 64) -> RealizedOM:
    """Generic realization [I; -M] of a random P-matrix; uniformity asserted."""
    for _ in range(max_tries):
        m = random_p_matrix(n, rng)
        a = hstack(RationalMatrix.identity(n), negated(m))
        if is_generic(a):
            return RealizedOM(a, GroundSet.complementary(n))
    raise RuntimeError("could not draw a generic P-matrix realization")


# -- collision-forcing first phase ------------------------------------------


def _project(v: int, dims: list[int], n: int) -> int:
    p = 0
    for k, d in enumerate(dims):
        if vertex_bit(v, d, n):
            p |= 1 << (len(dims) - 1 - k)
    return p


class SSState:
    """First-phase state: dimension set L, a USO on the L-cube, queried vertices.

    Queries are answered by the projected location in the L-cube and
    outgoing everywhere else; when a query would collide with an earlier
    one under projection, the lowest differing non-L dimension is added to
    L and the L-cube orientation is doubled, with the new cross edges
    oriented away from the vertices queried so far (free slots point
    downward, which keeps the doubled orientation a USO either way).
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("first phase needs n >= 2")
        self.n = n
        self.budget = n - math.ceil(math.log2(n))
        self.dims: list[int] = []
        self.s_tilde = Orientation(0, table=[()])
        self.queried: list[int] = []

    def _extend(self, ell: int) -> None:
        old_dims = self.dims
        new_dims = sorted(old_dims + [ell])
        pos = new_dims.index(ell)
        hosts = {
            _project(u, old_dims, self.n): vertex_bit(u, ell, self.n)
            for u in self.queried
        }
        k = len(old_dims)
        table = []
        for p_new in range(1 << (k + 1)):
            side = (p_new >> (k - pos)) & 1
            upper = p_new >> (k - pos + 1)
            lower = p_new & ((1 << (k - pos)) - 1)
            p_old = (upper << (k - pos)) | lower
            old_row = list(self.s_tilde.outmap(p_old))
            if p_old in hosts:
                cross = PLUS if side == hosts[p_old] else MINUS
            else:
                cross = PLUS if side == 1 else MINUS
            table.append(tuple(old_row[:pos] + [cross] + old_row[pos:]))
        self.dims = new_dims
        self.s_tilde = Orientation(k + 1, table=table)

    def answer(self, v: int) -> tuple[int, ...]:
        if v not in self.queried and len(self.queried) >= self.budget:
            raise RuntimeError("first-phase query budget exhausted")
        collider = next(
            (
                u
                for u in self.queried
                if u != v
                and _project(u, self.dims, self.n) == _project(v, self.dims, self.n)
            ),
            None,
        )
        if collider is not None:
            ell = min(
                d
                for d in range(self.n)
                if d not in self.dims
                and vertex_bit(collider, d, self.n) != vertex_bit(v, d, self.n)
            )
            self._extend(ell)
        projected = self.s_tilde.outmap(_project(v, self.dims, self.n))
        out = [PLUS] * self.n
        for k, d in enumerate(self.dims):
            out[d] = projected[k]
        if v not in self.queried:
            self.queried.append(v)
        return tuple(out)


def ss_forcing_run(n: int) -> Orientation:
    """Drive the first phase with the fixed five-query schedule (n >= 8).

    Returns the forced 3-cube orientation; it is validated to be a USO
    whose Holt-Klee value is 2, one short of the dimension.
    """
    if n < 8:
        raise ValueError("the forcing schedule needs n >= 8")
    state = SSState(n)
    pool = [0, 1, 2]

    def vertex_of(bits_at: dict[int, int]) -> int:
        v = 0
        for d, b in bits_at.items():
            if b:
                v |= 1 << (n - 1 - d)
        return v

    state.answer(vertex_of({}))
    a2 = state.answer(vertex_of({d: 1 for d in pool}))
    detected = [d for d in pool if a2[d] == MINUS]
    assert len(detected) == 1, "second answer must have exactly one incoming edge"
    ell1 = detected[0]
    rest = [d for d in pool if d != ell1]

    a3 = state.answer(vertex_of({d: 1 for d in rest}))
    detected = [d for d in pool if a3[d] == MINUS]
    assert len(detected) == 1
    ell2 = detected[0]
    ell3 = next(d for d in pool if d not in (ell1, ell2))

    before = len(state.dims)
    state.answer(vertex_of({ell1: 1}))
    assert len(state.dims) == before, "fourth query must not grow L"

    state.answer(vertex_of({ell3: 1}))
    assert sorted(state.dims) == sorted(pool)

    forced = state.s_tilde
    assert is_uso_exhaustive(forced)
    assert holt_klee_value(forced) == 2
    return forced
