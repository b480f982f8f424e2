"""Hypercube orientations, partial orientations, and sink-finding.

Vertices of the n-cube are integers whose binary string (most significant
bit = dimension 0) matches the serialized vertex order 00, 01, 10, 11, ...
An orientation maps each vertex to a tuple of half-edge signs, +1 for
outgoing, -1 for incoming, 0 for an unoriented (degenerate) half-edge in
the partial case.  Orientations are either dense tables or pure query
oracles; both are immutable after construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import networkx as nx

from .guards import USO_EXHAUSTIVE_DIM, check
from .signs import MINUS, PLUS, ZERO, char_sign, sign_char


def vertex_bit(v: int, i: int, n: int) -> int:
    return (v >> (n - 1 - i)) & 1


def vertex_bits(v: int, n: int) -> tuple[int, ...]:
    return tuple(vertex_bit(v, i, n) for i in range(n))


def flip_vertex(v: int, i: int, n: int) -> int:
    return v ^ (1 << (n - 1 - i))


def vertex_name(v: int, n: int) -> str:
    return format(v, f"0{n}b")


def vertex_from_name(s: str) -> int:
    return int(s, 2)


class Orientation:
    """(Partial) orientation of the n-cube, dense table or query oracle."""

    def __init__(
        self,
        n: int,
        table: Sequence[tuple[int, ...]] | None = None,
        fn: Callable[[int], tuple[int, ...]] | None = None,
    ):
        if (table is None) == (fn is None):
            raise ValueError("provide exactly one of table or fn")
        self.n = n
        if table is not None:
            table = tuple(tuple(row) for row in table)
            if len(table) != 1 << n or any(len(row) != n for row in table):
                raise ValueError("table must hold one sign vector per vertex")
            self._table: tuple[tuple[int, ...], ...] | None = table
            self._fn = None
        else:
            self._table = None
            self._fn = fn

    @classmethod
    def from_outmaps(cls, outmaps: Sequence[str]) -> "Orientation":
        n = len(outmaps[0])
        return cls(
            n, table=[tuple(char_sign(c) for c in row) for row in outmaps]
        )

    def to_outmaps(self) -> list[str]:
        return ["".join(sign_char(s) for s in self.outmap(v)) for v in self.vertices()]

    def outmap(self, v: int) -> tuple[int, ...]:
        if self._table is not None:
            return self._table[v]
        return tuple(self._fn(v))

    def vertices(self) -> range:
        return range(1 << self.n)

    def materialize(self) -> "Orientation":
        if self._table is not None:
            return self
        return Orientation(self.n, table=[self.outmap(v) for v in self.vertices()])

    def is_total(self) -> bool:
        return all(ZERO not in self.outmap(v) for v in self.vertices())

    def to_json_dict(self) -> dict:
        return {"n": self.n, "outmaps": self.to_outmaps()}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Orientation":
        o = cls.from_outmaps(d["outmaps"])
        if o.n != d.get("n", o.n):
            raise ValueError("dimension does not match outmap length")
        return o


class CountingOracle:
    """Caching wrapper; ``count`` is the number of distinct vertices evaluated."""

    def __init__(self, fn: Callable[[int], tuple[int, ...]]):
        self._fn = fn
        self.cache: dict[int, tuple[int, ...]] = {}

    def __call__(self, v: int) -> tuple[int, ...]:
        if v not in self.cache:
            self.cache[v] = tuple(self._fn(v))
        return self.cache[v]

    @property
    def count(self) -> int:
        return len(self.cache)


@dataclass(frozen=True)
class Face:
    """Subcube: fixed coordinates with values plus the spanned dimension set."""

    n: int
    fixed: tuple[tuple[int, int], ...]
    spanned: frozenset[int]

    def __post_init__(self) -> None:
        fixed_dims = {d for d, _ in self.fixed}
        if fixed_dims & self.spanned or fixed_dims | self.spanned != set(range(self.n)):
            raise ValueError("fixed and spanned dimensions must partition [n]")
        if list(self.fixed) != sorted(self.fixed):
            raise ValueError("fixed coordinates must be sorted by dimension")

    @classmethod
    def whole(cls, n: int) -> "Face":
        return cls(n, (), frozenset(range(n)))

    @classmethod
    def of_vertex_span(cls, v: int, n: int, spanned: Iterable[int]) -> "Face":
        spanned = frozenset(spanned)
        fixed = tuple(
            (i, vertex_bit(v, i, n)) for i in range(n) if i not in spanned
        )
        return cls(n, fixed, spanned)

    @property
    def dim(self) -> int:
        return len(self.spanned)

    def contains(self, v: int) -> bool:
        return all(vertex_bit(v, d, self.n) == b for d, b in self.fixed)

    def vertices(self) -> Iterator[int]:
        base = 0
        for d, b in self.fixed:
            if b:
                base |= 1 << (self.n - 1 - d)
        span = sorted(self.spanned)
        for bits in itertools.product((0, 1), repeat=len(span)):
            v = base
            for d, b in zip(span, bits):
                if b:
                    v |= 1 << (self.n - 1 - d)
            yield v

    def fix_dim(self, i: int, bit: int) -> "Face":
        if i not in self.spanned:
            raise ValueError("can only fix a spanned dimension")
        fixed = tuple(sorted(self.fixed + ((i, bit),)))
        return Face(self.n, fixed, self.spanned - {i})

    def project(self, v: int) -> int:
        """Vertex of the dim(face)-cube given by the spanned coordinates."""
        span = sorted(self.spanned)
        p = 0
        for k, d in enumerate(span):
            if vertex_bit(v, d, self.n):
                p |= 1 << (len(span) - 1 - k)
        return p


def find_sw_violation(o: Orientation) -> tuple[int, int] | None:
    """Pair v != w agreeing on every spanned half-edge direction, else None.

    The returned pair is exactly the UV1 witness shape; None means the
    orientation satisfies the pairwise condition equivalent to being a USO.
    """
    n = o.n
    maps = [o.outmap(v) for v in o.vertices()]
    for v in o.vertices():
        if ZERO in maps[v]:
            raise ValueError("total orientation required")
    for v in o.vertices():
        for w in range(v + 1, 1 << n):
            ok = False
            for i in range(n):
                if vertex_bit(v, i, n) != vertex_bit(w, i, n) and maps[v][i] != maps[w][i]:
                    ok = True
                    break
            if not ok:
                return v, w
    return None


def _face_iter(n: int):
    for pattern in itertools.product((0, 1, 2), repeat=n):
        yield pattern  # 2 marks a spanned dimension


def is_uso_exhaustive(o: Orientation, limit: int | None = None) -> bool:
    """Definition check: every non-empty subcube has exactly one sink."""
    n = o.n
    check(n, USO_EXHAUSTIVE_DIM, limit, "cube dimension")
    maps = [o.outmap(v) for v in o.vertices()]
    for pattern in _face_iter(n):
        spanned = [i for i, p in enumerate(pattern) if p == 2]
        base = 0
        for i, p in enumerate(pattern):
            if p == 1:
                base |= 1 << (n - 1 - i)
        sinks = 0
        for bits in itertools.product((0, 1), repeat=len(spanned)):
            v = base
            for d, b in zip(spanned, bits):
                if b:
                    v |= 1 << (n - 1 - d)
            if all(maps[v][i] == MINUS for i in spanned):
                sinks += 1
                if sinks > 1:
                    return False
        if sinks != 1:
            return False
    return True


def is_partially_sw(o: Orientation) -> tuple[bool, tuple[int, int] | None]:
    """Every pair is either fully unoriented across its span or split somewhere."""
    n = o.n
    maps = [o.outmap(v) for v in o.vertices()]
    for v in o.vertices():
        for w in range(v + 1, 1 << n):
            spanned = [
                i for i in range(n) if vertex_bit(v, i, n) != vertex_bit(w, i, n)
            ]
            all_zero = all(maps[v][i] == ZERO and maps[w][i] == ZERO for i in spanned)
            split = any(
                maps[v][i] != ZERO and maps[w][i] == -maps[v][i] for i in spanned
            )
            if not (all_zero or split):
                return False, (v, w)
    return True, None


def complete_downward(o: Orientation) -> Orientation:
    """Direct every unoriented edge from the endpoint with more ones downward."""
    ok, witness = is_partially_sw(o)
    if not ok:
        raise ValueError(f"not partially Szabo-Welzl, witness pair {witness}")
    n = o.n
    table = []
    for v in o.vertices():
        row = list(o.outmap(v))
        for i in range(n):
            if row[i] == ZERO:
                row[i] = PLUS if vertex_bit(v, i, n) else MINUS
        table.append(tuple(row))
    return Orientation(n, table=table)


def unoriented_faces(o: Orientation) -> list[Face]:
    """Maximal unoriented faces; validates they are disjoint hypervertices.

    Every vertex with zero entries spans a face along its zero dimensions;
    all vertices of that face must share the identical sign vector (same
    zeros, same orientation toward the rest of the cube), otherwise the
    input was not produced by the complementarity reduction and a
    ValueError is raised.
    """
    n = o.n
    maps = [o.outmap(v) for v in o.vertices()]
    faces: dict[Face, int] = {}
    for v in o.vertices():
        zero_dims = frozenset(i for i in range(n) if maps[v][i] == ZERO)
        if not zero_dims:
            continue
        face = Face.of_vertex_span(v, n, zero_dims)
        if face in faces:
            continue
        for w in face.vertices():
            if maps[w] != maps[v]:
                raise ValueError(
                    f"unoriented region at {vertex_name(v, n)} is not a hypervertex face"
                )
        faces[face] = v
    return sorted(faces, key=lambda f: (sorted(f.spanned), f.fixed))


def is_hypervertex(o: Orientation, face: Face) -> bool:
    """All face vertices orient identically toward the non-spanned dimensions."""
    outside = [i for i in range(face.n) if i not in face.spanned]
    reference = None
    for v in face.vertices():
        signature = tuple(o.outmap(v)[i] for i in outside)
        if reference is None:
            reference = signature
        elif signature != reference:
            return False
    return True


def refill_hypervertex(o: Orientation, face: Face, inner: Orientation) -> Orientation:
    """Replace the interior orientation of a hypervertex face.

    The spanned dimensions of each face vertex take their signs from
    ``inner`` at the projected vertex; everything else is unchanged.
    """
    if inner.n != face.dim:
        raise ValueError("inner orientation dimension does not match the face")
    if not is_hypervertex(o, face):
        raise ValueError("face is not a hypervertex")
    n = o.n
    span = sorted(face.spanned)
    table = [list(o.outmap(v)) for v in o.vertices()]
    for v in face.vertices():
        inner_map = inner.outmap(face.project(v))
        for k, d in enumerate(span):
            table[v][d] = inner_map[k]
    return Orientation(n, table=[tuple(row) for row in table])


def source_vertex(o: Orientation) -> int:
    for v in o.vertices():
        if all(s == PLUS for s in o.outmap(v)):
            return v
    raise ValueError("orientation has no source")


def sink_vertex(o: Orientation) -> int:
    for v in o.vertices():
        if all(s == MINUS for s in o.outmap(v)):
            return v
    raise ValueError("orientation has no sink")


def holt_klee_value(o: Orientation, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint directed source-sink paths.

    Unit-capacity max flow on the node-split digraph; the source and sink
    themselves are not split.  The orientation must be a USO.
    """
    if not is_uso_exhaustive(o, limit):
        raise ValueError("Holt-Klee value is defined for USOs")
    n = o.n
    src, snk = source_vertex(o), sink_vertex(o)
    graph = nx.DiGraph()

    def out_node(v: int):
        return "s" if v == src else ("t" if v == snk else ("out", v))

    def in_node(v: int):
        return "s" if v == src else ("t" if v == snk else ("in", v))

    for v in o.vertices():
        if v not in (src, snk):
            graph.add_edge(("in", v), ("out", v), capacity=1)
        for i, s in enumerate(o.outmap(v)):
            if s == PLUS:
                w = flip_vertex(v, i, n)
                graph.add_edge(out_node(v), in_node(w), capacity=1)
    return nx.maximum_flow_value(graph, "s", "t")


# -- sink-finding algorithms ------------------------------------------------


def ordered_scan(query: Callable[[int], tuple[int, ...]], n: int) -> int:
    for v in range(1 << n):
        if all(s == MINUS for s in query(v)):
            return v
    raise RuntimeError("no sink found by full scan")


def jump_with_fallback(query: Callable[[int], tuple[int, ...]], n: int) -> int:
    """Repeat v <- v xor outmap(v); on a revisit fall back to ordered scan."""
    visited: set[int] = set()
    v = 0
    while v not in visited:
        visited.add(v)
        out = query(v)
        if all(s == MINUS for s in out):
            return v
        mask = 0
        for i, s in enumerate(out):
            if s == PLUS:
                mask |= 1 << (n - 1 - i)
        v ^= mask
    return ordered_scan(query, n)


ALGORITHMS: dict[str, Callable] = {
    "ordered-scan": ordered_scan,
    "jump": jump_with_fallback,
    "jump-with-fallback": jump_with_fallback,
}


def sink_find(algo, o: Orientation, n: int | None = None) -> tuple[int, int]:
    """Run a deterministic sink-finding algorithm; returns (sink, query count)."""
    if isinstance(algo, str):
        algo = ALGORITHMS[algo]
    n = n if n is not None else o.n
    counter = CountingOracle(o.outmap)
    v = algo(counter, n)
    if any(s != MINUS for s in counter(v)):
        raise RuntimeError("algorithm returned a non-sink")
    return v, counter.count


def enumerate_usos(n: int) -> list[Orientation]:
    """All USOs of the n-cube from edge-direction brute force (n <= 3)."""
    if n > 3:
        raise ValueError("enumeration is limited to n <= 3")
    edges = [
        (v, i)
        for v in range(1 << n)
        for i in range(n)
        if not vertex_bit(v, i, n)
    ]
    result = []
    for assignment in range(1 << len(edges)):
        table = [[ZERO] * n for _ in range(1 << n)]
        for k, (v, i) in enumerate(edges):
            w = flip_vertex(v, i, n)
            if assignment >> k & 1:
                table[v][i], table[w][i] = PLUS, MINUS  # edge points upward
            else:
                table[v][i], table[w][i] = MINUS, PLUS
        o = Orientation(n, table=[tuple(r) for r in table])
        if is_uso_exhaustive(o):
            result.append(o)
    return result


def all_down_orientation(n: int) -> Orientation:
    """Every edge directed toward the vertex with fewer ones; sink is 0."""
    return Orientation(
        n,
        table=[
            tuple(PLUS if vertex_bit(v, i, n) else MINUS for i in range(n))
            for v in range(1 << n)
        ],
    )


def mirrored_down_orientation(n: int, flip_dims: Iterable[int]) -> Orientation:
    """All-down after mirroring the given coordinates; still a USO."""
    flips = set(flip_dims)
    return Orientation(
        n,
        table=[
            tuple(
                PLUS if vertex_bit(v, i, n) ^ (i in flips) else MINUS
                for i in range(n)
            )
            for v in range(1 << n)
        ],
    )
