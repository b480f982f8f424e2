"""From complementarity instances to cube orientations and back.

Vertex v of the n-cube names the complementary basis B(v) that picks s_i
when v_i = 0 and t_i when v_i = 1.  The orientation of v is read off the
fundamental circuit C(B(v), q), in three cases:

1. B(v) is not a basis: make v a sink (all half-edges incoming).
2. The entry at the basis element of dimension i vanishes: orient the
   degenerate half-edge downward (incoming for v_i = 0, outgoing for
   v_i = 1), which is exactly the downward completion of the partial rule.
3. Otherwise the classic rule: a negative circuit entry gives an outgoing
   half-edge, a positive entry an incoming one.

The partial variant keeps case-2 half-edges unoriented and is the object
whose unoriented regions form disjoint hypervertex faces.  Sinks and
Szabo-Welzl violation pairs of the derived orientation map back to
solution and violation certificates of the complementarity instance.
"""

from __future__ import annotations

from .cube import Orientation, vertex_bit, vertex_bits
from .om import NotABasis
from .pmatroid import M1, MV2, MV3, verify_mv3_pair
from .signs import MINUS, PLUS, ZERO, GroundSet


def vertex_basis(oracle_ground: GroundSet, v: int, n: int) -> frozenset[str]:
    return oracle_ground.complementary_basis(vertex_bits(v, n))


def _dimension_signs(oracle, v: int, n: int):
    """(basis, C(B(v), q), per-dimension circuit entries) or (basis, None, None)."""
    ground: GroundSet = oracle.ground
    basis = vertex_basis(ground, v, n)
    answer = oracle.query(basis, ground.q)
    if isinstance(answer, NotABasis):
        return basis, None, None
    entries = []
    for i in range(n):
        s, t = ground.pair(i)
        entries.append(answer.sign_of(t if vertex_bit(v, i, n) else s))
    return basis, answer, entries


def orient_vertex_total(oracle, v: int, n: int) -> tuple[int, ...]:
    _, answer, entries = _dimension_signs(oracle, v, n)
    if answer is None:
        return (MINUS,) * n
    out = []
    for i, c in enumerate(entries):
        if c == ZERO:
            out.append(PLUS if vertex_bit(v, i, n) else MINUS)
        else:
            out.append(PLUS if c == MINUS else MINUS)
    return tuple(out)


def orient_vertex_partial(oracle, v: int, n: int) -> tuple[int, ...]:
    basis, answer, entries = _dimension_signs(oracle, v, n)
    if answer is None:
        raise ValueError(f"complementary set {sorted(basis)} is not a basis")
    return tuple(
        ZERO if c == ZERO else (PLUS if c == MINUS else MINUS) for c in entries
    )


def klaus_orientation(oracle, n: int, partial: bool = False) -> Orientation:
    """Orientation oracle wrapping the reduction; one circuit query per vertex."""
    if partial:
        return Orientation(n, fn=lambda v: orient_vertex_partial(oracle, v, n))
    return Orientation(n, fn=lambda v: orient_vertex_total(oracle, v, n))


def map_back_sink(oracle, v: int, n: int) -> M1 | MV2:
    """Sink of the derived orientation -> M1 solution, or MV2 on a missing basis."""
    if any(s != MINUS for s in orient_vertex_total(oracle, v, n)):
        raise ValueError("vertex is not a sink of the derived orientation")
    ground: GroundSet = oracle.ground
    basis = vertex_basis(ground, v, n)
    answer = oracle.query(basis, ground.q)
    if isinstance(answer, NotABasis):
        return MV2(basis)
    if answer.neg_mask != 0:
        raise RuntimeError("sink circuit has negative entries; oracle is inconsistent")
    return M1(answer)


def map_back_uv1(oracle, v: int, w: int, n: int) -> MV3 | MV2:
    """Szabo-Welzl violation pair -> MV3 (or MV2 when a basis query fails)."""
    if v == w:
        raise ValueError("violation pair must be distinct")
    ov = orient_vertex_total(oracle, v, n)
    ow = orient_vertex_total(oracle, w, n)
    for i in range(n):
        if vertex_bit(v, i, n) != vertex_bit(w, i, n) and ov[i] != ow[i]:
            raise ValueError("pair is not a Szabo-Welzl violation of the derived orientation")
    ground: GroundSet = oracle.ground
    for u in (v, w):
        basis = vertex_basis(ground, u, n)
        if isinstance(oracle.query(basis, ground.q), NotABasis):
            return MV2(basis)
    x = oracle.query(vertex_basis(ground, v, n), ground.q)
    y = oracle.query(vertex_basis(ground, w, n), ground.q)
    cert = MV3(x, y)
    if not verify_mv3_pair(x, y):
        raise RuntimeError("violation pair did not produce a valid MV3 certificate")
    return cert
