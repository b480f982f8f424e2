import random
from fractions import Fraction

import pytest

from omcp.cube import (
    complete_downward,
    find_sw_violation,
    is_partially_sw,
    is_uso_exhaustive,
    sink_vertex,
    unoriented_faces,
)
from omcp.om import ExplicitOM
from omcp.pmatroid import (
    M1,
    MV2,
    MV3,
    find_sign_reversing_circuit,
    solve_omcp_bruteforce,
    verify_certificate,
)
from omcp.plcp import random_p_matrix, random_q
from omcp.realize import (
    RationalMatrix,
    RealizedOM,
    circuits_from_matrix,
    plcp_matrix,
)
from omcp.reduction import (
    klaus_orientation,
    map_back_sink,
    map_back_uv1,
    orient_vertex_partial,
    orient_vertex_total,
    vertex_basis,
)
from omcp.signs import MINUS, PLUS, ZERO, GroundSet


def realized(m_rows, q_values):
    m = RationalMatrix.from_rows(m_rows)
    q = tuple(Fraction(v) for v in q_values)
    n = m.rows
    return RealizedOM(plcp_matrix(m, q), GroundSet.complementary(n, with_q=True))


def test_vertex_basis_map():
    g = GroundSet.complementary(2, with_q=True)
    assert vertex_basis(g, 0b00, 2) == {"s1", "s2"}
    assert vertex_basis(g, 0b01, 2) == {"s1", "t2"}
    assert vertex_basis(g, 0b10, 2) == {"t1", "s2"}
    assert vertex_basis(g, 0b11, 2) == {"t1", "t2"}


def test_orientation_one_edge_uso(ext):
    assert orient_vertex_total(ext, 0, 1) == (PLUS,)
    assert orient_vertex_total(ext, 1, 1) == (MINUS,)
    o = klaus_orientation(ext, 1).materialize()
    assert is_uso_exhaustive(o) and sink_vertex(o) == 1


def test_orientation_degenerate_case(ext_degenerate):
    assert orient_vertex_partial(ext_degenerate, 0, 1) == (ZERO,)
    assert orient_vertex_partial(ext_degenerate, 1, 1) == (ZERO,)
    assert orient_vertex_total(ext_degenerate, 0, 1) == (MINUS,)
    assert orient_vertex_total(ext_degenerate, 1, 1) == (PLUS,)
    o = klaus_orientation(ext_degenerate, 1).materialize()
    assert is_uso_exhaustive(o) and sink_vertex(o) == 0


def test_case_one_missing_basis_makes_sink():
    oracle = realized([[0]], [1])  # zero column: {t1} is not a basis
    assert orient_vertex_total(oracle, 1, 1) == (MINUS,)
    with pytest.raises(ValueError):
        orient_vertex_partial(oracle, 1, 1)


def test_uniform_extension_has_no_partial_zeros():
    oracle = realized([[2, 0], [0, 3]], [1, 1])
    for v in range(4):
        assert ZERO not in orient_vertex_partial(oracle, v, 2)


def test_partial_completion_matches_total():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.choice([2, 3])
        m = random_p_matrix(n, rng)
        styles = [
            tuple(Fraction(0) for _ in range(n)),
            tuple(-m.entries[r][0] for r in range(n)),
            random_q(n, rng),
        ]
        q = styles[rng.randrange(3)]
        oracle = RealizedOM(plcp_matrix(m, q), GroundSet.complementary(n, with_q=True))
        partial = klaus_orientation(oracle, n, partial=True).materialize()
        total = klaus_orientation(oracle, n).materialize()
        assert complete_downward(partial).to_outmaps() == total.to_outmaps()


def test_ppu_structure_on_p_extensions():
    rng = random.Random(37)
    for _ in range(15):
        n = rng.choice([2, 3, 4])
        m = random_p_matrix(n, rng)
        q = random_q(n, rng)
        if rng.random() < 0.5:
            q = tuple(Fraction(0) if rng.random() < 0.5 else v for v in q)
        oracle = RealizedOM(plcp_matrix(m, q), GroundSet.complementary(n, with_q=True))
        ppu = klaus_orientation(oracle, n, partial=True).materialize()
        ok, witness = is_partially_sw(ppu)
        assert ok, witness
        unoriented_faces(ppu)  # raises when not disjoint hypervertices
        assert is_uso_exhaustive(complete_downward(ppu))


def test_one_query_per_vertex(ext):
    calls = []
    original = ext.query

    class Counting:
        ground = ext.ground

        def query(self, basis, e):
            calls.append((frozenset(basis), e))
            return original(basis, e)

    o = klaus_orientation(Counting(), 1)
    o.outmap(0)
    o.outmap(1)
    assert len(calls) == 2


def test_map_back_sink(ext, ext_degenerate):
    cert = map_back_sink(ext, 1, 1)
    assert cert == M1(ext.query(frozenset({"t1"}), "q"))
    assert cert.circuit.encode() == "0++"
    cert2 = map_back_sink(ext_degenerate, 0, 1)
    assert cert2.circuit.encode() == "00+"
    assert verify_certificate(cert, ext) and verify_certificate(cert2, ext_degenerate)
    with pytest.raises(ValueError):
        map_back_sink(ext, 0, 1)


def test_map_back_sink_mv2():
    oracle = realized([[0]], [1])
    cert = map_back_sink(oracle, 1, 1)
    assert isinstance(cert, MV2) and cert.basis == frozenset({"t1"})
    assert verify_certificate(cert, oracle)


def test_map_back_uv1_two_sinks():
    # parallel s1, t1 with q making both vertices sinks
    g = GroundSet.complementary(1, with_q=True)
    om = circuits_from_matrix(RationalMatrix.from_rows([[1, 1, -1]]), g)
    o = klaus_orientation(om, 1).materialize()
    violation = find_sw_violation(o)
    assert violation == (0, 1)
    cert = map_back_uv1(om, *violation, 1)
    assert isinstance(cert, MV3)
    assert verify_certificate(cert, om)
    # the violation certifies a genuine sign-reversing circuit downstairs
    assert find_sign_reversing_circuit(om.minor_delete("q")) is not None


def test_map_back_uv1_two_sources():
    g = GroundSet.complementary(1, with_q=True)
    om = circuits_from_matrix(RationalMatrix.from_rows([[1, 1, 1]]), g)
    o = klaus_orientation(om, 1).materialize()
    violation = find_sw_violation(o)
    assert violation is not None
    cert = map_back_uv1(om, *violation, 1)
    assert isinstance(cert, MV3) and verify_certificate(cert, om)
    assert solve_omcp_bruteforce(om, 1) is None


def test_map_back_uv1_mv2():
    oracle = realized([[0]], [1])
    # both vertices are sinks (one via case 1), a Szabo-Welzl violation
    cert = map_back_uv1(oracle, 0, 1, 1)
    assert isinstance(cert, MV2)
    assert verify_certificate(cert, oracle)


def test_map_back_uv1_rejects_non_violation(ext):
    with pytest.raises(ValueError):
        map_back_uv1(ext, 0, 1, 1)


def test_p_extension_orientations_are_usos():
    rng = random.Random(41)
    for _ in range(10):
        n = rng.choice([2, 3])
        m = random_p_matrix(n, rng)
        q = random_q(n, rng)
        oracle = RealizedOM(plcp_matrix(m, q), GroundSet.complementary(n, with_q=True))
        o = klaus_orientation(oracle, n).materialize()
        assert find_sw_violation(o) is None
        cert = map_back_sink(oracle, sink_vertex(o), n)
        assert isinstance(cert, M1)
        assert cert == solve_omcp_bruteforce(oracle, n)
