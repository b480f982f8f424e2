"""P-matroid checks, complementarity solving, and search certificates.

A P-matroid lives on a paired ground set S u T: S is a basis and no
circuit is sign-reversing (opposite signs on every complementary pair it
contains).  The solution and violation certificates of the two total
search problems are defined here together with self-contained verifiers,
so third-party certificates can be validated bit for bit:

* M1  - non-negative complementary circuit through q (a solution),
* MV1 - sign-reversing circuit,
* MV2 - complementary n-set that is not a basis,
* MV3 - two complementary q-positive circuits matching per-pair,
* U1  - cube vertex with all half-edges incoming (a sink),
* UV1 - vertex pair contradicting the unique-sink condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .guards import OMCP_SCAN_DIM, check
from .om import NOT_A_BASIS, NotABasis
from .signs import MINUS, PLUS, ZERO, GroundSet, SignedSet, sign_product


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class M1:
    circuit: SignedSet

    kind = "M1"


@dataclass(frozen=True)
class MV1:
    circuit: SignedSet

    kind = "MV1"


@dataclass(frozen=True)
class MV2:
    basis: frozenset[str]

    kind = "MV2"


@dataclass(frozen=True)
class MV3:
    x: SignedSet
    y: SignedSet

    kind = "MV3"


@dataclass(frozen=True)
class U1:
    n: int
    vertex: int

    kind = "U1"


@dataclass(frozen=True)
class UV1:
    n: int
    v: int
    w: int

    kind = "UV1"


Certificate = M1 | MV1 | MV2 | MV3 | U1 | UV1


def certificate_to_json(cert: Certificate) -> dict:
    if isinstance(cert, M1):
        return {"kind": "M1", "circuit": cert.circuit.encode()}
    if isinstance(cert, MV1):
        return {"kind": "MV1", "circuit": cert.circuit.encode()}
    if isinstance(cert, MV2):
        return {"kind": "MV2", "basis": sorted(cert.basis)}
    if isinstance(cert, MV3):
        return {"kind": "MV3", "X": cert.x.encode(), "Y": cert.y.encode()}
    if isinstance(cert, U1):
        return {"kind": "U1", "vertex": format(cert.vertex, f"0{cert.n}b")}
    if isinstance(cert, UV1):
        return {
            "kind": "UV1",
            "v": format(cert.v, f"0{cert.n}b"),
            "w": format(cert.w, f"0{cert.n}b"),
        }
    raise TypeError(f"not a certificate: {cert!r}")


def certificate_from_json(d: dict, ground: GroundSet | None = None) -> Certificate:
    kind = d["kind"]
    if kind in ("M1", "MV1"):
        if ground is None:
            raise ValueError("circuit certificates need the instance ground set")
        circuit = SignedSet.decode(ground, d["circuit"])
        return M1(circuit) if kind == "M1" else MV1(circuit)
    if kind == "MV2":
        return MV2(frozenset(d["basis"]))
    if kind == "MV3":
        if ground is None:
            raise ValueError("circuit certificates need the instance ground set")
        return MV3(SignedSet.decode(ground, d["X"]), SignedSet.decode(ground, d["Y"]))
    if kind == "U1":
        return U1(len(d["vertex"]), int(d["vertex"], 2))
    if kind == "UV1":
        return UV1(len(d["v"]), int(d["v"], 2), int(d["w"], 2))
    raise ValueError(f"unknown certificate kind: {kind!r}")


# -- P-matroid structure --------------------------------------------------


def is_sign_reversing(circuit: SignedSet, ground: GroundSet | None = None) -> bool:
    """Opposite signs on every complementary pair contained in the support.

    A circuit whose support contains no complementary pair satisfies the
    condition vacuously and is reported as sign-reversing; inside a genuine
    P-matroid extension such circuits cannot exist within S u T.
    """
    g = ground if ground is not None else circuit.ground
    if g.pairs is None:
        raise ValueError("sign-reversal needs a complementary ground set")
    for s, t in g.pairs:
        a, b = circuit.sign_of(s), circuit.sign_of(t)
        if a != ZERO and b != ZERO and a != -b:
            return False
    return True


def find_sign_reversing_circuit(om) -> SignedSet | None:
    """First sign-reversing circuit in canonical order, or None."""
    ground: GroundSet = om.ground
    if ground.pairs is None or ground.q is not None:
        raise ValueError("expected a complementary ground set without q")
    for c in sorted(om.circuit_set(), key=lambda x: x.encode()):
        if is_sign_reversing(c, ground):
            return c
    return None


@dataclass(frozen=True)
class PMatroidCheck:
    is_p: bool
    s_is_basis: bool
    sign_reversing: SignedSet | None

    def __bool__(self) -> bool:
        return self.is_p


def is_p_matroid(om) -> PMatroidCheck:
    """S must be a basis and no circuit may be sign-reversing."""
    ground: GroundSet = om.ground
    if ground.pairs is None or ground.q is not None:
        raise ValueError("expected a complementary ground set without q")
    s_set = frozenset(s for s, _ in ground.pairs)
    s_ok = om.is_basis(s_set)
    witness = find_sign_reversing_circuit(om)
    return PMatroidCheck(s_ok and witness is None, s_ok, witness)


def complementary_vertex_sets(ground: GroundSet):
    """All complementary n-sets in cube-vertex order (s_i for bit 0, t_i for bit 1)."""
    n = ground.n_pairs
    for v in range(1 << n):
        bits = [(v >> (n - 1 - i)) & 1 for i in range(n)]
        yield v, ground.complementary_basis(bits)


def check_complementary_bases(oracle, n: int) -> frozenset[str] | None:
    """First of the 2^n complementary sets the oracle rejects, else None."""
    ground: GroundSet = oracle.ground
    if ground.q is None:
        raise ValueError("expected an extension oracle with element q")
    for _, basis in complementary_vertex_sets(ground):
        if isinstance(oracle.query(basis, ground.q), NotABasis):
            return basis
    return None


def verify_mv3_pair(x: SignedSet, y: SignedSet) -> bool:
    """Pure MV3 condition on two signed sets (no oracle membership check)."""
    ground = x.ground
    if y.ground != ground or ground.pairs is None or ground.q is None:
        return False
    if x == y:
        return False
    if x.sign_of(ground.q) != PLUS or y.sign_of(ground.q) != PLUS:
        return False
    for s, t in ground.pairs:
        for c in (x, y):
            if c.sign_of(s) != ZERO and c.sign_of(t) != ZERO:
                return False  # not complementary
    for s, t in ground.pairs:
        zero_products = (
            sign_product(x.sign_of(s), y.sign_of(t)) == ZERO
            and sign_product(x.sign_of(t), y.sign_of(s)) == ZERO
        )
        matching = x.sign_of(s) == y.sign_of(t) and x.sign_of(t) == y.sign_of(s)
        if not (zero_products or matching):
            return False
    return True


def solve_omcp_bruteforce(
    oracle, n: int, limit: int | None = None
) -> M1 | MV2 | None:
    """Scan all complementary bases for an all-non-negative C(B, q).

    Returns the first M1 found, an MV2 when some complementary set is not a
    basis, or None when the full scan finds neither (a non-P-matroid input
    without an easily extracted certificate).
    """
    check(n, OMCP_SCAN_DIM, limit, "omcp scan dimension")
    ground: GroundSet = oracle.ground
    for _, basis in complementary_vertex_sets(ground):
        answer = oracle.query(basis, ground.q)
        if isinstance(answer, NotABasis):
            return MV2(basis)
        if answer.neg_mask == 0:
            return M1(answer)
    return None


def is_degenerate(oracle, n: int) -> tuple[bool, frozenset[str] | None]:
    """Some complementary basis B with C(B, q) vanishing on part of B."""
    ground: GroundSet = oracle.ground
    for _, basis in complementary_vertex_sets(ground):
        answer = oracle.query(basis, ground.q)
        if isinstance(answer, NotABasis):
            raise ValueError(f"complementary set {sorted(basis)} is not a basis")
        if any(answer.sign_of(e) == ZERO for e in basis):
            return True, basis
    return False, None


# -- verifiers ------------------------------------------------------------


def _completion_basis(circuit: SignedSet) -> frozenset[str]:
    """A complementary n-set containing the circuit's support minus q."""
    ground = circuit.ground
    chosen = []
    for s, t in ground.pairs:
        if circuit.sign_of(t) != ZERO:
            chosen.append(t)
        else:
            chosen.append(s)
    return frozenset(chosen)


def verify_m1(cert: M1, oracle) -> bool:
    c = cert.circuit
    ground: GroundSet = oracle.ground
    if c.ground != ground or ground.q is None:
        return False
    if c.neg_mask != 0 or c.sign_of(ground.q) != PLUS:
        return False
    for s, t in ground.pairs:
        if c.sign_of(s) != ZERO and c.sign_of(t) != ZERO:
            return False
    basis = _completion_basis(c)
    return oracle.query(basis, ground.q) == c


def verify_mv1(cert: MV1, om) -> bool:
    """Against an explicit instance: membership plus the sign-reversal property."""
    z = cert.circuit
    ground: GroundSet = om.ground
    if z.ground != ground:
        return False
    if ground.q is not None and z.sign_of(ground.q) != ZERO:
        return False
    return z in om.circuit_set() and is_sign_reversing(z, ground)


def verify_mv2(cert: MV2, oracle) -> bool:
    ground: GroundSet = oracle.ground
    if ground.q is None or len(cert.basis) != ground.n_pairs:
        return False
    if not ground.is_complementary_set(cert.basis):
        return False
    return isinstance(oracle.query(cert.basis, ground.q), NotABasis)


def verify_mv3(cert: MV3, oracle) -> bool:
    """Condition check plus circuit membership through the oracle."""
    if not verify_mv3_pair(cert.x, cert.y):
        return False
    ground: GroundSet = oracle.ground
    for c in (cert.x, cert.y):
        if oracle.query(_completion_basis(c), ground.q) != c:
            return False
    return True


def verify_u1(cert: U1, orientation) -> bool:
    return all(s == MINUS for s in orientation.outmap(cert.vertex))


def verify_uv1(cert: UV1, orientation) -> bool:
    if cert.v == cert.w:
        return False
    n = cert.n
    ov, ow = orientation.outmap(cert.v), orientation.outmap(cert.w)
    for i in range(n):
        bit = 1 << (n - 1 - i)
        if (cert.v & bit) != (cert.w & bit) and ov[i] != ow[i]:
            return False
    return True


def verify_certificate(cert: Certificate, instance) -> bool:
    """Dispatch on kind; ``instance`` is an oracle, explicit matroid, or orientation."""
    if isinstance(cert, M1):
        return verify_m1(cert, instance)
    if isinstance(cert, MV1):
        return verify_mv1(cert, instance)
    if isinstance(cert, MV2):
        return verify_mv2(cert, instance)
    if isinstance(cert, MV3):
        return verify_mv3(cert, instance)
    if isinstance(cert, U1):
        return verify_u1(cert, instance)
    if isinstance(cert, UV1):
        return verify_uv1(cert, instance)
    raise TypeError(f"not a certificate: {cert!r}")
