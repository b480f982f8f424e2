"""Explicit-circuit oriented matroids.

An :class:`ExplicitOM` stores its circuits as signed sets and answers the
standard structural questions: circuit-axiom checking, bases and rank,
uniformity, cocircuits by brute-force duality, fundamental circuits and
cocircuits, and single-element deletion.  It also implements the circuit
oracle protocol ``query(B, e) -> NotABasis | SignedSet`` used throughout
the pipeline, so explicit matroids can stand in wherever an oracle is
expected.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .guards import DUALITY_ELEMENTS, check
from .signs import MINUS, PLUS, SIGNS, ZERO, GroundSet, SignedSet


class NotABasis:
    """Oracle answer for a query whose set is not a basis."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "NotABasis"


NOT_A_BASIS = NotABasis()


@dataclass(frozen=True)
class AxiomViolation:
    """Witnessed failure of one of the circuit axioms C0-C3.

    The witnesses reproduce the violation: re-checking the named axiom on
    them (and the element, for C3) fails again.
    """

    axiom: str
    witnesses: tuple[SignedSet, ...]
    element: str | None = None

    def __repr__(self) -> str:
        parts = ", ".join(w.encode() for w in self.witnesses)
        extra = f", e={self.element}" if self.element else ""
        return f"AxiomViolation({self.axiom}: {parts}{extra})"


def check_circuit_axioms(
    circuits: Iterable[SignedSet], ground: GroundSet | None = None
) -> AxiomViolation | None:
    """Return None when C0-C3 all hold, else the first violation found.

    C3 is decided by exhaustive search over circuit pairs and eliminable
    elements; candidates are scanned in canonical (encoded) order so the
    reported witness is deterministic.
    """
    circs = sorted(set(circuits), key=lambda c: c.encode())
    if not circs:
        return None
    if ground is None:
        ground = circs[0].ground
    if any(c.ground != ground for c in circs):
        raise ValueError("circuits live on different ground sets")

    for c in circs:
        if c.is_zero:
            return AxiomViolation("C0", (c,))

    present = set(circs)
    for c in circs:
        if c.negate() not in present:
            return AxiomViolation("C1", (c,))

    masks = [(c.pos_mask, c.neg_mask) for c in circs]
    supports = [p | n for p, n in masks]
    for i, x in enumerate(circs):
        for j, y in enumerate(circs):
            if i == j:
                continue
            if supports[i] & ~supports[j] == 0 and x != y and x != y.negate():
                return AxiomViolation("C2", (x, y))

    for i, x in enumerate(circs):
        xp, xn = masks[i]
        for j, y in enumerate(circs):
            yp, yn = masks[j]
            if x == y.negate():
                continue
            elim = xp & yn
            if not elim:
                continue
            for k, name in enumerate(ground.elements):
                bit = 1 << k
                if not elim & bit:
                    continue
                allowed_pos = (xp | yp) & ~bit
                allowed_neg = (xn | yn) & ~bit
                if not any(
                    zp & ~allowed_pos == 0 and zn & ~allowed_neg == 0
                    for zp, zn in masks
                ):
                    return AxiomViolation("C3", (x, y), name)
    return None


@dataclass(frozen=True)
class ExplicitOM:
    """Oriented matroid given by its full circuit collection."""

    ground: GroundSet
    circuits: frozenset[SignedSet]

    def __post_init__(self) -> None:
        if any(c.ground != self.ground for c in self.circuits):
            raise ValueError("circuit ground sets do not match the matroid ground set")

    @classmethod
    def from_encoded(cls, ground: GroundSet, encoded: Iterable[str]) -> "ExplicitOM":
        return cls(ground, frozenset(SignedSet.decode(ground, s) for s in encoded))

    def circuit_set(self) -> frozenset[SignedSet]:
        return self.circuits

    @cached_property
    def _sorted_circuits(self) -> tuple[SignedSet, ...]:
        return tuple(sorted(self.circuits, key=lambda c: c.encode()))

    @cached_property
    def _support_masks(self) -> tuple[int, ...]:
        return tuple(c.support_mask for c in self._sorted_circuits)

    def _mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.ground.index(name)
        return m

    def is_independent(self, subset: Iterable[str]) -> bool:
        m = self._mask(subset)
        return not any(sm & ~m == 0 for sm in self._support_masks)

    @cached_property
    def rank(self) -> int:
        # Greedy extension yields a basis in any matroid.
        current = 0
        size = 0
        for k in range(self.ground.size):
            candidate = current | (1 << k)
            if not any(sm & ~candidate == 0 for sm in self._support_masks):
                current = candidate
                size += 1
        return size

    def is_basis(self, subset: Iterable[str]) -> bool:
        names = set(subset)
        return len(names) == self.rank and self.is_independent(names)

    def bases(self):
        for combo in itertools.combinations(self.ground.elements, self.rank):
            if self.is_independent(combo):
                yield frozenset(combo)

    def is_uniform(self) -> bool:
        return all(
            self.is_independent(combo)
            for combo in itertools.combinations(self.ground.elements, self.rank)
        )

    def cocircuits(self, limit: int | None = None) -> frozenset[SignedSet]:
        """Inclusion-minimal non-empty signed sets orthogonal to all circuits.

        Brute force over all 3^|E| sign vectors, guarded.  Among candidates,
        one is dropped exactly when another candidate's support is a proper
        subset of its own; equal supports keep both sign variants.
        """
        if "_cocircuits" in self.__dict__:
            return self.__dict__["_cocircuits"]
        m = self.ground.size
        check(m, DUALITY_ELEMENTS, limit, "ground-set size")
        circuit_masks = [(c.pos_mask, c.neg_mask) for c in self.circuits]

        candidates: list[tuple[int, int]] = []
        for signs in itertools.product(SIGNS, repeat=m):
            pos = neg = 0
            for k, s in enumerate(signs):
                if s == PLUS:
                    pos |= 1 << k
                elif s == MINUS:
                    neg |= 1 << k
            supp = pos | neg
            if supp == 0:
                continue
            ok = True
            for cp, cn in circuit_masks:
                common = supp & (cp | cn)
                if common == 0:
                    continue
                agree = (pos & cp) | (neg & cn)
                disagree = (pos & cn) | (neg & cp)
                if not (agree and disagree):
                    ok = False
                    break
            if ok:
                candidates.append((pos, neg))

        supports = {p | n for p, n in candidates}
        minimal = {
            s for s in supports if not any(t != s and t & ~s == 0 for t in supports)
        }
        result = frozenset(
            SignedSet(
                self.ground,
                tuple(
                    PLUS if pos >> k & 1 else (MINUS if neg >> k & 1 else ZERO)
                    for k in range(m)
                ),
            )
            for pos, neg in candidates
            if (pos | neg) in minimal
        )
        self.__dict__["_cocircuits"] = result
        return result

    def dual(self, limit: int | None = None) -> "ExplicitOM":
        return ExplicitOM(self.ground, self.cocircuits(limit))

    def query(self, basis: Iterable[str], e: str) -> SignedSet | NotABasis:
        """Circuit-oracle protocol: NotABasis, or the fundamental circuit C(B, e)."""
        names = frozenset(basis)
        if e in names:
            raise ValueError("oracle element must lie outside the queried set")
        self.ground.index(e)
        if not self.is_basis(names):
            return NOT_A_BASIS
        allowed = self._mask(names) | (1 << self.ground.index(e))
        found = None
        for c in self._sorted_circuits:
            if c.sign_of(e) == PLUS and c.support_mask & ~allowed == 0:
                if found is not None:
                    raise RuntimeError("fundamental circuit is not unique")
                found = c
        if found is None:
            raise RuntimeError("no fundamental circuit found; circuit set is not a matroid")
        return found

    def fundamental_circuit(self, basis: Iterable[str], e: str) -> SignedSet | NotABasis:
        return self.query(basis, e)

    def fundamental_cocircuit(self, basis: Iterable[str], e: str) -> SignedSet:
        """The unique cocircuit positive at e whose support avoids B minus e."""
        names = frozenset(basis)
        if e not in names:
            raise ValueError("fundamental cocircuits need an element of the basis")
        if not self.is_basis(names):
            raise ValueError("fundamental cocircuits are defined for bases only")
        avoid = self._mask(names) & ~(1 << self.ground.index(e))
        found = None
        for d in sorted(self.cocircuits(), key=lambda c: c.encode()):
            if d.sign_of(e) == PLUS and d.support_mask & avoid == 0:
                if found is not None:
                    raise RuntimeError("fundamental cocircuit is not unique")
                found = d
        if found is None:
            raise RuntimeError("no fundamental cocircuit found")
        return found

    def minor_delete(self, e: str) -> "ExplicitOM":
        """Deletion minor: keep circuits vanishing at e, restricted to E minus e."""
        self.ground.index(e)
        new_ground = self.ground.without(e)
        kept = frozenset(
            c.restricted_to(new_ground) for c in self.circuits if c.sign_of(e) == ZERO
        )
        return ExplicitOM(new_ground, kept)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        d: dict = {"ground": list(self.ground.elements)}
        if self.ground.pairs is not None:
            d["n"] = self.ground.n_pairs
        d["circuits"] = sorted(c.encode() for c in self.circuits)
        return d

    @classmethod
    def from_json_dict(cls, d: dict, validate: bool = True) -> "ExplicitOM":
        ground = ground_from_json(d)
        om = cls.from_encoded(ground, d.get("circuits", []))
        if validate:
            violation = check_circuit_axioms(om.circuits, ground)
            if violation is not None:
                raise ValueError(f"circuit axioms fail: {violation!r}")
        return om


def ground_from_json(d: dict) -> GroundSet:
    """GroundSet from instance JSON; complementary structure is recognized by shape."""
    elements = tuple(d["ground"])
    n = d.get("n")
    if n is not None:
        if n < 1:
            raise ValueError("complementary ground sets need n >= 1")
        with_q = len(elements) == 2 * n + 1
        expected = GroundSet.complementary(n, with_q=with_q)
        if elements != expected.elements:
            raise ValueError("ground does not match canonical s_1..s_n, t_1..t_n[, q] order")
        return expected
    return GroundSet.plain(elements)


def load_instance(path: str, validate: bool = True) -> ExplicitOM:
    with open(path, "r", encoding="utf-8") as fh:
        return ExplicitOM.from_json_dict(json.load(fh), validate=validate)
