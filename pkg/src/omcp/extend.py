"""Single-element extensions specified by localizations.

A localization assigns a sign to every cocircuit of a base matroid and
thereby determines an extension by one new element q.  Lexicographic
atoms [s*e] (sign s times the cocircuit's entry at e) are localizations,
and localizations are closed under first-nonzero composition, so a
composition list of atoms is kept symbolic; explicit cocircuit tables are
supported as well.  The extension is never materialized on the main path:
:class:`ExtensionOM` answers fundamental-circuit queries directly from
the rule C(B, q)_e = -sigma(C*(B, e)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .guards import DUALITY_ELEMENTS, check
from .om import NOT_A_BASIS, AxiomViolation, ExplicitOM, NotABasis, check_circuit_axioms
from .signs import (
    PLUS,
    SIGNS,
    ZERO,
    GroundSet,
    SignedSet,
    char_sign,
    sign_char,
    sign_negate,
    sign_product,
)


@dataclass(frozen=True)
class LexAtom:
    """One lexicographic step: cocircuit D evaluates to sign * D_element."""

    element: str
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in SIGNS:
            raise ValueError("atom sign must be -1, 0 or +1")


@dataclass(frozen=True, eq=False)
class Localization:
    """Sign assignment on the cocircuits of ``base``.

    Evaluation walks the atom list left to right and returns the first
    non-zero value; when all atoms vanish it falls back to the explicit
    table (if any), else to zero.  The base can be any representation with
    ``ground``, ``is_basis`` and ``fundamental_cocircuit``; an explicit
    table additionally needs ``cocircuits()``.
    """

    base: object
    atoms: tuple[LexAtom, ...] = ()
    table: Mapping[SignedSet, int] | None = None

    def __post_init__(self) -> None:
        ground: GroundSet = self.base.ground
        for atom in self.atoms:
            ground.index(atom.element)
        if self.table is not None:
            for key, value in self.table.items():
                if key.ground != ground:
                    raise ValueError("table keys must be base cocircuits")
                if value not in SIGNS:
                    raise ValueError("table values must be signs")

    def evaluate(self, cocircuit: SignedSet) -> int:
        for atom in self.atoms:
            v = sign_product(atom.sign, cocircuit.sign_of(atom.element))
            if v != ZERO:
                return v
        if self.table is not None:
            try:
                return self.table[cocircuit]
            except KeyError:
                raise ValueError(
                    f"localization table has no entry for {cocircuit.encode()}"
                ) from None
        return ZERO

    def compose(self, other: "Localization") -> "Localization":
        """First-nonzero composition; self is consulted first."""
        if self.base is not other.base and self.base != other.base:
            raise ValueError("composition requires a common base")
        if self.table is None:
            return Localization(self.base, self.atoms + other.atoms, other.table)
        merged = {
            d: (self.evaluate(d) or other.evaluate(d))
            for d in self.base.cocircuits()
        }
        return Localization(self.base, (), merged)

    def to_table(self) -> "Localization":
        full = {d: self.evaluate(d) for d in self.base.cocircuits()}
        return Localization(self.base, (), full)

    def to_json_dict(self) -> dict:
        if self.table is None:
            return {"atoms": [[a.element, sign_char(a.sign)] for a in self.atoms]}
        d = {k.encode(): sign_char(v) for k, v in self.table.items()}
        out: dict = {"table": dict(sorted(d.items()))}
        if self.atoms:
            out["atoms"] = [[a.element, sign_char(a.sign)] for a in self.atoms]
        return out

    @classmethod
    def from_json_dict(cls, base, d: dict) -> "Localization":
        atoms = tuple(LexAtom(e, char_sign(s)) for e, s in d.get("atoms", []))
        table = None
        if "table" in d:
            ground = base.ground
            table = {
                SignedSet.decode(ground, k): char_sign(v)
                for k, v in d["table"].items()
            }
        return cls(base, atoms, table)


def lex_localization(base, element: str, sign: int) -> Localization:
    """The lexicographic localization [sign * element] over ``base``."""
    return Localization(base, (LexAtom(element, sign),))


def all_zero_localization(base) -> Localization:
    """Extends the base by a loop q: every fundamental circuit is q alone."""
    return Localization(base)


def extension_fundamental_circuit(
    sigma: Localization, basis: Iterable[str], q_name: str = "q"
) -> SignedSet:
    """C(B, q) of the extension specified by sigma, for a basis B of the base."""
    names = frozenset(basis)
    base = sigma.base
    if not base.is_basis(names):
        raise ValueError("extension fundamental circuits need a basis of the base")
    ground = extension_ground(base.ground, q_name)
    signs = [ZERO] * ground.size
    for e in names:
        d = base.fundamental_cocircuit(names, e)
        signs[ground.index(e)] = sign_negate(sigma.evaluate(d))
    signs[ground.index(ground.q if ground.q is not None else q_name)] = PLUS
    return SignedSet(ground, tuple(signs))


def extension_ground(base_ground: GroundSet, q_name: str = "q") -> GroundSet:
    return base_ground.extended_by_q(q_name)


@dataclass(frozen=True, eq=False)
class ExtensionOM:
    """Circuit oracle for the extension of ``sigma.base`` specified by sigma.

    Queries with e = q against a subset of the old ground set use the
    localization rule; queries entirely inside the old ground set delegate
    to the base.  Queries whose set contains q are outside the supported
    surface and raise.
    """

    sigma: Localization
    q_name: str = "q"

    @cached_property
    def ground(self) -> GroundSet:
        return extension_ground(self.sigma.base.ground, self.q_name)

    @property
    def base(self):
        return self.sigma.base

    def _q(self) -> str:
        return self.ground.q if self.ground.q is not None else self.q_name

    def query(self, basis: Iterable[str], e: str) -> SignedSet | NotABasis:
        names = frozenset(basis)
        q = self._q()
        if e in names:
            raise ValueError("oracle element must lie outside the queried set")
        if q in names:
            raise ValueError("queries with q inside the basis are not supported")
        if e == q:
            if not self.base.is_basis(names):
                return NOT_A_BASIS
            return extension_fundamental_circuit(self.sigma, names, q)
        answer = self.base.query(names, e)
        if isinstance(answer, NotABasis):
            return answer
        signs = tuple(answer.signs) + (ZERO,)
        return SignedSet(self.ground, signs)

    def fundamental_circuit(self, basis: Iterable[str], e: str) -> SignedSet | NotABasis:
        return self.query(basis, e)


@dataclass(frozen=True)
class LocalizationValidation:
    valid: bool
    by_construction: bool = False
    reason: str | None = None
    violation: AxiomViolation | None = None


def materialize_extension(sigma: Localization, q_name: str = "q") -> ExplicitOM:
    """Full circuit list of the extension: lifted base circuits plus every
    ±C(B, q) over all bases of the base.  Intended for small instances."""
    base = sigma.base
    ground = extension_ground(base.ground, q_name)
    circuits: set[SignedSet] = set()
    for c in base.circuit_set():
        lifted = SignedSet(ground, tuple(c.signs) + (ZERO,))
        circuits.add(lifted)
        circuits.add(lifted.negate())
    for b in _bases_of(base):
        c = extension_fundamental_circuit(sigma, b, q_name)
        circuits.add(c)
        circuits.add(c.negate())
    return ExplicitOM(ground, frozenset(circuits))


def _bases_of(base):
    if hasattr(base, "bases"):
        yield from base.bases()
        return
    import itertools

    for combo in itertools.combinations(base.ground.elements, base.rank):
        if base.is_basis(combo):
            yield frozenset(combo)


def validate_localization(
    sigma: Localization, limit: int | None = None
) -> LocalizationValidation:
    """Check that sigma describes a valid extension.

    Lexicographic atoms and their compositions are valid by construction
    and are stamped as such.  Explicit tables get the best-effort check:
    sign-oddness on every ± cocircuit pair, then circuit axioms on the
    materialized extension circuit family.
    """
    if sigma.table is None:
        return LocalizationValidation(valid=True, by_construction=True)
    base = sigma.base
    check(base.ground.size + 1, DUALITY_ELEMENTS, limit, "extension ground size")
    cocircuits = base.cocircuits()
    for d in cocircuits:
        try:
            v = sigma.evaluate(d)
            w = sigma.evaluate(d.negate())
        except ValueError as exc:
            return LocalizationValidation(valid=False, reason=str(exc))
        if w != sign_negate(v):
            return LocalizationValidation(
                valid=False,
                reason=f"not sign-odd at {d.encode()}: "
                f"sigma(-Y)={sign_char(w)} but -sigma(Y)={sign_char(sign_negate(v))}",
            )
    extension = materialize_extension(sigma)
    violation = check_circuit_axioms(extension.circuits, extension.ground)
    if violation is not None:
        return LocalizationValidation(
            valid=False, reason="extension circuit family fails the circuit axioms",
            violation=violation,
        )
    return LocalizationValidation(valid=True)
