"""Signed sets over named ground sets.

Signs are the three values ``-1, 0, +1``; all sign arithmetic is table
driven, never floating point.  A :class:`SignedSet` is a vector of signs
indexed by the elements of a :class:`GroundSet` and is the carrier for
circuits and cocircuits alike.  All values here are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MINUS, ZERO, PLUS = -1, 0, 1
SIGNS = (MINUS, ZERO, PLUS)

_SIGN_CHAR = {PLUS: "+", MINUS: "-", ZERO: "0"}
_CHAR_SIGN = {"+": PLUS, "-": MINUS, "0": ZERO}
_NEGATE = {PLUS: MINUS, MINUS: PLUS, ZERO: ZERO}
_PRODUCT = {
    (a, b): (ZERO if a == ZERO or b == ZERO else (PLUS if a == b else MINUS))
    for a in SIGNS
    for b in SIGNS
}


def sign_char(s: int) -> str:
    return _SIGN_CHAR[s]


def char_sign(c: str) -> int:
    try:
        return _CHAR_SIGN[c]
    except KeyError:
        raise ValueError(f"not a sign character: {c!r}") from None


def sign_negate(s: int) -> int:
    return _NEGATE[s]


def sign_product(a: int, b: int) -> int:
    return _PRODUCT[a, b]


@dataclass(frozen=True)
class GroundSet:
    """Ordered, named ground set, optionally with complementary structure.

    Complementary ground sets pair up elements (s_i, t_i) and may carry a
    distinguished extension element q; their canonical element order is
    s_1..s_n, t_1..t_n, q.
    """

    elements: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...] | None = None
    q: str | None = None

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("ground-set element names must be unique")
        if self.pairs is not None:
            expected = [s for s, _ in self.pairs] + [t for _, t in self.pairs]
            if self.q is not None:
                expected.append(self.q)
            if list(self.elements) != expected:
                raise ValueError(
                    "complementary ground set must be ordered s_1..s_n, t_1..t_n[, q]"
                )
        elif self.q is not None:
            raise ValueError("distinguished element q requires complementary structure")

    @classmethod
    def complementary(cls, n: int, with_q: bool = False) -> "GroundSet":
        if n < 1:
            raise ValueError("complementary ground sets need at least one pair")
        s_names = tuple(f"s{i}" for i in range(1, n + 1))
        t_names = tuple(f"t{i}" for i in range(1, n + 1))
        q = "q" if with_q else None
        elements = s_names + t_names + ((q,) if q else ())
        return cls(elements, tuple(zip(s_names, t_names)), q)

    @classmethod
    def plain(cls, names: Iterable[str]) -> "GroundSet":
        return cls(tuple(names))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.elements)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown ground-set element: {name!r}") from None

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def n_pairs(self) -> int:
        if self.pairs is None:
            raise ValueError("ground set has no complementary structure")
        return len(self.pairs)

    def pair(self, i: int) -> tuple[str, str]:
        """The i-th complementary pair (s_{i+1}, t_{i+1}), zero-based."""
        if self.pairs is None:
            raise ValueError("ground set has no complementary structure")
        return self.pairs[i]

    def complementary_basis(self, bits: Sequence[int]) -> frozenset[str]:
        """Complementary n-set for a cube vertex: s_i when bit i is 0, else t_i."""
        if self.pairs is None or len(bits) != len(self.pairs):
            raise ValueError("bit vector does not match complementary structure")
        return frozenset(t if b else s for (s, t), b in zip(self.pairs, bits))

    def is_complementary_set(self, names: Iterable[str]) -> bool:
        """True if the set contains neither q nor any full complementary pair."""
        if self.pairs is None:
            raise ValueError("ground set has no complementary structure")
        chosen = set(names)
        if self.q is not None and self.q in chosen:
            return False
        return not any(s in chosen and t in chosen for s, t in self.pairs)

    def without(self, name: str) -> "GroundSet":
        """Ground set with one element deleted (pairing kept only when q is removed)."""
        idx = self.index(name)
        remaining = self.elements[:idx] + self.elements[idx + 1 :]
        if self.q == name:
            return GroundSet(remaining, self.pairs, None)
        return GroundSet(remaining)

    def extended_by_q(self, q_name: str = "q") -> "GroundSet":
        if self.q is not None:
            raise ValueError("ground set already has a distinguished element")
        if q_name in self.elements:
            raise ValueError(f"element name {q_name!r} already in use")
        if self.pairs is not None:
            return GroundSet(self.elements + (q_name,), self.pairs, q_name)
        return GroundSet(self.elements + (q_name,))


@dataclass(frozen=True)
class SignedSet:
    """Sign vector over a ground set; tuple view (X+, X-) derives from it."""

    ground: GroundSet
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != self.ground.size:
            raise ValueError("sign vector length does not match ground set")
        if any(s not in SIGNS for s in self.signs):
            raise ValueError("signs must be -1, 0 or +1")

    @classmethod
    def decode(cls, ground: GroundSet, text: str) -> "SignedSet":
        return cls(ground, tuple(char_sign(c) for c in text))

    @classmethod
    def zero(cls, ground: GroundSet) -> "SignedSet":
        return cls(ground, (ZERO,) * ground.size)

    def encode(self) -> str:
        return "".join(sign_char(s) for s in self.signs)

    def sign_of(self, name: str) -> int:
        return self.signs[self.ground.index(name)]

    @cached_property
    def pos_mask(self) -> int:
        m = 0
        for i, s in enumerate(self.signs):
            if s == PLUS:
                m |= 1 << i
        return m

    @cached_property
    def neg_mask(self) -> int:
        m = 0
        for i, s in enumerate(self.signs):
            if s == MINUS:
                m |= 1 << i
        return m

    @property
    def support_mask(self) -> int:
        return self.pos_mask | self.neg_mask

    def support(self) -> frozenset[str]:
        return frozenset(
            name for name, s in zip(self.ground.elements, self.signs) if s != ZERO
        )

    @property
    def is_zero(self) -> bool:
        return all(s == ZERO for s in self.signs)

    def negate(self) -> "SignedSet":
        return SignedSet(self.ground, tuple(_NEGATE[s] for s in self.signs))

    def compose(self, other: "SignedSet") -> "SignedSet":
        """Entrywise first-nonzero composition: self wins wherever non-zero."""
        if self.ground != other.ground:
            raise ValueError("composition requires a common ground set")
        return SignedSet(
            self.ground,
            tuple(a if a != ZERO else b for a, b in zip(self.signs, other.signs)),
        )

    def orthogonal(self, other: "SignedSet") -> bool:
        """Disjoint supports, or some common element agrees and some disagrees."""
        if self.ground != other.ground:
            raise ValueError("orthogonality requires a common ground set")
        common = self.support_mask & other.support_mask
        if common == 0:
            return True
        agree = (self.pos_mask & other.pos_mask) | (self.neg_mask & other.neg_mask)
        disagree = (self.pos_mask & other.neg_mask) | (self.neg_mask & other.pos_mask)
        return agree != 0 and disagree != 0

    def restricted_to(self, ground: GroundSet) -> "SignedSet":
        """Restriction onto a ground set whose elements are a subset of ours."""
        return SignedSet(ground, tuple(self.sign_of(name) for name in ground.elements))

    def __iter__(self) -> Iterator[int]:
        return iter(self.signs)

    def __repr__(self) -> str:
        return f"SignedSet({self.encode()!r})"
