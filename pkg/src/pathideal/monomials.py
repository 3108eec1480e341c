"""Squarefree monomials and monomial-ideal algebra on bitmask supports.

A monomial is a set of 1-based variable indices stored as a bitmask
(bit ``i-1`` set means ``x_i`` divides the monomial), so divisibility,
lcm and support tests are single word operations.  Ideals are kept in a
canonical form: the generating family is the divisibility antichain of
minimal generators, sorted lexicographically on index lists, so
structural equality of values is equality of ideals.

Only squarefree data is representable.  Products of ideals with
overlapping variable supports are rejected rather than generalized to
exponent vectors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

AMBIENT_CAP = 32


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the 1-based indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial as a bitmask of 1-based variable indices."""

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("monomial mask must be nonnegative")

    @classmethod
    def from_vars(cls, indices: Iterable[int]) -> "Monomial":
        mask = 0
        for i in indices:
            if i < 1:
                raise ValueError(f"variable index {i} out of range (indices are 1-based)")
            mask |= 1 << (i - 1)
        return cls(mask)

    @property
    def vars(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def fits(self, n: int) -> bool:
        return self.mask >> n == 0

    def divides(self, other: "Monomial") -> bool:
        return self.mask | other.mask == other.mask

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(self.mask | other.mask)

    def __lt__(self, other: "Monomial") -> bool:
        # canonical order: lexicographic on sorted index lists
        return self.vars < other.vars

    def __str__(self) -> str:
        return monomial_to_text(self)


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal: ambient size plus minimal generators.

    The constructor is strict: it expects the canonical form (antichain,
    canonically sorted).  Use :func:`minimalize` to build an ideal from an
    arbitrary generating family.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= AMBIENT_CAP:
            raise ValueError(f"ambient size {self.n} outside [1, {AMBIENT_CAP}]")
        for g in self.gens:
            if not g.fits(self.n):
                raise ValueError(f"generator {g} does not fit ambient size {self.n}")
        keys = [g.vars for g in self.gens]
        if keys != sorted(keys):
            raise ValueError("generators not in canonical order; use minimalize()")
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate generators; use minimalize()")
        for a in self.gens:
            for b in self.gens:
                if a is not b and a.divides(b):
                    raise ValueError("generators are not an antichain; use minimalize()")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].mask == 0

    @property
    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit

    @property
    def support(self) -> int:
        """Bitmask union of all generator supports."""
        s = 0
        for g in self.gens:
            s |= g.mask
        return s

    def gen_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.gens)

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for g in self.gens:
            hist[g.degree] = hist.get(g.degree, 0) + 1
        return hist

    def contains(self, m: Monomial) -> bool:
        return contains(self, m)

    def __str__(self) -> str:
        return ideal_to_text(self)


def minimalize(n: int, raw: Iterable[Monomial]) -> MonomialIdeal:
    """Reduce a generating family to the canonical minimal antichain.

    Args:
        n: ambient variable count.
        raw: any finite family of monomials generating the ideal.

    Returns:
        The ideal with its unique set of minimal generators, canonically
        ordered.  An empty family yields the zero ideal.
    """
    monomials = sorted(set(raw), key=lambda g: (g.degree, g.vars))
    for g in monomials:
        if not g.fits(n):
            raise ValueError(f"generator {g} does not fit ambient size {n}")
    kept: list[Monomial] = []
    for g in monomials:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    kept.sort(key=lambda g: g.vars)
    return MonomialIdeal(n, tuple(kept))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Membership test: true iff some minimal generator divides ``m``."""
    if not m.fits(ideal.n):
        raise ValueError(f"monomial {m} does not fit ambient size {ideal.n}")
    return any(g.divides(m) for g in ideal.gens)


def _check_same_ambient(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise ValueError(f"ambient size mismatch: {a.n} != {b.n}")


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Sum of ideals: minimalized union of the generating families."""
    _check_same_ambient(a, b)
    return minimalize(a.n, a.gens + b.gens)


def ideal_intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection: minimalized family of pairwise lcms."""
    _check_same_ambient(a, b)
    return minimalize(a.n, (g.lcm(h) for g in a.gens for h in b.gens))


def ideal_product_disjoint(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Product of ideals living in disjoint sets of variables.

    Rejects overlapping supports: the product would not be squarefree.
    """
    _check_same_ambient(a, b)
    if a.support & b.support:
        overlap = tuple(iter_bits(a.support & b.support))
        raise ValueError(f"overlapping support {overlap}: product would not be squarefree")
    return minimalize(a.n, (g.lcm(h) for g in a.gens for h in b.gens))


# ---------------------------------------------------------------------------
# text forms: `x1*x2*x3`, compact `{1,2,3}`, ideal `n=5; (x1*x2*x3, x3*x4*x5)`
# ---------------------------------------------------------------------------


def monomial_to_text(m: Monomial, compact: bool = False) -> str:
    if compact:
        return "{" + ",".join(str(i) for i in m.vars) + "}"
    if m.mask == 0:
        return "1"
    return "*".join(f"x{i}" for i in m.vars)


def monomial_from_text(text: str) -> Monomial:
    s = text.strip()
    if s == "1":
        return Monomial(0)
    if s.startswith("{") and s.endswith("}"):
        body = s[1:-1].strip()
        if not body:
            return Monomial(0)
        return Monomial.from_vars(int(t) for t in body.split(","))
    indices = []
    for part in s.split("*"):
        part = part.strip()
        match = re.fullmatch(r"x(\d+)", part)
        if not match:
            raise ValueError(f"cannot parse monomial factor {part!r}")
        indices.append(int(match.group(1)))
    return Monomial.from_vars(indices)


def ideal_to_text(ideal: MonomialIdeal) -> str:
    if ideal.is_zero:
        body = "0"
    else:
        body = ", ".join(monomial_to_text(g) for g in ideal.gens)
    return f"n={ideal.n}; ({body})"


def ideal_from_text(text: str) -> MonomialIdeal:
    match = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*;\s*\((.*)\)\s*", text, re.DOTALL)
    if not match:
        raise ValueError(f"cannot parse ideal text {text!r}")
    n = int(match.group(1))
    body = match.group(2).strip()
    if body in ("", "0"):
        return MonomialIdeal(n, ())
    # split on commas not inside braces
    parts = re.split(r",(?![^{]*\})", body)
    return minimalize(n, (monomial_from_text(p) for p in parts))
