"""Exact weights in the fundamental-weight basis.

A weight is a vector of rationals; coordinate i is the coefficient of the
i-th fundamental weight.  All arithmetic is exact (``fractions.Fraction``),
never floating point.  Weights are immutable and hashable so they can key
group-ring monomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class Weight:
    """Immutable rational vector in the fundamental-weight basis."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable[Fraction | int]):
        self.coords: tuple[Fraction, ...] = tuple(Fraction(c) for c in coords)
        self._hash = hash(self.coords)

    @staticmethod
    def zero(n: int) -> "Weight":
        return Weight((0,) * n)

    @staticmethod
    def fundamental(n: int, i: int, coeff: Fraction | int = 1) -> "Weight":
        """coeff times the i-th fundamental weight (i is 1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"node {i} out of range 1..{n}")
        coords = [Fraction(0)] * n
        coords[i - 1] = Fraction(coeff)
        return Weight(coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self) -> "Weight":
        return Weight(-c for c in self.coords)

    def scale(self, k: Fraction | int) -> "Weight":
        k = Fraction(k)
        return Weight(k * c for c in self.coords)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coords

    def __repr__(self) -> str:
        return f"Weight({list(self.coords)!r})"

    def __str__(self) -> str:
        return format_weight(self)


def format_weight(w: Weight) -> str:
    """Render the bracket body of a weight token, e.g. ``3/2*w1 - 1*w2``.

    The zero weight renders as ``0``.
    """
    parts: list[str] = []
    for i, c in enumerate(w.coords, start=1):
        if c == 0:
            continue
        mag = abs(c)
        term = f"{mag}*w{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    if not parts:
        return "0"
    return " ".join(parts)


def parse_weight_body(body: str, n: int) -> Weight:
    """Parse the bracket body produced by :func:`format_weight`."""
    body = body.strip()
    coords = [Fraction(0)] * n
    if body == "0":
        return Weight(coords)
    # Normalize "a - b + c" into signed tokens.
    text = body.replace("- ", "-").replace("+ ", "+")
    for tok in text.split():
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        elif tok.startswith("+"):
            tok = tok[1:]
        if "*w" not in tok:
            raise ValueError(f"bad weight term {tok!r}")
        coeff_s, idx_s = tok.split("*w")
        i = int(idx_s)
        if not 1 <= i <= n:
            raise ValueError(f"weight index w{i} out of range 1..{n}")
        coords[i - 1] += sign * Fraction(coeff_s)
    return Weight(coords)


def weight_lcm_denominator(weights: Sequence[Weight]) -> int:
    """Least common multiple of all coordinate denominators (at least 1)."""
    from math import lcm

    denoms = [c.denominator for w in weights for c in w.coords]
    return lcm(*denoms) if denoms else 1
