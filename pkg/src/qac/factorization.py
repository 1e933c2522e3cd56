"""Rank-one tensor combinatorics: strings, half-lines and prime factorization.

Supports are integer sets stepping by 2 (all spectra live on integer powers
of q).  A string of length k starting at r models the simple module with
highest monomial Y_{1,q^r} ... Y_{1,q^{r+2(k-1)}}; a half-line based at s
models the positive prefundamental class with support s+1, s+3, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotPositive, NotSl2
from .laurent import LPoly, Monomial
from .lweights import LWeightMono, is_positive, lw_equal_rational
from .qchar import (
    A1,
    QCharacter,
    kr_qchar_sl2,
    prefund_plus_qchar_sl2,
    qchar_mul,
    truncate_depth,
)
from .weights import Weight


@dataclass(frozen=True, order=True)
class QString:
    """Arithmetic support {start, start+2, ..., start+2(len-1)}, len >= 1."""

    start: int
    len: int

    def __post_init__(self):
        if self.len < 1:
            raise ValueError("string length must be at least 1")

    @property
    def end(self) -> int:
        return self.start + 2 * (self.len - 1)

    def support(self) -> set[int]:
        return set(range(self.start, self.end + 1, 2))

    def text(self) -> str:
        return f"string[{self.start}..{self.end}]"


@dataclass(frozen=True, order=True)
class HalfLine:
    """Support {base+1, base+3, ...}; never special with another half-line."""

    base: int

    def first(self) -> int:
        return self.base + 1

    def text(self) -> str:
        return f"halfline[{self.base}+]"


Factor = QString | HalfLine


def special_position(a: Factor, b: Factor) -> bool:
    """True when the union of supports is one step-2 progression properly
    containing both."""
    if isinstance(a, HalfLine) and isinstance(b, HalfLine):
        return False
    if isinstance(a, HalfLine):
        a, b = b, a
    if isinstance(b, HalfLine):
        # The union is gap-free and proper iff the string starts strictly
        # below the half-line support and reaches within one step of it.
        if (a.start - b.first()) % 2 != 0:
            return False
        return a.start < b.first() and a.end >= b.first() - 2
    if (a.start - b.start) % 2 != 0:
        return False
    lo, hi = min(a.start, b.start), max(a.end, b.end)
    union = a.support() | b.support()
    if union != set(range(lo, hi + 1, 2)):
        return False
    return union > a.support() and union > b.support()


def is_simple_product(factors: Sequence[Factor]) -> bool:
    """All unordered pairs in general position."""
    fs = list(factors)
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if special_position(fs[i], fs[j]):
                return False
    return True


@dataclass(frozen=True)
class Factorization:
    invertible: Weight
    strings: tuple[QString, ...]
    halflines: tuple[HalfLine, ...]

    def factors(self) -> tuple[Factor, ...]:
        return self.strings + self.halflines

    def text(self) -> str:
        parts = [f.text() for f in self.strings] + [h.text() for h in self.halflines]
        if not self.invertible.is_zero():
            parts.insert(0, f"[{self.invertible}]")
        return " * ".join(parts) if parts else "1"


def multiply_factorization(f: Factorization) -> LWeightMono:
    """Recover the l-weight: strings give Y-products, half-lines Psi factors."""
    y: dict[tuple[int, int], int] = {}
    for s in f.strings:
        for r in s.support():
            y[(1, r)] = y.get((1, r), 0) + 1
    psi: dict[tuple[int, int], int] = {}
    for h in f.halflines:
        psi[(1, h.base)] = psi.get((1, h.base), 0) + 1
    return LWeightMono(f.invertible, y, psi)


def _greedy_strings(y: dict[int, int]) -> list[QString]:
    """Maximal-string extraction from a shift multiset, lowest shift first."""
    counts = dict(y)
    out: list[QString] = []
    while any(c > 0 for c in counts.values()):
        start = min(r for r, c in counts.items() if c > 0)
        r = start
        while counts.get(r, 0) > 0:
            counts[r] -= 1
            r += 2
        out.append(QString(start, (r - start) // 2))
    return out


def factorize(psi: LWeightMono) -> Factorization:
    """Unique decomposition into pairwise-general-position factors.

    Strings are extracted greedily from the Y-part; any special pair is then
    rewritten locally until every pair is in general position.  A string
    reaching a half-line absorbs its lower part into it (the telescoping
    Y_{b} Psi_{b+1} = [w1] Psi_{b-1} applied once per absorbed factor);
    two special strings fuse into union plus overlap.  The product is
    preserved exactly, including the emitted weight tokens.
    """
    if not is_positive(psi):
        raise NotPositive(psi.text())
    if any(i != 1 for (i, _), _ in psi.y) or any(i != 1 for (i, _), _ in psi.psi):
        raise NotSl2("factorization is rank-one only")
    n = psi.n
    weight = psi.weight
    strings = _greedy_strings({r: e for (_, r), e in psi.y})
    halflines = [HalfLine(r) for (_, r), e in psi.psi for _ in range(e)]

    changed = True
    while changed:
        changed = False
        strings.sort()
        halflines.sort()
        for si, s in enumerate(strings):
            hit = next((hi for hi, h in enumerate(halflines) if special_position(s, h)), None)
            if hit is not None:
                h = halflines[hit]
                absorbed = [r for r in sorted(s.support()) if r <= h.base - 1]
                leftover = [r for r in sorted(s.support()) if r > h.base - 1]
                weight = weight + Weight.fundamental(n, 1, len(absorbed))
                halflines[hit] = HalfLine(s.start - 1)
                strings.pop(si)
                if leftover:
                    strings.append(QString(min(leftover), len(leftover)))
                changed = True
                break
        if changed:
            continue
        for si in range(len(strings)):
            for sj in range(si + 1, len(strings)):
                a, b = strings[si], strings[sj]
                if special_position(a, b):
                    lo = min(a.start, b.start)
                    hi = max(a.end, b.end)
                    overlap_lo = max(a.start, b.start)
                    overlap_hi = min(a.end, b.end)
                    strings.pop(sj)
                    strings.pop(si)
                    strings.append(QString(lo, (hi - lo) // 2 + 1))
                    if overlap_lo <= overlap_hi:
                        strings.append(QString(overlap_lo, (overlap_hi - overlap_lo) // 2 + 1))
                    changed = True
                    break
            if changed:
                break

    out = Factorization(weight, tuple(sorted(strings)), tuple(sorted(halflines)))
    # Merges rewrite the presentation, so the product is preserved as an
    # actual l-weight (rational form), not factor-by-factor.
    if not lw_equal_rational(A1, multiply_factorization(out), psi):
        raise AssertionError(f"factorization broke the product of {psi.text()}")
    return out


def simple_qchar_oracle(psi: LWeightMono, depth: int) -> QCharacter:
    """Product of the factor ladders and half-line series, cut at `depth`.

    A product over pairwise-general-position factors is the character of a
    single simple class, so multiplying the factors is exact; the leading
    term recovers psi.
    """
    f = factorize(psi)
    out = QCharacter(A1, LPoly(1, {Monomial(f.invertible): 1}), None)
    for s in f.strings:
        out = qchar_mul(out, kr_qchar_sl2(s.len, s.start))
    for h in f.halflines:
        out = qchar_mul(out, prefund_plus_qchar_sl2(h.base, depth))
    if out.depth is None or out.depth > depth:
        out = truncate_depth(out, depth)
    return out


@dataclass(frozen=True)
class WebReport:
    ok: bool
    factors: tuple[Factor, ...]
    full_simple: bool
    pairwise_simple: bool

    def text(self) -> str:
        status = "PASS" if self.ok else "COUNTEREXAMPLE"
        body = ", ".join(f.text() for f in self.factors)
        return f"{status} web[{body}] full={self.full_simple} pairwise={self.pairwise_simple}"


def product_is_simple(factors: Sequence[Factor]) -> bool:
    """Simplicity of the full product, decided through unique factorization.

    The product class is simple exactly when the given factors already form
    the canonical pairwise-general decomposition of the product l-weight, so
    refactorizing and comparing multisets decides it without pair tests.
    """
    strings = tuple(sorted(f for f in factors if isinstance(f, QString)))
    halflines = tuple(sorted(f for f in factors if isinstance(f, HalfLine)))
    prod = multiply_factorization(Factorization(Weight.zero(1), strings, halflines))
    canon = factorize(prod)
    return (
        canon.invertible.is_zero()
        and canon.strings == strings
        and canon.halflines == halflines
    )


def web_property_check(factors: Sequence[Factor]) -> WebReport:
    """A multi-factor product is simple exactly when all pairs are.

    The two sides are decided by independent routes: pairwise position
    tests against refactorization of the full product.
    """
    if len(factors) < 3:
        raise ValueError("web property concerns three or more factors")
    pairwise = is_simple_product(factors)
    full = product_is_simple(factors)
    return WebReport(full == pairwise, tuple(factors), full, pairwise)
