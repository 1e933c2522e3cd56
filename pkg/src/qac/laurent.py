"""Sparse multivariate Laurent polynomials over the weight group ring.

A monomial is a weight token ``[w]`` times a finite product of symbolic
variables with nonzero integer exponents; a polynomial is a finite
integer-coefficient combination of monomials.  Monomial keys are
(family, node, shift) triples with a canonical total order, so every value
has one canonical form and serialization is bijective.

Coefficients are arbitrary-precision integers and weight coordinates exact
rationals; there is no floating-point mode.
"""

from __future__ import annotations

import re
from enum import IntEnum
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DivisionFailure, NonInvertibleSubstitution, ParseError
from .weights import Weight, format_weight, parse_weight_body, weight_lcm_denominator


class Family(IntEnum):
    """Variable families, in canonical comparison order."""

    Z = 0
    U = 1
    FROZEN = 2
    ELL_PLUS = 3
    ELL_MINUS = 4
    Y = 5
    A_INV_BASE = 6
    PSI = 7


_FAMILY_TOKEN = {
    Family.Z: "z",
    Family.U: "u",
    Family.FROZEN: "f",
    Family.ELL_PLUS: "l+",
    Family.ELL_MINUS: "l-",
    Family.Y: "Y",
    Family.A_INV_BASE: "A",
    Family.PSI: "Psi",
}
_TOKEN_FAMILY = {tok: fam for fam, tok in _FAMILY_TOKEN.items()}


class VarKey(tuple):
    """Total key (family, node, shift); shift is the exponent r in q^r.

    Frozen variables carry no spectral parameter; their shift is pinned to 0
    so the text form ``f(j)`` stays bijective.
    """

    __slots__ = ()

    def __new__(cls, family: Family, node: int, shift: int = 0):
        family = Family(family)
        if family is Family.FROZEN and shift != 0:
            raise ValueError("frozen variables carry no shift")
        return tuple.__new__(cls, (family, node, shift))

    @property
    def family(self) -> Family:
        return self[0]

    @property
    def node(self) -> int:
        return self[1]

    @property
    def shift(self) -> int:
        return self[2]

    def text(self) -> str:
        tok = _FAMILY_TOKEN[self.family]
        if self.family is Family.FROZEN:
            return f"{tok}({self.node})"
        return f"{tok}({self.node},{self.shift})"

    def __repr__(self) -> str:
        return f"VarKey({self.family.name}, {self.node}, {self.shift})"


def zvar(node: int, shift: int) -> VarKey:
    return VarKey(Family.Z, node, shift)


def uvar(node: int, shift: int) -> VarKey:
    return VarKey(Family.U, node, shift)


def fvar(node: int) -> VarKey:
    return VarKey(Family.FROZEN, node)


def ell_plus(node: int, shift: int) -> VarKey:
    return VarKey(Family.ELL_PLUS, node, shift)


def ell_minus(node: int, shift: int) -> VarKey:
    return VarKey(Family.ELL_MINUS, node, shift)


def yvar(node: int, shift: int) -> VarKey:
    return VarKey(Family.Y, node, shift)


def avar(node: int, shift: int) -> VarKey:
    return VarKey(Family.A_INV_BASE, node, shift)


def psivar(node: int, shift: int) -> VarKey:
    return VarKey(Family.PSI, node, shift)


class Monomial:
    """Weight token times a finite exponent map; zero exponents are pruned."""

    __slots__ = ("weight", "exps", "_hash")

    def __init__(self, weight: Weight, exps: Mapping[VarKey, int] | Iterable[tuple[VarKey, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        cleaned = tuple(sorted((k, int(e)) for k, e in items if e != 0))
        self.weight = weight
        self.exps: tuple[tuple[VarKey, int], ...] = cleaned
        self._hash = hash((weight, cleaned))

    @staticmethod
    def one(n: int) -> "Monomial":
        return Monomial(Weight.zero(n))

    @staticmethod
    def var(n: int, key: VarKey, exp: int = 1) -> "Monomial":
        return Monomial(Weight.zero(n), [(key, exp)])

    @staticmethod
    def weight_token(w: Weight) -> "Monomial":
        return Monomial(w)

    @property
    def n(self) -> int:
        return self.weight.n

    def exp_map(self) -> dict[VarKey, int]:
        return dict(self.exps)

    def exponent(self, key: VarKey) -> int:
        for k, e in self.exps:
            if k == key:
                return e
        return 0

    def is_unit_token(self) -> bool:
        """True when the monomial is a pure weight token (no variables)."""
        return not self.exps

    def families(self) -> set[Family]:
        return {k.family for k, _ in self.exps}

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exps)
        for k, e in other.exps:
            merged[k] = merged.get(k, 0) + e
        return Monomial(self.weight + other.weight, merged)

    def inverse(self) -> "Monomial":
        return Monomial(-self.weight, [(k, -e) for k, e in self.exps])

    def __pow__(self, m: int) -> "Monomial":
        return Monomial(self.weight.scale(m), [(k, e * m) for k, e in self.exps])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Monomial)
            and self.weight == other.weight
            and self.exps == other.exps
        )

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        # Variable exponents compared by canonical VarKey order, weight last.
        return (self.exps, self.weight.sort_key())

    def text(self) -> str:
        parts: list[str] = []
        if not self.weight.is_zero():
            parts.append(f"[{format_weight(self.weight)}]")
        for k, e in self.exps:
            parts.append(k.text() if e == 1 else f"{k.text()}^{e}")
        if not parts:
            return "1"
        return " * ".join(parts)

    def __repr__(self) -> str:
        return f"<Monomial {self.text()}>"


class LPoly:
    """Finite map monomial -> nonzero integer coefficient."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for m, c in items:
            if c == 0:
                continue
            newc = acc.get(m, 0) + c
            if newc:
                acc[m] = newc
            else:
                acc.pop(m, None)
        self.n = n
        self.terms: dict[Monomial, int] = acc
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int) -> "LPoly":
        return LPoly(n)

    @staticmethod
    def one(n: int) -> "LPoly":
        return LPoly(n, {Monomial.one(n): 1})

    @staticmethod
    def const(n: int, c: int) -> "LPoly":
        return LPoly(n, {Monomial.one(n): c})

    @staticmethod
    def var(n: int, key: VarKey, exp: int = 1) -> "LPoly":
        return LPoly(n, {Monomial.var(n, key, exp): 1})

    @staticmethod
    def from_monomial(m: Monomial, coeff: int = 1) -> "LPoly":
        return LPoly(m.n, {m: coeff})

    @staticmethod
    def weight_token(w: Weight, coeff: int = 1) -> "LPoly":
        return LPoly(w.n, {Monomial.weight_token(w): coeff})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def is_unit(self) -> bool:
        """Single term with coefficient +-1 (invertible in the Laurent ring)."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def sole_monomial(self) -> Monomial:
        if len(self.terms) != 1:
            raise ValueError("not a single-term polynomial")
        return next(iter(self.terms))

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def monomials(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key(), reverse=True)

    def families(self) -> set[Family]:
        out: set[Family] = set()
        for m in self.terms:
            out |= m.families()
        return out

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LPoly") -> "LPoly":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            newc = acc.get(m, 0) + c
            if newc:
                acc[m] = newc
            else:
                acc.pop(m, None)
        return LPoly(self.n, acc)

    def __neg__(self) -> "LPoly":
        return LPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LPoly") -> "LPoly":
        return self + (-other)

    def __mul__(self, other: "LPoly") -> "LPoly":
        self._check(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                newc = acc.get(m, 0) + c1 * c2
                if newc:
                    acc[m] = newc
                else:
                    acc.pop(m, None)
        return LPoly(self.n, acc)

    def __pow__(self, k: int) -> "LPoly":
        if k < 0:
            if not self.is_unit():
                raise NonInvertibleSubstitution("negative power of a non-unit")
            m, c = next(iter(self.terms.items()))
            return LPoly(self.n, {m.inverse() ** (-k): c if k % 2 else 1})
        out = LPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale_monomial(self, m: Monomial) -> "LPoly":
        return LPoly(self.n, {t * m: c for t, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(sorted(self.terms.items(), key=lambda t: t[0].sort_key()))))
        return self._hash

    def _check(self, other: "LPoly") -> None:
        if self.n != other.n:
            raise ValueError("mixed weight-lattice ranks")

    # -- text form ------------------------------------------------------

    def text(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for m, c in self.sorted_terms():
            body = m.text()
            mag = abs(c)
            if body == "1":
                piece = f"{mag}"
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            if not chunks:
                chunks.append(piece if c > 0 else f"-{piece}")
            else:
                chunks.append(f"+ {piece}" if c > 0 else f"- {piece}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"<LPoly {self.text()}>"


# -- spec-named operation aliases ---------------------------------------


def poly_add(a: LPoly, b: LPoly) -> LPoly:
    """Termwise sum with zero-coefficient pruning."""
    return a + b


def poly_mul(a: LPoly, b: LPoly) -> LPoly:
    """Distributive product; monomials multiply by adding weights and exponents."""
    return a * b


# -- exact division ------------------------------------------------------


def _integer_vectors(polys: Iterable[LPoly]):
    """Common integerized exponent coordinates for a family of polynomials.

    Returns (keys, scale) where keys is the sorted list of all variable keys
    and scale clears every weight-coordinate denominator.
    """
    keys: set[VarKey] = set()
    weights: list[Weight] = []
    for p in polys:
        for m in p.terms:
            keys.update(k for k, _ in m.exps)
            weights.append(m.weight)
    return sorted(keys), weight_lcm_denominator(weights)


def poly_div_exact(num: LPoly, den: LPoly) -> LPoly:
    """Exact quotient q with q*den == num, or DivisionFailure.

    Both operands are mapped to ordinary polynomials over nonnegative
    integer exponent vectors (per-coordinate minimum shifted to zero, weight
    coordinates cleared of denominators), then reduced against the leading
    monomial in lexicographic order.  Lex over nonnegative vectors is a
    well-order, so the reduction terminates with either the quotient or a
    definite failure.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = num.n
    if num.is_zero():
        return LPoly.zero(n)
    keys, scale = _integer_vectors([num, den])
    k = len(keys)

    def vec(m: Monomial) -> tuple[int, ...]:
        ex = m.exp_map()
        coords = [ex.get(key, 0) for key in keys]
        coords.extend(int(c * scale) for c in m.weight.coords)
        return tuple(coords)

    num_v = {vec(m): c for m, c in num.terms.items()}
    den_v = {vec(m): c for m, c in den.terms.items()}
    dims = k + n
    # Shift both supports so every coordinate is nonnegative; the quotient of
    # the shifted polynomials differs from the true quotient by the monomial
    # carrying the difference of the two shifts.
    min_num = [min(v[i] for v in num_v) for i in range(dims)]
    min_den = [min(v[i] for v in den_v) for i in range(dims)]
    num_v = {tuple(a - b for a, b in zip(v, min_num)): c for v, c in num_v.items()}
    den_v = {tuple(a - b for a, b in zip(v, min_den)): c for v, c in den_v.items()}

    den_lead = max(den_v)
    den_lc = den_v[den_lead]
    rem = dict(num_v)
    quo: dict[tuple[int, ...], int] = {}
    while rem:
        lead = max(rem)
        lc = rem[lead]
        qvec = tuple(a - b for a, b in zip(lead, den_lead))
        if any(c < 0 for c in qvec) or lc % den_lc != 0:
            raise DivisionFailure(f"{num.text()} is not divisible by {den.text()}")
        qc = lc // den_lc
        quo[qvec] = qc
        for dvec, dc in den_v.items():
            key = tuple(a + b for a, b in zip(qvec, dvec))
            newc = rem.get(key, 0) - qc * dc
            if newc:
                rem[key] = newc
            else:
                rem.pop(key, None)

    # Undo the normalization shift: quotient exponents regain min_num - min_den.
    delta = [a - b for a, b in zip(min_num, min_den)]
    out: dict[Monomial, int] = {}
    for qvec, qc in quo.items():
        full = [a + b for a, b in zip(qvec, delta)]
        exps = {key: e for key, e in zip(keys, full[:k]) if e != 0}
        w = Weight(Fraction(c, scale) for c in full[k:])
        out[Monomial(w, exps)] = qc
    return LPoly(n, out)


def try_div_exact(num: LPoly, den: LPoly) -> LPoly | None:
    try:
        return poly_div_exact(num, den)
    except DivisionFailure:
        return None


# -- substitution ----------------------------------------------------------


def substitute(p: LPoly, images: Mapping[VarKey, LPoly]) -> LPoly:
    """Homomorphic image of p under key -> polynomial replacements.

    A key with a negative exponent must map to a single monomial (a unit);
    otherwise NonInvertibleSubstitution is raised.  Keys absent from the map
    are kept.  Weight tokens pass through and multiply into the images.
    """
    n = p.n
    out = LPoly.zero(n)
    cache: dict[tuple[VarKey, int], LPoly] = {}

    def image_power(key: VarKey, e: int) -> LPoly:
        got = cache.get((key, e))
        if got is not None:
            return got
        img = images[key]
        if e < 0 and not img.is_unit():
            raise NonInvertibleSubstitution(
                f"{key.text()}^{e} with non-monomial image {img.text()}"
            )
        val = img ** e
        cache[(key, e)] = val
        return val

    for m, c in p.terms.items():
        kept: dict[VarKey, int] = {}
        acc = LPoly(n, {Monomial(m.weight): c})
        for key, e in m.exps:
            if key in images:
                acc = acc * image_power(key, e)
            else:
                kept[key] = e
        if kept:
            acc = acc.scale_monomial(Monomial(Weight.zero(n), kept))
        out = out + acc
    return out


# -- canonical text parsing -------------------------------------------------

_NAME_RE = re.compile(r"(Psi|l\+|l-|[zufYA])\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)")


def parse_monomial(text: str, n: int) -> tuple[Monomial, int]:
    """Parse one ``coeff*[w]*vars`` chunk; returns (monomial, coefficient)."""
    text = text.strip()
    coeff = 1
    weight = Weight.zero(n)
    exps: dict[VarKey, int] = {}
    if not text:
        raise ParseError("empty monomial")
    for raw in (s.strip() for s in text.split("*")):
        if not raw:
            raise ParseError(f"dangling '*' in {text!r}")
        if raw.startswith("["):
            # Bracket bodies contain no '*'-free guarantee, so re-join is not
            # needed: format_weight uses '*' inside brackets.  Handle below.
            raise ParseError("weight bracket split; use parse_lpoly")
        if re.fullmatch(r"-?\d+", raw):
            coeff *= int(raw)
            continue
        mt = re.fullmatch(r"(Psi|l\+|l-|[zufYA])\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)(?:\^(-?\d+))?", raw)
        if not mt:
            raise ParseError(f"bad factor {raw!r}")
        fam = _TOKEN_FAMILY[mt.group(1)]
        node = int(mt.group(2))
        shift = int(mt.group(3)) if mt.group(3) is not None else 0
        exp = int(mt.group(4)) if mt.group(4) is not None else 1
        key = VarKey(fam, node, shift)
        exps[key] = exps.get(key, 0) + exp
    return Monomial(weight, exps), coeff


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split a polynomial string into (sign, chunk) pairs at top level."""
    out: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    cur: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if depth == 0 and ch in "+-" and i > 0 and text[i - 1] == " " and i + 1 < len(text) and text[i + 1] == " ":
            out.append((sign, "".join(cur).strip()))
            sign = 1 if ch == "+" else -1
            cur = []
            i += 2
            continue
        cur.append(ch)
        i += 1
    out.append((sign, "".join(cur).strip()))
    return out


def _parse_chunk(chunk: str, n: int) -> tuple[Monomial, int]:
    """Parse one signed chunk: optional coeff, optional [w], variable factors."""
    chunk = chunk.strip()
    if chunk.startswith("-"):
        m, c = _parse_chunk(chunk[1:], n)
        return m, -c
    weight = Weight.zero(n)
    m = re.search(r"\[([^\]]*)\]", chunk)
    if m:
        weight = parse_weight_body(m.group(1), n)
        chunk = chunk[: m.start()] + chunk[m.end():]
        chunk = "*".join(s for s in (part.strip() for part in chunk.split("*")) if s)
    if not chunk:
        return Monomial(weight), 1
    mono, coeff = parse_monomial(chunk, n)
    return Monomial(weight + mono.weight, mono.exp_map()), coeff


def parse_lpoly(text: str, n: int) -> LPoly:
    """Parse the canonical text form back into a polynomial.

    Inverse of :meth:`LPoly.text`: ``parse_lpoly(p.text(), p.n) == p``.
    """
    text = text.strip()
    if text == "0":
        return LPoly.zero(n)
    terms: list[tuple[Monomial, int]] = []
    for sign, chunk in _split_terms(text):
        if not chunk:
            raise ParseError(f"empty term in {text!r}")
        mono, coeff = _parse_chunk(chunk, n)
        terms.append((mono, sign * coeff))
    return LPoly(n, terms)
