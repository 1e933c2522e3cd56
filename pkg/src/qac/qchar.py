"""Explicit rank-one character ladders and truncated-character utilities.

Rank-one string modules and both prefundamental families are generated
exactly; lower terms hang off the top monomial by inverse root-monomial
steps, and the truncation depth (when set) counts those steps in the
root-coordinate metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .cartan import CartanData, a_monomial, cartan_data, varpi, varpi_monomial
from .errors import DepthMismatch, NoUniqueTop, NotSl2
from .laurent import Family, LPoly, Monomial, avar, psivar, yvar
from .lweights import a_certificate
from .weights import Weight

A1 = cartan_data("A1")


@dataclass(frozen=True)
class QCharacter:
    """Laurent polynomial over Y/Psi variables and weight tokens.

    `depth` is None for exact characters; otherwise every term sits within
    `depth` root-steps of the highest term.
    """

    cartan: CartanData
    poly: LPoly
    depth: Optional[int] = None

    def text(self) -> str:
        return self.poly.text()


def _sl2_check(cd: CartanData) -> None:
    if cd.n != 1:
        raise NotSl2(f"rank-one operation on {cd.kind}")


def top_term(c: QCharacter) -> Monomial:
    """The unique term of maximal weight; NoUniqueTop when absent."""
    cd = c.cartan
    terms = list(c.poly.terms)
    if not terms:
        raise NoUniqueTop("empty character")
    best = terms[0]
    for m in terms[1:]:
        if cd.weight_leq(varpi_monomial(cd, best), varpi_monomial(cd, m)):
            best = m
    top_w = varpi_monomial(cd, best)
    for m in terms:
        if m is not best and not cd.weight_leq(varpi_monomial(cd, m), top_w):
            raise NoUniqueTop(f"incomparable top candidates in {c.poly.text()}")
    return best


def term_depth(cd: CartanData, top: Monomial, m: Monomial) -> int:
    """Root-steps between a term and the top (weight gap in the root basis)."""
    gap = varpi_monomial(cd, top) - varpi_monomial(cd, m)
    coords = cd.root_coordinates(gap)
    total = sum(coords)
    if any(x < 0 for x in coords) or total != int(total):
        raise NoUniqueTop(f"term {m.text()} not below the top term")
    return int(total)


def kr_qchar_sl2(k: int, s: int) -> QCharacter:
    """Exact (k+1)-term ladder with top string Y_{1,s} ... Y_{1,s+2(k-1)}.

    Term j multiplies the top by the first j inverse root monomials at
    shifts s+2k-1, s+2k-3, ...; k = 0 gives the unit.
    """
    if k < 0:
        raise ValueError("string length must be nonnegative")
    n = 1
    top = Monomial(Weight.zero(n), {yvar(1, s + 2 * t): 1 for t in range(k)})
    terms: dict[Monomial, int] = {}
    cur = top
    terms[cur] = 1
    for j in range(1, k + 1):
        step = a_monomial(A1, 1, s + 2 * k + 1 - 2 * j).inverse()
        cur = cur * step
        terms[cur] = terms.get(cur, 0) + 1
    return QCharacter(A1, LPoly(n, terms), depth=None)


def prefund_plus_qchar_sl2(s: int, depth: int) -> QCharacter:
    """[Psi_{1,s}] times the weight-token series, truncated at `depth`."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    n = 1
    psi = Monomial(Weight.zero(n), {psivar(1, s): 1})
    terms = {
        psi * Monomial.weight_token(Weight.fundamental(n, 1, -2 * r)): 1
        for r in range(depth + 1)
    }
    return QCharacter(A1, LPoly(n, terms), depth=depth)


def prefund_minus_qchar_sl2(s: int, depth: int) -> QCharacter:
    """[Psi_{1,s}^{-1}] times the descending inverse-root ladder at `depth`."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    n = 1
    terms: dict[Monomial, int] = {}
    cur = Monomial(Weight.zero(n), {psivar(1, s): -1})
    terms[cur] = 1
    for r in range(1, depth + 1):
        cur = cur * a_monomial(A1, 1, s - 2 * (r - 1)).inverse()
        terms[cur] = terms.get(cur, 0) + 1
    return QCharacter(A1, LPoly(n, terms), depth=depth)


def normalize(c: QCharacter) -> QCharacter:
    """Divide by the highest term's monomial so the top term becomes 1."""
    top = top_term(c)
    inv = top.inverse()
    return QCharacter(c.cartan, c.poly.scale_monomial(inv), c.depth)


def character(c: QCharacter) -> LPoly:
    """Weight projection applied termwise (a weight-token polynomial)."""
    return varpi(c.cartan, c.poly)


def qchar_mul(a: QCharacter, b: QCharacter) -> QCharacter:
    """Product; the result carries the smaller truncation depth, re-truncated."""
    if a.cartan is not b.cartan and a.cartan.kind != b.cartan.kind:
        raise ValueError("mixed Cartan data")
    depth: Optional[int]
    if a.depth is None and b.depth is None:
        depth = None
    elif a.depth is None:
        depth = b.depth
    elif b.depth is None:
        depth = a.depth
    else:
        depth = min(a.depth, b.depth)
    prod = QCharacter(a.cartan, a.poly * b.poly, None)
    if depth is None:
        return prod
    return truncate_depth(prod, depth)


def truncate_depth(c: QCharacter, depth: int) -> QCharacter:
    """Keep terms within `depth` root-steps of the top term."""
    cd = c.cartan
    top = top_term(c)
    kept = {
        m: coeff
        for m, coeff in c.poly.terms.items()
        if term_depth(cd, top, m) <= depth
    }
    return QCharacter(cd, LPoly(c.poly.n, kept), depth)


def qchar_equal(a: QCharacter, b: QCharacter) -> bool:
    """Exact comparison; truncated characters must carry equal depths."""
    if a.depth != b.depth:
        raise DepthMismatch(f"depths {a.depth} and {b.depth}")
    return a.poly == b.poly


def compare_at(a: QCharacter, b: QCharacter, depth: int) -> bool:
    """Compare both characters after truncation to a common depth."""
    for c in (a, b):
        if c.depth is not None and c.depth < depth:
            raise DepthMismatch(f"character of depth {c.depth} compared at {depth}")
    return truncate_depth(a, depth).poly == truncate_depth(b, depth).poly


def truncate_leR(c: QCharacter, R: int) -> QCharacter:
    """Shift-bounded truncation: keep terms whose certificate from the top
    uses root monomials at shifts at most R - d_i only."""
    cd = c.cartan
    top = top_term(c)
    caps = {i: R - cd.di(i) for i in cd.nodes()}
    kept: dict[Monomial, int] = {}
    for m, coeff in c.poly.terms.items():
        if m == top or a_certificate(cd, m, top, max_shift=caps) is not None:
            kept[m] = coeff
    return QCharacter(cd, LPoly(c.poly.n, kept), c.depth)


def to_a_form(c: QCharacter) -> LPoly:
    """Rewrite a normalized ladder with symbolic inverse root variables.

    Each term below the top is replaced by the product of A-variables named
    by its certificate, e.g. ``A(1,0)^-1 * A(1,-2)^-1``.
    """
    cd = c.cartan
    top = top_term(c)
    out: dict[Monomial, int] = {}
    for m, coeff in c.poly.terms.items():
        cert = a_certificate(cd, m, top)
        if cert is None:
            raise NoUniqueTop(f"term {m.text()} admits no certificate from the top")
        mono = Monomial(Weight.zero(c.poly.n), {avar(i, r): -v for (i, r), v in cert.items()})
        out[mono] = out.get(mono, 0) + coeff
    return LPoly(c.poly.n, out)


@dataclass(frozen=True)
class LimitReport:
    ok: bool
    family: str
    shift: int
    k_max: int
    first_disagreement: Optional[int]
    detail: str


def limit_stabilizes(family: str, s: int, k_max: int) -> LimitReport:
    """Check string ladders against the negative prefundamental series.

    For k = 2..k_max the normalized ladder of length k ending at shift s-1
    must agree with the normalized negative series at shift s on all terms
    within k-1 root-steps; the weight projections must agree likewise.
    """
    if family != "KR_to_prefund_minus":
        raise ValueError(f"unknown limit family {family!r}")
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    series = prefund_minus_qchar_sl2(s, k_max + 1)
    norm_series = normalize(series)
    for k in range(2, k_max + 1):
        ladder = normalize(kr_qchar_sl2(k, 1 - 2 * k + s))
        if not compare_at(ladder, norm_series, k - 1):
            return LimitReport(
                False, family, s, k_max, k, f"term mismatch at k={k}"
            )
        lhs = varpi(A1, truncate_depth(ladder, k - 1).poly)
        rhs = varpi(A1, truncate_depth(norm_series, k - 1).poly)
        if lhs != rhs:
            return LimitReport(
                False, family, s, k_max, k, f"character mismatch at k={k}"
            )
    return LimitReport(True, family, s, k_max, None, "agrees to stated depth")
