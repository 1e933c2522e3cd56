"""Monomial l-weights: the multiplicative monoid generated by Y-type and
Psi-type factors with integer spectral exponents, plus weight tokens.

The Y and Psi exponent maps are kept separate: sign conditions classifying
a monomial as positive or negative are stated on these generators, and the
factorization machinery needs the split explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .cartan import CartanData, a_monomial
from .errors import (
    NotComparableWindow,
    NotNegative,
    UnsupportedVariable,
)
from .laurent import Family, LPoly, Monomial, VarKey, psivar, yvar
from .weights import Weight


class LWeightMono:
    """Weight token times a product of Y_{i,q^r} and Psi_{i,q^r} powers."""

    __slots__ = ("weight", "y", "psi", "_hash")

    def __init__(
        self,
        weight: Weight,
        y: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
        psi: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
    ):
        yi = y.items() if isinstance(y, Mapping) else y
        pi = psi.items() if isinstance(psi, Mapping) else psi
        self.weight = weight
        self.y = tuple(sorted(((int(i), int(r)), int(e)) for (i, r), e in yi if e != 0))
        self.psi = tuple(sorted(((int(i), int(r)), int(e)) for (i, r), e in pi if e != 0))
        self._hash = hash((weight, self.y, self.psi))

    @staticmethod
    def unit(n: int) -> "LWeightMono":
        return LWeightMono(Weight.zero(n))

    @staticmethod
    def y_gen(n: int, i: int, r: int, e: int = 1) -> "LWeightMono":
        return LWeightMono(Weight.zero(n), {(i, r): e})

    @staticmethod
    def psi_gen(n: int, i: int, r: int, e: int = 1) -> "LWeightMono":
        return LWeightMono(Weight.zero(n), (), {(i, r): e})

    @staticmethod
    def omega(w: Weight) -> "LWeightMono":
        return LWeightMono(w)

    @property
    def n(self) -> int:
        return self.weight.n

    def y_map(self) -> dict[tuple[int, int], int]:
        return dict(self.y)

    def psi_map(self) -> dict[tuple[int, int], int]:
        return dict(self.psi)

    def is_unit(self) -> bool:
        return not self.y and not self.psi and self.weight.is_zero()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LWeightMono)
            and self.weight == other.weight
            and self.y == other.y
            and self.psi == other.psi
        )

    def __hash__(self) -> int:
        return self._hash

    def inverse(self) -> "LWeightMono":
        return LWeightMono(
            -self.weight,
            [(k, -e) for k, e in self.y],
            [(k, -e) for k, e in self.psi],
        )

    def text(self) -> str:
        parts: list[str] = []
        if not self.weight.is_zero():
            parts.append(f"[{self.weight}]")
        for (i, r), e in self.y:
            parts.append(f"Y({i},{r})" + (f"^{e}" if e != 1 else ""))
        for (i, r), e in self.psi:
            parts.append(f"Psi({i},{r})" + (f"^{e}" if e != 1 else ""))
        return " * ".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"<LWeightMono {self.text()}>"

    def to_monomial(self) -> Monomial:
        """Exact-algebra monomial over the Y and PSI families."""
        exps: dict[VarKey, int] = {}
        for (i, r), e in self.y:
            exps[yvar(i, r)] = e
        for (i, r), e in self.psi:
            exps[psivar(i, r)] = e
        return Monomial(self.weight, exps)

    @staticmethod
    def from_monomial(m: Monomial) -> "LWeightMono":
        y: dict[tuple[int, int], int] = {}
        psi: dict[tuple[int, int], int] = {}
        for k, e in m.exps:
            if k.family is Family.Y:
                y[(k.node, k.shift)] = e
            elif k.family is Family.PSI:
                psi[(k.node, k.shift)] = e
            else:
                raise UnsupportedVariable(f"not an l-weight factor: {k.text()}")
        return LWeightMono(m.weight, y, psi)


def lw_mul(a: LWeightMono, b: LWeightMono) -> LWeightMono:
    """Componentwise sum of weight, Y-exponents and Psi-exponents."""
    y = a.y_map()
    for k, e in b.y:
        y[k] = y.get(k, 0) + e
    psi = a.psi_map()
    for k, e in b.psi:
        psi[k] = psi.get(k, 0) + e
    return LWeightMono(a.weight + b.weight, y, psi)


def lw_product(factors: Iterable[LWeightMono], n: int) -> LWeightMono:
    out = LWeightMono.unit(n)
    for f in factors:
        out = lw_mul(out, f)
    return out


def is_positive(m: LWeightMono) -> bool:
    """Monomial in the Y generators, the Psi factors and weight tokens."""
    return all(e >= 0 for _, e in m.y) and all(e >= 0 for _, e in m.psi)


def is_negative(m: LWeightMono) -> bool:
    """Monomial in the Y generators, inverse Psi factors and weight tokens."""
    return all(e >= 0 for _, e in m.y) and all(e <= 0 for _, e in m.psi)


def classify(m: LWeightMono) -> str:
    pos, neg = is_positive(m), is_negative(m)
    if pos and neg:
        return "both"
    if pos:
        return "positive"
    if neg:
        return "negative"
    return "neither"


def bar(m: LWeightMono) -> LWeightMono:
    """Negate every spectral shift; the weight token is untouched."""
    return LWeightMono(
        m.weight,
        [((i, -r), e) for (i, r), e in m.y],
        [((i, -r), e) for (i, r), e in m.psi],
    )


def rational_form(cd: CartanData, m: LWeightMono) -> LWeightMono:
    """Canonical presentation with every Y-factor expanded.

    Y_{i,q^r} equals [omega_i] Psi_{i,q^{r-d_i}} Psi_{i,q^{r+d_i}}^{-1} as an
    actual l-weight, so two presentations name the same l-weight exactly
    when their rational forms coincide.
    """
    weight = m.weight
    psi = m.psi_map()
    for (i, r), e in m.y:
        weight = weight + Weight.fundamental(cd.n, i, e)
        lo, hi = (i, r - cd.di(i)), (i, r + cd.di(i))
        psi[lo] = psi.get(lo, 0) + e
        psi[hi] = psi.get(hi, 0) - e
    return LWeightMono(weight, (), psi)


def lw_equal_rational(cd: CartanData, a: LWeightMono, b: LWeightMono) -> bool:
    """Equality as actual l-weights (rational functions), not presentations."""
    return rational_form(cd, a) == rational_form(cd, b)


def varpi_lw(cd: CartanData, m: LWeightMono) -> Weight:
    """Weight projection: Y_{i,a} maps to omega_i, Psi factors to zero."""
    w = m.weight
    for (i, _), e in m.y:
        w = w + Weight.fundamental(cd.n, i, e)
    return w


def tilde(cd: CartanData, m: LWeightMono) -> LWeightMono:
    """Replace the weight token so the projection vanishes."""
    drop = varpi_lw(cd, m) - m.weight
    return LWeightMono(-drop, m.y, m.psi)


def m_r_monomial(cd: CartanData, psi: LWeightMono, R: int) -> Monomial:
    """Finite Y-approximation of a negative l-weight at truncation R.

    Each inverse Psi factor at (i, q^r) contributes the string
    Y_{i, r - 2 d_i r' - d_i} over r' >= 0 while r - 2 d_i r' >= -R; the
    dominant Y-part multiplies in unchanged; the weight token is dropped.
    """
    if not is_negative(psi):
        raise NotNegative(psi.text())
    exps: dict[VarKey, int] = {}
    for (i, r), e in psi.y:
        key = yvar(i, r)
        exps[key] = exps.get(key, 0) + e
    for (i, r), e in psi.psi:
        u = -e  # e <= 0, so u copies of the string
        di = cd.di(i)
        rp = 0
        while r - 2 * di * rp >= -R:
            key = yvar(i, r - 2 * di * rp - di)
            exps[key] = exps.get(key, 0) + u
            rp += 1
    return Monomial(Weight.zero(cd.n), exps)


def kr_truncation_monomial(cd: CartanData, i: int, r: int, N: int) -> Monomial:
    """Top Y-string of the window substitution at level N.

    Product over k >= 0 with r + 2 k d_i <= 2 d N of Y_{i, -r - d_i - 2 k d_i};
    the unit monomial when r > 2 d N.
    """
    d = cd.lacing
    di = cd.di(i)
    exps: dict[VarKey, int] = {}
    k = 0
    while r + 2 * k * di <= 2 * d * N:
        key = yvar(i, -r - di - 2 * k * di)
        exps[key] = exps.get(key, 0) + 1
        k += 1
    return Monomial(Weight.zero(cd.n), exps)


def first_mutation_psi(cd: CartanData, i: int, r: int) -> tuple[LWeightMono, Weight]:
    """Highest l-weight and weight dressing of the one-step mutated variable.

    Psi = [-omega_i] * Y_{i, q^{r-d_i}} * prod over C_{j,i} < 0 of
    Psi_{j, q^{r - d_j C_{j,i}}};  lambda = alpha_i/2 - r * sum omega_j/(2 d_j).
    """
    n = cd.n
    weight = -Weight.fundamental(n, i)
    y = {(i, r - cd.di(i)): 1}
    psi: dict[tuple[int, int], int] = {}
    lam = cd.simple_root(i).scale(Fraction(1, 2))
    for j in cd.nodes():
        cji = cd.c(j, i)
        if j != i and cji < 0:
            key = (j, r - cd.di(j) * cji)
            psi[key] = psi.get(key, 0) + 1
            lam = lam - Weight.fundamental(n, j, Fraction(r, 2 * cd.di(j)))
    return LWeightMono(weight, y, psi), lam


# -- dominance certificates ---------------------------------------------


def _solve_unique(
    columns: list[dict[VarKey, int]], target: dict[VarKey, int]
) -> list[Fraction] | None:
    """Solve sum_j v_j * column_j == target exactly; None when inconsistent.

    The columns used here are root-monomial exponent vectors, which are
    linearly independent, so a consistent system has exactly one solution.
    """
    rows = sorted({k for col in columns for k in col} | set(target))
    mat = [[Fraction(col.get(rk, 0)) for col in columns] for rk in rows]
    rhs = [Fraction(target.get(rk, 0)) for rk in rows]
    ncols = len(columns)
    pivots: list[tuple[int, int]] = []
    rix = 0
    for cix in range(ncols):
        piv = next((r for r in range(rix, len(mat)) if mat[r][cix] != 0), None)
        if piv is None:
            continue
        mat[rix], mat[piv] = mat[piv], mat[rix]
        rhs[rix], rhs[piv] = rhs[piv], rhs[rix]
        pv = mat[rix][cix]
        mat[rix] = [x / pv for x in mat[rix]]
        rhs[rix] /= pv
        for r in range(len(mat)):
            if r != rix and mat[r][cix] != 0:
                f = mat[r][cix]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rix])]
                rhs[r] -= f * rhs[rix]
        pivots.append((rix, cix))
        rix += 1
    # Independence of the columns means every column carries a pivot.
    if len(pivots) != ncols:
        return None
    for r in range(rix, len(mat)):
        if rhs[r] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for r, c in pivots:
        sol[c] = rhs[r]
    return sol


def _solve_window(
    cd: CartanData,
    target: dict[VarKey, int],
    lo: int,
    hi: int,
    max_shift: Mapping[int, int] | None,
) -> dict[tuple[int, int], int] | None:
    keys: list[tuple[int, int]] = []
    for i in cd.nodes():
        cap = hi if max_shift is None else min(hi, max_shift.get(i, hi))
        keys.extend((i, r) for r in range(lo, cap + 1))
    if not keys:
        return None
    columns = [a_monomial(cd, i, r).exp_map() for (i, r) in keys]
    sol = _solve_unique(columns, target)
    if sol is None or any(x != int(x) or x < 0 for x in sol):
        return None
    return {key: int(x) for key, x in zip(keys, sol) if x}


def a_certificate(
    cd: CartanData,
    m1: Monomial,
    m2: Monomial,
    max_shift: Mapping[int, int] | None = None,
) -> dict[tuple[int, int], int] | None:
    """Nonnegative integers v with m2 * m1^{-1} = prod A_{i,q^r}^{v_{i,r}}.

    Certificate shifts range over the shifts present widened by one lacing
    step; `max_shift` caps the allowed shift per node (truncation use).
    Returns None when no certificate exists there.  When the narrow window
    has none but a doubled window does, the comparison is not settled inside
    the sanctioned window and NotComparableWindow is raised.
    """
    raw: dict[VarKey, int] = {}
    for k, e in m2.exps:
        raw[k] = raw.get(k, 0) + e
    for k, e in m1.exps:
        raw[k] = raw.get(k, 0) - e
    target: dict[VarKey, int] = {}
    for k, e in raw.items():
        if e == 0:
            continue
        if k.family is Family.PSI:
            # Root monomials carry no Psi content, so an uncancelled Psi
            # factor rules out any certificate.
            return None
        if k.family is not Family.Y:
            raise UnsupportedVariable(f"dominance expects Y-monomials, got {k.text()}")
        target[k] = e
    if not target:
        return {}

    shifts = [k.shift for k in target]
    wide = 2 * cd.lacing
    lo, hi = min(shifts) - wide, max(shifts) + wide
    found = _solve_window(cd, target, lo, hi, max_shift)
    if found is not None:
        return found
    wider = _solve_window(cd, target, lo - 2 * wide, hi + 2 * wide, max_shift)
    if wider is not None:
        raise NotComparableWindow(
            "certificate exists only beyond the sanctioned shift window"
        )
    return None


def dominance_leq(cd: CartanData, m1: Monomial, m2: Monomial) -> bool:
    """True when m1 * m2^{-1} is a product of inverse root monomials.

    Inputs are Y-monomials with projection-normalized weight; the decision
    solves the integer linear system over the root-monomial lattice.
    """
    return a_certificate(cd, m1, m2) is not None
