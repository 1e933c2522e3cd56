"""Cartan matrices of the finite simple types with their symmetrizers.

Numbering follows Kac: type B has the short root at node n, type C at nodes
1..n-1, F4 is long-long-short-short (1-2=>3-4), G2 has the long root at
node 1 (d = (3, 1)).  The symmetrizer entries d_i are the relatively prime
positive integers making diag(d) * C symmetric.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .errors import UnsupportedVariable
from .laurent import Family, LPoly, Monomial, VarKey, yvar
from .weights import Weight


class CartanData:
    """Immutable Cartan matrix, symmetrizer and derived weight data."""

    __slots__ = ("kind", "n", "C", "d", "lacing", "_Cinv")

    def __init__(self, kind: str, n: int, C: tuple[tuple[int, ...], ...], d: tuple[int, ...]):
        self.kind = kind
        self.n = n
        self.C = C
        self.d = d
        self.lacing = max(d)
        self._Cinv = _invert_rational(C)
        self._validate()

    def _validate(self) -> None:
        from math import gcd

        C, d, n = self.C, self.d, self.n
        assert all(C[i][i] == 2 for i in range(n))
        assert all(C[i][j] <= 0 for i in range(n) for j in range(n) if i != j)
        assert all(d[i] * C[i][j] == d[j] * C[j][i] for i in range(n) for j in range(n))
        g = 0
        for x in d:
            g = gcd(g, x)
        assert g == 1 and all(x > 0 for x in d)

    def c(self, i: int, j: int) -> int:
        """Cartan entry C_{i,j} with 1-based node indices."""
        return self.C[i - 1][j - 1]

    def di(self, i: int) -> int:
        return self.d[i - 1]

    def nodes(self) -> range:
        return range(1, self.n + 1)

    def simple_root(self, i: int) -> Weight:
        """alpha_i expressed in fundamental weights: sum_j C_{j,i} omega_j."""
        return Weight(Fraction(self.c(j, i)) for j in self.nodes())

    def root_coordinates(self, w: Weight) -> tuple[Fraction, ...]:
        """Coordinates c with w = sum_i c_i alpha_i (exact solve)."""
        return tuple(
            sum(self._Cinv[i][j] * w.coords[j] for j in range(self.n))
            for i in range(self.n)
        )

    def weight_leq(self, a: Weight, b: Weight) -> bool:
        """a <= b in the root order: b - a a nonnegative root combination."""
        return all(c >= 0 for c in self.root_coordinates(b - a))

    def __repr__(self) -> str:
        return f"CartanData({self.kind})"


def _invert_rational(C: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(C)
    aug = [
        [Fraction(C[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _chain(n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        C[i][i + 1] = C[i + 1][i] = -1
    return C


@lru_cache(maxsize=None)
def cartan_data(name: str) -> CartanData:
    """Cartan data by type name: A1.., B2.., C2.., D4.., E6/E7/E8, F4, G2.

    sl-style aliases are accepted: sl2 == A1, sl3 == A2, ...
    """
    m = re.fullmatch(r"\s*(?:sl(\d+)|([A-G])(\d+))\s*", name, flags=re.IGNORECASE)
    if not m:
        raise ValueError(f"unrecognized type {name!r}")
    if m.group(1):
        rank = int(m.group(1)) - 1
        kind, n = "A", rank
    else:
        kind, n = m.group(2).upper(), int(m.group(3))
    if n < 1:
        raise ValueError(f"bad rank in {name!r}")

    if kind == "A":
        C = _chain(n)
        d = [1] * n
    elif kind == "B":
        if n < 2:
            raise ValueError("type B needs rank >= 2")
        C = _chain(n)
        C[n - 2][n - 1] = -1
        C[n - 1][n - 2] = -2
        d = [2] * (n - 1) + [1]
    elif kind == "C":
        if n < 2:
            raise ValueError("type C needs rank >= 2")
        C = _chain(n)
        C[n - 2][n - 1] = -2
        C[n - 1][n - 2] = -1
        d = [1] * (n - 1) + [2]
    elif kind == "D":
        if n < 3:
            raise ValueError("type D needs rank >= 3")
        # Chain on 1..n-1 with node n forking off node n-2.
        C = _chain(n - 1)
        for row in C:
            row.append(0)
        C.append([0] * n)
        C[n - 1][n - 1] = 2
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
        d = [1] * n
    elif kind in {"E"}:
        if n not in (6, 7, 8):
            raise ValueError("type E needs rank 6, 7 or 8")
        branch = {6: 3, 7: 3, 8: 5}[n]
        C = _chain(n - 1)
        for row in C:
            row.append(0)
        C.append([0] * n)
        C[n - 1][n - 1] = 2
        C[branch - 1][n - 1] = C[n - 1][branch - 1] = -1
        d = [1] * n
    elif kind == "F":
        if n != 4:
            raise ValueError("type F needs rank 4")
        C = _chain(4)
        C[1][2] = -1
        C[2][1] = -2
        d = [2, 2, 1, 1]
    elif kind == "G":
        if n != 2:
            raise ValueError("type G needs rank 2")
        C = [[2, -1], [-3, 2]]
        d = [3, 1]
    else:
        raise ValueError(f"unrecognized type {name!r}")

    return CartanData(f"{kind}{n}", n, tuple(tuple(r) for r in C), tuple(d))


# -- l-weight projections -----------------------------------------------


def a_monomial(cd: CartanData, i: int, r: int) -> Monomial:
    """The root monomial at node i, parameter q^r, expanded in Y-variables.

    Y_{i,r-d_i} Y_{i,r+d_i} divided by the product of neighbor factors:
    one Y_{j,r} per C_{j,i} = -1, the pair Y_{j,r-1} Y_{j,r+1} per -2 and
    the triple Y_{j,r-2} Y_{j,r} Y_{j,r+2} per -3.  Its image under varpi
    is the simple root alpha_i.
    """
    di = cd.di(i)
    exps: dict[VarKey, int] = {}

    def bump(key: VarKey, e: int) -> None:
        exps[key] = exps.get(key, 0) + e

    bump(yvar(i, r - di), 1)
    bump(yvar(i, r + di), 1)
    for j in cd.nodes():
        if j == i:
            continue
        cji = cd.c(j, i)
        if cji == -1:
            bump(yvar(j, r), -1)
        elif cji == -2:
            bump(yvar(j, r - 1), -1)
            bump(yvar(j, r + 1), -1)
        elif cji == -3:
            bump(yvar(j, r - 2), -1)
            bump(yvar(j, r), -1)
            bump(yvar(j, r + 2), -1)
        elif cji != 0:
            raise ValueError(f"unexpected Cartan entry C[{j}][{i}] = {cji}")
    return Monomial(Weight.zero(cd.n), exps)


def varpi_monomial(cd: CartanData, m: Monomial) -> Weight:
    """Weight projection: Y contributes omega_i, A contributes alpha_i,
    Psi contributes zero; the weight token passes through."""
    w = m.weight
    for k, e in m.exps:
        if k.family is Family.Y:
            w = w + Weight.fundamental(cd.n, k.node, e)
        elif k.family is Family.A_INV_BASE:
            w = w + cd.simple_root(k.node).scale(e)
        elif k.family is Family.PSI:
            continue
        else:
            raise UnsupportedVariable(f"varpi does not apply to {k.text()}")
    return w


def varpi(cd: CartanData, p: LPoly) -> LPoly:
    """Apply the weight projection termwise, collecting coefficients."""
    out: dict[Monomial, int] = {}
    for m, c in p.terms.items():
        key = Monomial(varpi_monomial(cd, m))
        out[key] = out.get(key, 0) + c
    return LPoly(p.n, {m: c for m, c in out.items() if c})
