"""Seeds, exchange mutation, Laurent re-verification and the multigrading.

Attachments are kept fully expanded as Laurent polynomials in the initial
variables, so exchange identities are exact equalities and a failed exact
division inside `mutate` signals a genuinely broken seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cartan import CartanData
from .errors import FrozenVertex, NotHomogeneousError
from .laurent import (
    Family,
    LPoly,
    Monomial,
    VarKey,
    fvar,
    poly_div_exact,
    substitute,
    try_div_exact,
    uvar,
    zvar,
)
from .quiver import Quiver, Vertex, column
from .weights import Weight


@dataclass(frozen=True)
class RationalAttachment:
    """num/den pair for hand-built seeds that may fail the Laurent check."""

    num: LPoly
    den: LPoly


Attachment = LPoly | RationalAttachment


class Seed:
    """Quiver plus one attachment per vertex plus the mutation history."""

    __slots__ = ("quiver", "attach", "history")

    def __init__(
        self,
        quiver: Quiver,
        attach: Mapping[Vertex, Attachment],
        history: tuple[Vertex, ...] = (),
    ):
        if set(attach) != set(quiver.vertices):
            raise ValueError("attachments must cover exactly the vertex set")
        self.quiver = quiver
        self.attach = dict(attach)
        self.history = history

    def canonical_key(self) -> tuple:
        """Hashable form used to deduplicate seeds (ignores history)."""
        items = tuple(
            (v, a.text() if isinstance(a, LPoly) else (a.num.text(), a.den.text()))
            for v, a in sorted(self.attach.items())
        )
        return (self.quiver, items)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Seed)
            and self.quiver == other.quiver
            and self.attach == other.attach
        )

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        return f"<Seed |V|={len(self.attach)} history={[v.text() for v in self.history]}>"


def initial_seed(q: Quiver, family: Family = Family.Z, n: int | None = None) -> Seed:
    """Attach the formal variable of the given family to every vertex.

    `n` is the weight-lattice rank carried by the coefficients (defaults to
    the largest node index present).
    """
    if n is None:
        n = max(v.node for v in q.vertices)
    attach = {
        v: LPoly.var(n, VarKey(family, v.node, v.shift)) for v in q.vertices
    }
    return Seed(q, attach)


def hminus_seed(q: Quiver, cd: CartanData) -> Seed:
    """Initial seed of an ice window: z-variables on the nonpositive part,
    one frozen coefficient variable per positive-shift connector."""
    attach: dict[Vertex, LPoly] = {}
    for v in q.vertices:
        if v.shift > 0:
            attach[v] = LPoly.var(cd.n, fvar(column(v)))
        else:
            attach[v] = LPoly.var(cd.n, zvar(v.node, v.shift))
    return Seed(q, attach)


def _as_poly(a: Attachment) -> LPoly:
    if isinstance(a, RationalAttachment):
        raise ValueError("cannot mutate a seed with rational attachments")
    return a


def mutate(s: Seed, k: Vertex) -> Seed:
    """Fomin-Zelevinsky exchange at a mutable vertex.

    attach'(k) = (product over arrows j->k + product over arrows k->j) / attach(k),
    divided exactly; the quiver mutates by the standard local rule.
    """
    k = Vertex(*k)
    if k not in s.quiver.vertices:
        raise KeyError(f"{k.text()} not in the window")
    if k in s.quiver.frozen:
        raise FrozenVertex(f"{k.text()} is frozen")
    n = _as_poly(s.attach[k]).n
    inp = LPoly.one(n)
    for a in s.quiver.arrows_into(k):
        inp = inp * _as_poly(s.attach[a])
    outp = LPoly.one(n)
    for b in s.quiver.arrows_out_of(k):
        outp = outp * _as_poly(s.attach[b])
    new_attach = dict(s.attach)
    new_attach[k] = poly_div_exact(inp + outp, _as_poly(s.attach[k]))
    return Seed(s.quiver.mutate(k), new_attach, s.history + (k,))


def mutate_seq(s: Seed, ks: Sequence[Vertex]) -> Seed:
    for k in ks:
        s = mutate(s, k)
    return s


def exchange_holds(before: Seed, k: Vertex, after: Seed) -> bool:
    """Re-verify attach'(k)*attach(k) == in-product + out-product exactly."""
    k = Vertex(*k)
    n = _as_poly(before.attach[k]).n
    inp = LPoly.one(n)
    for a in before.quiver.arrows_into(k):
        inp = inp * _as_poly(before.attach[a])
    outp = LPoly.one(n)
    for b in before.quiver.arrows_out_of(k):
        outp = outp * _as_poly(before.attach[b])
    return _as_poly(after.attach[k]) * _as_poly(before.attach[k]) == inp + outp


def is_laurent(s: Seed) -> bool:
    """True when every attachment is a genuine Laurent polynomial.

    Polynomial attachments already are; rational attachments are re-checked
    by exact division of the numerator by the denominator.
    """
    for a in s.attach.values():
        if isinstance(a, RationalAttachment):
            if a.den.is_zero() or try_div_exact(a.num, a.den) is None:
                return False
    return True


# -- multigrading -----------------------------------------------------------


@dataclass(frozen=True)
class MultiDegree:
    """Integer degree vector indexed by column."""

    coords: tuple[tuple[int, int], ...]  # sorted (column, degree), zeros pruned

    @staticmethod
    def of(mapping: Mapping[int, int]) -> "MultiDegree":
        return MultiDegree(tuple(sorted((c, d) for c, d in mapping.items() if d)))

    def is_zero(self) -> bool:
        return not self.coords

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        return " + ".join(f"{d}*e{c}" for c, d in self.coords)


def _term_degree(m: Monomial) -> MultiDegree:
    deg: dict[int, int] = {}
    for k, e in m.exps:
        if k.family not in (Family.Z, Family.FROZEN):
            raise NotHomogeneousError(f"multidegree undefined for {k.text()}")
        deg[k.node] = deg.get(k.node, 0) + e
    return MultiDegree.of(deg)


def multidegree(p: LPoly) -> MultiDegree:
    """Common multidegree of all terms of a z/f-polynomial.

    deg(z_{i,s}) = e_i and deg(f_j) = e_j.  Raises NotHomogeneousError when
    two terms disagree (a diagnostic, not a corruption).
    """
    if p.is_zero():
        return MultiDegree.of({})
    it = iter(p.terms)
    deg = _term_degree(next(it))
    for m in it:
        if _term_degree(m) != deg:
            raise NotHomogeneousError(
                f"terms of degrees {deg} and {_term_degree(m)} in {p.text()}"
            )
    return deg


def is_multihomogeneous(p: LPoly) -> bool:
    try:
        multidegree(p)
        return True
    except NotHomogeneousError:
        return False


def f_hom(p: LPoly) -> LPoly:
    """Ring map sending u_{i,s} to z_{i,s} / f_i (column = node index)."""
    keys = {k for m in p.terms for k, _ in m.exps if k.family is Family.U}
    images = {
        k: LPoly.from_monomial(
            Monomial(
                Weight.zero(p.n),
                {zvar(k.node, k.shift): 1, fvar(k.node): -1},
            )
        )
        for k in keys
    }
    return substitute(p, images)


def frozen_lift(x: LPoly) -> LPoly:
    """F(x) times the smallest frozen monomial clearing negative f-exponents."""
    fx = f_hom(x)
    mins: dict[int, int] = {}
    for m in fx.terms:
        seen: dict[int, int] = {}
        for k, e in m.exps:
            if k.family is Family.FROZEN:
                seen[k.node] = e
        for j in set(mins) | set(seen):
            mins[j] = min(mins.get(j, 0), seen.get(j, 0))
    clear = Monomial(
        Weight.zero(fx.n), {fvar(j): -lo for j, lo in mins.items() if lo < 0}
    )
    return fx.scale_monomial(clear)
