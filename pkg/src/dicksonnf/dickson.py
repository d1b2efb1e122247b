"""Finite Dickson nearfields DN_g(q, n).

A Dickson pair (q, n) twists the multiplication of F_{q^n}: with g a
generator of the multiplicative group and H = <g^n> the index-n subgroup,

    a o b = a * b^(q^k)   where a lies in the coset g^([k]_q) H,
    0 o b = 0,

with [k]_q = (q^k - 1)/(q - 1).  Left distributivity survives the twist;
right distributivity fails somewhere whenever n > 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Set

import sympy

from .errors import DivisionByZero, NotDicksonPair, TooLarge, ZeroArgument
from .gf_core import FFElem, FieldCtx, h_member, make_field

DEFAULT_SCAN_CAP = 10_000


@dataclass(frozen=True)
class DicksonPair:
    q: int
    n: int
    p: int
    l: int


def prime_power(q: int):
    """(p, l) with q = p^l, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = sympy.factorint(q)
    if len(fac) != 1:
        return None
    ((p, l),) = fac.items()
    return p, l


def is_dickson_pair(q: int, n: int) -> bool:
    if q < 2 or n < 1:
        return False
    pp = prime_power(q)
    if pp is None:
        return False
    for r in sympy.factorint(n):
        if (q - 1) % r != 0:
            return False
    if q % 4 == 3 and n % 4 == 0:
        return False
    return True


def dickson_pair(q: int, n: int) -> DicksonPair:
    if not is_dickson_pair(q, n):
        raise NotDicksonPair(f"({q}, {n}) is not a Dickson pair")
    p, l = prime_power(q)
    return DicksonPair(q=q, n=n, p=p, l=l)


def list_dickson_pairs(max_p: int, max_l: int, max_n: int) -> List[DicksonPair]:
    """All valid pairs with p <= max_p, l <= max_l, n <= max_n, sorted by (q, n)."""
    out = []
    for p in sympy.primerange(2, max_p + 1):
        for l in range(1, max_l + 1):
            q = p ** l
            for n in range(1, max_n + 1):
                if is_dickson_pair(q, n):
                    out.append(DicksonPair(q=q, n=n, p=p, l=l))
    out.sort(key=lambda dp: (dp.q, dp.n))
    return out


def bracket_residues(q: int, n: int) -> List[int]:
    """([k]_q mod n) for k = 1..n, via the recurrence [k+1] = q*[k] + 1.

    For a Dickson pair this is a permutation of {0, ..., n-1} ending in 0.
    """
    if not is_dickson_pair(q, n):
        raise NotDicksonPair(f"({q}, {n}) is not a Dickson pair")
    out = []
    x = 1 % n
    for _ in range(n):
        out.append(x)
        x = (q * x + 1) % n
    return out


class NearfieldCtx:
    """A Dickson nearfield: field context plus all coset machinery.

    Immutable after construction apart from internal memo tables; all
    operations are pure.
    """

    def __init__(self, pair: DicksonPair, field: FieldCtx):
        self.pair = pair
        self.field = field
        q, n = pair.q, pair.n
        self.qn = q ** n
        self.h_exp = (self.qn - 1) // n
        self.residues = bracket_residues(q, n)
        # coset_reps[k] = g^([k]_q) for k = 1..n, stored 1-indexed via dict
        self.coset_reps = {}
        # a in g^([k]_q)H iff a^h_exp = rep_k^h_exp (H-parts die: h^h_exp = 1)
        self._coset_table = {}
        for k in range(1, n + 1):
            bracket = (q ** k - 1) // (q - 1)
            rep = field.pow(field.g, bracket)
            self.coset_reps[k] = rep
            self._coset_table[field.pow(rep, self.h_exp).coeffs] = k
        self.frob_exps = {k: pow(q, k, self.qn - 1) for k in range(1, n + 1)}
        # columns of the F_p-linear map b -> b^(q^k) on the power basis
        self._frob_cols = {}
        self._coset_cache = {}
        self._trick_triple = None

    @property
    def q(self):
        return self.pair.q

    @property
    def n(self):
        return self.pair.n

    def frob_cols(self, k: int):
        cols = self._frob_cols.get(k)
        if cols is None:
            field = self.field
            e = self.frob_exps[k]
            cols = []
            for j in range(field.d):
                basis_j = [0] * field.d
                basis_j[j] = 1
                cols.append(field.pow(field.element(basis_j), e).coeffs)
            cols = tuple(cols)
            self._frob_cols[k] = cols
        return cols

    def frob_apply(self, k: int, b: FFElem) -> FFElem:
        """b^(q^k) as an F_p-linear map (valid since q is a power of p)."""
        cols = self.frob_cols(k)
        p, d = self.field.p, self.field.d
        acc = [0] * d
        for j, bj in enumerate(b.coeffs):
            if bj:
                col = cols[j]
                for i in range(d):
                    acc[i] += bj * col[i]
        return FFElem(tuple(c % p for c in acc))

    def describe(self) -> dict:
        info = self.field.describe()
        info.update({
            "q": self.q,
            "n": self.n,
            "l": self.pair.l,
            "residues": list(self.residues),
            "h_exp": self.h_exp,
        })
        return info


def make_nearfield(q: int, n: int, modulus=None, generator=None) -> NearfieldCtx:
    pair = dickson_pair(q, n)
    field = make_field(pair.p, pair.l * n, modulus=modulus, generator=generator)
    return NearfieldCtx(pair, field)


def coset_index(ctx: NearfieldCtx, a: FFElem) -> int:
    """The unique k in {1..n} with a in g^([k]_q) H; k = n designates H.

    One subgroup-collapsing power a^h_exp plus an n-entry table lookup; no
    discrete logarithms.  Equivalent to testing h_member(a / rep_k) for each
    of the n coset representatives.
    """
    if a.is_zero():
        raise ZeroArgument("0 has no H-coset")
    k = ctx._coset_cache.get(a.coeffs)
    if k is not None:
        return k
    key = ctx.field.pow(a, ctx.h_exp).coeffs
    k = ctx._coset_table.get(key)
    if k is None:
        raise AssertionError("element escaped all H-cosets")  # unreachable
    ctx._coset_cache[a.coeffs] = k
    return k


def nf_mul(ctx: NearfieldCtx, a: FFElem, b: FFElem) -> FFElem:
    if a.is_zero():
        return ctx.field.zero
    k = coset_index(ctx, a)
    return ctx.field.mul(a, ctx.frob_apply(k, b))


def nf_inv(ctx: NearfieldCtx, a: FFElem) -> FFElem:
    """The unique b with a o b = 1, via the closed form a^(-q^(n-k)).

    The closed form is re-checked against nf_mul on every call as a guard
    against coset-convention bugs.
    """
    if a.is_zero():
        raise DivisionByZero("nearfield inverse of zero")
    k = coset_index(ctx, a)
    e = (-pow(ctx.q, ctx.n - k, ctx.qn - 1)) % (ctx.qn - 1)
    b = ctx.field.pow(a, e)
    assert nf_mul(ctx, a, b) == ctx.field.one
    assert nf_mul(ctx, b, a) == ctx.field.one
    return b


def dist_elements_DR(ctx: NearfieldCtx) -> Set[FFElem]:
    """D(R) = {lam : lam^q = lam}, the copy of F_q inside F_{q^n}."""
    from .linalg import linear_map_matrix, nullspace

    field = ctx.field
    m = linear_map_matrix(
        field.d, lambda lam: field.sub(field.pow(lam, ctx.q), lam), field
    )
    basis = nullspace(m)
    out = set()
    # enumerate the span; its size is exactly q
    _span_elements(field, basis, out)
    return out


def _span_elements(field: FieldCtx, basis, out: set):
    p = field.p
    if not basis:
        out.add(field.zero)
        return
    from itertools import product

    for combo in product(range(p), repeat=len(basis)):
        acc = [0] * field.d
        for c, vec in zip(combo, basis):
            if c:
                for i, x in enumerate(vec):
                    acc[i] += c * x
        out.add(FFElem(tuple(c % p for c in acc)))


def center_CR(ctx: NearfieldCtx, cap: int = DEFAULT_SCAN_CAP) -> Set[FFElem]:
    """Multiplicative center {a : a o y = y o a for all y}, by double scan."""
    if ctx.qn > cap:
        raise TooLarge(f"{ctx.qn} elements exceeds scan cap {cap}")
    elems = list(ctx.field.elements())
    out = set()
    for a in elems:
        if all(nf_mul(ctx, a, y) == nf_mul(ctx, y, a) for y in elems):
            out.add(a)
    return out


def gen_center_GCR(ctx: NearfieldCtx, cap: int = DEFAULT_SCAN_CAP) -> Set[FFElem]:
    """Generalized center: elements commuting with all of D(R)."""
    if ctx.qn > cap:
        raise TooLarge(f"{ctx.qn} elements exceeds scan cap {cap}")
    dr = dist_elements_DR(ctx)
    out = set()
    for a in ctx.field.elements():
        if all(nf_mul(ctx, a, c) == nf_mul(ctx, c, a) for c in dr):
            out.add(a)
    return out


def subnearfield_orders(q: int, n: int) -> Set[int]:
    """Orders p^h of subnearfields, h ranging over the divisors of l*n."""
    pair = dickson_pair(q, n)
    ln = pair.l * n
    return {pair.p ** h for h in range(1, ln + 1) if ln % h == 0}


def find_nondistributive_triple(ctx: NearfieldCtx):
    """First (a, b, lam) in canonical order with (a+b) o lam != a o lam + b o lam.

    Exists whenever n > 1; returns None for n = 1 (R is a field).
    """
    if ctx.n == 1:
        return None
    if ctx._trick_triple is not None:
        return ctx._trick_triple
    field = ctx.field
    for a in field.nonzero_elements():
        for b in field.nonzero_elements():
            s = field.add(a, b)
            for lam in field.nonzero_elements():
                lhs = nf_mul(ctx, s, lam)
                rhs = field.add(nf_mul(ctx, a, lam), nf_mul(ctx, b, lam))
                if lhs != rhs:
                    ctx._trick_triple = (a, b, lam)
                    return ctx._trick_triple
    raise AssertionError("right distributivity held everywhere despite n > 1")
