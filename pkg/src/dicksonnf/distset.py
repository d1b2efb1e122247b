"""The generalized distributive set D(alpha, beta).

D(alpha, beta) = {lam : (alpha+beta) o lam = alpha o lam + beta o lam} is the
kernel of an F_p-linear map, computed here as a nullspace over F_p.  It is
always an F_q-subspace containing F_q, but not always a subfield.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import List, Optional, Set, Tuple

from .dickson import DEFAULT_SCAN_CAP, NearfieldCtx, coset_index, nf_mul
from .errors import PreconditionViolated, TooLarge
from .gf_core import FFElem
from .linalg import SpanFp, linear_map_matrix, nullspace, vstack

WHOLE_FIELD = "WHOLE_FIELD"
SUBFIELD = "SUBFIELD"
NOT_SUBFIELD = "NOT_SUBFIELD"


@dataclass(frozen=True)
class DSetResult:
    alpha: FFElem
    beta: FFElem
    cosets: Tuple[Optional[int], Optional[int], Optional[int]]  # r, s, t (None if zero)
    basis: tuple  # F_p-basis of D(alpha, beta) as field elements
    dim_p: int
    classification: str

    def size(self, p: int) -> int:
        return p ** self.dim_p

    def label(self, p: int) -> str:
        if self.classification == SUBFIELD:
            return f"SUBFIELD({p ** self.dim_p})"
        return self.classification


def phi_eval(ctx: NearfieldCtx, alpha: FFElem, beta: FFElem, lam: FFElem) -> FFElem:
    """(alpha+beta) o lam - alpha o lam - beta o lam, through the nearfield
    product so zero arguments need no special-casing."""
    field = ctx.field
    total = nf_mul(ctx, field.add(alpha, beta), lam)
    return field.sub(field.sub(total, nf_mul(ctx, alpha, lam)), nf_mul(ctx, beta, lam))


def _coset_or_none(ctx: NearfieldCtx, a: FFElem) -> Optional[int]:
    return None if a.is_zero() else coset_index(ctx, a)


def dset(ctx: NearfieldCtx, alpha: FFElem, beta: FFElem) -> DSetResult:
    """Basis, dimension and classification of D(alpha, beta)."""
    field = ctx.field
    d = field.d
    m = linear_map_matrix(d, lambda lam: phi_eval(ctx, alpha, beta, lam), field)
    basis_vecs = nullspace(m)
    basis = tuple(field.element(v) for v in basis_vecs)
    dim_p = len(basis)
    r = _coset_or_none(ctx, alpha)
    s = _coset_or_none(ctx, beta)
    t = _coset_or_none(ctx, field.add(alpha, beta))
    if dim_p == d:
        classification = WHOLE_FIELD
    elif subspace_is_subfield(ctx, basis):
        classification = SUBFIELD
    else:
        classification = NOT_SUBFIELD
    return DSetResult(alpha=alpha, beta=beta, cosets=(r, s, t), basis=basis,
                      dim_p=dim_p, classification=classification)


def dset_brute(ctx: NearfieldCtx, alpha: FFElem, beta: FFElem,
               cap: int = DEFAULT_SCAN_CAP) -> Set[FFElem]:
    """Direct enumeration oracle: scan every lam."""
    if ctx.qn > cap:
        raise TooLarge(f"{ctx.qn} elements exceeds scan cap {cap}")
    return {lam for lam in ctx.field.elements()
            if phi_eval(ctx, alpha, beta, lam).is_zero()}


def classify_pair(ctx: NearfieldCtx, alpha: FFElem, beta: FFElem) -> str:
    return dset(ctx, alpha, beta).classification


def subspace_is_subfield(ctx: NearfieldCtx, basis) -> bool:
    """True iff the F_p-span contains 1 and is closed under field
    multiplication (pairwise basis products suffice by bilinearity)."""
    field = ctx.field
    if not basis:
        return False
    span = SpanFp([b.coeffs for b in basis], field.p, ncols=field.d)
    if not span.contains(field.one.coeffs):
        return False
    for i, bi in enumerate(basis):
        for bj in basis[i:]:
            if not span.contains(field.mul(bi, bj).coeffs):
                return False
    return True


def span_elements(ctx: NearfieldCtx, basis) -> Set[FFElem]:
    """All p^dim elements of the F_p-span of the given field elements."""
    from .dickson import _span_elements

    out: Set[FFElem] = set()
    _span_elements(ctx.field, [b.coeffs for b in basis], out)
    return out


def predicted_two_coset_order(ctx: NearfieldCtx, s: int, t: int) -> int:
    """p^(l*gcd(t+n-s, n)): the proven order for alpha, beta in g^([s]_q)H
    and alpha+beta in g^([t]_q)H."""
    n = ctx.n
    return ctx.pair.p ** (ctx.pair.l * gcd(t + n - s, n))


def lemma_S_set(ctx: NearfieldCtx, r: int, s: int) -> Set[FFElem]:
    """S = {g^m : q^n-1 | m(q^r-1) and q^n-1 | m(q^s-1)}, the cyclic group
    generated by g^lcm((q^n-1)/(q^r-1), (q^n-1)/(q^s-1)).

    The lemma's hypotheses (r != s, r and s divide n, coset pattern) are the
    caller's responsibility; this just builds the set.
    """
    q, n = ctx.q, ctx.n
    big = q ** n - 1
    for e in (r, s):
        if big % (q ** e - 1) != 0:
            raise PreconditionViolated(f"(q^{n}-1)/(q^{e}-1) is not an integer")
    step = lcm(big // (q ** r - 1), big // (q ** s - 1))
    field = ctx.field
    gen = field.pow(field.g, step)
    out = {field.one}
    cur = gen
    while cur != field.one:
        out.add(cur)
        cur = field.mul(cur, gen)
    return out


def f_rst(ctx: NearfieldCtx, alpha: FFElem, beta: FFElem) -> Set[FFElem]:
    """F_{r,s,t}(alpha, beta) = D(alpha, beta) /\\ F_{q^(r-s)} /\\ F_{q^(r-t)}.

    Requires alpha, beta, alpha+beta non-zero in pairwise distinct cosets with
    0 < t < s < r <= n, r-s | n and r-t | n; always a subfield.
    """
    field = ctx.field
    total = field.add(alpha, beta)
    if alpha.is_zero() or beta.is_zero() or total.is_zero():
        raise PreconditionViolated("alpha, beta, alpha+beta must be non-zero")
    r = coset_index(ctx, alpha)
    s = coset_index(ctx, beta)
    t = coset_index(ctx, total)
    n = ctx.n
    if not (0 < t < s < r <= n):
        raise PreconditionViolated(f"coset pattern (r,s,t)=({r},{s},{t}) is not 0<t<s<r<=n")
    if n % (r - s) != 0 or n % (r - t) != 0:
        raise PreconditionViolated("r-s and r-t must divide n")
    d = field.d
    m_phi = linear_map_matrix(d, lambda lam: phi_eval(ctx, alpha, beta, lam), field)
    mats = [m_phi]
    for e in (r - s, r - t):
        qe = ctx.q ** e
        mats.append(linear_map_matrix(
            d, lambda lam, qe=qe: field.sub(field.pow(lam, qe), lam), field))
    basis = [field.element(v) for v in nullspace(vstack(mats))]
    return span_elements(ctx, basis)
