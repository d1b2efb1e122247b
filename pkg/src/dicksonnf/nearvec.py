"""The Beidleman near-vector space R^m and its R-subgroups.

gen(v_1, ..., v_k), the smallest R-subgroup containing the vectors, is
computed two ways: a brute-force closure (the oracle, feasible only for tiny
spaces) and the expanded Gaussian elimination (eGe).  eGe is ordinary
row reduction over the nearfield, plus the "distributivity trick": whenever a
column keeps two or more non-zero entries, a failing right-distributivity
triple manufactures a new row whose leading entry splits that column, and the
process repeats until every column has at most one non-zero entry.  The
number of final rows is the R-dimension and satisfies |gen| = |R|^dim.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .dickson import NearfieldCtx, find_nondistributive_triple, nf_inv, nf_mul
from .errors import MixedContexts, OutOfRange, ParseError, TooLarge
from .gf_core import FFElem, format_element, parse_element


@dataclass(frozen=True)
class NFVector:
    ctx: NearfieldCtx
    entries: tuple  # tuple of FFElem

    def __len__(self):
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def leading_index(self) -> Optional[int]:
        for j, e in enumerate(self.entries):
            if not e.is_zero():
                return j
        return None


@dataclass(frozen=True)
class TrickEvent:
    column: int
    row_r: int
    row_s: int
    triple: tuple  # (a, b, lam) used for the new row


@dataclass(frozen=True)
class RBasis:
    rows: tuple  # NFVector rows, sorted by leading column
    dim: int
    trace: tuple  # TrickEvent log


def vector(ctx: NearfieldCtx, entries: Iterable[FFElem]) -> NFVector:
    return NFVector(ctx, tuple(entries))


def zero_vector(ctx: NearfieldCtx, m: int) -> NFVector:
    return NFVector(ctx, (ctx.field.zero,) * m)


def _check_compatible(vectors: Sequence[NFVector]):
    if not vectors:
        raise MixedContexts("need at least one vector")
    ctx = vectors[0].ctx
    m = len(vectors[0])
    for v in vectors[1:]:
        if v.ctx is not ctx or len(v) != m:
            raise MixedContexts("vectors must share context and length")
    return ctx, m


def vadd(v: NFVector, w: NFVector) -> NFVector:
    field = v.ctx.field
    return NFVector(v.ctx, tuple(field.add(a, b) for a, b in zip(v.entries, w.entries)))


def vsub(v: NFVector, w: NFVector) -> NFVector:
    field = v.ctx.field
    return NFVector(v.ctx, tuple(field.sub(a, b) for a, b in zip(v.entries, w.entries)))


def vscale(v: NFVector, lam: FFElem) -> NFVector:
    """Right scalar action: entrywise v_j o lam."""
    ctx = v.ctx
    return NFVector(ctx, tuple(nf_mul(ctx, e, lam) for e in v.entries))


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

def lc_closure(vectors: Sequence[NFVector], cap: int = 100_000) -> Set[NFVector]:
    """gen(v_1..v_k) by fixpoint closure under addition and scaling.

    The additive closure of any set is its F_p-linear span (the additive
    group is elementary abelian), so we keep an F_p echelon basis of the
    current span and rescan the whole span after every growth step.
    """
    ctx, m = _check_compatible(vectors)
    if ctx.qn ** m > cap:
        raise TooLarge(f"|R|^m = {ctx.qn ** m} exceeds cap {cap}")
    field = ctx.field
    p, d = field.p, field.d
    scalars = list(field.elements())
    mul_cache = {}

    def scale(v: NFVector, lam: FFElem) -> NFVector:
        out = []
        for e in v.entries:
            key = (e.coeffs, lam.coeffs)
            r = mul_cache.get(key)
            if r is None:
                r = nf_mul(ctx, e, lam)
                mul_cache[key] = r
            out.append(r)
        return NFVector(ctx, tuple(out))

    def flat(v: NFVector) -> tuple:
        return tuple(c for e in v.entries for c in e.coeffs)

    # incremental F_p echelon basis
    basis_rows: List[list] = []
    pivots: List[int] = []

    def insert(v: NFVector) -> bool:
        vec = list(flat(v))
        for row, pj in zip(basis_rows, pivots):
            c = vec[pj]
            if c:
                for i in range(len(vec)):
                    vec[i] = (vec[i] - c * row[i]) % p
        for j, c in enumerate(vec):
            if c:
                inv = pow(c, p - 2, p)
                vec = [(x * inv) % p for x in vec]
                basis_rows.append(vec)
                pivots.append(j)
                return True
        return False

    def span_vectors() -> List[NFVector]:
        from itertools import product

        out = []
        for combo in product(range(p), repeat=len(basis_rows)):
            acc = [0] * (m * d)
            for c, row in zip(combo, basis_rows):
                if c:
                    for i, x in enumerate(row):
                        acc[i] += c * x
            entries = tuple(
                FFElem(tuple(acc[j * d + i] % p for i in range(d))) for j in range(m)
            )
            out.append(NFVector(ctx, entries))
        return out

    for v in vectors:
        insert(v)
    changed = True
    while changed:
        changed = False
        for w in span_vectors():
            for lam in scalars:
                if insert(scale(w, lam)):
                    changed = True
        # loop again from the enlarged span until stable
    return set(span_vectors())


# ---------------------------------------------------------------------------
# expanded Gaussian elimination
# ---------------------------------------------------------------------------

def _rref_nf(ctx: NearfieldCtx, rows: List[NFVector]) -> List[NFVector]:
    """Row reduction over the nearfield: pivots right-scaled to 1, every
    other entry in a pivot column eliminated."""
    rows = [v for v in rows if not v.is_zero()]
    if not rows:
        return []
    m = len(rows[0])
    r = 0
    for j in range(m):
        pivot = None
        for i in range(r, len(rows)):
            if not rows[i].entries[j].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rows[r] = vscale(rows[r], nf_inv(ctx, rows[r].entries[j]))
        for i in range(len(rows)):
            if i != r and not rows[i].entries[j].is_zero():
                rows[i] = vsub(rows[i], vscale(rows[r], rows[i].entries[j]))
        r += 1
    return [v for v in rows if not v.is_zero()]


def _first_crowded_column(rows: List[NFVector]):
    if not rows:
        return None
    m = len(rows[0])
    for j in range(m):
        hits = [i for i, v in enumerate(rows) if not v.entries[j].is_zero()]
        if len(hits) >= 2:
            return j, hits[0], hits[1]
    return None


def ege(vectors: Sequence[NFVector]) -> RBasis:
    """Expanded Gaussian elimination.

    After plain nearfield RREF, any column j still holding two non-zero
    entries w_r^j, w_s^j gets the distributivity trick: with (a, b, lam) a
    fixed non-distributive triple and a' = (w_r^j)^-1 o a, b' = (w_s^j)^-1 o b,
    the row

        theta = (w_r a' + w_s b') lam - w_r (a' lam) - w_s (b' lam)

    has theta^j = (a+b) o lam - a o lam - b o lam != 0 and zeros left of j.
    Normalizing theta to phi (pivot 1) and replacing w_r, w_s by
    w_r - phi (w_r^j), w_s - phi (w_s^j) drops the count of non-zero entries
    in column j by one; full re-reduction then repeats the scan.
    """
    ctx, m = _check_compatible(vectors)
    field = ctx.field
    rows = _rref_nf(ctx, list(vectors))
    trace: List[TrickEvent] = []
    while True:
        crowded = _first_crowded_column(rows)
        if crowded is None:
            break
        j, ri, si = crowded
        triple = find_nondistributive_triple(ctx)
        if triple is None:
            raise AssertionError("crowded column survived RREF over a field")
        a, b, lam = triple
        w_r, w_s = rows[ri], rows[si]
        a1 = nf_mul(ctx, nf_inv(ctx, w_r.entries[j]), a)
        b1 = nf_mul(ctx, nf_inv(ctx, w_s.entries[j]), b)
        combo = vadd(vscale(w_r, a1), vscale(w_s, b1))
        theta = vsub(
            vsub(vscale(combo, lam), vscale(w_r, nf_mul(ctx, a1, lam))),
            vscale(w_s, nf_mul(ctx, b1, lam)),
        )
        assert not theta.entries[j].is_zero()
        assert all(theta.entries[l].is_zero() for l in range(j))
        phi = vscale(theta, nf_inv(ctx, theta.entries[j]))
        rows[ri] = vsub(w_r, vscale(phi, w_r.entries[j]))
        rows[si] = vsub(w_s, vscale(phi, w_s.entries[j]))
        rows.insert(si + 1, phi)
        trace.append(TrickEvent(column=j, row_r=ri, row_s=si, triple=triple))
        rows = _rref_nf(ctx, rows)
    rows.sort(key=lambda v: v.leading_index())
    return RBasis(rows=tuple(rows), dim=len(rows), trace=tuple(trace))


def r_dim(vectors: Sequence[NFVector]) -> int:
    return ege(vectors).dim


def is_r_independent(vectors: Sequence[NFVector]) -> bool:
    """True iff no vector lies in the gen of the others.

    Membership is decided through R-dimensions: v in gen(S) iff
    r_dim(S + {v}) = r_dim(S), since |gen| = |R|^dim is strictly monotone.
    """
    vectors = list(vectors)
    if any(v.is_zero() for v in vectors):
        return False
    full = r_dim(vectors)
    for i in range(len(vectors)):
        rest = vectors[:i] + vectors[i + 1:]
        if not rest:
            continue
        if r_dim(rest) == full:
            return False
    return True


def seed_reduce(vectors: Sequence[NFVector]) -> List[NFVector]:
    """Greedy removal of vectors that do not contribute to gen.

    Scans from the last vector to the first, so earlier vectors are
    preferred survivors.  The result generates the same R-subgroup and is
    R-linearly independent, but need not have minimum cardinality.
    """
    kept = [v for v in vectors if not v.is_zero()]
    target = r_dim(kept) if kept else 0
    for i in range(len(kept) - 1, -1, -1):
        rest = kept[:i] + kept[i + 1:]
        if rest and r_dim(rest) == target:
            kept = rest
    return kept


def seed_construct_full(ctx: NearfieldCtx, m: int) -> Tuple[NFVector, NFVector]:
    """The two-vector seed of R^m: v = (1,0,1,...,1), w = (0,1,w3,...,wm)
    with the w_j pairwise-distinct non-identity scalars (canonical order);
    the identity joins only for the extremal m = q^n + 1."""
    if m < 2 or m > ctx.qn + 1:
        raise OutOfRange(f"m must satisfy 2 <= m <= q^n+1 = {ctx.qn + 1}")
    field = ctx.field
    pool = [a for a in field.nonzero_elements() if a != field.one]
    pool.append(field.one)  # last resort, needed only when m = q^n + 1
    v = NFVector(ctx, (field.one, field.zero) + (field.one,) * (m - 2))
    w = NFVector(ctx, (field.zero, field.one) + tuple(pool[: m - 2]))
    return v, w


def pair_eliminate(v: NFVector, w: NFVector) -> Tuple[NFVector, NFVector]:
    """Delete coordinate positions whose column pair is a left-o-multiple of
    an earlier kept column pair; preserves r_dim of gen(v, w)."""
    ctx, m = _check_compatible([v, w])
    field = ctx.field
    kept: List[int] = []

    def is_multiple(j: int, i: int) -> bool:
        vj, wj = v.entries[j], w.entries[j]
        vi, wi = v.entries[i], w.entries[i]
        if vj.is_zero() and wj.is_zero():
            return True  # rho = 0
        if not vi.is_zero():
            rho = nf_mul(ctx, vj, nf_inv(ctx, vi)) if not vj.is_zero() else None
            if rho is None:
                return False  # vj = 0 but vi != 0 forces rho = 0, wj must be 0
            return nf_mul(ctx, rho, wi) == wj
        if not wi.is_zero():
            if not vj.is_zero():
                return False  # rho o 0 = 0 != vj
            rho = nf_mul(ctx, wj, nf_inv(ctx, wi)) if not wj.is_zero() else None
            return rho is not None
        return False  # (0,0) earlier pair only matches (0,0), handled above

    for j in range(m):
        if any(is_multiple(j, i) for i in kept):
            continue
        kept.append(j)
    v2 = NFVector(ctx, tuple(v.entries[j] for j in kept))
    w2 = NFVector(ctx, tuple(w.entries[j] for j in kept))
    return v2, w2


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def parse_vector(ctx: NearfieldCtx, text: str) -> NFVector:
    """Semicolon-separated element strings, e.g. "1;2*x+2;x;0;x"."""
    parts = text.split(";")
    if not parts or not text.strip():
        raise ParseError("empty vector text")
    return NFVector(ctx, tuple(parse_element(ctx.field, part) for part in parts))


def format_vector(v: NFVector) -> str:
    return ";".join(format_element(v.ctx.field, e) for e in v.entries)
