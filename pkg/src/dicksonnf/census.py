"""Census sweeps over ordered pairs (alpha, beta).

Rows are keyed by the coset triple (r, s, t) of alpha, beta, alpha+beta plus
the resulting D(alpha, beta) dimension and classification; t = 0 encodes
alpha + beta = 0.  The kernel of the defining map depends only on the coset
triple and on gamma = beta * alpha^-1 (the field quotient), so exhaustive
sweeps cache one classification per (r, s, t, gamma) class instead of
recomputing p^d x p^d kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .dickson import NearfieldCtx, coset_index
from .distset import dset
from .errors import TooLarge
from .gf_core import FFElem
from .rng import SplitMix64

EXHAUSTIVE_GUARD = 10_000_000

CSV_HEADER = "r,s,t,dim_p,classification,count"


@dataclass(frozen=True)
class CensusRow:
    r: int
    s: int
    t: int  # 0 means alpha + beta = 0
    dim_p: int
    classification: str
    count: int


def _classify(ctx: NearfieldCtx, alpha: FFElem, beta: FFElem,
              cache: Dict[tuple, Tuple[int, str]],
              inv_cache: Dict[tuple, FFElem]) -> Tuple[int, int, int, int, str]:
    field = ctx.field
    r = coset_index(ctx, alpha)
    s = coset_index(ctx, beta)
    total = field.add(alpha, beta)
    t = 0 if total.is_zero() else coset_index(ctx, total)
    alpha_inv = inv_cache.get(alpha.coeffs)
    if alpha_inv is None:
        alpha_inv = field.inv(alpha)
        inv_cache[alpha.coeffs] = alpha_inv
    gamma = field.mul(beta, alpha_inv)
    key = (r, s, t, gamma.coeffs)
    hit = cache.get(key)
    if hit is None:
        res = dset(ctx, alpha, beta)
        hit = (res.dim_p, res.classification)
        cache[key] = hit
    return r, s, t, hit[0], hit[1]


def dset_sweep(ctx: NearfieldCtx, sample: Optional[int] = None,
               seed: int = 0, force: bool = False) -> List[CensusRow]:
    """Aggregate classification counts over ordered non-zero pairs.

    sample=None means exhaustive (guarded by (q^n-1)^2 <= 10^7 unless
    force); otherwise `sample` pairs drawn with the seeded generator.
    """
    counts: Dict[tuple, int] = {}
    cache: Dict[tuple, Tuple[int, str]] = {}
    inv_cache: Dict[tuple, FFElem] = {}
    nz = ctx.qn - 1
    if sample is None:
        if nz * nz > EXHAUSTIVE_GUARD and not force:
            raise TooLarge(
                f"exhaustive sweep has {nz * nz} pairs (> {EXHAUSTIVE_GUARD}); "
                "pass force to override")
        elems = list(ctx.field.nonzero_elements())
        for alpha in elems:
            for beta in elems:
                key = _classify(ctx, alpha, beta, cache, inv_cache)
                counts[key] = counts.get(key, 0) + 1
    else:
        rng = SplitMix64(seed)
        for _ in range(sample):
            alpha = ctx.field.from_int(1 + rng.randbelow(nz))
            beta = ctx.field.from_int(1 + rng.randbelow(nz))
            key = _classify(ctx, alpha, beta, cache, inv_cache)
            counts[key] = counts.get(key, 0) + 1
    return [CensusRow(r=k[0], s=k[1], t=k[2], dim_p=k[3], classification=k[4],
                      count=v)
            for k, v in sorted(counts.items())]


def census_csv(rows: List[CensusRow]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(f"{row.r},{row.s},{row.t},{row.dim_p},"
                     f"{row.classification},{row.count}")
    return "\n".join(lines) + "\n"
