"""Built-in verification suite.

Fourteen checks replaying the published worked examples and structure
theorems for Dickson nearfields, generalized distributive sets and Beidleman
near-vector spaces.  Each check returns a CheckResult and enforces its own
wall-clock budget; run_all streams one line per check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd
from typing import Callable, List, Optional

from .census import dset_sweep
from .dickson import (
    NearfieldCtx,
    center_CR,
    coset_index,
    dist_elements_DR,
    list_dickson_pairs,
    make_nearfield,
    nf_inv,
    nf_mul,
)
from .distset import (
    NOT_SUBFIELD,
    SUBFIELD,
    WHOLE_FIELD,
    dset,
    phi_eval,
    predicted_two_coset_order,
    span_elements,
)
from .errors import OutOfRange
from .gf_core import parse_element
from .linalg import SpanFp
from .nearvec import (
    NFVector,
    ege,
    lc_closure,
    pair_eliminate,
    parse_vector,
    r_dim,
    seed_construct_full,
)
from .rng import SplitMix64


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


_CTX = {}


def _ctx(key: str) -> NearfieldCtx:
    ctx = _CTX.get(key)
    if ctx is None:
        if key == "3,2":
            ctx = make_nearfield(3, 2, modulus=(1, 0, 1))  # x^2+1
        elif key == "5,4":
            ctx = make_nearfield(5, 4, modulus=(2, 0, 0, 0, 1), generator=(2, 1))
        elif key == "4,3":
            ctx = make_nearfield(4, 3)
        elif key == "7,9":
            ctx = make_nearfield(7, 9)
        elif key == "5,8":
            ctx = make_nearfield(5, 8)
        else:
            raise KeyError(key)
        _CTX[key] = ctx
    return ctx


def _coset_of(ctx, label: str) -> int:
    """Coset index k whose bracket residue equals the given g-power label."""
    want = {"H": 0, "gH": 1, "g2H": 2, "g3H": 3}[label]
    for k in range(1, ctx.n + 1):
        if ctx.residues[k - 1] == want:
            return k
    raise KeyError(label)


def check_1() -> CheckResult:
    """DN(3,2) dichotomy: D is all of R when the three cosets coincide,
    otherwise exactly F_3."""
    ctx = _ctx("3,2")
    field = ctx.field
    bad = 0
    total = 0
    for alpha in field.nonzero_elements():
        for beta in field.nonzero_elements():
            total += 1
            res = dset(ctx, alpha, beta)
            r, s, t = res.cosets
            shared = (r == s == t) if t is not None else (r == s)
            expect = field.d if shared else ctx.pair.l
            if res.dim_p != expect:
                bad += 1
    return CheckResult(1, "DN(3,2) exhaustive dichotomy", bad == 0,
                       f"{total} ordered non-zero pairs, {bad} mismatches", 0.0)


def check_2() -> CheckResult:
    """DN(5,4), x^4+2, g=x+2: the quoted distributing elements and their
    H-cosets."""
    ctx = _ctx("5,4")
    field = ctx.field
    e = lambda text: parse_element(field, text)
    problems = []
    alpha, beta, lam = e("3"), e("x^2+2"), e("x^2+1")
    if not phi_eval(ctx, alpha, beta, lam).is_zero():
        problems.append("x^2+1 fails to distribute over (3, x^2+2)")
    if nf_mul(ctx, field.add(alpha, beta), lam) != field.add(
            nf_mul(ctx, alpha, lam), nf_mul(ctx, beta, lam)):
        problems.append("expanded identity mismatch")
    if coset_index(ctx, lam) != _coset_of(ctx, "g2H"):
        problems.append("x^2+1 not in g^2 H")
    if coset_index(ctx, alpha) != _coset_of(ctx, "H") or \
            coset_index(ctx, beta) != _coset_of(ctx, "H"):
        problems.append("3 or x^2+2 not in H")
    if coset_index(ctx, field.add(alpha, beta)) != _coset_of(ctx, "g2H"):
        problems.append("3 + x^2+2 not in g^2 H")
    # beta = (x+2)^3 = g^3 sits in g^3 H (the quoted source lists g^2 H,
    # contradicted by the directly computed discrete log)
    alpha2, beta2 = e("x+2"), e("x^3+x^2+2*x+3")
    lam1, lam2 = e("x^2+3"), e("3*x^2+2")
    if coset_index(ctx, alpha2) != _coset_of(ctx, "gH") or \
            coset_index(ctx, beta2) != _coset_of(ctx, "g3H") or \
            coset_index(ctx, field.add(alpha2, beta2)) != _coset_of(ctx, "gH"):
        problems.append("(x+2, x^3+x^2+2x+3) coset pattern wrong")
    for lam_i, where in ((lam1, "H"), (lam2, "g2H")):
        if not phi_eval(ctx, alpha2, beta2, lam_i).is_zero():
            problems.append("quoted element not distributive")
        if coset_index(ctx, lam_i) != _coset_of(ctx, where):
            problems.append("quoted element in wrong coset")
    return CheckResult(2, "DN(5,4) worked identities", not problems,
                       "; ".join(problems) or "all identities hold", 0.0)


def check_3() -> CheckResult:
    """DN(4,3): alpha in H, beta in gH, alpha+beta in g^2 H always gives a
    subfield."""
    ctx = _ctx("4,3")
    field = ctx.field
    kH = _coset_of(ctx, "H")
    k1 = _coset_of(ctx, "gH")
    k2 = _coset_of(ctx, "g2H")
    elems = list(field.nonzero_elements())
    cosets = {a.coeffs: coset_index(ctx, a) for a in elems}
    cache = {}
    checked = 0
    bad = 0
    for alpha in elems:
        if cosets[alpha.coeffs] != kH:
            continue
        alpha_inv = field.inv(alpha)
        for beta in elems:
            if cosets[beta.coeffs] != k1:
                continue
            total = field.add(alpha, beta)
            if total.is_zero() or cosets[total.coeffs] != k2:
                continue
            checked += 1
            gamma = field.mul(beta, alpha_inv)
            cls = cache.get(gamma.coeffs)
            if cls is None:
                cls = dset(ctx, alpha, beta).classification
                cache[gamma.coeffs] = cls
            if cls != SUBFIELD:
                bad += 1
    return CheckResult(3, "DN(4,3) coset-pattern subfields",
                       checked > 0 and bad == 0,
                       f"{checked} pairs with the pattern, {bad} non-subfields",
                       0.0)


def check_4() -> CheckResult:
    """DN(5,4): the full 624^2 sweep never produces NOT_SUBFIELD."""
    ctx = _ctx("5,4")
    rows = dset_sweep(ctx)
    total = sum(r.count for r in rows)
    bad = [r for r in rows if r.classification == NOT_SUBFIELD]
    return CheckResult(4, "DN(5,4) full sweep always subfield",
                       total == 624 * 624 and not bad,
                       f"{total} pairs, {len(bad)} NOT_SUBFIELD rows", 0.0)


def _find_dim2_distinct_coset(ctx, seed: int, budget: int):
    """(alpha, beta, DSetResult) for the first sampled pairwise-distinct-coset
    pair with dim_p = 2 and classification NOT_SUBFIELD, or None."""
    rng = SplitMix64(seed)
    field = ctx.field
    nz = ctx.qn - 1
    for _ in range(budget):
        alpha = field.from_int(1 + rng.randbelow(nz))
        beta = field.from_int(1 + rng.randbelow(nz))
        total = field.add(alpha, beta)
        if total.is_zero():
            continue
        r = coset_index(ctx, alpha)
        s = coset_index(ctx, beta)
        t = coset_index(ctx, total)
        if len({r, s, t}) != 3:
            continue
        res = dset(ctx, alpha, beta)
        if res.dim_p == 2 and res.classification == NOT_SUBFIELD:
            return alpha, beta, res
    return None


def check_5() -> CheckResult:
    """DN(7,9): a sampled distinct-coset pair with |D| = 49, not a field."""
    ctx = _ctx("7,9")
    hit = _find_dim2_distinct_coset(ctx, seed=5, budget=10_000)
    ok = hit is not None and 9 % 2 != 0 and hit[2].size(7) == 49
    return CheckResult(5, "DN(7,9) dimension-2 non-subfield exists", ok,
                       "found dim_p=2 NOT_SUBFIELD pair" if ok else "no pair found",
                       0.0)


def check_6() -> CheckResult:
    """DN(5,8): a sampled dim-2 D(alpha,beta) whose basis square escapes the
    span."""
    ctx = _ctx("5,8")
    hit = _find_dim2_distinct_coset(ctx, seed=6, budget=10_000)
    if hit is None:
        return CheckResult(6, "DN(5,8) basis square escapes span", False,
                           "no dim_p=2 NOT_SUBFIELD pair found", 0.0)
    res = hit[2]
    field = ctx.field
    span = SpanFp([b.coeffs for b in res.basis], field.p, ncols=field.d)
    escaped = any(
        not span.contains(field.mul(bi, bj).coeffs)
        for i, bi in enumerate(res.basis) for bj in res.basis[i:])
    return CheckResult(6, "DN(5,8) basis square escapes span", escaped,
                       "found pair with non-closed span" if escaped
                       else "span unexpectedly closed", 0.0)


_V19 = ("x+2;x+1;1;1;2*x+1;x+1;2;0;2*x+1;2*x+2;x+2;2*x;2*x+1;2*x+2;"
        "x+1;x+2;2*x+1;2*x+2;x+1")
_W19 = ("2*x;2;1;2*x+2;0;2*x;2;2*x;2*x+1;x+1;0;2*x+1;1;x+1;2*x+2;"
        "2*x+2;2*x+2;2*x+2;x+1")


def check_7() -> CheckResult:
    """The two 19-entry vectors over DN(3,2) generate an R-subgroup of
    R-dimension exactly 10."""
    ctx = _ctx("3,2")
    v = parse_vector(ctx, _V19)
    w = parse_vector(ctx, _W19)
    dim = r_dim([v, w])
    return CheckResult(7, "19-entry pair has R-dimension 10", dim == 10,
                       f"r_dim = {dim}", 0.0)


def check_8() -> CheckResult:
    """Rows versus columns of the same 3x5 matrix give R-dimensions 4 and 3."""
    ctx = _ctx("3,2")
    rows = [parse_vector(ctx, t) for t in ("1;2;x;0;0", "0;0;0;1;0", "1;0;0;0;1")]
    cols = [parse_vector(ctx, t) for t in ("1;0;1", "2;0;0", "x;0;0", "0;1;0", "0;0;1")]
    dr, dc = r_dim(rows), r_dim(cols)
    return CheckResult(8, "row/column R-dimensions differ (4 vs 3)",
                       dr == 4 and dc == 3, f"rows {dr}, columns {dc}", 0.0)


def check_9() -> CheckResult:
    """gen of the quoted 5-entry pair is all of R^5."""
    ctx = _ctx("3,2")
    v = parse_vector(ctx, "1;2*x+2;x;0;x")
    w = parse_vector(ctx, "2;2*x;1;2;x")
    dim = r_dim([v, w])
    return CheckResult(9, "5-entry pair generates R^5", dim == 5,
                       f"r_dim = {dim}", 0.0)


def check_10() -> CheckResult:
    """The two-vector seed fills R^m for every m in 2..q^n+1; one past the
    bound is rejected."""
    ctx = _ctx("3,2")
    bad = []
    for m in range(2, 11):
        v, w = seed_construct_full(ctx, m)
        dim = r_dim([v, w])
        if dim != m:
            bad.append(f"m={m} gave {dim}")
    rejected = False
    try:
        seed_construct_full(ctx, 11)
    except OutOfRange:
        rejected = True
    if not rejected:
        bad.append("m=11 accepted")
    return CheckResult(10, "seed construction spans R^m for m=2..10",
                       not bad, "; ".join(bad) or "all dimensions match", 0.0)


def check_11() -> CheckResult:
    """Closure oracle: |gen| = 9^r_dim and every eGe row lies in the closure,
    100 random small vector sets."""
    ctx = _ctx("3,2")
    field = ctx.field
    rng = SplitMix64(11)
    bad = 0
    for _ in range(100):
        k = 1 + rng.randbelow(3)
        m = 1 + rng.randbelow(3)
        vecs = [NFVector(ctx, tuple(field.from_int(rng.randbelow(9))
                                    for _ in range(m)))
                for _ in range(k)]
        if all(v.is_zero() for v in vecs):
            vecs[0] = NFVector(ctx, (field.one,) * m)
        closure = lc_closure(vecs)
        basis = ege(vecs)
        if len(closure) != 9 ** basis.dim:
            bad += 1
        elif any(row not in closure for row in basis.rows):
            bad += 1
    return CheckResult(11, "closure oracle matches eGe", bad == 0,
                       f"{bad} of 100 random sets disagree", 0.0)


def _two_coset_formula_trial(ctx, rng: SplitMix64) -> bool:
    """One sampled pair with alpha, beta sharing a coset and alpha+beta in a
    different one; returns whether |D| matches the proven order formula."""
    field = ctx.field
    nz = ctx.qn - 1
    h_count = nz // ctx.n
    while True:
        alpha = field.from_int(1 + rng.randbelow(nz))
        h = field.pow(field.g, ctx.n * rng.randbelow(h_count))
        beta = field.mul(alpha, h)
        total = field.add(alpha, beta)
        if total.is_zero():
            continue
        s = coset_index(ctx, alpha)
        t = coset_index(ctx, total)
        if t == s:
            continue
        res = dset(ctx, alpha, beta)
        return res.size(ctx.pair.p) == predicted_two_coset_order(ctx, s, t)


def check_12() -> CheckResult:
    """Two-coincident-coset order formula p^(l*gcd(t+n-s,n)), 100 sampled
    pairs in each of DN(5,4) and DN(7,9)."""
    bad = 0
    for key in ("5,4", "7,9"):
        ctx = _ctx(key)
        rng = SplitMix64(12)
        for _ in range(100):
            if not _two_coset_formula_trial(ctx, rng):
                bad += 1
    return CheckResult(12, "two-coset order formula", bad == 0,
                       f"{bad} of 200 sampled pairs disagree", 0.0)


def check_13() -> CheckResult:
    """Structural invariants: (R^*, o) group axioms, left distributivity,
    D(R) = C(R) of size q, l | dim_p, F_q inside every D(alpha,beta), and
    bracket residues forming a complete residue system."""
    problems: List[str] = []
    ctx = _ctx("3,2")
    field = ctx.field
    nz = list(field.nonzero_elements())
    one = field.one
    # group axioms, exhaustively on the smallest proper nearfield
    for a in nz:
        if nf_mul(ctx, a, one) != a or nf_mul(ctx, one, a) != a:
            problems.append("identity fails")
            break
        nf_inv(ctx, a)  # asserts two-sided inverse internally
    for a in nz:
        for b in nz:
            ab = nf_mul(ctx, a, b)
            if ab.is_zero():
                problems.append("closure fails")
            for c in nz:
                if nf_mul(ctx, ab, c) != nf_mul(ctx, a, nf_mul(ctx, b, c)):
                    problems.append(f"associativity fails at {a},{b},{c}")
    # left distributivity over every triple, zero included
    for a in field.elements():
        for b in field.elements():
            for c in field.elements():
                if nf_mul(ctx, a, field.add(b, c)) != field.add(
                        nf_mul(ctx, a, b), nf_mul(ctx, a, c)):
                    problems.append("left distributivity fails")
    # D(R) = C(R) of size q, on two small nearfields
    for key in ("3,2", "4,3"):
        c = _ctx(key)
        dr = dist_elements_DR(c)
        if len(dr) != c.q or dr != center_CR(c):
            problems.append(f"D(R)/C(R) mismatch in DN({key})")
    # dim_p multiple of l and F_q inside D, exhaustive on DN(3,2),
    # sampled on DN(4,3) where l = 2
    ctx43 = _ctx("4,3")
    dr43 = dist_elements_DR(ctx43)
    rng = SplitMix64(13)
    targets = [(ctx, a, b) for a in nz for b in nz]
    for _ in range(100):
        a = ctx43.field.from_int(1 + rng.randbelow(63))
        b = ctx43.field.from_int(1 + rng.randbelow(63))
        targets.append((ctx43, a, b))
    for c, a, b in targets:
        res = dset(c, a, b)
        if res.dim_p % c.pair.l != 0:
            problems.append(f"l does not divide dim_p in DN({c.q},{c.n})")
        dr = dr43 if c is ctx43 else dist_elements_DR(c)
        span = SpanFp([v.coeffs for v in res.basis], c.field.p, ncols=c.field.d)
        if any(not span.contains(lam.coeffs) for lam in dr):
            problems.append(f"F_q escapes D in DN({c.q},{c.n})")
    # bracket residues: complete residue system for every pair in range
    pairs = [dp for dp in list_dickson_pairs(199, 7, 200) if dp.q <= 200]
    from .dickson import bracket_residues

    for dp in pairs:
        if sorted(bracket_residues(dp.q, dp.n)) != list(range(dp.n)):
            problems.append(f"residues not complete for ({dp.q},{dp.n})")
    problems = sorted(set(problems))
    return CheckResult(13, "structural invariant suite", not problems,
                       "; ".join(problems[:4]) or
                       f"all invariants hold ({len(pairs)} pairs scanned)", 0.0)


def check_14() -> CheckResult:
    """pair_eliminate keeps the R-dimension, 100 random 12-entry pairs."""
    ctx = _ctx("3,2")
    field = ctx.field
    rng = SplitMix64(14)
    bad = 0
    for _ in range(100):
        v = NFVector(ctx, tuple(field.from_int(rng.randbelow(9)) for _ in range(12)))
        w = NFVector(ctx, tuple(field.from_int(rng.randbelow(9)) for _ in range(12)))
        if v.is_zero() and w.is_zero():
            v = NFVector(ctx, (field.one,) * 12)
        before = r_dim([v, w])
        v2, w2 = pair_eliminate(v, w)
        if len(v2) == 0 or r_dim([v2, w2]) != before:
            bad += 1
    return CheckResult(14, "pair elimination preserves R-dimension", bad == 0,
                       f"{bad} of 100 pairs changed dimension", 0.0)


_BUDGETS = {1: 5.0, 2: 1.0, 3: 30.0, 4: 180.0, 5: 120.0, 6: 120.0, 7: 1.0,
            8: 5.0, 9: 5.0, 10: 10.0, 11: 30.0, 12: 120.0, 13: 60.0, 14: 60.0}

_CHECKS: List[Callable[[], CheckResult]] = [
    check_1, check_2, check_3, check_4, check_5, check_6, check_7,
    check_8, check_9, check_10, check_11, check_12, check_13, check_14,
]


def run_check(fn: Callable[[], CheckResult]) -> CheckResult:
    start = time.monotonic()
    res = fn()
    elapsed = time.monotonic() - start
    budget = _BUDGETS[res.number]
    passed = res.passed and elapsed < budget
    detail = res.detail
    if res.passed and elapsed >= budget:
        detail += f" (over budget: {elapsed:.1f}s >= {budget:.0f}s)"
    return CheckResult(res.number, res.name, passed, detail, elapsed)


def run_all(stream=None) -> List[CheckResult]:
    results = []
    for fn in _CHECKS:
        res = run_check(fn)
        results.append(res)
        if stream is not None:
            status = "pass" if res.passed else "FAIL"
            print(f"check {res.number:2d} {res.name:<45s} {status} "
                  f"({res.seconds:.2f}s) {res.detail}", file=stream)
    if stream is not None:
        npass = sum(r.passed for r in results)
        print(f"{npass}/{len(results)} checks passed", file=stream)
    return results
