"""Generalized distributive sets D(alpha, beta)."""

import pytest

from dicksonnf import (
    NOT_SUBFIELD,
    SUBFIELD,
    WHOLE_FIELD,
    PreconditionViolated,
    coset_index,
    dset,
    dset_brute,
    f_rst,
    h_member,
    lemma_S_set,
    parse_element,
    phi_eval,
    predicted_two_coset_order,
    span_elements,
    subspace_is_subfield,
)
from dicksonnf.rng import SplitMix64


def test_oracle_equivalence_exhaustive_32(ctx32):
    f = ctx32.field
    for alpha in f.nonzero_elements():
        for beta in f.nonzero_elements():
            res = dset(ctx32, alpha, beta)
            assert span_elements(ctx32, res.basis) == dset_brute(ctx32, alpha, beta)


def test_oracle_equivalence_exhaustive_43(ctx43):
    f = ctx43.field
    for alpha in f.nonzero_elements():
        for beta in f.nonzero_elements():
            res = dset(ctx43, alpha, beta)
            brute = dset_brute(ctx43, alpha, beta)
            assert len(brute) == 2 ** res.dim_p
            assert span_elements(ctx43, res.basis) == brute


def test_oracle_equivalence_sampled_54(ctx54):
    f = ctx54.field
    rng = SplitMix64(54)
    for _ in range(1000):
        alpha = f.from_int(1 + rng.randbelow(624))
        beta = f.from_int(1 + rng.randbelow(624))
        res = dset(ctx54, alpha, beta)
        assert span_elements(ctx54, res.basis) == dset_brute(ctx54, alpha, beta)


def test_symmetry(ctx54):
    f = ctx54.field
    rng = SplitMix64(7)
    for _ in range(50):
        alpha = f.from_int(1 + rng.randbelow(624))
        beta = f.from_int(1 + rng.randbelow(624))
        a = dset(ctx54, alpha, beta)
        b = dset(ctx54, beta, alpha)
        assert span_elements(ctx54, a.basis) == span_elements(ctx54, b.basis)


def test_fq_always_inside(ctx54):
    # every lam with lam^q = lam distributes over every pair
    f = ctx54.field
    rng = SplitMix64(99)
    fq = [lam for lam in f.elements() if f.pow(lam, ctx54.q) == lam]
    assert len(fq) == ctx54.q
    for _ in range(20):
        alpha = f.from_int(1 + rng.randbelow(624))
        beta = f.from_int(1 + rng.randbelow(624))
        for lam in fq:
            assert phi_eval(ctx54, alpha, beta, lam).is_zero()


def test_dim_multiple_of_l(ctx43):
    f = ctx43.field
    rng = SplitMix64(43)
    for _ in range(100):
        alpha = f.from_int(1 + rng.randbelow(63))
        beta = f.from_int(1 + rng.randbelow(63))
        assert dset(ctx43, alpha, beta).dim_p % 2 == 0  # l = 2


def test_same_coset_whole_field(ctx54):
    # alpha, beta, alpha+beta all in one H-coset: everything distributes
    f = ctx54.field
    alpha, beta = parse_element(f, "1"), parse_element(f, "3")  # 1, 3, 4 all in H
    ks = {coset_index(ctx54, v) for v in (alpha, beta, f.add(alpha, beta))}
    assert ks == {4}
    res = dset(ctx54, alpha, beta)
    assert res.classification == WHOLE_FIELD
    assert res.dim_p == f.d


def test_two_coincident_cosets_subfield(ctx32, ctx54):
    for ctx in (ctx32, ctx54):
        f = ctx.field
        rng = SplitMix64(11)
        seen = 0
        nz = ctx.qn - 1
        while seen < 30:
            alpha = f.from_int(1 + rng.randbelow(nz))
            beta = f.from_int(1 + rng.randbelow(nz))
            total = f.add(alpha, beta)
            if total.is_zero():
                continue
            r, s, t = (coset_index(ctx, v) for v in (alpha, beta, total))
            if len({r, s, t}) != 2:
                continue
            seen += 1
            res = dset(ctx, alpha, beta)
            assert subspace_is_subfield(ctx, res.basis)
            assert res.classification in (SUBFIELD, WHOLE_FIELD)


def test_intersection_is_dr(ctx32):
    f = ctx32.field
    common = set(f.elements())
    for alpha in f.nonzero_elements():
        for beta in f.nonzero_elements():
            common &= dset_brute(ctx32, alpha, beta)
    assert common == {f.zero, f.one, f.element([2])}


def test_two_coset_order_formula_example(ctx54):
    # alpha = 3, beta = x^2+2 share H (k=4), alpha+beta in g^2 H (k=2):
    # order 5^(1*gcd(2+4-4,4)) = 25
    f = ctx54.field
    alpha = parse_element(f, "3")
    beta = parse_element(f, "x^2+2")
    res = dset(ctx54, alpha, beta)
    assert res.cosets == (4, 4, 2)
    assert predicted_two_coset_order(ctx54, 4, 2) == 25
    assert res.size(5) == 25
    assert res.classification == SUBFIELD
    assert res.label(5) == "SUBFIELD(25)"


def test_lemma_s_set(ctx54):
    # r = 1, s = 2 meets the hypotheses: both divide n = 4 and
    # 4 | (5^4-1)/(5^1-1) = 156; then S <= D(alpha, beta) /\ H for pairs
    # with alpha in g^[1] H, beta in g^[2] H and alpha + beta in H
    s_set = lemma_S_set(ctx54, 1, 2)
    f = ctx54.field
    for el in s_set:
        assert h_member(ctx54, el)
    pair = None
    for k in range(1, 625):
        alpha = f.from_int(k)
        if coset_index(ctx54, alpha) != 1:
            continue
        for j in range(1, 625):
            beta = f.from_int(j)
            total = f.add(alpha, beta)
            if not total.is_zero() and coset_index(ctx54, beta) == 2 \
                    and coset_index(ctx54, total) == 4:
                pair = (alpha, beta)
                break
        if pair:
            break
    assert pair is not None
    assert s_set <= dset_brute(ctx54, *pair)
    with pytest.raises(PreconditionViolated):
        lemma_S_set(ctx54, 3, 2)  # (5^4-1)/(5^3-1) is not an integer


def test_f_rst(ctx54):
    # find a pair with the 0 < t < s < r <= n pattern and divisibility
    f = ctx54.field
    rng = SplitMix64(21)
    found = False
    for _ in range(5000):
        alpha = f.from_int(1 + rng.randbelow(624))
        beta = f.from_int(1 + rng.randbelow(624))
        total = f.add(alpha, beta)
        if total.is_zero():
            continue
        r = coset_index(ctx54, alpha)
        s = coset_index(ctx54, beta)
        t = coset_index(ctx54, total)
        if not (0 < t < s < r <= ctx54.n):
            continue
        if ctx54.n % (r - s) or ctx54.n % (r - t):
            continue
        result = f_rst(ctx54, alpha, beta)
        assert f.zero in result and f.one in result
        # closed under + and * (a subfield)
        for a in result:
            for b in result:
                assert f.add(a, b) in result
                assert f.mul(a, b) in result
        assert result <= dset_brute(ctx54, alpha, beta)
        found = True
        break
    assert found
    with pytest.raises(PreconditionViolated):
        f_rst(ctx54, f.zero, f.one)


def test_degenerate_pairs(ctx32):
    # alpha = 0 or alpha + beta = 0: phi vanishes identically
    f = ctx32.field
    some = f.element([1, 2])
    for alpha, beta in ((f.zero, some), (some, f.zero), (some, f.neg(some))):
        res = dset(ctx32, alpha, beta)
        assert res.classification == WHOLE_FIELD
        assert span_elements(ctx32, res.basis) == dset_brute(ctx32, alpha, beta)
