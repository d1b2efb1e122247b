"""Dickson pairs, the twisted multiplication, cosets and inverses."""

import pytest

from dicksonnf import (
    NotDicksonPair,
    ZeroArgument,
    bracket_residues,
    center_CR,
    coset_index,
    dickson_pair,
    dist_elements_DR,
    find_nondistributive_triple,
    format_element,
    is_dickson_pair,
    list_dickson_pairs,
    make_nearfield,
    nf_inv,
    nf_mul,
    parse_element,
    subnearfield_orders,
)
from dicksonnf.errors import DivisionByZero


def test_is_dickson_pair_table():
    assert is_dickson_pair(3, 2)
    assert is_dickson_pair(5, 4)
    assert is_dickson_pair(7, 9)
    assert is_dickson_pair(5, 8)
    assert is_dickson_pair(4, 3)
    assert is_dickson_pair(9, 1)
    assert not is_dickson_pair(2, 2)    # 2 does not divide q-1 = 1
    assert not is_dickson_pair(3, 4)    # q = 3 mod 4 with 4 | n
    assert not is_dickson_pair(6, 2)    # 6 is not a prime power
    assert not is_dickson_pair(7, 4)    # 7 = 3 mod 4
    assert is_dickson_pair(7, 2)
    with pytest.raises(NotDicksonPair):
        dickson_pair(3, 4)


def test_list_dickson_pairs_frozen():
    got = [(dp.q, dp.n) for dp in list_dickson_pairs(7, 1, 9)]
    assert got == [(2, 1), (3, 1), (3, 2), (5, 1), (5, 2), (5, 4), (5, 8),
                   (7, 1), (7, 2), (7, 3), (7, 6), (7, 9)]
    # (4,3) needs l = 2
    assert (4, 3) in {(dp.q, dp.n) for dp in list_dickson_pairs(7, 2, 9)}


def test_bracket_residues_frozen():
    assert bracket_residues(3, 2) == [1, 0]
    assert bracket_residues(5, 4) == [1, 2, 3, 0]
    assert bracket_residues(7, 9) == [1, 8, 3, 4, 2, 6, 7, 5, 0]
    assert bracket_residues(5, 8) == [1, 6, 7, 4, 5, 2, 3, 0]
    with pytest.raises(NotDicksonPair):
        bracket_residues(3, 4)


def test_bracket_residues_complete():
    for dp in list_dickson_pairs(23, 2, 24):
        assert sorted(bracket_residues(dp.q, dp.n)) == list(range(dp.n))


def test_coset_index_squares(ctx32):
    # n = 2: H is the squares; k = 2 designates H, k = 1 the non-squares
    f = ctx32.field
    squares = {f.mul(a, a) for a in f.nonzero_elements()}
    for a in f.nonzero_elements():
        assert coset_index(ctx32, a) == (2 if a in squares else 1)
    with pytest.raises(ZeroArgument):
        coset_index(ctx32, f.zero)


def test_coset_reps_quotient_54(ctx54):
    # the quotient is {gH, g^6 H, g^31 H, g^156 H} = {gH, g^2 H, g^3 H, H}
    f = ctx54.field
    assert ctx54.coset_reps[1] == f.g
    assert ctx54.coset_reps[2] == f.pow(f.g, 6)
    assert ctx54.coset_reps[3] == f.pow(f.g, 31)
    assert ctx54.coset_reps[4] == f.pow(f.g, 156)
    assert ctx54.residues == [1, 2, 3, 0]


def test_coset_examples_54(ctx54):
    f = ctx54.field
    # residue of the k-th coset: ctx.residues[k-1]; 0 means H
    def residue_of(text):
        k = coset_index(ctx54, parse_element(f, text))
        return ctx54.residues[k - 1]

    assert residue_of("3") == 0          # in H
    assert residue_of("x^2+2") == 0      # in H
    assert residue_of("x^2+1") == 2      # in g^2 H
    assert residue_of("x+2") == 1        # g itself
    assert residue_of("x^2+3") == 0
    assert residue_of("3*x^2+2") == 2


def test_nf_mul_example(ctx32):
    f = ctx32.field
    a = parse_element(f, "x+1")
    b = parse_element(f, "x")
    assert format_element(f, nf_mul(ctx32, a, b)) == "2*x+1"
    assert nf_mul(ctx32, f.zero, b) == f.zero
    assert nf_mul(ctx32, b, f.zero) == f.zero


def test_nf_mul_matches_square_rule(ctx32):
    # the classical presentation: a o b = a*b if a is a square, else a*b^3
    f = ctx32.field
    squares = {f.mul(a, a) for a in f.nonzero_elements()}
    for a in f.nonzero_elements():
        for b in f.elements():
            expected = f.mul(a, b) if a in squares else f.mul(a, f.pow(b, 3))
            assert nf_mul(ctx32, a, b) == expected


def test_left_distributivity_exhaustive(ctx32):
    f = ctx32.field
    for a in f.elements():
        for b in f.elements():
            for c in f.elements():
                assert nf_mul(ctx32, a, f.add(b, c)) == f.add(
                    nf_mul(ctx32, a, b), nf_mul(ctx32, a, c))


def test_right_distributivity_fails_somewhere(ctx32):
    assert find_nondistributive_triple(ctx32) is not None
    a, b, lam = find_nondistributive_triple(ctx32)
    f = ctx32.field
    assert nf_mul(ctx32, f.add(a, b), lam) != f.add(
        nf_mul(ctx32, a, lam), nf_mul(ctx32, b, lam))


def test_no_triple_when_field():
    ctx = make_nearfield(5, 1)
    assert find_nondistributive_triple(ctx) is None


# Nearfield inverses in DN(3,2), frozen from an exhaustive two-sided search.
NF_INV_32 = {
    "1": "1", "2": "2", "x": "2*x", "x+1": "2*x+2", "x+2": "2*x+1",
    "2*x": "x", "2*x+1": "x+2", "2*x+2": "x+1",
}


def test_nf_inv_frozen_table(ctx32):
    f = ctx32.field
    for a_text, b_text in sorted(NF_INV_32.items()):
        a = parse_element(f, a_text)
        assert format_element(f, nf_inv(ctx32, a)) == b_text
    with pytest.raises(DivisionByZero):
        nf_inv(ctx32, f.zero)


def test_nf_inv_is_two_sided(ctx54):
    f = ctx54.field
    for k in (1, 7, 100, 333, 624):
        a = f.from_int(k)
        b = nf_inv(ctx54, a)
        assert nf_mul(ctx54, a, b) == f.one
        assert nf_mul(ctx54, b, a) == f.one


def test_group_axioms_32(ctx32):
    f = ctx32.field
    nz = list(f.nonzero_elements())
    for a in nz:
        assert nf_mul(ctx32, a, f.one) == a
        assert nf_mul(ctx32, f.one, a) == a
        for b in nz:
            assert not nf_mul(ctx32, a, b).is_zero()
            for c in nz:
                assert nf_mul(ctx32, nf_mul(ctx32, a, b), c) == \
                    nf_mul(ctx32, a, nf_mul(ctx32, b, c))


def test_dist_elements_and_center(ctx32):
    f = ctx32.field
    expected = {f.zero, f.one, f.element([2])}
    assert dist_elements_DR(ctx32) == expected
    assert center_CR(ctx32) == expected


def test_subnearfield_orders():
    assert subnearfield_orders(3, 2) == {3, 9}
    # l*n = 6 for (4,3): orders p^h with h | 6
    assert subnearfield_orders(4, 3) == {2, 4, 8, 64}
