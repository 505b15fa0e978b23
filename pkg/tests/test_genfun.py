from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

import paper_cases as pc
from oracles import bialternant
from hooktab.enumeration import EnumBounds, enum_hvt
from hooktab.genfun import (
    det_formula_check,
    determinant_side,
    extract_weight_counts,
    hvt_genfun,
    schur_expansion_genfun,
    schur_poly,
    vandermonde,
)
from hooktab.polynomials import (
    CapMismatch,
    CapTooSmall,
    Monomial,
    TruncatedPolynomial,
    alpha_mono,
    beta_mono,
    poly_add,
    poly_mul,
    x_mono,
)
from hooktab.shapes import partitions_up_to
from hooktab.tableaux import weight_hvt


def P(terms, cap):
    return TruncatedPolynomial(terms, cap)


def test_monomial_basics():
    m = Monomial(x={1: 2, 3: 1}, a={1: 1})
    assert str(m) == "x1^2 x3 a1"
    assert m.x_degree == 3 and m.alpha_degree == 1 and m.beta_degree == 0
    assert m * Monomial(x={1: 1}) == Monomial(x={1: 3, 3: 1}, a={1: 1})
    assert str(Monomial()) == "1"
    with pytest.raises(ValueError):
        Monomial(x={0: 1})


def test_poly_add_mul_trivial():
    one = TruncatedPolynomial.const(1, 4)
    a = P({x_mono(1): 1}, 4)
    assert poly_add(a, TruncatedPolynomial.zero(4)) == a
    assert poly_add(a, a) == P({x_mono(1): 2}, 4)
    assert poly_mul(a, one) == a
    x1, x2 = P({x_mono(1): 1}, 4), P({x_mono(2): 1}, 4)
    assert poly_mul(x1 + x2, x1 - x2) == P({x_mono(1, 2): 1, x_mono(2, 2): -1}, 4)


def test_cap_mismatch_and_truncation():
    with pytest.raises(CapMismatch):
        poly_add(TruncatedPolynomial.zero(2), TruncatedPolynomial.zero(3))
    with pytest.raises(CapMismatch):
        poly_mul(TruncatedPolynomial.zero(2), TruncatedPolynomial.zero(3))
    # product terms above the cap vanish
    x1 = P({x_mono(1): 1}, 1)
    assert poly_mul(x1, x1) == TruncatedPolynomial.zero(1)


def test_geometric_series_inverse():
    cap = 5
    geo = P({Monomial(x={1: m}, a={1: m}): 1 for m in range(cap + 1)}, cap)
    one_minus = P({Monomial(): 1, x_mono(1) * alpha_mono(1): -1}, cap)
    assert poly_mul(one_minus, geo) == TruncatedPolynomial.const(1, cap)


small_polys = st.lists(
    st.tuples(
        st.integers(0, 2), st.integers(0, 2), st.integers(0, 1), st.integers(-3, 3)
    ),
    max_size=5,
).map(
    lambda spec: TruncatedPolynomial(
        Counter(
            {
                Monomial(
                    x={1: e1, 2: e2} if e1 or e2 else {},
                    a={1: ea} if ea else {},
                ): c
                for e1, e2, ea, c in spec
            }
        ),
        4,
    )
)


@settings(max_examples=60)
@given(small_polys, small_polys, small_polys)
def test_poly_ring_laws(a, b, c):
    assert poly_mul(a, b) == poly_mul(b, a)
    assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
    assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))


def test_schur_trivial_cases():
    assert schur_poly((1,), 2, 2) == P({x_mono(1): 1, x_mono(2): 1}, 2)
    assert schur_poly((1, 1, 1), 2, 3) == TruncatedPolynomial.zero(3)
    with pytest.raises(CapTooSmall):
        schur_poly((2, 1), 3, 2)


def test_schur_matches_bialternant():
    for mu in partitions_up_to(4):
        if not mu:
            continue
        for n in (2, 3):
            if len(mu) > n:
                continue  # the bialternant needs at least len(mu) variables
            cap = sum(mu) + n * (n - 1) // 2
            s = schur_poly(mu, n, cap)
            assert s * vandermonde(n, cap) == bialternant(mu, n, cap)


def test_schur_symmetry():
    cap = 3
    s = schur_poly((2, 1), 3, cap)
    for i, j in ((1, 2), (2, 3)):
        swapped = {}
        for m, c in s.terms.items():
            xs = dict(m.x)
            xs[i], xs[j] = xs.get(j, 0), xs.get(i, 0)
            swapped[Monomial(x=xs)] = c
        assert TruncatedPolynomial(swapped, cap) == s


def test_hvt_genfun_single_cell_pinned():
    got = hvt_genfun((1,), EnumBounds(2, 1), 3)
    expected = P(
        {
            x_mono(1): 1,
            x_mono(2): 1,
            x_mono(1, 2) * alpha_mono(1): 1,
            x_mono(1) * x_mono(2) * alpha_mono(1): 1,
            x_mono(2, 2) * alpha_mono(1): 1,
            x_mono(1) * x_mono(2) * beta_mono(1): 1,
        },
        3,
    )
    assert got == expected


def test_hvt_genfun_trivials():
    assert hvt_genfun((), EnumBounds(3, 2), 2) == TruncatedPolynomial.const(1, 2)
    # zero-excess slice recovers the Schur polynomial
    g = hvt_genfun((2, 1), EnumBounds(3, 2), 5)
    zero_excess = TruncatedPolynomial(
        {m: c for m, c in g.terms.items() if not m.a and not m.b}, 5
    )
    s = schur_poly((2, 1), 3, 5)
    assert zero_excess == s


def test_schur_expansion_inner_term_golden():
    # the coefficient of s_(3,3,1) in the lambda=(2,1) expansion
    from hooktab.enumeration import enum_exquisite
    from hooktab.tableaux import weight_mixed

    weights = Counter(
        weight_mixed(E) for E in enum_exquisite((3, 3, 1), (2, 1))
    )
    expected = Counter(
        Monomial(a=a, b=b) for a, b in pc.EXQ_331_21_WEIGHTS
    )
    assert weights == expected


def test_schur_expansion_trivial():
    for model in ("EXQ", "BFT"):
        assert schur_expansion_genfun(
            (), EnumBounds(3, 2), 2, model
        ) == TruncatedPolynomial.const(1, 2)
    with pytest.raises(ValueError):
        schur_expansion_genfun((), EnumBounds(3, 2), 2, "XYZ")


def test_three_way_equality_small():
    for lam in ((), (1,), (2, 1)):
        bounds = EnumBounds(3, 2)
        cap = sum(lam) + 2
        h = hvt_genfun(lam, bounds, cap)
        assert h == schur_expansion_genfun(lam, bounds, cap, "EXQ")
        assert h == schur_expansion_genfun(lam, bounds, cap, "BFT")


def test_det_formula_trivial_empty():
    # empty shape: the determinant side is exactly the Vandermonde
    for n in (2, 3):
        cap = 2
        work = cap + n * (n - 1) // 2
        lhs, rhs = det_formula_check((), n, cap)
        assert lhs == rhs
        assert rhs == hvt_genfun((), EnumBounds(n, cap), work) * vandermonde(n, work)


def test_det_formula_single_cell_hand_expansion():
    lhs, rhs = det_formula_check((1,), 2, 3)
    assert lhs == rhs
    # degree-by-degree hand expansion of the 2x2 determinant
    cap = lhs.cap
    hand = (
        TruncatedPolynomial(
            {
                x_mono(1, 2): 1,
                x_mono(1, 2) * x_mono(2) * beta_mono(1): 1,
                x_mono(1, 3) * alpha_mono(1): 1,
                x_mono(1, 4) * alpha_mono(1, 2): 1,
                x_mono(1, 3) * x_mono(2) * alpha_mono(1) * beta_mono(1): 1,
            },
            cap,
        )
        - TruncatedPolynomial(
            {
                x_mono(2, 2): 1,
                x_mono(2, 2) * x_mono(1) * beta_mono(1): 1,
                x_mono(2, 3) * alpha_mono(1): 1,
                x_mono(2, 4) * alpha_mono(1, 2): 1,
                x_mono(2, 3) * x_mono(1) * alpha_mono(1) * beta_mono(1): 1,
            },
            cap,
        )
    )
    assert lhs == hand


def test_det_formula_errors():
    with pytest.raises(CapTooSmall):
        det_formula_check((2, 1), 3, 2)
    with pytest.raises(ValueError):
        det_formula_check((1, 1, 1), 2, 4)


def test_extract_weight_counts_matches_enumeration():
    for lam, n, excess in (((1,), 2, 2), ((2, 1), 3, 1)):
        cap = sum(lam) + excess
        counts = extract_weight_counts(lam, n, cap)
        pruned = {m: c for m, c in counts.items() if m.x_degree <= cap}
        enum_counts = Counter(
            weight_hvt(T) for T in enum_hvt(lam, EnumBounds(n, excess))
        )
        assert pruned == dict(enum_counts)
        assert sum(pruned.values()) == len(enum_hvt(lam, EnumBounds(n, excess)))
