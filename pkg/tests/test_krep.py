import itertools
import random
from fractions import Fraction

import pytest

from tempered_atlas.errors import NotDominant, NotGenuine
from tempered_atlas.krep import (
    convolve,
    dirac_multiplicity,
    dominant_representative,
    freudenthal,
    multiset_mass,
    simple_compact_roots,
    spin_weights,
    tensor_decompose,
    weyl_dim,
    weyl_group,
)
from tempered_atlas.weights import Weight, reflect

H = Fraction(1, 2)


def u2_string_char(m, n):
    """Oracle: the u(2) irrep (m, n) is a single root string through
    e1 - e2, weights (m - k, n + k) for k = 0..m-n."""
    assert m >= n and Fraction(m - n).denominator == 1
    return {Weight((m - k, n + k)): 1 for k in range(int(m - n) + 1)}


def spin_by_subsets(d):
    """Oracle: independent subset-sum enumeration of the spin multiset."""
    pairs = d.noncompact_positives()
    out = {}
    for picks in itertools.product((0, 1), repeat=len(pairs)):
        w = Weight.zero(d.rank_tc)
        for take, g in zip(picks, pairs):
            w = w + (g if not take else -1 * g)
        w = Fraction(1, 2) * w
        out[w] = out.get(w, 0) + 2 ** (d.zero_weight_s_dim // 2)
    return out


def strip_multiplicity(d, multiset, target):
    """Oracle: peel lex-maximal weights with hand-written u(2) characters
    until the multiset empties; returns the coefficient of target."""
    ms = dict(multiset)
    coeffs = {}
    while ms:
        top = max(w for w, c in ms.items() if c)
        c = ms[top]
        assert c > 0
        coeffs[top] = c
        for w, m in u2_string_char(*top.coords).items():
            ms[w] = ms.get(w, 0) - c * m
            if ms[w] == 0:
                del ms[w]
    return coeffs.get(target, 0)


def test_weyl_dim_examples(sp4r, sl2r):
    for n in (-2, 0, 3):
        assert weyl_dim(sp4r, Weight((n, n))) == 1
    assert weyl_dim(sp4r, Weight((2, 0))) == 3
    assert weyl_dim(sl2r, Weight((7,))) == 1
    with pytest.raises(NotDominant):
        weyl_dim(sp4r, Weight((0, 1)))


def test_weyl_dim_matches_string_length(sp4r):
    for m in range(0, 6):
        for n in range(-3, m + 1):
            assert weyl_dim(sp4r, Weight((m, n))) == m - n + 1


def test_freudenthal_examples(sp4r, sl2r):
    assert freudenthal(sp4r, Weight((2, 0))) == {
        Weight((2, 0)): 1,
        Weight((1, 1)): 1,
        Weight((0, 2)): 1,
    }
    assert freudenthal(sp4r, Weight((0, 0))) == {Weight((0, 0)): 1}
    assert freudenthal(sl2r, Weight((4,))) == {Weight((4,)): 1}


def test_freudenthal_matches_string_oracle(sp4r):
    for m in range(0, 7):
        for n in range(-2, m + 1):
            assert freudenthal(sp4r, Weight((m, n))) == u2_string_char(m, n)


def test_freudenthal_mass_is_dimension(sp4r, su21):
    for d in (sp4r, su21):
        for i in range(0, 5):
            for j in range(-2, 3):
                hw = Weight((i, j))
                if not d.is_dominant_weight(hw):
                    continue
                assert multiset_mass(freudenthal(d, hw)) == weyl_dim(d, hw)


def test_freudenthal_weyl_symmetry(sp4r):
    alpha = Weight((1, -1))
    for hw in (Weight((3, -1)), Weight((4, 0))):
        ms = freudenthal(sp4r, hw)
        reflected = {reflect(w, alpha, sp4r.form): c for w, c in ms.items()}
        assert reflected == ms


def test_su21_compact_string(su21):
    # the compact side of su21 is u(2)-like: one root pair, so (1,1) is a
    # two-dimensional string ending at its reflection
    ms = freudenthal(su21, Weight((1, 1)))
    assert ms == {Weight((1, 1)): 1, Weight((-1, 2)): 1}
    assert multiset_mass(ms) == weyl_dim(su21, Weight((1, 1))) == 2


def test_tensor_with_trivial(sp4r):
    assert tensor_decompose(sp4r, Weight((3, 1)), Weight((0, 0))) == (
        (Weight((3, 1)), 1),
    )


def test_tensor_u2_fundamental_square(sp4r):
    assert tensor_decompose(sp4r, Weight((1, 0)), Weight((1, 0))) == (
        (Weight((1, 1)), 1),
        (Weight((2, 0)), 1),
    )


def test_tensor_abelian_adds_weights(sl2r):
    assert tensor_decompose(sl2r, Weight((3,)), Weight((-5,))) == ((Weight((-2,)), 1),)


def test_tensor_dimension_law_random_pairs(sp4r):
    rng = random.Random(20240817)
    for _ in range(50):
        m1, n1 = rng.randint(-4, 4), rng.randint(-4, 4)
        m2, n2 = rng.randint(-4, 4), rng.randint(-4, 4)
        hw1 = Weight((max(m1, n1), min(m1, n1)))
        hw2 = Weight((max(m2, n2), min(m2, n2)))
        terms = tensor_decompose(sp4r, hw1, hw2)
        assert sum(c * weyl_dim(sp4r, w) for w, c in terms) == weyl_dim(
            sp4r, hw1
        ) * weyl_dim(sp4r, hw2)


def test_spin_weights_sp4r_exact(sp4r):
    expected = {
        Weight((Fraction(3, 2), Fraction(3, 2))): 1,
        Weight((Fraction(1, 2), Fraction(1, 2))): 1,
        Weight((Fraction(-1, 2), Fraction(3, 2))): 1,
        Weight((Fraction(3, 2), Fraction(-1, 2))): 1,
        Weight((Fraction(-3, 2), Fraction(1, 2))): 1,
        Weight((Fraction(1, 2), Fraction(-3, 2))): 1,
        Weight((Fraction(-1, 2), Fraction(-1, 2))): 1,
        Weight((Fraction(-3, 2), Fraction(-3, 2))): 1,
    }
    assert spin_weights(sp4r) == expected


def test_spin_weights_rank_one_groups(sl2r, sl2c):
    assert spin_weights(sl2r) == {Weight((1,)): 1, Weight((-1,)): 1}
    assert spin_weights(sl2c) == {Weight((1,)): 1, Weight((-1,)): 1}


def test_spin_mass_law_all_catalog_groups(sp4r, sl2r, sl2c, su21):
    for d in (sp4r, sl2r, sl2c, su21):
        ms = spin_weights(d)
        assert multiset_mass(ms) == 2 ** (d.dim_s // 2)
        assert ms == spin_by_subsets(d)


def test_weyl_group_orders(sp4r, sl2r, su21):
    assert len(weyl_group(sl2r)) == 1
    assert len(weyl_group(sp4r)) == 2
    assert len(weyl_group(su21)) == 2


def test_dominant_representative(sp4r):
    assert dominant_representative(sp4r, Weight((0, 3))) == Weight((3, 0))
    assert simple_compact_roots(sp4r) == (Weight((1, -1)),)


def test_dirac_multiplicity_examples(sp4r, sl2r):
    assert dirac_multiplicity(sp4r, Weight((H, H)), Weight((2, 0))) == 1
    assert dirac_multiplicity(sp4r, Weight((H, -H)), Weight((2, -1))) == 1
    assert dirac_multiplicity(sl2r, Weight((0,)), Weight((1,))) == 1


def test_dirac_multiplicity_against_stripping_oracle(sp4r):
    cases = [
        (Weight((H, H)), (2, 0)),
        (Weight((H, H)), (2, 2)),
        (Weight((H, -H)), (2, -1)),
        (Weight((H, -H)), (1, -2)),
        (Weight((Fraction(5, 2), Fraction(3, 2))), (4, 3)),
        (Weight((Fraction(3, 2), H)), (3, 0)),
    ]
    spin = spin_by_subsets(sp4r)
    for tau, (m, n) in cases:
        product = convolve(u2_string_char(m, n), spin)
        assert dirac_multiplicity(sp4r, tau, Weight((m, n))) == strip_multiplicity(
            sp4r, product, tau
        )


def test_dirac_multiplicity_preconditions(sp4r):
    with pytest.raises(NotGenuine):
        dirac_multiplicity(sp4r, Weight((1, 0)), Weight((2, 0)))
    with pytest.raises(NotDominant):
        dirac_multiplicity(sp4r, Weight((H, H)), Weight((0, 1)))
    with pytest.raises(NotDominant):
        dirac_multiplicity(sp4r, Weight((H, H)), Weight((H, -H)))
