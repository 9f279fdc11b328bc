"""Braid words, presentations, closure data, and the grid construction."""

import pytest

from knotomega.braid import (BandWord, BraidWord, QuasipositiveWord,
                             band_to_quasipositive, braid_to_grid,
                             closure_components, expand_band,
                             expand_quasipositive, free_reduce, parse_band_word,
                             parse_braid, parse_quasipositive,
                             quasipositive_surface_chi,
                             quasipositive_surface_genus, reduce_closure_word,
                             self_linking, writhe)
from knotomega.errors import (IndexOutOfRange, NegativeGenus, NotAKnot,
                              ParseError)


def test_parse_basic_words():
    b = parse_braid("2: 1 1 1")
    assert b == BraidWord(2, (1, 1, 1))
    fig8 = parse_braid("3: 1 -2 1 -2")
    assert fig8.letters == (1, -2, 1, -2)
    assert parse_braid("4:").letters == ()


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_braid("no colon here")
    with pytest.raises(ParseError):
        parse_braid("2: 1 x 1")
    with pytest.raises(ParseError):
        parse_braid("2: 0")
    with pytest.raises(IndexOutOfRange):
        parse_braid("2: 3")
    err = None
    try:
        parse_braid("2: 1 zz")
    except ParseError as exc:
        err = exc
    assert err is not None and err.position is not None


def test_closure_components():
    assert closure_components(parse_braid("2: 1 1 1")) == 1
    assert closure_components(parse_braid("3:")) == 3
    assert closure_components(parse_braid("2: 1 1")) == 2


def test_writhe_and_self_linking():
    b = parse_braid("2: 1 1 1")
    assert writhe(b) == 3
    assert self_linking(b) == 1
    assert self_linking(parse_braid("1:")) == -1
    assert writhe(parse_braid("3: 1 -2 1 -2")) == 0
    with pytest.raises(NotAKnot):
        self_linking(parse_braid("2: 1 1"))


def test_markov_stabilization_preserves_self_linking():
    b = parse_braid("2: 1 1 1")
    stabilized = BraidWord(3, b.letters + (2,))
    assert self_linking(stabilized) == self_linking(b)


# ---------------------------------------------------------------- band words


def test_band_degenerate_conjugator():
    assert expand_band(parse_band_word("2: (1,2)")) == BraidWord(2, (1,))


def test_band_conjugated_generator():
    # band (1,3) conjugates the second generator by the first
    assert expand_band(parse_band_word("3: (1,3)")) == BraidWord(3, (1, 2, -1))


def test_band_wider_expansion():
    assert expand_band(parse_band_word("4: (2,4)")) == BraidWord(4, (2, 3, -2))


def test_band_writhe_counts_bands(rng):
    for _ in range(30):
        n = rng.randint(2, 5)
        k = rng.randint(1, 5)
        bands = tuple(tuple(sorted(rng.sample(range(1, n + 1), 2))) for _ in range(k))
        word = BandWord(n, bands)
        b = expand_band(word)
        assert writhe(b) == k
        positives = sum(1 for g in b.letters if g > 0)
        negatives = len(b.letters) - positives
        assert positives - negatives == k


def test_band_to_quasipositive_matches_expansion(rng):
    for _ in range(20):
        n = rng.randint(2, 5)
        bands = tuple(tuple(sorted(rng.sample(range(1, n + 1), 2)))
                      for _ in range(rng.randint(1, 4)))
        word = BandWord(n, bands)
        assert expand_quasipositive(band_to_quasipositive(word)) == expand_band(word)


def test_parse_quasipositive_format():
    qw = parse_quasipositive("3: [1|2][|1]")
    assert qw.factors[0][0].letters == (1,)
    assert qw.factors[0][1] == 2
    assert qw.factors[1][0].letters == ()
    assert expand_quasipositive(qw) == BraidWord(3, (1, 2, -1, 1))
    with pytest.raises(ParseError):
        parse_quasipositive("3: [1 2]")


def test_free_reduction_preserves_closure_data(rng):
    for _ in range(30):
        n = rng.randint(2, 4)
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, n - 1)
                        for _ in range(rng.randint(0, 8)))
        b = BraidWord(n, letters)
        r = free_reduce(b)
        assert closure_components(r) == closure_components(b)
        assert writhe(r) == writhe(b)
        rc = reduce_closure_word(b)
        assert closure_components(rc) == closure_components(b)
        assert writhe(rc) == writhe(b)


def test_surface_euler_characteristic():
    tre = band_to_quasipositive(parse_band_word("2: (1,2)(1,2)(1,2)"))
    assert quasipositive_surface_chi(tre) == -1
    assert quasipositive_surface_genus(tre) == 1
    disk = band_to_quasipositive(parse_band_word("2: (1,2)"))
    assert quasipositive_surface_chi(disk) == 1
    assert quasipositive_surface_genus(disk) == 0


def test_surface_genus_guards():
    with pytest.raises(NotAKnot):
        quasipositive_surface_genus(band_to_quasipositive(parse_band_word("3: (1,2)")))
    with pytest.raises(NegativeGenus):
        quasipositive_surface_genus(QuasipositiveWord(3, ()))


def test_five_band_genus_one():
    # 4 strands, 5 bands, knot closure: chi = -1, genus 1
    word = parse_band_word("4: (1,2)(2,3)(3,4)(1,2)(2,3)")
    braid = expand_band(word)
    assert closure_components(braid) == 1
    assert quasipositive_surface_chi(word) == -1
    assert quasipositive_surface_genus(word) == 1


# ---------------------------------------------------------------- grid construction


def test_unknot_identity_grid():
    g = braid_to_grid(parse_braid("1:"))
    assert g.size == 2
    assert g.components() == 1


def test_trefoil_grid_size_bound():
    g = braid_to_grid(parse_braid("2: 1 1 1"))
    assert g.size <= 5
    assert g.components() == 1


def test_identity_braids_give_unlinks():
    g = braid_to_grid(parse_braid("3:"))
    assert g.components() == 3


def test_grid_size_bound_when_all_strands_cross(rng):
    for _ in range(25):
        n = rng.randint(2, 4)
        k = rng.randint(n - 1, 7)
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(k))
        b = BraidWord(n, letters)
        g = braid_to_grid(b)
        touched = len({abs(l) for l in letters} | {abs(l) + 1 for l in letters})
        if touched == n and g.size > n + k:
            # fallback drawings may exceed the bound; they stay within 2n + k
            assert g.size <= 2 * n + k
        assert g.components() == closure_components(b)


def test_grid_matches_alexander_oracle(rng):
    from knotomega.alexander import alexander_from_braid
    from knotomega.gridhfk import euler_determinant
    from knotomega.polyalg import INT, LaurentPoly, monomial_equivalent
    one = LaurentPoly.one(INT)
    tinv = LaurentPoly.monomial(INT, (-1,))
    checked = 0
    while checked < 25:
        n = rng.randint(2, 4)
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, n - 1)
                        for _ in range(rng.randint(0, 6)))
        b = BraidWord(n, letters)
        if closure_components(b) != 1:
            continue
        g = braid_to_grid(b)
        if g.size > 10:
            continue
        delta = alexander_from_braid(b)
        expect = delta * (one - tinv) ** (g.size - 1)
        e = euler_determinant(g)
        assert monomial_equivalent(e, expect) or monomial_equivalent(e, -expect)
        checked += 1
