"""Conjugacy normal forms for 3-braids.

Covers the x/y rewriting pipeline stage by stage, the conjugacy-invariance
properties of the composite (rotation, free insertion, braid relation), the
direct-read shortcuts on family words, and the hyperbolicity decision.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from braidvol.errors import PreconditionError
from braidvol.generate import GeneratorSpec, generate_words
from braidvol.schreier import (
    EtaKind,
    SchreierForm,
    XYWord,
    conjugate_3braids,
    direct_read_k,
    direct_read_s,
    is_generic,
    is_hyperbolic_closure_3braid,
    normalize_xy,
    schreier_normal_form,
    to_sigma_form,
    to_xy,
)
from braidvol.words import BraidWord, SyllableWord, exponent_sum

from conftest import ladder, word_of

letters3_st = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=14)


def braid3(letters):
    return BraidWord(3, tuple(letters))


# --- stage pins ---------------------------------------------------------


def test_to_xy_substitutions():
    assert to_xy(word_of("s1^-1 s2")).runs == (
        ("x", 1), ("y", 1), ("x", 1), ("y", 2),
    )
    assert to_xy(word_of("s2", 3)).runs == (("x", 1), ("y", 2))
    # (xy)^3 (yx)^3 with the middle y's merging into one run
    assert to_xy(word_of("s1^-3 s2^-3")).runs == (
        ("x", 1), ("y", 1), ("x", 1), ("y", 1), ("x", 1), ("y", 2),
        ("x", 1), ("y", 1), ("x", 1), ("y", 1), ("x", 1),
    )


def test_to_xy_rejects_other_widths():
    with pytest.raises(PreconditionError):
        to_xy(word_of("s1^-3 s2^-3 s3^-3"))


def test_normalize_xy_single_rules():
    assert normalize_xy(XYWord((("x", 2),))) == XYWord((), -1)
    assert normalize_xy(XYWord((("y", 4),))) == XYWord((("y", 1),), 1)


def test_normalize_xy_works_across_the_seam():
    reduced = normalize_xy(to_xy(word_of("s1^-3 s2^-3")))
    assert reduced.j == -1
    form = to_sigma_form(reduced)
    assert form == SchreierForm(
        k=-1, kind=EtaKind.GENERIC, pairs=((1, 1), (1, 1))
    )


def test_to_sigma_form_degenerate_residues():
    assert to_sigma_form(XYWord((("x", 1),), 0)) == SchreierForm(
        k=-1, kind=EtaKind.SIGMA121
    )
    assert to_sigma_form(XYWord((("y", 2),), 2)) == SchreierForm(
        k=2, kind=EtaKind.SIGMA1212
    )
    assert to_sigma_form(XYWord((), 3)) == SchreierForm(k=3, kind=EtaKind.EMPTY)


def test_form_validation():
    with pytest.raises(ValueError):
        SchreierForm(k=0, kind=EtaKind.GENERIC, pairs=())
    with pytest.raises(ValueError):
        SchreierForm(k=0, kind=EtaKind.GENERIC, pairs=((0, 1),))
    with pytest.raises(ValueError):
        SchreierForm(k=0, kind=EtaKind.POWER_SIGMA1, power=0)
    with pytest.raises(ValueError):
        XYWord((("z", 1),))


def test_normal_form_pins():
    assert schreier_normal_form(ladder(2)) == SchreierForm(
        k=-2, kind=EtaKind.GENERIC, pairs=((1, 1),) * 4
    )
    assert schreier_normal_form(word_of("s1^-1 s2")) == SchreierForm(
        k=0, kind=EtaKind.GENERIC, pairs=((1, 1),)
    )
    assert schreier_normal_form(word_of("s2^3 s1^-3 s2^-4 s1^-3")) == SchreierForm(
        k=-1, kind=EtaKind.GENERIC, pairs=((2, 1), (2, 1), (2, 3))
    )
    # a positive two-syllable word can still be generic: the central power
    # soaks up the xx / yyy reductions (6*1 + (1 - 2) = 5 = its exponent sum)
    assert schreier_normal_form(word_of("s1^2 s2^3")) == SchreierForm(
        k=1, kind=EtaKind.GENERIC, pairs=((2, 1),)
    )
    assert not is_generic(schreier_normal_form(word_of("s1 s2")))


def test_pair_list_is_stored_in_least_rotation():
    form = SchreierForm(
        k=0, kind=EtaKind.GENERIC, pairs=((2, 1), (3, 1), (1, 1), (4, 1))
    )
    assert form.pairs == ((1, 1), (4, 1), (2, 1), (3, 1))


# --- composite properties ------------------------------------------------


@given(letters3_st, st.integers(min_value=0, max_value=13))
def test_rotation_invariance(letters, shift):
    if letters:
        shift %= len(letters)
        rotated = letters[shift:] + letters[:shift]
    else:
        rotated = letters
    assert schreier_normal_form(braid3(letters)) == schreier_normal_form(
        braid3(rotated)
    )


@given(letters3_st, st.integers(min_value=0, max_value=14), st.sampled_from([1, 2]))
def test_inverse_pair_insertion_invariance(letters, pos, gen):
    pos %= len(letters) + 1
    padded = letters[:pos] + [gen, -gen] + letters[pos:]
    assert schreier_normal_form(braid3(letters)) == schreier_normal_form(
        braid3(padded)
    )


@given(letters3_st)
def test_braid_relation_invariance(letters):
    spots = [
        i
        for i in range(len(letters) - 2)
        if letters[i] == letters[i + 2]
        and abs(letters[i]) != abs(letters[i + 1])
        and (letters[i] > 0) == (letters[i + 1] > 0)
    ]
    base = schreier_normal_form(braid3(letters))
    for i in spots:
        a, b = letters[i], letters[i + 1]
        rewritten = letters[:i] + [b, a, b] + letters[i + 3:]
        assert schreier_normal_form(braid3(rewritten)) == base


@given(letters3_st)
def test_round_trip_idempotence(letters):
    form = schreier_normal_form(braid3(letters))
    assert schreier_normal_form(form.to_braid_word()) == form


@given(letters3_st)
def test_exponent_sum_bookkeeping(letters):
    form = schreier_normal_form(braid3(letters))
    assert form.exponent_sum == exponent_sum(braid3(letters))


def test_conjugacy_pins():
    assert conjugate_3braids(word_of("s1^-1 s2"), word_of("s2 s1^-1"))
    assert not conjugate_3braids(word_of("s1^-3 s2^-3"), word_of("s1^-3 s2^-4"))


# --- direct reads on family words ----------------------------------------


def family_words():
    words = generate_words(GeneratorSpec(n=3, syllable_count=4, count=30, seed=11))
    words += generate_words(GeneratorSpec(n=3, syllable_count=6, count=30, seed=12))
    return words


def test_direct_read_pins():
    assert direct_read_k(ladder(2)) == -2
    assert direct_read_s(ladder(2)) == 4
    w = word_of("s1^3 s2^-3 s1^2 s2^-4")
    assert direct_read_k(w) == 0
    assert direct_read_s(w) == 2
    w = word_of("s2^3 s1^-3 s2^-4 s1^-3")
    assert direct_read_k(w) == -1
    assert direct_read_s(w) == 3


def test_direct_reads_are_gated():
    with pytest.raises(PreconditionError):
        direct_read_k(word_of("s1^-2 s2^-3 s1^-3 s2^-3"))


def test_direct_reads_match_the_algorithm():
    for w in family_words():
        form = schreier_normal_form(w)
        assert form.generic
        assert direct_read_k(w) == form.k
        t_minus = sum(1 for _, r in w.syllables if r < 0)
        assert direct_read_s(w) == form.s == t_minus


def juxtaposed_pairs(word):
    """Read the generic pair list off the word, one pair per negative
    syllable: p from the syllable length plus one for each positive
    neighbor, q from the following positive exponent (1 when negative)."""
    syl = word.syllables
    t = len(syl)
    seq = []
    for i, (_, r) in enumerate(syl):
        if r >= 0:
            continue
        pre = syl[(i - 1) % t][1]
        post = syl[(i + 1) % t][1]
        p = -r - 2 + (pre > 0) + (post > 0)
        q = post if post > 0 else 1
        seq.append((p, q))
    return tuple(seq)


def test_per_syllable_reads_juxtapose_to_the_full_form():
    # the composite normal form is exactly the juxtaposition of local
    # contributions, with the central exponent read off the negative-negative
    # adjacencies and no new central powers appearing
    for w in family_words():
        expected = SchreierForm(
            k=direct_read_k(w), kind=EtaKind.GENERIC, pairs=juxtaposed_pairs(w)
        )
        assert schreier_normal_form(w) == expected


# --- hyperbolicity --------------------------------------------------------


def test_hyperbolicity_pins():
    verdict = is_hyperbolic_closure_3braid(word_of("s1^-3 s2^-3"))
    assert verdict.hyperbolic is False
    assert "sigma1^-3 sigma2^-3" in verdict.reason
    assert is_hyperbolic_closure_3braid(ladder(2)) == (True, None)
    # torus closures of a positive two-syllable word fail through the
    # conjugacy match (their form is generic), not through genericity
    verdict = is_hyperbolic_closure_3braid(word_of("s1^2 s2^3"))
    assert verdict == (False, "conjugate to sigma1^2 sigma2^3")
    verdict = is_hyperbolic_closure_3braid(word_of("s1 s2"))
    assert verdict == (False, "non-generic normal form")


@given(
    st.integers(min_value=-12, max_value=12).filter(lambda p: p != 0),
    st.integers(min_value=-12, max_value=12).filter(lambda q: q != 0),
)
@settings(max_examples=150)
def test_every_two_syllable_closure_is_recognized(p, q):
    # sigma_1^p sigma_2^q is trivially conjugate to itself, so the search
    # must find it no matter which closed pattern its form falls into
    w = SyllableWord(3, ((1, p), (2, q)))
    assert is_hyperbolic_closure_3braid(w).hyperbolic is False


def test_generated_family_words_are_hyperbolic():
    for w in family_words()[:30]:
        assert is_hyperbolic_closure_3braid(w).hyperbolic is True


def test_hyperbolicity_rejects_other_widths():
    with pytest.raises(PreconditionError):
        is_hyperbolic_closure_3braid(word_of("s1^-3 s2^-3 s3^-3"))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
