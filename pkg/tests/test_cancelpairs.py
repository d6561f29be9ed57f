import itertools
import random
from fractions import Fraction

import pytest
from helpers import random_reduced_word

from spotdisk.cancelpairs import (
    CancellingFamily,
    CancellingPair,
    conjugate_product,
    cr_bruteforce,
    cr_lower_bound,
    enumerate_nested_families,
    erased_simple_length,
    validate_family,
)
from spotdisk.errors import CapExceeded
from spotdisk.whitehead import simple_length
from spotdisk.words import ReducedWord, concat, inverse, parse


def naive_families(w):
    """Independent enumeration: double loop over range pairs, then subset
    filtering with index-set logic."""
    letters = w.letters
    n = len(letters)
    cands = []
    for i1 in range(n):
        for j1 in range(i1 + 1, n + 1):
            for i2 in range(j1, n):
                j2 = i2 + (j1 - i1)
                if j2 > n:
                    continue
                if list(letters[i1:j1]) == [-a for a in reversed(letters[i2:j2])]:
                    cands.append(((i1, j1), (i2, j2)))

    def indices(r):
        return set(range(r[0], r[1]))

    def ok(combo):
        used = set()
        for first, second in combo:
            spots = indices(first) | indices(second)
            if used & spots:
                return False
            used |= spots
        for p in combo:
            gap = set(range(p[0][1], p[1][0]))
            for q in combo:
                if p is q:
                    continue
                inside = sum(1 for r in q if indices(r) <= gap)
                if inside == 1:
                    return False
        return True

    found = []
    for r in range(len(cands) + 1):
        for combo in itertools.combinations(cands, r):
            if ok(combo):
                found.append(frozenset(combo))
    return found


def as_frozen(family):
    return frozenset((p.first, p.second) for p in family.pairs)


def test_single_letter_pair_is_valid():
    w = parse("x1 x2 x1 X2 X1", 2)
    family = CancellingFamily((CancellingPair((0, 1), (4, 5)),))
    validate_family(w, family)


def test_word_without_both_signs_only_has_the_empty_family():
    w = parse("x1 x2 x1", 2)
    families = list(enumerate_nested_families(w))
    assert families == [CancellingFamily(())]


def test_families_match_naive_enumeration_on_fixed_words():
    for text in ("x1 x2 X1 X2 x1", "x2 x1 x2 X1 X2", "x1 X2 x2 X1"):
        w = parse(text, 2)
        ours = {as_frozen(f) for f in enumerate_nested_families(w)}
        naive = set(naive_families(w))
        assert ours == naive, text


def test_families_match_naive_enumeration_on_random_words():
    rng = random.Random(301)
    for _ in range(40):
        w = random_reduced_word(rng, 2, rng.randint(0, 6))
        ours = [as_frozen(f) for f in enumerate_nested_families(w)]
        assert len(ours) == len(set(ours))
        assert set(ours) == set(naive_families(w))


def test_every_enumerated_family_validates():
    rng = random.Random(302)
    for _ in range(30):
        w = random_reduced_word(rng, 2, rng.randint(0, 8))
        for family in enumerate_nested_families(w):
            validate_family(w, family)


def test_four_cycle_word_families_by_hand():
    w = parse("x1 x2 X1 X2 x1", 2)
    families = {as_frozen(f) for f in enumerate_nested_families(w)}
    assert families == {
        frozenset(),
        frozenset({((0, 1), (2, 3))}),
        frozenset({((1, 2), (3, 4))}),
        frozenset({((2, 3), (4, 5))}),
    }


def test_max_pairs_truncates_enumeration():
    w = parse("x2 x1 x2 X1 X2", 2)
    all_families = list(enumerate_nested_families(w))
    capped = list(enumerate_nested_families(w, max_pairs=1))
    assert max(len(f.pairs) for f in all_families) == 2
    assert max(len(f.pairs) for f in capped) == 1


def test_enumeration_cap():
    w = ReducedWord(2, tuple([1, 2] * 11))
    with pytest.raises(CapExceeded):
        list(enumerate_nested_families(w))


def test_validate_family_rejects_bad_data():
    w = parse("x1 x2 x1 X2 X1", 2)
    with pytest.raises(ValueError):
        validate_family(w, CancellingFamily((CancellingPair((0, 1), (1, 2)),)))
    with pytest.raises(ValueError):
        validate_family(w, CancellingFamily((CancellingPair((0, 1), (2, 3)),)))
    with pytest.raises(ValueError):
        validate_family(w, CancellingFamily((CancellingPair((0, 1), (4, 6)),)))
    crossing = CancellingFamily(
        (CancellingPair((0, 1), (2, 3)), CancellingPair((1, 2), (3, 4)))
    )
    with pytest.raises(ValueError):
        validate_family(w, crossing)


def test_erased_simple_length_with_empty_family_is_simple_length():
    rng = random.Random(303)
    for _ in range(50):
        w = random_reduced_word(rng, 2, rng.randint(0, 10))
        assert erased_simple_length(w, CancellingFamily(())) == simple_length(w).value


def test_erased_simple_length_hand_values():
    w = parse("x2 x1 x2 X1 X2", 2)
    one_pair = CancellingFamily((CancellingPair((1, 2), (3, 4)),))
    # erasing x1/X1 leaves segments x2 | x2 | X2, all of simple length 0
    assert erased_simple_length(w, one_pair) == 1
    long_pair = CancellingFamily((CancellingPair((0, 2), (3, 5)),))
    assert erased_simple_length(w, long_pair) == 1
    nested = CancellingFamily(
        (CancellingPair((0, 1), (4, 5)), CancellingPair((1, 2), (3, 4)))
    )
    assert erased_simple_length(w, nested) == 2


def test_cr_lower_bound_identity_is_zero():
    assert cr_lower_bound(ReducedWord.identity(2)) == 0


def test_cr_lower_bound_is_a_nonnegative_fraction():
    rng = random.Random(304)
    for _ in range(40):
        w = random_reduced_word(rng, 2, rng.randint(0, 9))
        value = cr_lower_bound(w)
        assert isinstance(value, Fraction)
        assert value >= 0


def test_cr_bruteforce_identity():
    witness = cr_bruteforce(ReducedWord.identity(2))
    assert witness.value == 0
    assert conjugate_product(witness.decomposition, 2).is_identity


def test_cr_bruteforce_witness_invariants_random():
    rng = random.Random(305)
    for _ in range(60):
        w = random_reduced_word(rng, 2, rng.randint(0, 11))
        witness = cr_bruteforce(w)
        assert conjugate_product(witness.decomposition, w.rank) == w
        ell = len(witness.decomposition)
        assert witness.value == (ell - 1) + sum(
            simple_length(v).value for v, _ in witness.decomposition
        )
        assert witness.value <= simple_length(w).value


def test_cr_bruteforce_finds_conjugate_structure():
    u = parse("x2", 2)
    core = parse("x1 x2 X1 X2 x1", 2)
    w = concat(concat(inverse(u), core), u)
    witness = cr_bruteforce(w)
    assert witness.value <= simple_length(core).value


def test_sandwich_on_random_words():
    rng = random.Random(306)
    for _ in range(60):
        w = random_reduced_word(rng, 2, rng.randint(0, 10))
        lower = cr_lower_bound(w)
        mid = cr_bruteforce(w).value
        upper = simple_length(w).value
        assert lower <= mid <= upper, str(w)


def test_doubling_search_caps_never_raises_the_value():
    rng = random.Random(307)
    for _ in range(40):
        w = random_reduced_word(rng, 2, rng.randint(0, 10))
        base = cr_bruteforce(w).value
        doubled = cr_bruteforce(w, max_ell=6, max_piece=12, max_conj=6).value
        assert doubled <= base


def test_cr_bruteforce_caps_and_bounds():
    with pytest.raises(CapExceeded):
        cr_bruteforce(ReducedWord(2, tuple([1, 2] * 17)))
    with pytest.raises(ValueError):
        cr_bruteforce(parse("x1", 2), max_ell=0)
