"""Replacement words: parsing, canonicalization, coverage, symmetry, cond4."""

import random

import pytest

from artifact.algebra import InputError, check_identity, make_algebra
from artifact.corpus import (a5_leibniz, dual_numbers, heisenberg,
                             m2_rationals, diagonal_algebra, sl2,
                             strict_upper3, zero_algebra)
from artifact.fields import GF, QQ
from artifact.words import (ASSOCIATIVE_W1, ASSOCIATIVE_W2,
                            COMMUTATIVE_EXAMPLE_W2, LEIBNIZ_W1, LEIBNIZ_W2,
                            LIE_W1, LIE_W2, T_SET, canon_monomial,
                            check_swap_symmetry, check_T_coverage,
                            expand_condition4, parse_word,
                            validate_word_on_algebra)


# ---------------------------------------------------------------------------
# parsing


def test_parse_round_trips():
    for text, side in [("y*(z*x) + (y*x)*z", "W1"),
                       ("(x*y)*z - (x*z)*y", "W2"),
                       ("2*y*(z*x) - 3*(y*x)*z", "W1")]:
        w = parse_word(text, side)
        assert parse_word(str(w), side) == w


def test_parse_merges_and_cancels_terms():
    w = parse_word("3*y*(z*x) - (y*x)*z + y*(z*x)", "W1")
    assert str(w) == "- (y*x)*z + 4*y*(z*x)"
    assert str(parse_word("y*(z*x) - y*(z*x)", "W1")) == "0"


def test_parse_requires_three_distinct_slot_variables():
    for bad in ("y*(y*x)", "y*(z*w)", "x*y", "y*z*x", "q"):
        with pytest.raises(InputError):
            parse_word(bad, "W1")


def test_parse_rejects_unknown_side():
    with pytest.raises(InputError):
        parse_word("y*(z*x)", "W3")


# ---------------------------------------------------------------------------
# canonicalization

def test_canon_monomial_signs():
    # outer L-to-R swap and inner sort each contribute -1 under anticomm
    assert canon_monomial(("L", ("y", "x", "z")), "anticomm") == \
        (1, ("R", ("z", "x", "y")))
    assert canon_monomial(("L", ("y", "x", "z")), "comm") == \
        (1, ("R", ("z", "x", "y")))
    assert canon_monomial(("R", ("z", "y", "x")), "anticomm") == \
        (-1, ("R", ("z", "x", "y")))
    assert canon_monomial(("R", ("z", "y", "x")), "plain") == \
        (1, ("R", ("z", "y", "x")))


# ---------------------------------------------------------------------------
# T-set coverage


def test_t_set_is_the_four_fixed_pairs():
    assert len(T_SET) == 4
    assert T_SET[0] == (("R", ("y", "x", "z")), ("R", ("z", "x", "y")))


def test_lie_words_cover_t_under_anticomm():
    rep = check_T_coverage(LIE_W1, LIE_W2, "anticomm")
    assert rep.passed
    assert all(d["covered"] for d in rep.details)


def test_leibniz_words_fail_exactly_first_pair_under_plain():
    rep = check_T_coverage(LEIBNIZ_W1, LEIBNIZ_W2, "plain")
    assert not rep.passed
    assert rep.witness == (0,)  # {y*(x*z), z*(x*y)} uncovered
    assert [d["covered"] for d in rep.details] == [False, True, True, True]


def test_commutative_example_covers_all_four_under_comm():
    rep = check_T_coverage(parse_word("y*(z*x)", "W1"),
                           COMMUTATIVE_EXAMPLE_W2, "comm")
    assert rep.passed


def test_coverage_details_name_the_route():
    rep = check_T_coverage(LIE_W1, LIE_W2, "anticomm")
    assert {d["via"] for d in rep.details} <= {"direct", "rewritten"}


# ---------------------------------------------------------------------------
# swap symmetry


def test_swap_symmetry_of_commutative_example():
    assert check_swap_symmetry(COMMUTATIVE_EXAMPLE_W2, "-").passed


def test_swap_symmetry_fails_for_lone_term():
    assert not check_swap_symmetry(parse_word("y*(z*x)", "W2"), "+").passed


def test_swap_symmetry_requires_w2_and_known_sign():
    with pytest.raises(InputError):
        check_swap_symmetry(parse_word("y*(z*x)", "W1"), "+")
    with pytest.raises(InputError):
        check_swap_symmetry(COMMUTATIVE_EXAMPLE_W2, "*")


# ---------------------------------------------------------------------------
# condition 4


def test_cond4_associative_words_equal():
    rep = expand_condition4(ASSOCIATIVE_W1, ASSOCIATIVE_W2)
    assert rep.passed
    for d in rep.details[:-1]:
        assert d["outcome"] == "equal"


def test_cond4_lie_words_equal_under_anticomm_only():
    assert expand_condition4(LIE_W1, LIE_W2, mode="anticomm").passed
    rep = expand_condition4(LIE_W1, LIE_W2, mode="plain")
    assert not rep.passed
    assert rep.details[-1]["overall"] == "unequal"


def test_cond4_runs_out_of_waves_cleanly():
    rep = expand_condition4(LIE_W1, LIE_W2, depth=1, mode="anticomm")
    assert not rep.passed
    assert rep.details[-1]["overall"] == "undetermined"


def test_cond4_coefficient_mismatch_is_unequal():
    w1 = parse_word("2*y*(z*x)", "W1")
    w2 = parse_word("2*(x*y)*z", "W2")
    rep = expand_condition4(w1, w2)
    assert rep.details[-1]["overall"] == "unequal"


def test_cond4_validates_arguments():
    with pytest.raises(InputError):
        expand_condition4(ASSOCIATIVE_W1, ASSOCIATIVE_W2, depth=0)
    with pytest.raises(InputError):
        expand_condition4(ASSOCIATIVE_W1, ASSOCIATIVE_W2, mode="sideways")


# ---------------------------------------------------------------------------
# grounding words on algebras: 20 fixed instances, agreement with the
# matching structure identity


def rand_raw(seed, n, field):
    rng = random.Random(seed)
    t = tuple(tuple(tuple(field.from_int(rng.randrange(5)) for _ in range(n))
                    for _ in range(n)) for _ in range(n))
    return make_algebra(field, [f"e{i}" for i in range(n)], t, "raw")


GROUNDING_ALGEBRAS = [
    sl2(), heisenberg(), a5_leibniz(), a5_leibniz(GF(5)), m2_rationals(),
    dual_numbers(), strict_upper3(), diagonal_algebra(QQ, 3),
    zero_algebra(GF(3), 2, "raw"), rand_raw(99, 2, GF(5)),
]


@pytest.mark.parametrize("a", GROUNDING_ALGEBRAS, ids=[
    "sl2", "heis", "a5Q", "a5F5", "m2", "dual", "upper3", "diag3", "zeroF3",
    "randF5"])
@pytest.mark.parametrize("w1,w2,tag", [
    (LEIBNIZ_W1, LEIBNIZ_W2, "leibniz"),
    (ASSOCIATIVE_W1, ASSOCIATIVE_W2, "associativity"),
])
def test_word_validation_agrees_with_identity_check(a, w1, w2, tag):
    assert validate_word_on_algebra(a, w1, w2).passed == \
        check_identity(a, tag).passed
