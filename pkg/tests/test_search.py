import pytest

from qmarkoff.markoff import markoff_numbers_up_to
from qmarkoff.qmatrix import M_q, mu_q
from qmarkoff.search import (Classification, SearchBoundError,
                             christoffel_injectivity, classify_pair, collide)
from qmarkoff.words import christoffel_words, letter_counts


def test_no_collisions_up_to_length_two():
    report = collide("mu", 2)
    assert report.groups == []
    assert report.words_searched == 7  # empty word plus six nonempty ones


def test_mu_collisions_up_to_length_five():
    report = collide("mu", 5)
    assert [g.words for g in report.groups] == [
        ("aabb", "abab"), ("aaabb", "abaab"), ("aabbb", "abbab")]
    assert all(c.kind is Classification.IDENTITY1 for c in report.classifications)
    assert not report.has_unexplained
    # the reported polynomial really is the shared entry
    for g in report.groups:
        for w in g.words:
            assert mu_q(w).m12 == g.polynomial


def test_group_lookup_and_summary():
    report = collide("mu", 5)
    g = report.group_of("aaabb")
    assert g is not None and "abaab" in g.words
    assert report.group_of("ab") is None
    summary = report.summary()
    assert summary["groups"] == 3
    assert summary["pairs"] == 3
    assert summary["identity1"] == 3
    assert summary["unexplained"] == 0


def test_mu_groups_share_letter_counts():
    report = collide("mu", 8)
    for g in report.groups:
        counts = {letter_counts(w) for w in g.words}
        assert len(counts) == 1


def test_headline_M_collision_is_unexplained():
    report = collide("M", 9)
    group = report.group_of("bbaaaaabb")
    assert group is not None
    # each word of the famous pair also drags in its own bracketed-bar partner
    assert group.words == ("baaabaaab", "babbbbbab", "bbaaaaabb", "bbbbabbbb")
    verdicts = {(c.x, c.y): c.kind for c in report.classifications}
    assert verdicts[("baaabaaab", "bbaaaaabb")] is Classification.UNEXPLAINED
    assert verdicts[("babbbbbab", "bbaaaaabb")] is Classification.IDENTITY1
    assert verdicts[("baaabaaab", "bbbbabbbb")] is Classification.IDENTITY1
    assert report.has_unexplained


def test_M_trailing_run_collisions():
    report = collide("M", 3)
    zero_group = report.group_of("")
    assert zero_group is not None
    assert zero_group.words == ("", "a", "aa", "aaa")
    assert zero_group.polynomial.is_zero()


def test_classify_pair_identity1():
    verdict = classify_pair("aaabb", "abaab")
    assert verdict.kind is Classification.IDENTITY1
    assert verdict.witness == {"family": "identity1", "inner": "aab"}


def test_classify_pair_both():
    verdict = classify_pair("aababb", "ababab")
    assert verdict.kind is Classification.BOTH
    assert verdict.witness["family"] == "identity2"
    assert verdict.witness["w"] == "" and verdict.witness["v"] == "a"


def test_classify_pair_identity2_only():
    x, y = "aababbaababb", "aabbababaabb"
    verdict = classify_pair(x, y)
    assert verdict.kind is Classification.IDENTITY2
    assert verdict.witness == {"family": "identity2", "w": "ab", "v": "a"}


def test_classify_pair_symmetric_in_argument_order():
    a = classify_pair("aababbaababb", "aabbababaabb")
    b = classify_pair("aabbababaabb", "aababbaababb")
    assert a.kind is b.kind is Classification.IDENTITY2


def test_classify_pair_rejects_bad_input():
    with pytest.raises(ValueError):
        classify_pair("ab", "ab")
    with pytest.raises(ValueError):
        classify_pair("ab", "ba")  # entries differ
    with pytest.raises(ValueError):
        classify_pair("ab", "ba", map_kind="nope")


def test_classify_pair_M_kinds():
    assert classify_pair("bab", "bbb", "M").kind is Classification.IDENTITY1
    assert classify_pair("b", "ba", "M").kind is Classification.UNEXPLAINED
    # outer a-runs are absorbed by the family
    assert classify_pair("abba", "abbaa", "M").kind is Classification.IDENTITY1


def test_chain_classification_at_length_twelve():
    report = collide("mu", 12)
    assert not report.has_unexplained
    quad = report.group_of("aababbaababb")
    assert quad is not None
    assert quad.words == ("aababbaababb", "aabbababaabb",
                          "abaabababbab", "ababaabbabab")
    verdicts = {(c.x, c.y): c.kind for c in report.classifications}
    assert verdicts[("aababbaababb", "abaabababbab")] is Classification.CHAIN
    assert verdicts[("aabbababaabb", "ababaabbabab")] is Classification.CHAIN
    assert verdicts[("aababbaababb", "aabbababaabb")] is Classification.IDENTITY2
    counts = report.summary()
    assert counts["chain"] == 2
    assert counts["unexplained"] == 0


def test_parallel_search_matches_serial():
    solo = collide("mu", 8, jobs=1)
    multi = collide("mu", 8, jobs=2)
    assert solo.to_json_dict() == multi.to_json_dict()


def test_safety_bound_refusal():
    with pytest.raises(SearchBoundError) as err:
        collide("mu", 6, safety_bound=5)
    assert "safety bound" in str(err.value)
    # raising the bound permits the same search
    assert collide("mu", 6, safety_bound=6).words_searched == 2 ** 7 - 1


def test_collide_validates_arguments():
    with pytest.raises(ValueError):
        collide("x", 4)
    with pytest.raises(ValueError):
        collide("mu", -1)


def test_classify_can_be_skipped():
    report = collide("mu", 6, classify=False)
    assert report.classifications == []
    assert report.groups


def test_report_json_round_trip_polynomials():
    report = collide("mu", 6)
    data = report.to_json_dict()
    assert data["map"] == "mu"
    from qmarkoff.laurent import LaurentPoly

    for g_data, g in zip(data["groups"], report.groups):
        assert LaurentPoly.from_json_dict(g_data["polynomial"]) == g.polynomial


def test_christoffel_injectivity_small():
    report = christoffel_injectivity(12)
    assert report.ok
    assert report.word_count == len(christoffel_words(12))
    assert report.polynomials_distinct
    assert report.zeta6_values_distinct
    assert report.letter_counts_distinct
    # entries recover the words' polynomials
    assert report.m12_by_word["aabab"] == mu_q("aabab").m12
    # at q = 1 the values are Markoff numbers
    markoff = set(markoff_numbers_up_to(10 ** 12))
    assert {p.eval_at_one() for p in report.m12_by_word.values()} <= markoff


def test_injectivity_rejects_zero_length():
    with pytest.raises(ValueError):
        christoffel_injectivity(0)


def test_M_entries_invariant_under_trailing_a():
    for w in ("b", "ba", "ab", "bb", "bab"):
        assert M_q(w).m12 == M_q(w + "a").m12
