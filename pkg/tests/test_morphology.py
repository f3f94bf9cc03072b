"""Inflection and lemmatization unit tests.

Expected forms are frozen literals computed by hand from standard English
morphology, not read back from the implementation.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clozecraft import morphology as m

VERB_TAGS = ("VB", "VBP", "VBZ", "VBG", "VBD", "VBN")


@pytest.mark.parametrize("lemma,tag,expected", [
    ("live", "VBZ", ("lives",)),
    ("live", "VBG", ("living",)),
    ("live", "VBD", ("lived",)),
    ("carry", "VBZ", ("carries",)),
    ("carry", "VBD", ("carried",)),
    ("stop", "VBG", ("stopping",)),
    ("stop", "VBD", ("stopped",)),
    ("go", "VBZ", ("goes",)),
    ("go", "VBD", ("went",)),
    ("go", "VBN", ("gone",)),
    ("take", "VBD", ("took",)),
    ("take", "VBN", ("taken",)),
    ("see", "VBG", ("seeing",)),
    ("agree", "VBG", ("agreeing",)),
    ("make", "VBG", ("making",)),
])
def test_verb_inflections(lemma, tag, expected):
    assert m.verb_inflections(lemma, tag) == expected


def test_be_has_distinct_finite_forms():
    assert set(m.verb_inflections("be", "VBD")) == {"was", "were"}
    assert m.verb_inflections("be", "VBZ") == ("is",)
    assert m.verb_inflections("be", "VBN") == ("been",)


@pytest.mark.parametrize("noun,plural", [
    ("dog", "dogs"),
    ("box", "boxes"),
    ("city", "cities"),
    ("key", "keys"),
    ("child", "children"),
    ("person", "people"),
    ("leaf", "leaves"),
    ("hero", "heroes"),
    ("toe", "toes"),
    ("shoe", "shoes"),
    ("canoe", "canoes"),
])
def test_pluralize(noun, plural):
    assert m.pluralize(noun) == plural
    assert m.singularize(plural) == noun


@pytest.mark.parametrize("surface,tag,lemma", [
    ("lived", "VBD", "live"),
    ("went", "VBD", "go"),
    ("taken", "VBN", "take"),
    ("carries", "VBZ", "carry"),
    ("running", "VBG", "run"),
    ("children", "NNS", "child"),
    ("cities", "NNS", "city"),
    ("theater", "NN", "theater"),
    ("was", "VBD", "be"),
])
def test_lemmatize(surface, tag, lemma):
    assert m.lemmatize(surface, tag) == lemma


def test_inflect_full_paradigm_dedupes_to_expected_set():
    forms = set()
    for tag in VERB_TAGS:
        forms.update(m.inflect("live", tag))
    assert forms == {"live", "lives", "living", "lived"}


def test_inflect_rejects_non_words():
    assert m.inflect("", "VB") == ()
    assert m.inflect("3.14", "NN") == ()
    assert m.inflect("word", "JJ") == ()


@given(st.sampled_from(sorted(m.IRREGULAR_VERBS)))
def test_irregular_past_round_trips_to_lemma(lemma):
    for form in m.verb_inflections(lemma, "VBD"):
        assert m.verb_lemma(form, "VBD") == lemma


# Endings where two stems share one plural shape (die/dy -> dies,
# gas/gase -> gases, toe/to -> toes): no string-level inverse exists,
# dictionaries decide.
AMBIGUOUS_ENDINGS = ("ie", "oe", "s", "x", "z", "ch", "sh")


@given(st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=3, max_size=10))
def test_regular_plural_round_trip(stem):
    plural = m.pluralize(stem)
    if (stem not in m.IRREGULAR_PLURALS and plural != stem
            and plural not in set(m.IRREGULAR_PLURALS.values())
            and not stem.endswith(AMBIGUOUS_ENDINGS)):
        assert m.singularize(plural) == stem


def test_dictionary_disambiguated_plurals():
    assert m.singularize("movies") == "movie"
    assert m.singularize("ties") == "tie"
    assert m.singularize("stories") == "story"
    assert m.singularize("gases") == "gas"
    assert m.singularize("horses") == "horse"
    assert m.singularize("vases") == "vase"
