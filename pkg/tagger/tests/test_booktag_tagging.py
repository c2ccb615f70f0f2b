"""Unit tests for the tokenizer, tag rules, and lemmatizer."""

from booktag import lemmatize, singularize, tag_token, tokenize
from booktag.pipeline import tag_chapter


def toks(text):
    return list(tokenize(text))


class TestTokenize:
    def test_splits_punctuation_from_words(self):
        assert toks('He said, "Go!"') == ["He", "said", ",", '"', "Go", "!", '"']

    def test_keeps_contractions_whole(self):
        assert toks("don't isn't") == ["don't", "isn't"]

    def test_splits_possessive_marker(self):
        assert toks("Maren's lamp") == ["Maren", "'s", "lamp"]

    def test_splits_unicode_possessive(self):
        assert toks("Maren’s lamp") == ["Maren", "’s", "lamp"]

    def test_hyphen_is_its_own_token(self):
        assert toks("sea-worn") == ["sea", "-", "worn"]

    def test_numbers_survive(self):
        assert toks("chapter 42 ends") == ["chapter", "42", "ends"]


class TestTagToken:
    def test_sentence_initial_name_is_proper(self):
        assert tag_token("Zeus", True, {"thundered"}) == "NNP"

    def test_mid_sentence_capital_is_proper(self):
        # Even a word seen lowercase elsewhere: capitals mid-sentence
        # mark names.
        assert tag_token("Storm", False, {"storm"}) == "NNP"

    def test_sentence_initial_known_spelling_is_ordinary(self):
        assert tag_token("Storm", True, {"storm"}) == "NN"

    def test_sentence_initial_function_word_stays_function_word(self):
        # "The" rarely occurs lowercase at all; the lexicon must win.
        assert tag_token("The", True, set()) == "DT"

    def test_lexicon_hits(self):
        assert tag_token("the", False, set()) == "DT"
        assert tag_token("and", False, set()) == "CC"
        assert tag_token("was", False, set()) == "VBD"
        assert tag_token("three", False, set()) == "CD"
        assert tag_token("broke", False, set()) == "VBD"

    def test_digit_token_is_cardinal(self):
        assert tag_token("42", False, set()) == "CD"

    def test_possessive_marker(self):
        assert tag_token("'s", False, set()) == "POS"
        assert tag_token("’s", False, set()) == "POS"

    def test_known_contraction_uses_lexicon(self):
        assert tag_token("isn't", False, set()) == "VBZ"

    def test_unknown_contraction_never_a_noun(self):
        assert tag_token("tisn't", False, set()) == "MD"

    def test_punctuation_tags(self):
        assert tag_token(".", False, set()) == "."
        assert tag_token(";", False, set()) == ":"
        assert tag_token('"', False, set()) == "''"
        assert tag_token("“", False, set()) == "``"
        assert tag_token("&", False, set()) == "SYM"

    def test_suffix_fallbacks(self):
        assert tag_token("slowly", False, set()) == "RB"
        assert tag_token("sailing", False, set()) == "VBG"
        assert tag_token("walked", False, set()) == "VBD"
        assert tag_token("kindness", False, set()) == "NN"
        assert tag_token("glorious", False, set()) == "JJ"
        assert tag_token("fishermen", False, set()) == "NNS"
        assert tag_token("stones", False, set()) == "NNS"

    def test_ss_words_are_not_plural(self):
        assert tag_token("glass", False, set()) == "NN"

    def test_bare_unknown_word_defaults_to_noun(self):
        assert tag_token("fjord", False, set()) == "NN"


class TestSingularize:
    def test_irregular_table(self):
        assert singularize("men") == "man"
        assert singularize("women") == "woman"
        assert singularize("children") == "child"

    def test_compound_men(self):
        assert singularize("fishermen") == "fisherman"

    def test_fe_plurals(self):
        assert singularize("knives") == "knife"
        assert singularize("wives") == "wife"

    def test_rule_endings(self):
        assert singularize("ponies") == "pony"
        assert singularize("wolves") == "wolf"
        assert singularize("boxes") == "box"
        assert singularize("churches") == "church"
        assert singularize("heroes") == "hero"
        assert singularize("stones") == "stone"


class TestLemmatize:
    def test_plural_noun(self):
        assert lemmatize("Stones", "NNS") == "stone"

    def test_gerund_undoubles(self):
        assert lemmatize("running", "VBG") == "run"

    def test_past_restores_y(self):
        assert lemmatize("carried", "VBD") == "carry"

    def test_past_restores_final_e_after_v(self):
        assert lemmatize("saved", "VBD") == "save"

    def test_plain_past(self):
        assert lemmatize("walked", "VBD") == "walk"

    def test_proper_noun_just_lowercases(self):
        assert lemmatize("Maren", "NNP") == "maren"

    def test_default_lowercases(self):
        assert lemmatize("The", "DT") == "the"


def test_zeus_sentence_rows():
    rows = tag_chapter("Zeus thundered.", {"thundered"})
    assert rows == [
        ("Zeus", "NNP", "zeus"),
        ("thundered", "VBD", "thunder"),
        (".", ".", "."),
    ]


def test_sentence_flag_resets_after_full_stop():
    # "Waves" opens the second sentence; "waves" is seen lowercase, so it
    # reads as the common noun there, while mid-sentence "Kraken" does not.
    rows = tag_chapter("The waves met the Kraken. Waves broke.",
                       {"the", "waves", "met", "broke"})
    tags = {surface: tag for surface, tag, _ in rows}
    assert tags["Kraken"] == "NNP"
    assert tags["Waves"] == "NNS"


def test_quotes_do_not_consume_sentence_start():
    # An opening quote precedes the first word; the word after it still
    # counts as sentence-initial.
    rows = tag_chapter('"Storm coming," she said.',
                       {"storm", "coming", "she", "said"})
    assert rows[1] == ("Storm", "NN", "storm")
