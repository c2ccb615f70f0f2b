"""Deterministic tokenizer, Penn-tag assignment, and rule lemmatizer.

No trained model is involved: tags come from a closed-class lexicon, a
capitalization rule informed by how the word is spelled elsewhere in the
same book, and suffix patterns. That keeps runs byte-reproducible and is
accurate where it matters here: separating nouns from everything else and
keeping proper names intact.
"""

from __future__ import annotations

import re
from typing import Iterator

# Words plus optional possessive (split off later), numbers, or a single
# non-space symbol.
_TOKEN = re.compile(r"[A-Za-z]+(?:['’][A-Za-z]+)*|\d+|[^\sA-Za-z0-9]")

_POSSESSIVE = re.compile(r"^([A-Za-z]+)(['’][sS])$")

SENTENCE_END = {".", "!", "?"}

_PUNCT_TAGS = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "-": ":", "–": ":", "—": ":",
    "(": "(", "[": "(", "{": "(",
    ")": ")", "]": ")", "}": ")",
    '"': "''", "'": "''", "‘": "``", "’": "''",
    "“": "``", "”": "''",
}

LEXICON: dict[str, str] = {}


def _enter(tag: str, words: str) -> None:
    for w in words.split():
        LEXICON[w] = tag


_enter("DT", "the a an this that these those each every either neither some any "
             "no all both such another")
_enter("IN", "of in on at by for with from into onto upon over under above below "
             "through across against between among during before after within "
             "without behind beyond near toward towards until since like unto "
             "amid amidst beneath beside besides despite except about around "
             "because while though although if unless whether as than per")
_enter("CC", "and or but nor yet so")
_enter("TO", "to")
_enter("PRP", "i you he she it we they me him her us them himself herself itself "
              "themselves myself yourself ourselves thee thou ye who whom one "
              "nothing something anything everything nobody somebody anybody "
              "everybody none")
_enter("PRP$", "my your his its our their mine thine thy hers theirs ours yours "
               "whose")
_enter("WRB", "when where why how")
_enter("WDT", "which what")
_enter("MD", "will would shall should can could may might must")
_enter("VB", "be do have go come make take give see know think tell get let put "
             "find leave bring begin speak stand hear call say ask seem feel "
             "keep hold turn run rise fall set lie grow draw bear send sit")
_enter("VBZ", "is has does says goes comes makes takes gives sees knows thinks "
              "tells gets lets puts finds leaves brings begins speaks stands "
              "hears calls asks seems feels keeps holds turns runs rises falls "
              "sets lies grows draws bears sends sits")
_enter("VBP", "am are")
_enter("VBD", "was were had did said went came made took gave saw knew thought "
              "told got found left brought began spoke stood heard felt kept "
              "held ran rose fell drew bore sent sat lay grew lit met shut froze "
              "broke wore tore swore")
_enter("VBN", "been done gone given seen known taken made said told found left "
              "brought begun spoken heard felt kept held run risen fallen drawn "
              "borne sent grown lain worn torn sworn broken")
_enter("NN", "evening morning")
_enter("VBG", "being having doing going")
_enter("RB", "not never also very too then now here there soon often again once "
             "twice always ever still just only even perhaps almost quite rather "
             "thus far long ago away back forth however therefore indeed yes")
_enter("RP", "up down out off")
_enter("JJ", "good great old little own other new big high small large young "
             "early few many much more most last next same first second third "
             "white black red dark deep fair dead whole full poor true strong "
             "certain icy asleep bare")
_enter("UH", "oh ah alas lo yea nay hail")
_enter("CD", "one two three four five six seven eight nine ten eleven twelve "
             "twenty thirty forty fifty hundred thousand")
_enter("MD", "don't won't can't couldn't shouldn't wouldn't mustn't shan't")
_enter("VBD", "wasn't weren't didn't hadn't")
_enter("VBZ", "isn't doesn't hasn't")
_enter("VBP", "aren't haven't")

_NOUN_SUFFIXES = ("tion", "sion", "ment", "ness", "ity", "ship", "dom", "hood",
                  "ism", "ance", "ence", "age", "ery", "ure")
_ADJ_SUFFIXES = ("ous", "ful", "ive", "able", "ible", "ish", "less")

_IRREGULAR_PLURALS = {
    "men": "man", "women": "woman", "children": "child", "feet": "foot",
    "teeth": "tooth", "geese": "goose", "mice": "mouse", "oxen": "ox",
    "brethren": "brother", "kine": "cow",
}

# -ves plurals whose singular ends in fe rather than f.
_FE_PLURALS = {"knives", "wives", "lives"}

_PLURAL_STOP = ("ss", "us", "is")


def tokenize(text: str) -> Iterator[str]:
    """Token surfaces in reading order; possessive 's split into its own token."""
    for match in _TOKEN.finditer(text):
        token = match.group()
        possessive = _POSSESSIVE.match(token)
        if possessive:
            yield possessive.group(1)
            yield possessive.group(2)
        else:
            yield token


def _suffix_tag(lower: str) -> str:
    if lower.endswith("ly") and len(lower) > 3:
        return "RB"
    if lower.endswith("ing") and len(lower) > 4:
        return "VBG"
    if lower.endswith("ed") and len(lower) > 3:
        return "VBD"
    for suffix in _NOUN_SUFFIXES:
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            return "NN"
    for suffix in _ADJ_SUFFIXES:
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            return "JJ"
    if lower.endswith("men") and len(lower) > 4:
        return "NNS"
    if (lower.endswith("s") and len(lower) > 3
            and not lower.endswith(_PLURAL_STOP)):
        return "NNS"
    return "NN"


def tag_token(surface: str, sentence_initial: bool, lower_spellings: set[str]) -> str:
    """Penn tag for one surface form.

    ``lower_spellings`` holds every spelling that occurs lowercased
    somewhere in the book; a capitalized sentence opener found there is
    treated as the ordinary word, otherwise as a proper noun.
    """
    if not any(c.isalnum() for c in surface):
        return _PUNCT_TAGS.get(surface, "SYM")
    if surface[0].isdigit():
        return "CD"
    if surface.lower() in ("'s", "’s"):
        return "POS"
    lower = surface.lower()
    if ("'" in surface or "’" in surface) and lower not in LEXICON:
        # Unrecognised contraction; whatever it is, it is not a noun.
        return "MD"
    if surface[0].isupper():
        if not sentence_initial:
            return "NNP"
        if lower not in lower_spellings and lower not in LEXICON:
            return "NNP"
    if lower in LEXICON:
        return LEXICON[lower]
    return _suffix_tag(lower)


def singularize(lower: str) -> str:
    """Singular form of a plural noun, by table and rule."""
    if lower in _IRREGULAR_PLURALS:
        return _IRREGULAR_PLURALS[lower]
    if lower.endswith("men") and len(lower) > 4:
        return lower[:-3] + "man"
    if lower in _FE_PLURALS:
        return lower[:-3] + "fe"
    if lower.endswith("ies") and len(lower) > 4:
        return lower[:-3] + "y"
    if lower.endswith("ves") and len(lower) > 4:
        return lower[:-3] + "f"
    if lower.endswith(("xes", "ses", "zes", "ches", "shes")):
        return lower[:-2]
    if lower.endswith("oes") and len(lower) > 4:
        return lower[:-2]
    if lower.endswith("s") and len(lower) > 3 and not lower.endswith(_PLURAL_STOP):
        return lower[:-1]
    return lower


def _verb_stem(stem: str) -> str:
    """Tidy a verb stem after the ending is gone: undouble, i->y, v->ve."""
    if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in "aeiouls":
        return stem[:-1]
    if stem.endswith("i"):
        return stem[:-1] + "y"
    if stem.endswith("v"):
        return stem + "e"
    return stem


def lemmatize(surface: str, tag: str) -> str:
    """Lowercased lemma; plural nouns singularized, verb endings stripped."""
    lower = surface.lower()
    if tag in ("NNS", "NNPS"):
        return singularize(lower)
    if tag == "VBG" and lower.endswith("ing") and len(lower) > 4:
        return _verb_stem(lower[:-3])
    if tag in ("VBD", "VBN") and lower.endswith("ed") and len(lower) > 3:
        return _verb_stem(lower[:-2])
    # Non-noun lemmas are best effort; downstream analysis keeps nouns only.
    return lower
