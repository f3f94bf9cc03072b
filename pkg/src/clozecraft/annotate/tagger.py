"""Lexicon- and rule-based POS tagging for one sentence at a time.

Produces Penn fine tags plus universal coarse tags. A context-free base
pass assigns tags from closed-class lists, irregular-form maps, the open
lexicon, and suffix shape; a second pass applies contextual rules for the
classic ambiguities (to, that, there, so, yet, what/which, prepositions vs
subordinators, noun/verb homographs). Accuracy targets high-frequency
written English; it is an in-process substitute for a statistical tagger
behind the same annotator interface.
"""

from __future__ import annotations

import re

from .. import lexicon as lx
from .. import morphology as morph

_NUMBER_RE = re.compile(r"^\d+(?:[.,]\d+)*(?:st|nd|rd|th)?$")

_FINITE = {"VBZ", "VBP", "VBD", "MD"}
_NOUNISH = {"NN", "NNS", "NNP", "NNPS"}
_VERBISH = {"VB", "VBZ", "VBP", "VBD", "VBG", "VBN", "MD"}

_NOUN_SUFFIXES = ("tion", "sion", "ment", "ness", "ity", "ance", "ence",
                  "ship", "hood", "ism", "ist", "age", "ture", "dom", "cy")
_ADJ_SUFFIXES = ("ous", "ful", "less", "ive", "able", "ible", "ish",
                 "ary", "ical", "ial", "ant", "ent")

_BE = {"be": "VB", "am": "VBP", "are": "VBP", "is": "VBZ", "was": "VBD",
       "were": "VBD", "been": "VBN", "being": "VBG"}
_HAVE = {"have": "VBP", "has": "VBZ", "had": "VBD", "having": "VBG"}
_DO = {"do": "VBP", "does": "VBZ", "did": "VBD", "done": "VBN", "doing": "VBG"}

_PENN_TO_COARSE = {
    "NN": "NOUN", "NNS": "NOUN", "NNP": "PROPN", "NNPS": "PROPN",
    "VB": "VERB", "VBD": "VERB", "VBG": "VERB", "VBN": "VERB",
    "VBP": "VERB", "VBZ": "VERB",
    "MD": "AUX", "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV", "WRB": "ADV",
    "DT": "DET", "PDT": "DET", "IN": "ADP", "TO": "PART", "CC": "CCONJ",
    "PRP": "PRON", "PRP$": "PRON", "WP": "PRON", "WP$": "PRON",
    "WDT": "PRON", "EX": "PRON", "CD": "NUM", "UH": "INTJ", "POS": "PART",
    "FW": "X", "SYM": "SYM", "$": "SYM",
}


class _Tok:
    __slots__ = ("surface", "lower", "fine", "coarse", "classes")

    def __init__(self, surface):
        self.surface = surface
        self.lower = surface.lower().replace("’", "'")
        self.fine = ""
        self.coarse = ""          # set when a rule pins the coarse tag
        self.classes = ""         # open-class ambiguity string, e.g. "NV"


def _is_punct(surface: str) -> bool:
    return all(not ch.isalnum() for ch in surface)


def _base_tag(t: _Tok, sentence_initial: bool) -> None:
    w = t.lower
    if _is_punct(t.surface):
        t.fine = lx.PUNCT_TAGS.get(t.surface, lx.PUNCT_TAGS.get(w, "SYM"))
        t.coarse = "PUNCT" if t.fine not in ("$", "SYM") else "SYM"
        return
    if _NUMBER_RE.match(w) or w in lx.NUMBER_WORDS:
        t.fine = "CD"
        return
    if w == "n't" or w == "not":
        t.fine, t.coarse = "RB", "PART"
        return
    if w in ("'s", "'re", "'m", "'ve", "'ll", "'d"):
        t.fine = {"'s": "POS", "'re": "VBP", "'m": "VBP", "'ve": "VB",
                  "'ll": "MD", "'d": "MD"}[w]
        return
    if w in _BE:
        t.fine, t.coarse = _BE[w], "AUX"
        return
    if w in _HAVE:
        t.fine = _HAVE[w]
        return
    if w in _DO:
        t.fine = _DO[w]
        return
    if w in lx.MODALS:
        t.fine = "MD"
        return
    if w in lx.POSSESSIVE_DETERMINERS:
        t.fine = "PRP$"
        return
    if w in lx.REFLEXIVE_PRONOUNS or w in lx.PERSONAL_PRONOUNS:
        t.fine = "PRP"
        return
    if w in lx.INDEFINITE_NOMINAL:
        t.fine, t.coarse = "NN", "PRON"
        return
    if w in lx.INDEFINITE_LOCATIVE:
        t.fine, t.coarse = "RB", "ADV"
        return
    if w in ("who", "whom", "whoever", "whomever"):
        t.fine = "WP"
        return
    if w in lx.WH_POSSESSIVE:
        t.fine = "WP$"
        return
    if w in ("what", "which", "whatever", "whichever"):
        t.fine = "WDT"  # det vs pronoun resolved in context
        return
    if w in ("when", "where", "why", "how", "whenever", "wherever", "however"):
        t.fine = "WRB"
        return
    if w == "there":
        t.fine = "EX"  # context rule may turn it into RB
        return
    if w in ("and", "or", "but", "nor", "plus"):
        t.fine = "CC"
        return
    if w in ("yet", "so"):
        t.fine = "RB"  # context rule may promote to CC
        t.classes = "cc?"
        return
    if w in lx.DETERMINERS:
        if w in lx.QUANTIFIER_JJ:
            t.fine = "JJ"
        else:
            t.fine = "DT"
        return
    if w == "that":
        t.fine = "IN"  # resolved in context: IN / DT / WDT
        t.classes = "that"
        return
    if w in lx.SUBORDINATORS or w in lx.PREPOSITIONS:
        t.fine = "TO" if w == "to" else "IN"
        return
    if w in lx.COMMON_ADVERBS:
        t.fine = "RB"
        return
    if w in lx.INTERJECTIONS:
        t.fine = "UH"
        return
    _open_class_tag(t, sentence_initial)


def _open_class_tag(t: _Tok, sentence_initial: bool) -> None:
    w = t.lower
    capitalized = t.surface[:1].isupper() and not sentence_initial
    if capitalized:
        t.fine = "NNPS" if (w.endswith("s") and not w.endswith("ss") and len(w) > 4) else "NNP"
        return
    # past readings of irregulars beat homograph lemmas (found, saw, left)
    past_lemma = morph.IRREGULAR_PAST_TO_LEMMA.get(w)
    if past_lemma and past_lemma != w:
        t.fine = "VBD"
        t.classes = lx.OPEN_CLASS.get(w, "")
        return
    cls = lx.OPEN_CLASS.get(w)
    if cls:
        t.classes = cls
        t.fine = {"N": "NN", "V": "VB", "J": "JJ", "R": "RB"}[cls[0]]
        return
    if w.endswith("ing") and w in lx.ING_NOUNS:
        t.fine = "NN"
        return
    # inflected irregulars
    if w in morph.IRREGULAR_PAST_TO_LEMMA:
        t.fine = "VBD"
        return
    if w in morph.IRREGULAR_PART_TO_LEMMA:
        t.fine = "VBN"
        return
    if w in morph.IRREGULAR_PLURAL_TO_SINGULAR:
        t.fine = "NNS"
        return
    # morphological shape
    if w.endswith("ly") and len(w) > 4:
        t.fine = "RB"
        return
    if w.endswith("ing") and len(w) > 4:
        stem = morph._strip_ing(w)
        t.fine = "VBG" if stem in lx.KNOWN_VERB_LEMMAS else "NN"
        if stem in lx.KNOWN_VERB_LEMMAS:
            t.classes = "ing"
        return
    if w.endswith("ed") and len(w) > 3:
        t.fine = "VBD"
        t.classes = "ed"
        return
    if w.endswith("est") and len(w) > 4 and w[:-3] in lx.OPEN_CLASS and "J" in lx.OPEN_CLASS[w[:-3]]:
        t.fine = "JJS"
        return
    if w.endswith("er") and len(w) > 3 and w[:-2] in lx.OPEN_CLASS and "J" in lx.OPEN_CLASS[w[:-2]]:
        t.fine = "JJR"
        return
    for suf in _NOUN_SUFFIXES:
        if w.endswith(suf):
            t.fine = "NN"
            return
        if w.endswith(suf + "s"):
            t.fine = "NNS"
            return
    for suf in _ADJ_SUFFIXES:
        if w.endswith(suf):
            t.fine = "JJ"
            return
    if w.endswith("ize") or w.endswith("ify"):
        t.fine = "VB"
        t.classes = "V"
        return
    if w.endswith("s") and not w.endswith("ss"):
        stem = morph._strip_s(w)
        stem_cls = lx.OPEN_CLASS.get(stem, "")
        if stem_cls == "V":
            t.fine = "VBZ"
        elif "N" in stem_cls and "V" in stem_cls:
            t.fine = "NNS"
            t.classes = "s-amb"
        else:
            t.fine = "NNS"
        return
    t.fine = "NN"


def _next_word(toks: list[_Tok], i: int) -> int:
    j = i + 1
    while j < len(toks) and toks[j].coarse == "PUNCT":
        j += 1
    return j if j < len(toks) else -1


def _clause_has_finite_verb(toks: list[_Tok], start: int, horizon: int = 9) -> bool:
    """Scan forward for a finite verb before clause-final punctuation."""
    seen = 0
    for j in range(start, len(toks)):
        if seen >= horizon:
            break
        t = toks[j]
        if t.fine in (",", ".", ":", ";"):
            break
        if t.fine in _FINITE or (t.fine == "VB" and j > start):
            return True
        seen += 1
    return False


def _nounish_ahead(toks: list[_Tok], i: int, max_skip: int = 2) -> bool:
    """True if a noun phrase head plausibly starts at i (JJ*/CD* then noun)."""
    j, skipped = i, 0
    while j < len(toks) and skipped <= max_skip:
        tag = toks[j].fine
        if tag in _NOUNISH:
            return True
        if tag in ("JJ", "JJR", "JJS", "CD", "RB"):
            j += 1
            skipped += 1
            continue
        return False
    return False


def _contextual_rules(toks: list[_Tok]) -> None:
    n = len(toks)
    for i, t in enumerate(toks):
        w = t.lower
        prev = toks[i - 1] if i > 0 else None
        nxt_i = _next_word(toks, i)
        nxt = toks[nxt_i] if nxt_i >= 0 else None

        if t.fine == "TO":
            verb_soon = False
            if nxt is not None:
                if nxt.fine in ("VB", "VBP") or "V" in lx.OPEN_CLASS.get(nxt.lower, ""):
                    verb_soon = True
                elif nxt.fine == "RB" and nxt_i + 1 < n and toks[nxt_i + 1].fine in ("VB", "VBP"):
                    verb_soon = True
            if verb_soon:
                t.fine, t.coarse = "TO", "PART"
            else:
                t.fine, t.coarse = "IN", "ADP"
            continue

        if t.classes == "that":
            _resolve_that(toks, i, t, prev, nxt)
            continue

        if t.fine == "EX":
            is_existential = False
            if nxt is not None:
                if nxt.lower in _BE or nxt.lower in lx.MODALS or nxt.lower in ("'s", "'ll"):
                    is_existential = True
                elif nxt.fine == "RB" and nxt_i + 1 < n and toks[nxt_i + 1].lower in _BE:
                    is_existential = True
            if is_existential:
                t.fine, t.coarse = "EX", "PRON"
            else:
                t.fine, t.coarse = "RB", "ADV"
            continue

        if t.classes == "cc?":  # so / yet
            clause_start = prev is None or prev.fine in (",", ":", ";", "CC")
            if w == "so":
                if nxt is not None and nxt.fine in ("JJ", "RB"):
                    t.fine, t.coarse = "RB", "ADV"
                elif clause_start and nxt is not None:
                    t.fine, t.coarse = "CC", "CCONJ"
                else:
                    t.fine, t.coarse = "RB", "ADV"
            else:  # yet
                if clause_start and nxt is not None and _clause_has_finite_verb(toks, i + 1):
                    t.fine, t.coarse = "CC", "CCONJ"
                else:
                    t.fine, t.coarse = "RB", "ADV"
            continue

        if t.fine == "WDT" and w in ("what", "which", "whatever", "whichever"):
            if nxt is not None and (nxt.fine in _NOUNISH or _nounish_ahead(toks, nxt_i)):
                t.fine, t.coarse = "WDT", "DET"
            else:
                t.fine, t.coarse = "WDT" if (prev and prev.fine in _NOUNISH) else "WP", "PRON"
            continue

        if t.fine == "IN":
            _resolve_preposition(toks, i, t, nxt)
            continue

        if t.fine == "WRB" and w in ("when", "whenever"):
            if _clause_has_finite_verb(toks, i + 1):
                t.coarse = "SCONJ"
            else:
                t.coarse = "ADV"
            continue

        if t.fine == "POS" and w == "'s":
            if prev is not None and prev.fine in ("PRP", "EX", "WP", "NNP", "NN", "NNS", "NNPS"):
                # it's/there's/John's: possessive after nouns, clitic be after pronouns
                if prev.fine in ("PRP", "EX", "WP"):
                    t.fine, t.coarse = "VBZ", "AUX"
            continue

        if t.fine == "MD" and w == "'d":
            if nxt is not None and nxt.fine == "VBN":
                t.fine, t.coarse = "VBD", "AUX"  # he'd gone
            continue

    # second sweep: noun/verb homographs and participle adjustments
    for i, t in enumerate(toks):
        prev = toks[i - 1] if i > 0 else None
        prev_w = prev.lower if prev is not None else ""
        nxt_i = _next_word(toks, i)
        nxt = toks[nxt_i] if nxt_i >= 0 else None

        if prev is not None and prev.fine in ("MD", "TO") and ("V" in t.classes or t.fine in ("VBP", "NN")):
            if "V" in t.classes or t.fine == "VBP":
                t.fine = "VB"
                t.classes = "V"
                continue

        if prev is not None and prev.lower in _BE and "J" in t.classes and t.fine != "VBG":
            t.fine = "JJ"  # predicative: it was close
            continue

        if (t.fine in ("VB", "VBP") and t.lower in morph.IRREGULAR_PART_TO_LEMMA
                and prev is not None
                and (prev.lower in _HAVE or prev.lower == "'ve"
                     or (prev.lower == "'s" and prev.fine == "VBZ"))):
            t.fine = "VBN"  # invariant participles: has read, have put
            continue

        if "N" in t.classes and "V" in t.classes:
            if prev is not None and prev.fine in ("DT", "PRP$", "JJ", "CD", "POS", "WP$"):
                t.fine = "NN"
            elif prev is not None and (prev.fine == "PRP" and prev_w in lx.SUBJECT_PRONOUNS
                                       or prev.fine in ("NNS", "WDT", "WP")):
                t.fine = "VBP" if prev_w not in ("he", "she", "it") else "VB"
            continue

        if t.classes == "s-amb":
            if prev is not None and prev.fine in ("DT", "PRP$", "JJ", "CD", "POS"):
                t.fine = "NNS"
            elif prev is not None and (prev.fine in ("NN", "NNP", "PRP", "EX")
                                       and prev_w not in ("i", "you", "we", "they")):
                t.fine = "VBZ"
            continue

        if t.classes == "ed" or t.fine in ("VBD", "VBN"):
            if prev is not None:
                if prev.lower in _BE or prev.lower in _HAVE or prev.fine == "VBZ" and prev.lower == "'s":
                    t.fine = "VBN"
                elif prev.fine in ("DT", "PRP$", "JJ") and nxt is not None and nxt.fine in _NOUNISH:
                    t.fine = "JJ"  # the painted wall
            continue

        if t.fine == "VB":
            if prev is not None and prev.fine in ("MD", "TO"):
                continue
            if (prev is not None and prev.fine == "RB" and i >= 2
                    and toks[i - 2].fine in ("MD", "TO")):
                continue  # to really work
            if prev is not None and prev.fine in ("DT", "PRP$", "JJ", "CD") and "N" in t.classes:
                t.fine = "NN"
            else:
                t.fine = "VBP"  # finite present outside modal/infinitive contexts


def _resolve_that(toks, i, t, prev, nxt):
    n = len(toks)
    if nxt is None:
        t.fine, t.coarse = "DT", "DET"  # "like that."
        return
    if nxt.fine in ("DT", "PRP", "PRP$", "EX", "NNP"):
        t.fine, t.coarse = "IN", "SCONJ"
        return
    if nxt.fine in _NOUNISH or nxt.fine in ("JJ", "CD"):
        # skip the noun phrase, then look for a verb
        j = i + 1
        np_tags = {"JJ", "JJR", "JJS", "CD", "RB"} | _NOUNISH
        while j < n and toks[j].fine in np_tags:
            j += 1
        if j < n and toks[j].fine in _VERBISH and toks[j].coarse != "PUNCT":
            t.fine, t.coarse = "IN", "SCONJ"
        else:
            t.fine, t.coarse = "DT", "DET"
        return
    if nxt.fine in _VERBISH or nxt.lower in _BE:
        if prev is not None and prev.fine in _NOUNISH:
            t.fine, t.coarse = "WDT", "PRON"  # the dog that barked
        else:
            t.fine, t.coarse = "IN", "SCONJ"
        return
    t.fine, t.coarse = "DT", "DET"


# subordinator/preposition homographs resolved by clause lookahead
_DUAL_SUB_PREP = {"after", "before", "until", "since", "as", "than", "once"}
_PURE_SUB = {"because", "although", "though", "unless", "while", "whereas",
             "if", "whether"}


def _resolve_preposition(toks, i, t, nxt):
    w = t.lower
    if w in _PURE_SUB:
        t.coarse = "SCONJ"
        return
    if w in _DUAL_SUB_PREP:
        if w == "as" and nxt is not None and nxt.fine in ("JJ", "RB", "JJR"):
            t.fine, t.coarse = "RB", "ADV"  # as big as
            return
        if w == "once" and not _clause_has_finite_verb(toks, i + 1):
            t.fine, t.coarse = "RB", "ADV"
            return
        if _clause_has_finite_verb(toks, i + 1):
            t.coarse = "SCONJ"
        else:
            t.coarse = "ADP"
        return
    t.coarse = "ADP"


def _finalize_coarse(toks: list[_Tok]) -> None:
    for i, t in enumerate(toks):
        if t.coarse:
            continue
        w = t.lower
        if w in _BE:
            t.coarse = "AUX"
        elif w in _HAVE:
            nxt = _next_word(toks, i)
            has_participle = False
            for j in range(i + 1, min(i + 4, len(toks))):
                if toks[j].fine == "VBN":
                    has_participle = True
                    break
                if toks[j].coarse == "PUNCT" or toks[j].fine in _NOUNISH:
                    break
            t.coarse = "AUX" if has_participle else "VERB"
        elif w in _DO:
            aux = False
            for j in range(i + 1, min(i + 5, len(toks))):
                if toks[j].fine == "VB":
                    aux = True
                    break
                if toks[j].coarse == "PUNCT":
                    break
            if not aux and i + 1 < len(toks) and toks[i + 1].lower in ("n't", "not"):
                aux = True
            t.coarse = "AUX" if aux else "VERB"
        else:
            t.coarse = _PENN_TO_COARSE.get(t.fine, "X")


def _lemma_for(t: _Tok) -> str:
    if t.coarse == "PUNCT":
        return t.surface
    if t.fine.startswith("V") or t.fine == "MD":
        return morph.lemmatize(t.lower, t.fine if t.fine.startswith("V") else "MD")
    return morph.lemmatize(t.surface, t.fine)


def _dep_labels(toks: list[_Tok]) -> list[str]:
    """Heuristic dependency labels; approximate by design."""
    n = len(toks)
    root = -1
    for i, t in enumerate(toks):
        if t.fine in _FINITE and t.coarse == "VERB":
            root = i
            break
    if root < 0:
        for i, t in enumerate(toks):
            if t.coarse in ("VERB", "AUX") and t.fine != "TO":
                root = i
                break
    if root < 0:
        root = 0

    labels = []
    last_adp = -10
    subject_seen = False
    for i, t in enumerate(toks):
        w = t.lower
        if i == root:
            labels.append("ROOT")
            continue
        if t.coarse == "PUNCT":
            labels.append("punct")
        elif t.fine == "EX":
            labels.append("expl")
        elif w in ("not", "n't"):
            labels.append("neg")
        elif t.fine in ("RB", "RBR", "RBS", "WRB") and t.coarse == "ADV":
            labels.append("advmod")
        elif t.fine == "DT":
            labels.append("det")
        elif t.fine in ("PRP$", "WP$"):
            labels.append("poss")
        elif t.fine == "POS":
            labels.append("case")
        elif t.fine == "CD":
            labels.append("nummod")
        elif t.fine == "CC":
            labels.append("cc")
        elif t.coarse == "SCONJ":
            labels.append("mark")
        elif t.coarse == "ADP":
            labels.append("prep")
            last_adp = i
        elif t.fine == "TO":
            labels.append("aux")
        elif t.coarse == "AUX":
            labels.append("aux")
        elif t.fine in ("JJ", "JJR", "JJS"):
            nxt = _next_word(toks, i)
            labels.append("amod" if nxt >= 0 and toks[nxt].fine in _NOUNISH else "acomp")
        elif t.fine in _NOUNISH or t.fine in ("PRP", "WP", "WDT") or t.coarse == "PRON":
            nxt = _next_word(toks, i)
            if 0 <= i - last_adp <= 3:
                labels.append("pobj")
            elif i < root and not subject_seen:
                labels.append("nsubj")
                subject_seen = True
            elif nxt >= 0 and toks[nxt].fine in _NOUNISH:
                labels.append("compound")
            elif i > root:
                labels.append("dobj")
            else:
                labels.append("dep")
        elif t.coarse == "VERB":
            labels.append("conj" if i > root else "dep")
        elif t.fine == "UH":
            labels.append("intj")
        else:
            labels.append("dep")
    return labels


def tag_sentence(surfaces: list[str]) -> list[tuple[str, str, str, str]]:
    """Tag one sentence's token surfaces.

    Returns (lemma, coarse_pos, fine_pos, dep_label) per token.
    """
    toks = [_Tok(s) for s in surfaces]
    for i, t in enumerate(toks):
        _base_tag(t, sentence_initial=(i == 0))
    _contextual_rules(toks)
    _finalize_coarse(toks)
    labels = _dep_labels(toks)
    return [(_lemma_for(t), t.coarse, t.fine, labels[i]) for i, t in enumerate(toks)]
