"""English inflection and lemmatization.

Rule-based with exception tables, in the spirit of classic inflection
libraries: regular suffix rules plus irregular verb/noun maps. Inflection
maps a lemma to the surface forms for a Penn tag; lemmatization goes the
other way. Both directions share the irregular tables so they stay
consistent with each other.
"""

from __future__ import annotations

import re

from .lexicon import KNOWN_NOUN_LEMMAS, KNOWN_VERB_LEMMAS

VOWELS = "aeiou"

# lemma -> (past, past participle); a "/" joins alternative forms.
IRREGULAR_VERBS = {
    "arise": ("arose", "arisen"), "awake": ("awoke", "awoken"),
    "bear": ("bore", "borne"), "beat": ("beat", "beaten"),
    "become": ("became", "become"), "begin": ("began", "begun"),
    "bend": ("bent", "bent"), "bet": ("bet", "bet"),
    "bind": ("bound", "bound"), "bite": ("bit", "bitten"),
    "bleed": ("bled", "bled"), "blow": ("blew", "blown"),
    "break": ("broke", "broken"), "breed": ("bred", "bred"),
    "bring": ("brought", "brought"), "broadcast": ("broadcast", "broadcast"),
    "build": ("built", "built"), "burn": ("burned/burnt", "burned/burnt"),
    "burst": ("burst", "burst"), "buy": ("bought", "bought"),
    "cast": ("cast", "cast"), "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"), "cling": ("clung", "clung"),
    "come": ("came", "come"), "cost": ("cost", "cost"),
    "creep": ("crept", "crept"), "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"), "dig": ("dug", "dug"),
    "dive": ("dived/dove", "dived"), "do": ("did", "done"),
    "draw": ("drew", "drawn"), "dream": ("dreamed/dreamt", "dreamed/dreamt"),
    "drink": ("drank", "drunk"), "drive": ("drove", "driven"),
    "eat": ("ate", "eaten"), "fall": ("fell", "fallen"),
    "feed": ("fed", "fed"), "feel": ("felt", "felt"),
    "fight": ("fought", "fought"), "find": ("found", "found"),
    "fit": ("fit/fitted", "fit/fitted"), "flee": ("fled", "fled"),
    "fling": ("flung", "flung"), "fly": ("flew", "flown"),
    "forbid": ("forbade", "forbidden"), "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"), "freeze": ("froze", "frozen"),
    "get": ("got", "gotten/got"), "give": ("gave", "given"),
    "go": ("went", "gone"), "grind": ("ground", "ground"),
    "grow": ("grew", "grown"), "hang": ("hung", "hung"),
    "have": ("had", "had"), "hear": ("heard", "heard"),
    "hide": ("hid", "hidden"), "hit": ("hit", "hit"),
    "hold": ("held", "held"), "hurt": ("hurt", "hurt"),
    "keep": ("kept", "kept"), "kneel": ("knelt", "knelt"),
    "knit": ("knitted/knit", "knitted/knit"), "know": ("knew", "known"),
    "lay": ("laid", "laid"), "lead": ("led", "led"),
    "lean": ("leaned", "leaned"), "leap": ("leaped/leapt", "leaped/leapt"),
    "learn": ("learned", "learned"), "leave": ("left", "left"),
    "lend": ("lent", "lent"), "let": ("let", "let"),
    "lie": ("lay/lied", "lain/lied"), "light": ("lit", "lit"),
    "lose": ("lost", "lost"), "make": ("made", "made"),
    "mean": ("meant", "meant"), "meet": ("met", "met"),
    "mow": ("mowed", "mown/mowed"), "pay": ("paid", "paid"),
    "prove": ("proved", "proven/proved"), "put": ("put", "put"),
    "quit": ("quit", "quit"), "read": ("read", "read"),
    "ride": ("rode", "ridden"), "ring": ("rang", "rung"),
    "rise": ("rose", "risen"), "run": ("ran", "run"),
    "saw": ("sawed", "sawn/sawed"), "say": ("said", "said"),
    "see": ("saw", "seen"), "seek": ("sought", "sought"),
    "sell": ("sold", "sold"), "send": ("sent", "sent"),
    "set": ("set", "set"), "sew": ("sewed", "sewn/sewed"),
    "shake": ("shook", "shaken"), "shear": ("sheared", "shorn/sheared"),
    "shed": ("shed", "shed"), "shine": ("shone", "shone"),
    "shoot": ("shot", "shot"), "show": ("showed", "shown/showed"),
    "shrink": ("shrank", "shrunk"), "shut": ("shut", "shut"),
    "sing": ("sang", "sung"), "sink": ("sank", "sunk"),
    "sit": ("sat", "sat"), "slay": ("slew", "slain"),
    "sleep": ("slept", "slept"), "slide": ("slid", "slid"),
    "sling": ("slung", "slung"), "smell": ("smelled", "smelled"),
    "sow": ("sowed", "sown/sowed"), "speak": ("spoke", "spoken"),
    "speed": ("sped", "sped"), "spell": ("spelled", "spelled"),
    "spend": ("spent", "spent"), "spill": ("spilled", "spilled"),
    "spin": ("spun", "spun"), "spit": ("spat", "spat"),
    "split": ("split", "split"), "spoil": ("spoiled", "spoiled"),
    "spread": ("spread", "spread"), "spring": ("sprang", "sprung"),
    "stand": ("stood", "stood"), "steal": ("stole", "stolen"),
    "stick": ("stuck", "stuck"), "sting": ("stung", "stung"),
    "stink": ("stank", "stunk"), "stride": ("strode", "stridden"),
    "strike": ("struck", "struck"), "string": ("strung", "strung"),
    "strive": ("strove", "striven"), "swear": ("swore", "sworn"),
    "sweep": ("swept", "swept"), "swell": ("swelled", "swollen/swelled"),
    "swim": ("swam", "swum"), "swing": ("swung", "swung"),
    "take": ("took", "taken"), "teach": ("taught", "taught"),
    "tear": ("tore", "torn"), "tell": ("told", "told"),
    "think": ("thought", "thought"), "throw": ("threw", "thrown"),
    "understand": ("understood", "understood"), "wake": ("woke", "woken"),
    "wear": ("wore", "worn"), "weave": ("wove", "woven"),
    "weep": ("wept", "wept"), "win": ("won", "won"),
    "wind": ("wound", "wound"), "withdraw": ("withdrew", "withdrawn"),
    "wring": ("wrung", "wrung"), "write": ("wrote", "written"),
}

# Fully suppletive paradigm.
BE_FORMS = {
    "VB": ("be",), "VBP": ("am", "are"), "VBZ": ("is",),
    "VBD": ("was", "were"), "VBG": ("being",), "VBN": ("been",),
}

IRREGULAR_VBZ = {"have": "has", "do": "does", "say": "says", "go": "goes"}

IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "person": "people",
    "foot": "feet", "tooth": "teeth", "goose": "geese", "mouse": "mice",
    "louse": "lice", "ox": "oxen", "die": "dice", "penny": "pennies",
    "analysis": "analyses", "basis": "bases", "crisis": "crises",
    "thesis": "theses", "hypothesis": "hypotheses", "oasis": "oases",
    "phenomenon": "phenomena", "criterion": "criteria", "datum": "data",
    "medium": "media", "curriculum": "curricula", "bacterium": "bacteria",
    "cactus": "cacti", "focus": "foci", "fungus": "fungi",
    "nucleus": "nuclei", "stimulus": "stimuli", "syllabus": "syllabi",
    "appendix": "appendices", "index": "indices", "matrix": "matrices",
    "vertex": "vertices", "axis": "axes",
}

INVARIANT_PLURALS = {
    "sheep", "deer", "fish", "species", "series", "aircraft", "means",
    "offspring", "salmon", "trout", "moose", "bison", "swine", "corps",
    "headquarters", "news", "mathematics", "physics", "economics",
}

# Nouns ending f/fe that take -ves.
F_TO_VES = {
    "leaf", "life", "wife", "knife", "wolf", "shelf", "calf", "half",
    "loaf", "thief", "elf", "self", "sheaf", "hoof", "scarf",
}

# Nouns ending in vowel+o that still take plain -s, or consonant+o taking -s.
O_PLAIN_S = {
    "photo", "piano", "halo", "solo", "memo", "kilo", "auto", "logo",
    "taco", "avocado", "radio", "studio", "video", "zoo", "bamboo",
    "shampoo", "tattoo", "stereo", "portfolio", "scenario", "ratio",
}

# Singulars ending -s whose plural takes -es and must not be confused with
# -se stems when singularizing.
S_STEM_PLURALS = {
    "buses": "bus", "gases": "gas", "lenses": "lens", "viruses": "virus",
    "campuses": "campus", "bonuses": "bonus", "censuses": "census",
    "circuses": "circus", "atlases": "atlas", "canvases": "canvas",
    "aliases": "alias", "irises": "iris", "walruses": "walrus",
    "choruses": "chorus", "statuses": "status", "sinuses": "sinus",
    "octopuses": "octopus", "crocuses": "crocus", "plusses": "plus",
}

# Polysyllabic verbs that double their final consonant before -ed/-ing.
FINAL_DOUBLING = {
    "begin", "occur", "refer", "prefer", "admit", "commit", "permit",
    "submit", "transmit", "omit", "regret", "forget", "upset", "control",
    "patrol", "propel", "compel", "expel", "repel", "equip", "kidnap",
    "unwrap", "outfit", "format", "handicap", "overlap", "confer", "defer",
    "deter", "infer", "incur", "concur", "recur", "excel", "rebel",
}

IRREGULAR_PAST_TO_LEMMA = {}
IRREGULAR_PART_TO_LEMMA = {}
for _lemma, (_past, _part) in IRREGULAR_VERBS.items():
    for f in _past.split("/"):
        IRREGULAR_PAST_TO_LEMMA.setdefault(f, _lemma)
    for f in _part.split("/"):
        IRREGULAR_PART_TO_LEMMA.setdefault(f, _lemma)

IRREGULAR_PLURAL_TO_SINGULAR = {v: k for k, v in IRREGULAR_PLURALS.items()}
VBZ_TO_LEMMA = {v: k for k, v in IRREGULAR_VBZ.items()}
BE_SURFACE = {f for forms in BE_FORMS.values() for f in forms}

_CONSONANT_Y = re.compile(r"[^aeiou]y$")
_SIBILANT = re.compile(r"(s|x|z|ch|sh)$")


def _ends_cvc(word: str) -> bool:
    """Consonant-vowel-consonant ending, final consonant not w/x/y."""
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    return a not in VOWELS and b in VOWELS and c not in VOWELS + "wxy"


def _doubles_final(word: str) -> bool:
    if not _ends_cvc(word):
        return False
    if word in FINAL_DOUBLING:
        return True
    # monosyllables (a single vowel cluster) double: stop -> stopped
    return len(re.findall(r"[aeiou]+", word)) == 1


def _add_s(word: str) -> str:
    if _SIBILANT.search(word):
        return word + "es"
    if _CONSONANT_Y.search(word):
        return word[:-1] + "ies"
    if word.endswith("o") and len(word) > 1 and word[-2] not in VOWELS and word not in O_PLAIN_S:
        return word + "es"
    return word + "s"


def _add_ing(word: str) -> str:
    if word.endswith("ie"):
        return word[:-2] + "ying"
    if word.endswith("e") and not word.endswith(("ee", "oe", "ye")):
        return word[:-1] + "ing"
    if _doubles_final(word):
        return word + word[-1] + "ing"
    return word + "ing"


def _add_ed(word: str) -> str:
    if word.endswith("e"):
        return word + "d"
    if _CONSONANT_Y.search(word):
        return word[:-1] + "ied"
    if _doubles_final(word):
        return word + word[-1] + "ed"
    return word + "ed"


def pluralize(noun: str) -> str:
    noun = noun.lower()
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun in INVARIANT_PLURALS:
        return noun
    if noun in F_TO_VES:
        if noun.endswith("fe"):
            return noun[:-2] + "ves"
        return noun[:-1] + "ves"
    return _add_s(noun)


#: -ies plurals whose stem ends in -ie rather than -y (dies/y is ambiguous
#: at the string level; these are the common -ie stems).
IE_STEM_PLURALS = {
    "dies": "die", "lies": "lie", "ties": "tie", "pies": "pie",
    "movies": "movie", "cookies": "cookie", "calories": "calorie",
    "genies": "genie", "collies": "collie",
}

# -oes plurals whose stem ends in -oe (vs. heroes -> hero, potatoes -> potato)
OE_STEM_PLURALS = {
    "toes": "toe", "shoes": "shoe", "foes": "foe", "woes": "woe",
    "hoes": "hoe", "roes": "roe", "throes": "throe", "oboes": "oboe",
    "canoes": "canoe", "aloes": "aloe", "does": "doe",
}


def singularize(noun: str) -> str:
    noun = noun.lower()
    if noun in IRREGULAR_PLURAL_TO_SINGULAR:
        return IRREGULAR_PLURAL_TO_SINGULAR[noun]
    if noun in INVARIANT_PLURALS:
        return noun
    if noun in IE_STEM_PLURALS:
        return IE_STEM_PLURALS[noun]
    if noun in OE_STEM_PLURALS:
        return OE_STEM_PLURALS[noun]
    if noun in S_STEM_PLURALS:
        return S_STEM_PLURALS[noun]
    if noun.endswith("ves"):
        stem = noun[:-3]
        if stem + "fe" in F_TO_VES:
            return stem + "fe"
        if stem + "f" in F_TO_VES:
            return stem + "f"
    if noun.endswith("ies") and len(noun) > 4:
        return noun[:-3] + "y"
    if noun.endswith("es"):
        bare = noun[:-1]  # e.g. houses -> house
        if bare.endswith("e") and not re.search(r"(ss|ch|sh|x|z)e$", bare):
            # -se/-ge/-ce stems: horses, pages, places
            if re.search(r"[scgzxv]e$", bare) or bare.endswith("use"):
                return bare
        if re.search(r"(s|x|z|ch|sh)es$", noun):
            return noun[:-2]
        if noun.endswith("oes"):
            return noun[:-2]
        return noun[:-1]
    if noun.endswith("s") and not noun.endswith("ss"):
        return noun[:-1]
    return noun


def verb_inflections(lemma: str, tag: str) -> tuple[str, ...]:
    """Surface forms of ``lemma`` for one of VB/VBP/VBZ/VBD/VBG/VBN."""
    lemma = lemma.lower()
    if lemma == "be":
        return BE_FORMS.get(tag, ())
    if tag in ("VB", "VBP"):
        return (lemma,)
    if tag == "VBZ":
        return (IRREGULAR_VBZ.get(lemma) or _add_s(lemma),)
    if tag == "VBG":
        return (_add_ing(lemma),)
    if tag in ("VBD", "VBN"):
        irregular = IRREGULAR_VERBS.get(lemma)
        if irregular:
            forms = irregular[0] if tag == "VBD" else irregular[1]
            return tuple(forms.split("/"))
        return (_add_ed(lemma),)
    return ()


def noun_inflections(lemma: str, tag: str) -> tuple[str, ...]:
    lemma = lemma.lower()
    if tag == "NN":
        return (lemma,)
    if tag == "NNS":
        return (pluralize(lemma),)
    return ()


def inflect(lemma: str, tag: str) -> tuple[str, ...]:
    """All surface forms of ``lemma`` under a Penn tag; empty if unsupported."""
    if not lemma or not lemma.replace("-", "").replace("'", "").isalpha():
        return ()
    if tag.startswith("V"):
        return verb_inflections(lemma, tag)
    if tag.startswith("N"):
        return noun_inflections(lemma, tag)
    return ()


def _strip_ed(word: str) -> str:
    """Best-effort lemma for a regular -ed form."""
    if word.endswith("ied") and len(word) > 4:
        return word[:-3] + "y"
    if not word.endswith("ed") or len(word) < 4:
        return word
    stem = word[:-2]
    # doubled consonant: stopped -> stop (but called -> call)
    if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in VOWELS + "sl":
        undoubled = stem[:-1]
        if undoubled in KNOWN_VERB_LEMMAS or _doubles_final(undoubled):
            return undoubled
    if stem in KNOWN_VERB_LEMMAS:
        return stem
    if stem + "e" in KNOWN_VERB_LEMMAS:
        return stem + "e"
    # agreed -> agree
    if word.endswith("eed"):
        return word[:-1]
    # danced -> dance: restore e after typical e-dropping endings
    if re.search(r"[cgsvz]$", stem) or stem.endswith(("at", "it", "ut", "iz", "is")):
        return stem + "e"
    return stem


def _strip_ing(word: str) -> str:
    if not word.endswith("ing") or len(word) < 5:
        return word
    stem = word[:-3]
    if stem.endswith("y") and stem[:-1] + "ie" in KNOWN_VERB_LEMMAS:
        return stem[:-1] + "ie"
    if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in VOWELS + "sl":
        undoubled = stem[:-1]
        if undoubled in KNOWN_VERB_LEMMAS or _doubles_final(undoubled):
            return undoubled
    if stem in KNOWN_VERB_LEMMAS:
        return stem
    if stem + "e" in KNOWN_VERB_LEMMAS:
        return stem + "e"
    if re.search(r"[cgsvz]$", stem) and not stem.endswith("ss"):
        return stem + "e"
    return stem


def _strip_s(word: str) -> str:
    if word in VBZ_TO_LEMMA:
        return VBZ_TO_LEMMA[word]
    if word in IE_STEM_PLURALS:
        return IE_STEM_PLURALS[word]
    if word in OE_STEM_PLURALS:
        return OE_STEM_PLURALS[word]
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("es"):
        bare = word[:-1]
        if bare.endswith("e") and re.search(r"[scgzxv]e$", bare):
            return bare
        if re.search(r"(s|x|z|ch|sh)es$", word):
            return word[:-2]
        if word.endswith("oes"):
            return word[:-2]
        return word[:-1]
    if word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word


def verb_lemma(surface: str, tag: str = "") -> str:
    word = surface.lower()
    if word in BE_SURFACE:
        return "be"
    contraction = {"'s": "be", "'re": "be", "'m": "be", "'ve": "have",
                   "'ll": "will", "'d": "would", "n't": "not"}
    if word in contraction:
        return contraction[word]
    if word in IRREGULAR_PAST_TO_LEMMA and tag in ("VBD", ""):
        return IRREGULAR_PAST_TO_LEMMA[word]
    if word in IRREGULAR_PART_TO_LEMMA and tag in ("VBN", "VBD", ""):
        return IRREGULAR_PART_TO_LEMMA[word]
    if tag == "VBZ" or (not tag and word.endswith("s") and not word.endswith("ss")):
        return _strip_s(word)
    if tag == "VBG" or (not tag and word.endswith("ing")):
        return _strip_ing(word)
    if tag in ("VBD", "VBN") or (not tag and word.endswith("ed")):
        return _strip_ed(word)
    return word


def noun_lemma(surface: str, tag: str = "NN") -> str:
    word = surface.lower()
    if tag in ("NNS", "NNPS"):
        return singularize(word)
    return word


def lemmatize(surface: str, fine_pos: str) -> str:
    """Lemma of ``surface`` given its Penn tag."""
    if fine_pos.startswith("V") or fine_pos == "MD":
        return verb_lemma(surface, fine_pos if fine_pos.startswith("V") else "")
    if fine_pos in ("NNS", "NNPS"):
        return noun_lemma(surface, fine_pos)
    if fine_pos.startswith("NNP"):
        return surface
    return surface.lower()
