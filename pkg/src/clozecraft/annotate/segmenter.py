"""Rule-based sentence segmentation with character spans."""

from __future__ import annotations

import re

# Common abbreviations that end with a period but do not end a sentence.
_ABBREVIATIONS = {
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "mt", "no",
    "vs", "etc", "e.g", "i.e", "cf", "al", "inc", "ltd", "co", "corp",
    "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept",
    "oct", "nov", "dec", "u.s", "u.k", "a.m", "p.m",
}

_BOUNDARY_RE = re.compile(r"[.!?]+[\"'”’)\]]*")


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Return (start, end) spans of sentences in ``text``.

    Spans exclude surrounding whitespace; every non-whitespace character
    belongs to exactly one span. Text without terminal punctuation forms a
    final sentence.
    """
    spans = []
    start = None
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if start is None:
            if not ch.isspace():
                start = i
            i += 1
            continue
        m = _BOUNDARY_RE.match(text, i)
        if m:
            end = m.end()
            if _is_boundary(text, i, end):
                spans.append((start, end))
                start = None
            i = end
        else:
            i += 1
    if start is not None:
        end = n
        while end > start and text[end - 1].isspace():
            end -= 1
        spans.append((start, end))
    return spans


def _is_boundary(text: str, punct_start: int, punct_end: int) -> bool:
    if text[punct_start] in "!?":
        return True
    # period: check for abbreviation or decimal
    word_start = punct_start
    while word_start > 0 and (text[word_start - 1].isalnum() or text[word_start - 1] == "."):
        word_start -= 1
    word = text[word_start:punct_start].lower()
    if word in _ABBREVIATIONS:
        return False
    if len(word) == 1 and word.isalpha():
        return False  # initials such as "J."
    if word.replace(".", "").isdigit() and punct_end < len(text) and text[punct_end].isdigit():
        return False  # decimal number
    # require end of text or whitespace-then-capital/quote/digit to split
    j = punct_end
    while j < len(text) and text[j] in " \t":
        j += 1
    if j >= len(text) or text[j] == "\n":
        return True
    if j == punct_end:
        return False  # no space after the period: e.g. file.txt
    nxt = text[j]
    return nxt.isupper() or nxt.isdigit() or nxt in "\"'“‘(["
