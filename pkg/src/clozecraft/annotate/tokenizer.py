"""Span-preserving word tokenizer.

Splits text into word and punctuation tokens whose character spans index
into the original string, so joining surfaces with the original gap
characters reconstructs the input exactly. Standard contractions are split
Penn-style (don't -> do + n't, John's -> John + 's).
"""

from __future__ import annotations

import re

# Words may contain internal apostrophes and hyphens; everything else that is
# not whitespace becomes a single-char (or ellipsis/dash run) punct token.
_TOKEN_RE = re.compile(
    r"""
    \d+(?:[.,]\d+)*(?:st|nd|rd|th)?     # numbers, 3.14, 1,000, 21st
    | [A-Za-z]+(?:[''][A-Za-z]+)*       # words with internal apostrophes
      (?:-[A-Za-z]+(?:[''][A-Za-z]+)*)* # hyphenated compounds
    | \.\.\.|--|[—–]                    # ellipsis and dashes
    | \S                                # any other symbol, one at a time
    """,
    re.VERBOSE,
)

_CONTRACTION_RE = re.compile(r"(?i)(n['']t|[''](?:s|re|ve|ll|d|m))$")


def tokenize_with_spans(text: str, offset: int = 0) -> list[tuple[str, int, int]]:
    """Return (surface, start, end) triples; spans are offsets into ``text``
    shifted by ``offset``."""
    out = []
    for m in _TOKEN_RE.finditer(text):
        surface, start, end = m.group(), m.start() + offset, m.end() + offset
        split = _split_contraction(surface)
        if split:
            head, tail = split
            out.append((head, start, start + len(head)))
            out.append((tail, start + len(head), end))
        else:
            out.append((surface, start, end))
    return out


def _split_contraction(word: str) -> tuple[str, str] | None:
    if "'" not in word and "'" not in word:
        return None
    m = _CONTRACTION_RE.search(word)
    if not m or m.start() == 0:
        return None
    head = word[:m.start()]
    # cannot -> can + not is handled by taggers; o'clock etc. stay whole
    if not head or not head[-1].isalpha():
        return None
    return head, word[m.start():]
