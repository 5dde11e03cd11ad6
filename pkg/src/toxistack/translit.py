"""Emoji stripping and rule-based romanization of Indic-script text.

The romanizer is table-driven: ``data/romanization.tsv`` maps every assigned
codepoint of the eight covered blocks (Devanagari, Bengali-Assamese,
Gujarati, Odia, Tamil, Telugu, Kannada, Malayalam) to a lowercase-ASCII
string and a class.  Two rules sit on top of the table:

* a consonant carries an inherent ``a`` that is emitted unless the next
  codepoint is a dependent vowel sign or a virama (a dangling virama emits
  nothing);
* a combining nukta rewrites the pending consonant to its closest ASCII
  form (k->q, j->z, d->r, dh->rh, ph->f; anything else is unchanged).

Codepoints outside the covered blocks pass through untouched, so text in
uncovered scripts (Perso-Arabic, for instance) is lossy but never an error.
"""

from __future__ import annotations

import re
from dataclasses import replace
from functools import lru_cache
from importlib import resources

from .corpus import CommentRecord, Corpus

# Emoji codepoints removed before any other processing: Miscellaneous
# Symbols and Pictographs, Emoticons, Transport and Map Symbols,
# Supplemental Symbols and Pictographs, the zero-width joiner, variation
# selector 16 and the skin-tone modifiers (the last sit inside the first
# range already).
EMOJI_RANGES = (
    (0x1F300, 0x1F5FF),
    (0x1F600, 0x1F64F),
    (0x1F680, 0x1F6FF),
    (0x1F900, 0x1F9FF),
    (0x200D, 0x200D),
    (0xFE0F, 0xFE0F),
    (0x1F3FB, 0x1F3FF),
)

_EMOJI_RE = re.compile(
    "[" + "".join(f"{chr(lo)}-{chr(hi)}" for lo, hi in EMOJI_RANGES) + "]"
)

COVERED_BLOCKS = (
    (0x0900, 0x097F),  # Devanagari
    (0x0980, 0x09FF),  # Bengali-Assamese
    (0x0A80, 0x0AFF),  # Gujarati
    (0x0B00, 0x0B7F),  # Odia
    (0x0B80, 0x0BFF),  # Tamil
    (0x0C00, 0x0C7F),  # Telugu
    (0x0C80, 0x0CFF),  # Kannada
    (0x0D00, 0x0D7F),  # Malayalam
)

_NUKTA = frozenset({0x093C, 0x09BC, 0x0A3C, 0x0ABC, 0x0B3C, 0x0C3C, 0x0CBC})
_NUKTA_VARIANTS = {"k": "q", "j": "z", "d": "r", "dh": "rh", "ph": "f"}

CLASSES = ("consonant", "vowel_ind", "vowel_dep", "virama", "sign", "digit")


def strip_emoji(text: str) -> str:
    """Remove emoji codepoints; everything else is preserved in order."""
    return _EMOJI_RE.sub("", text)


def in_covered_block(cp: int) -> bool:
    return any(lo <= cp <= hi for lo, hi in COVERED_BLOCKS)


@lru_cache(maxsize=1)
def romanization_table() -> dict[int, tuple[str, str]]:
    """Load the shipped codepoint table (cached)."""
    table: dict[int, tuple[str, str]] = {}
    text = resources.files("toxistack.data").joinpath("romanization.tsv").read_text("utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line or line.startswith("#"):
            continue
        try:
            cp_s, latin, cls = line.split("\t")
            cp = int(cp_s[2:], 16)
        except ValueError:
            raise ValueError(f"romanization.tsv line {lineno}: malformed entry {line!r}") from None
        if cls not in CLASSES:
            raise ValueError(f"romanization.tsv line {lineno}: unknown class {cls!r}")
        table[cp] = (latin, cls)
    return table


def romanize(text: str) -> str:
    """Replace covered Indic-script codepoints with their Latin mapping.

    Latin letters, digits, whitespace and punctuation pass through, as does
    anything from an uncovered script.  Unassigned codepoints inside a
    covered block are dropped so the output never contains codepoints from
    the covered blocks.  Idempotent: romanize(romanize(x)) == romanize(x).
    """
    table = romanization_table()
    out: list[str] = []
    pending: str | None = None  # consonant whose vowel is not yet decided

    for ch in text:
        cp = ord(ch)
        if cp in _NUKTA:
            if pending is not None:
                pending = _NUKTA_VARIANTS.get(pending, pending)
            continue
        entry = table.get(cp)
        if entry is None:
            if pending is not None:
                out.append(pending + "a")
                pending = None
            if not in_covered_block(cp):
                out.append(ch)
            continue
        latin, cls = entry
        if cls == "consonant":
            if pending is not None:
                out.append(pending + "a")
            pending = latin
        elif cls == "vowel_dep":
            if pending is not None:
                out.append(pending + latin)
                pending = None
            else:
                out.append(latin)  # dangling matra: emit anyway
        elif cls == "virama":
            if pending is not None:
                out.append(pending)
                pending = None
        else:  # vowel_ind, digit, sign
            if pending is not None:
                out.append(pending + "a")
                pending = None
            out.append(latin)
    if pending is not None:
        out.append(pending + "a")
    return "".join(out)


def transliterate_corpus(corpus: Corpus) -> Corpus:
    """Replace every record's text with romanize(strip_emoji(text)).

    Keeps ids, metadata and labels, so the result stays aligned with the
    input corpus for probability fusion.
    """
    records = tuple(
        replace(rec, text=romanize(strip_emoji(rec.text))) for rec in corpus.records
    )
    return Corpus(records=records, role=corpus.role)


def augment_corpus(corpus: Corpus) -> Corpus:
    """Append a romanized copy of every record whose romanization differs.

    Copies keep the label and metadata and get ``__tr`` appended to their
    comment_id; records that are already fully Latin after emoji stripping
    are not duplicated.  Requires a labeled corpus.
    """
    if not all(rec.label is not None for rec in corpus.records):
        raise ValueError("augment_corpus requires a labeled corpus")
    copies: list[CommentRecord] = []
    for rec in corpus.records:
        base = strip_emoji(rec.text)
        rom = romanize(base)
        if rom != base:
            copies.append(replace(rec, comment_id=rec.comment_id + "__tr", text=rom))
    return Corpus(records=corpus.records + tuple(copies), role=corpus.role)
