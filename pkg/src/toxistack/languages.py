"""Language tags recognised by the pipeline.

The corpus schema carries exactly thirteen languages.  Tags are parsed
case-insensitively; anything else is rejected rather than coerced, because a
silently mis-tagged row would be thresholded with the wrong table entry.
"""

from __future__ import annotations

import enum


class Language(enum.Enum):
    HINDI = "Hindi"
    MARATHI = "Marathi"
    MALAYALAM = "Malayalam"
    TELUGU = "Telugu"
    TAMIL = "Tamil"
    ODIA = "Odia"
    GUJARATI = "Gujarati"
    BHOJPURI = "Bhojpuri"
    HARYANVI = "Haryanvi"
    ASSAMESE = "Assamese"
    KANNADA = "Kannada"
    RAJASTHANI = "Rajasthani"
    BENGALI = "Bengali"

    def __str__(self) -> str:
        return self.value


_BY_LOWER = {lang.value.lower(): lang for lang in Language}


def parse_language(tag: str) -> Language:
    """Parse a language tag, case-insensitively.

    Raises ValueError for unknown tags.
    """
    lang = _BY_LOWER.get(tag.strip().lower())
    if lang is None:
        raise ValueError(f"unknown language tag: {tag!r}")
    return lang


ALL_LANGUAGES = tuple(Language)
