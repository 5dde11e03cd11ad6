#!/usr/bin/env python3
"""Regenerate src/toxistack/data/romanization.tsv.

Walks every assigned codepoint in the eight covered Indic blocks and derives
a lowercase-ASCII mapping from the Unicode character name, with a small
override list for codepoints whose names are misleading (e.g. U+0CDE, named
FA but actually the archaic retroflex LLLA).  The script refuses to emit a
table while any assigned codepoint in a covered block is unhandled, which is
what keeps the shipped table total.

Run from the repository root:

    python tools/build_romanization_table.py
"""

from __future__ import annotations

import hashlib
import sys
import unicodedata
from pathlib import Path

BLOCKS = {
    "DEVANAGARI": (0x0900, 0x097F),
    "BENGALI": (0x0980, 0x09FF),
    "GUJARATI": (0x0A80, 0x0AFF),
    "ORIYA": (0x0B00, 0x0B7F),
    "TAMIL": (0x0B80, 0x0BFF),
    "TELUGU": (0x0C00, 0x0C7F),
    "KANNADA": (0x0C80, 0x0CFF),
    "MALAYALAM": (0x0D00, 0x0D7F),
}

# Vowel qualities by Unicode name fragment.  Long vowels double the letter
# for a/i/u; e/o stay single since ASCII cannot mark their length.
VOWELS = {
    "A": "a", "AA": "aa", "I": "i", "II": "ii", "U": "u", "UU": "uu",
    "E": "e", "EE": "e", "AI": "ai", "O": "o", "OO": "o", "AU": "au",
    "CANDRA A": "a", "CANDRA E": "e", "CANDRA O": "o",
    "SHORT A": "a", "SHORT E": "e", "SHORT O": "o",
    "VOCALIC R": "ri", "VOCALIC RR": "rri",
    "VOCALIC L": "li", "VOCALIC LL": "lli",
    "CANDRA LONG E": "e",
    "UE": "u", "UUE": "u", "OE": "o", "OOE": "o", "AW": "o",
    "PRISHTHAMATRA E": "e",
}

CONSONANTS = {
    "KA": "k", "KHA": "kh", "GA": "g", "GHA": "gh", "NGA": "ng",
    "CA": "ch", "CHA": "chh", "JA": "j", "JHA": "jh", "NYA": "ny",
    "TTA": "t", "TTHA": "th", "DDA": "d", "DDHA": "dh", "NNA": "n",
    "TA": "t", "THA": "th", "DA": "d", "DHA": "dh", "NA": "n",
    "PA": "p", "PHA": "ph", "BA": "b", "BHA": "bh", "MA": "m",
    "YA": "y", "RA": "r", "RRA": "r", "LA": "l", "LLA": "l",
    "LLLA": "zh", "VA": "v", "SHA": "sh", "SSA": "sh", "SA": "s", "HA": "h",
    # nukta-bearing and borrowed consonants
    "QA": "q", "KHHA": "kh", "GHHA": "g", "ZA": "z", "ZHA": "zh",
    "DDDHA": "rh", "RHA": "rh", "FA": "f", "YYA": "y",
    "NNNA": "n", "TTTA": "t", "DDDA": "d",
    "GGA": "g", "JJA": "j", "BBA": "b",
    "RA WITH MIDDLE DIAGONAL": "r", "RA WITH LOWER DIAGONAL": "w",
    "MARWARI DDA": "d", "HEAVY YA": "y", "GLOTTAL STOP": "q",
    "WA": "w", "TSA": "ts", "DZA": "dz", "RRRA": "r",
    "VEDIC ANUSVARA": "n",
}

DIGITS = {
    "ZERO": "0", "ONE": "1", "TWO": "2", "THREE": "3", "FOUR": "4",
    "FIVE": "5", "SIX": "6", "SEVEN": "7", "EIGHT": "8", "NINE": "9",
}

# Spacing/number/symbol codepoints that are not letters, matras or digits
# all collapse to a fixed ASCII string (possibly empty) so that romanised
# output never contains codepoints from a covered block.
NUMBER_WORDS = {"TEN": "10", "ONE HUNDRED": "100", "ONE THOUSAND": "1000"}

OVERRIDES = {
    0x0950: ("om", "sign"),   # DEVANAGARI OM
    0x0BD0: ("om", "sign"),   # TAMIL OM
    0x0964: (".", "sign"),    # DANDA
    0x0965: ("..", "sign"),   # DOUBLE DANDA
    0x0CDE: ("zh", "consonant"),  # named FA, actually archaic LLLA
    0x09F0: ("r", "consonant"),   # BENGALI RA WITH MIDDLE DIAGONAL
    0x09F1: ("w", "consonant"),   # BENGALI RA WITH LOWER DIAGONAL
    0x0BD7: ("u", "vowel_dep"),   # TAMIL AU LENGTH MARK
    0x0D57: ("u", "vowel_dep"),   # MALAYALAM AU LENGTH MARK
    0x0B56: ("i", "vowel_dep"),   # ORIYA AI LENGTH MARK
    0x0B57: ("u", "vowel_dep"),   # ORIYA AU LENGTH MARK
    0x0C55: ("", "sign"),         # TELUGU LENGTH MARK
    0x0C56: ("i", "vowel_dep"),   # TELUGU AI LENGTH MARK
    0x0CD5: ("", "sign"),         # KANNADA LENGTH MARK
    0x0CD6: ("i", "vowel_dep"),   # KANNADA AI LENGTH MARK
    0x0CF1: ("h", "sign"),        # KANNADA SIGN JIHVAMULIYA
    0x0CF2: ("h", "sign"),        # KANNADA SIGN UPADHMANIYA
    0x09CE: ("t", "sign"),        # BENGALI KHANDA TA (bare t, no inherent vowel)
    0x0D4E: ("r", "sign"),        # MALAYALAM LETTER DOT REPH (pre-base r)
    0x0D5F: ("ii", "vowel_ind"),  # MALAYALAM LETTER ARCHAIC II
}

# Chillu letters are bare consonant sounds; class "sign" keeps the engine
# from appending an inherent vowel.
CHILLU = {
    "CHILLU NN": "n", "CHILLU N": "n", "CHILLU RR": "r", "CHILLU L": "l",
    "CHILLU LL": "l", "CHILLU K": "k", "CHILLU M": "m", "CHILLU Y": "y",
    "CHILLU LLL": "zh",
}


def classify(cp: int, script: str, name: str):
    """Return (latin, class) for one codepoint, or None if unhandled."""
    if cp in OVERRIDES:
        return OVERRIDES[cp]
    rest = name[len(script) + 1:] if name.startswith(script + " ") else None
    if rest is None:
        return None

    if rest == "SIGN VIRAMA":
        return ("", "virama")
    if rest == "SIGN NUKTA":
        return ("", "sign")
    if rest in ("SIGN CANDRABINDU", "SIGN INVERTED CANDRABINDU",
                "SIGN COMBINING CANDRABINDU ABOVE", "VOWEL SIGN CANDRABINDU",
                "SIGN SPACING CANDRABINDU", "SIGN CANDRABINDU VIRAMA"):
        return ("n", "sign")
    if rest in ("SIGN ANUSVARA", "SIGN COMBINING ANUSVARA ABOVE"):
        return ("n", "sign")
    if rest == "SIGN VISARGA":
        return ("h", "sign")
    if rest == "SIGN AVAGRAHA":
        return ("", "sign")

    if rest == "OM":
        return ("om", "sign")
    if rest.startswith("VOWEL CANDRA "):
        ph = rest[len("VOWEL "):]
        if ph in VOWELS:
            return (VOWELS[ph], "vowel_ind")
        return None
    if rest.startswith("LETTER "):
        ph = rest[len("LETTER "):]
        if ph in CHILLU:
            return (CHILLU[ph], "sign")
        if ph in VOWELS:
            return (VOWELS[ph], "vowel_ind")
        if ph in CONSONANTS:
            return (CONSONANTS[ph], "consonant")
        return None
    if rest.startswith("VOWEL SIGN "):
        ph = rest[len("VOWEL SIGN "):]
        if ph in VOWELS:
            return (VOWELS[ph], "vowel_dep")
        return None
    if rest.startswith("DIGIT "):
        word = rest[len("DIGIT "):]
        if word in DIGITS:
            return (DIGITS[word], "digit")
        return None
    if rest.startswith("NUMBER "):
        word = rest[len("NUMBER "):]
        return (NUMBER_WORDS.get(word, ""), "sign")
    if rest.startswith("FRACTION ") or rest.startswith("CURRENCY"):
        return ("", "sign")
    if rest == "ABBREVIATION SIGN":
        return (".", "sign")
    # everything else in a covered block (vedic marks, tone marks, stress
    # signs, symbols, format controls) maps to nothing
    if rest.startswith("SIGN ") or rest.startswith("STRESS SIGN ") \
            or rest.startswith("GAP FILLER") or rest.endswith(" SIGN") \
            or rest.endswith(" MARK") or rest.endswith(" ACCENT") or rest in (
                "ANJI", "ISSHAR",
                "AU LENGTH MARK", "AI LENGTH MARK", "LENGTH MARK",
                "INVERTED CANDRABINDU"):
        return ("", "sign")
    return None


def main() -> int:
    rows = []
    unhandled = []
    for script, (lo, hi) in BLOCKS.items():
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            name = unicodedata.name(ch, None)
            if name is None:
                continue
            entry = classify(cp, script, name)
            if entry is None:
                unhandled.append((cp, name, unicodedata.category(ch)))
                continue
            latin, cls = entry
            if latin.strip("abcdefghijklmnopqrstuvwxyz0123456789."):
                raise SystemExit(f"non-ASCII mapping for U+{cp:04X}: {latin!r}")
            rows.append((cp, latin, cls))
    if unhandled:
        for cp, name, cat in unhandled:
            print(f"unhandled U+{cp:04X} [{cat}] {name}", file=sys.stderr)
        return 1

    out_path = Path(__file__).resolve().parent.parent / "src" / "toxistack" / "data" / "romanization.tsv"
    lines = ["# romanization table v1",
             "# codepoint<TAB>latin<TAB>class; class in {consonant, vowel_ind, vowel_dep, virama, sign, digit}"]
    for cp, latin, cls in sorted(rows):
        lines.append(f"U+{cp:04X}\t{latin}\t{cls}")
    blob = ("\n".join(lines) + "\n").encode("utf-8")
    out_path.write_text(blob.decode("utf-8"), encoding="utf-8")
    print(f"wrote {out_path} ({len(rows)} entries)")
    print(f"sha256 {hashlib.sha256(blob).hexdigest()}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
