#!/usr/bin/env python3
"""Generate tests/fixtures/romanization_golden.tsv.

The reference romanizations are produced by the deliberately tiny state
machine below, applied to the shipped codepoint table.  The fixture file is
generated once, hand-checked, and frozen; the production romanizer is
required to reproduce it byte for byte.  Regenerating the fixtures to match
a changed implementation defeats their purpose, so don't.

Run from the repository root:

    python tools/make_translit_fixtures.py
"""

from __future__ import annotations

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
TABLE = ROOT / "src" / "toxistack" / "data" / "romanization.tsv"
OUT = ROOT / "tests" / "fixtures" / "romanization_golden.tsv"

# combining nukta codepoints, one per block that has one
NUKTA = {0x093C, 0x09BC, 0x0A3C, 0x0ABC, 0x0B3C, 0x0C3C, 0x0CBC}
NUKTA_VARIANTS = {"k": "q", "j": "z", "d": "r", "dh": "rh", "ph": "f"}


def load_table():
    table = {}
    for line in TABLE.read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        cp_s, latin, cls = line.split("\t")
        table[int(cp_s[2:], 16)] = (latin, cls)
    return table


def roman_reference(text: str, table) -> str:
    out = []
    pending = None  # latin of a consonant whose vowel is not yet decided

    def flush(vowel="a"):
        nonlocal pending
        if pending is not None:
            out.append(pending + vowel)
            pending = None

    for ch in text:
        cp = ord(ch)
        if cp in NUKTA:
            if pending is not None:
                pending = NUKTA_VARIANTS.get(pending, pending)
            continue
        entry = table.get(cp)
        if entry is None:
            flush()
            out.append(ch)
            continue
        latin, cls = entry
        if cls == "consonant":
            flush()
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
            flush()
            out.append(latin)
    flush()
    return "".join(out)


WORDS = {
    "devanagari": [
        "नमस्ते", "भारत", "पानी", "किताब", "दोस्त", "प्यार", "समय",
        "दिल्ली", "मुंबई", "अच्छा", "बुरा", "लड़का", "लड़की", "स्कूल",
        "काम", "घर", "खाना", "गाना", "सपना", "आदमी", "औरत", "शहर",
    ],
    "bengali": [
        "নমস্কার", "বাংলা", "ভালোবাসা", "পানি", "বন্ধু", "সময়", "ঢাকা",
        "কলকাতা", "ভালো", "খারাপ", "ছেলে", "মেয়ে", "বাড়ি", "খাবার",
        "গান", "শহর", "গ্রাম", "মানুষ", "জীবন", "স্বপ্ন", "আকাশ", "নদী",
    ],
    "gujarati": [
        "નમસ્તે", "ગુજરાત", "પાણી", "પુસ્તક", "મિત્ર", "પ્રેમ", "સમય",
        "અમદાવાદ", "સારું", "ખરાબ", "છોકરો", "છોકરી", "શાળા", "કામ",
        "ઘર", "ગીત", "શહેર", "ગામ", "માણસ", "જીવન", "આકાશ", "નદી",
    ],
    "odia": [
        "ନମସ୍କାର", "ଓଡ଼ିଶା", "ପାଣି", "ବହି", "ବନ୍ଧୁ", "ପ୍ରେମ", "ସମୟ",
        "ଭୁବନେଶ୍ୱର", "ଭଲ", "ଖରାପ", "ପୁଅ", "ଝିଅ", "ବିଦ୍ୟାଳୟ", "କାମ",
        "ଘର", "ଖାଦ୍ୟ", "ଗୀତ", "ସହର", "ଗାଁ", "ମଣିଷ", "ଜୀବନ", "ଆକାଶ",
    ],
    "tamil": [
        "வணக்கம்", "தமிழ்", "தண்ணீர்", "புத்தகம்", "நண்பன்", "அன்பு",
        "நேரம்", "சென்னை", "நல்ல", "கெட்ட", "பையன்", "பெண்", "பள்ளி",
        "வேலை", "வீடு", "சாப்பாடு", "பாட்டு", "நகரம்", "கிராமம்",
        "மனிதன்", "வாழ்க்கை", "வானம்",
    ],
    "telugu": [
        "నమస్కారం", "తెలుగు", "నీళ్లు", "పుస్తకం", "స్నేహితుడు", "ప్రేమ",
        "సమయం", "హైదరాబాద్", "మంచి", "చెడు", "అబ్బాయి", "అమ్మాయి",
        "బడి", "పని", "ఇల్లు", "భోజనం", "పాట", "నగరం", "పల్లె",
        "మనిషి", "జీవితం", "ఆకాశం",
    ],
    "kannada": [
        "ನಮಸ್ಕಾರ", "ಕನ್ನಡ", "ನೀರು", "ಪುಸ್ತಕ", "ಸ್ನೇಹಿತ", "ಪ್ರೀತಿ",
        "ಸಮಯ", "ಬೆಂಗಳೂರು", "ಒಳ್ಳೆಯ", "ಕೆಟ್ಟ", "ಹುಡುಗ", "ಹುಡುಗಿ",
        "ಶಾಲೆ", "ಕೆಲಸ", "ಮನೆ", "ಊಟ", "ಹಾಡು", "ನಗರ", "ಹಳ್ಳಿ",
        "ಮನುಷ್ಯ", "ಜೀವನ", "ಆಕಾಶ",
    ],
    "malayalam": [
        "നമസ്കാരം", "മലയാളം", "വെള്ളം", "പുസ്തകം", "സുഹൃത്ത്", "സ്നേഹം",
        "സമയം", "കൊച്ചി", "നല്ല", "ചീത്ത", "ആൺകുട്ടി", "പെൺകുട്ടി",
        "ജോലി", "വീട്", "ഭക്ഷണം", "പാട്ട്", "നഗരം", "ഗ്രാമം",
        "മനുഷ്യൻ", "ജീവിതം", "ആകാശം", "കടൽ",
    ],
}


def main() -> None:
    table = load_table()
    lines = ["# script<TAB>word<TAB>romanized -- frozen reference outputs, do not regenerate"]
    total = 0
    for script, words in WORDS.items():
        assert len(words) >= 20, script
        for word in words:
            lines.append(f"{script}\t{word}\t{roman_reference(word, table)}")
            total += 1
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({total} words)")


if __name__ == "__main__":
    main()
