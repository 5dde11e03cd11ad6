import random
from pathlib import Path

import pytest

from toxistack import (
    CommentRecord,
    Corpus,
    Language,
    augment_corpus,
    romanize,
    strip_emoji,
    transliterate_corpus,
)
from toxistack.translit import COVERED_BLOCKS, EMOJI_RANGES, romanization_table

FIXTURES = Path(__file__).parent / "fixtures"


def golden_cases():
    cases = []
    for line in (FIXTURES / "romanization_golden.tsv").read_text("utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        script, word, expected = line.split("\t")
        cases.append((script, word, expected))
    return cases


def test_golden_file_is_large_enough():
    cases = golden_cases()
    assert len(cases) >= 160
    per_script = {}
    for script, _, _ in cases:
        per_script[script] = per_script.get(script, 0) + 1
    assert len(per_script) == 8
    assert min(per_script.values()) >= 20


@pytest.mark.parametrize("script,word,expected", golden_cases())
def test_romanize_matches_golden(script, word, expected):
    assert romanize(word) == expected


def test_romanize_latin_passthrough():
    assert romanize("hello 123!") == "hello 123!"
    assert romanize("") == ""


def test_romanize_spec_anchor():
    assert romanize("नमस्ते") == "namaste"


def test_romanize_uncovered_script_passthrough():
    # Perso-Arabic is not covered and must pass through unchanged
    assert romanize("سلام") == "سلام"


def test_romanize_output_leaves_covered_blocks():
    rng = random.Random(20240817)
    table_cps = sorted(romanization_table())
    for _ in range(300):
        chars = [chr(rng.choice(table_cps)) for _ in range(rng.randrange(1, 30))]
        out = romanize("".join(chars))
        for ch in out:
            assert not any(lo <= ord(ch) <= hi for lo, hi in COVERED_BLOCKS)


def test_romanize_idempotent_on_random_unicode():
    # 10000 random strings over a codepoint pool that mixes covered blocks,
    # ASCII, emoji and other scripts
    rng = random.Random(424242)
    pool = []
    for lo, hi in COVERED_BLOCKS:
        pool.extend(range(lo, hi + 1))
    pool.extend(range(0x20, 0x7F))
    pool.extend(range(0x0600, 0x0640))   # Arabic
    pool.extend(range(0x4E00, 0x4E40))   # CJK
    pool.extend(range(0x1F600, 0x1F620))  # emoji
    for _ in range(10_000):
        s = "".join(chr(rng.choice(pool)) for _ in range(rng.randrange(0, 24)))
        once = romanize(s)
        assert romanize(once) == once


def emoji_expected(text: str) -> str:
    # independent oracle: filter directly against the published ranges
    return "".join(
        ch for ch in text
        if not any(lo <= ord(ch) <= hi for lo, hi in EMOJI_RANGES)
    )


def test_strip_emoji_basic():
    assert strip_emoji("good\U0001F600") == "good"
    assert strip_emoji("hello") == "hello"
    assert strip_emoji("\U0001F44D\U0001F3FDok\U0001F468‍\U0001F469‍\U0001F467") == "ok"


def test_strip_emoji_matches_range_oracle():
    rng = random.Random(7)
    pool = list(range(0x20, 0x7F)) + [0x1F600, 0x1F3FD, 0x200D, 0xFE0F, 0x1F9F0, 0x1F680, 0x0915]
    for _ in range(2000):
        s = "".join(chr(rng.choice(pool)) for _ in range(rng.randrange(0, 20)))
        assert strip_emoji(s) == emoji_expected(s)


def test_strip_emoji_idempotent_and_never_grows():
    rng = random.Random(8)
    pool = list(range(0x20, 0x7F)) + list(range(0x1F300, 0x1F320)) + [0x200D, 0xFE0F]
    for _ in range(500):
        s = "".join(chr(rng.choice(pool)) for _ in range(rng.randrange(0, 30)))
        once = strip_emoji(s)
        assert strip_emoji(once) == once
        assert len(once) <= len(s)


def _record(cid, text, label=1, language=Language.HINDI):
    return CommentRecord(cid, text, language, 0, 1, 2, 3, 4, label)


def test_augment_skips_latin_only_records():
    corpus = Corpus(records=(_record("a", "hello"), _record("b", "world, ok")))
    out = augment_corpus(corpus)
    assert len(out) == 2
    assert out.records == corpus.records


def test_augment_adds_translit_copy():
    corpus = Corpus(records=(_record("a", "नमस्ते"),))
    out = augment_corpus(corpus)
    assert len(out) == 2
    copy = out.records[1]
    assert copy.comment_id == "a__tr"
    assert copy.text == romanize("नमस्ते")
    assert copy.label == 1
    assert copy.report_count_comment == 3


def test_augment_empty_corpus():
    assert len(augment_corpus(Corpus(records=(), role="train"))) == 0


def test_augment_requires_labels():
    corpus = Corpus(records=(_record("a", "नमस्ते", label=None),), role="test")
    with pytest.raises(ValueError, match="label"):
        augment_corpus(corpus)


def test_augment_size_formula():
    records = (
        _record("a", "नमस्ते"),        # romanizes differently
        _record("b", "hello"),         # pure Latin
        _record("c", "ok नमस्ते", label=0),  # mixed: still differs
        _record("d", "bye\U0001F600"),  # emoji-only difference: no copy
    )
    out = augment_corpus(Corpus(records=records))
    assert len(out) == 4 + 2
    assert [r.comment_id for r in out.records[4:]] == ["a__tr", "c__tr"]


def test_transliterate_corpus_keeps_alignment():
    corpus = Corpus(records=(_record("a", "नमस्ते"), _record("b", "hello")))
    out = transliterate_corpus(corpus)
    assert out.comment_ids == corpus.comment_ids
    assert out.records[0].text == "namaste"
    assert out.records[1].text == "hello"
