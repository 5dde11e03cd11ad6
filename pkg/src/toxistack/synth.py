"""Deterministic synthetic corpora for desk-scale pipeline runs.

The generator mirrors the shape of the production data: thirteen languages
over eight scripts with Hindi the most common by default, code-mixed rows
that are fully romanized, emoji noise, post-level counts that drift between
rows sharing a post_index, and abusive rows that attract stochastically
higher report counts.

Distributions (all drawn from one numpy PCG64 generator in a fixed order,
so output is a pure function of (n, seed, weights)):

* label: Bernoulli(0.47) abusive;
* abusive rows plant 1 + Poisson(0.7) marker words, except with a
  per-language miss rate in [0.04, 0.16]; clean rows plant one marker with a
  per-language false rate in [0.01, 0.07] (the variation is what makes
  per-language thresholds worth calibrating);
* report_count_post: NB(r=2, mean 1 + 12 * abusive_share_of_post) + drift,
  where the k-th row observed for a post adds Poisson(2k) (timestamp
  emulation); like_count_post: NB(r=1.2, mean 20) + Poisson(3k) drift;
* report_count_comment: NB(r=2, mean 6) for abusive rows, NB(r=2, mean 0.6)
  otherwise; like_count_comment: NB(r=1, mean 1.2) abusive, NB(r=1, mean
  2.5) otherwise;
* 30% of rows are rendered in romanized (Latin) form, the rest in native
  script; 12% of word slots are Latin filler, 15% of rows end in an emoji.

NB(r, mean) is the negative binomial drawn as numpy's
``negative_binomial(n=r, p=r / (r + mean))``.
"""

from __future__ import annotations

from typing import Mapping, Optional

import numpy as np

from .corpus import CommentRecord, Corpus
from .hashing import derive_seed
from .languages import ALL_LANGUAGES, Language
from .translit import romanization_table, romanize

# Language skew loosely follows the production distribution: Hindi dominates.
DEFAULT_LANGUAGE_WEIGHTS: dict[Language, float] = {
    Language.HINDI: 10.0,
    Language.TAMIL: 3.0,
    Language.TELUGU: 3.0,
    Language.MALAYALAM: 2.0,
    Language.MARATHI: 2.0,
    Language.BENGALI: 2.0,
    Language.KANNADA: 2.0,
    Language.GUJARATI: 1.0,
    Language.ODIA: 1.0,
    Language.ASSAMESE: 1.0,
    Language.BHOJPURI: 1.0,
    Language.HARYANVI: 1.0,
    Language.RAJASTHANI: 1.0,
}

SCRIPT_BLOCKS = {
    "devanagari": (0x0900, 0x097F),
    "bengali": (0x0980, 0x09FF),
    "gujarati": (0x0A80, 0x0AFF),
    "odia": (0x0B00, 0x0B7F),
    "tamil": (0x0B80, 0x0BFF),
    "telugu": (0x0C00, 0x0C7F),
    "kannada": (0x0C80, 0x0CFF),
    "malayalam": (0x0D00, 0x0D7F),
}

LANGUAGE_SCRIPT = {
    Language.HINDI: "devanagari",
    Language.MARATHI: "devanagari",
    Language.BHOJPURI: "devanagari",
    Language.HARYANVI: "devanagari",
    Language.RAJASTHANI: "devanagari",
    Language.BENGALI: "bengali",
    Language.ASSAMESE: "bengali",
    Language.GUJARATI: "gujarati",
    Language.ODIA: "odia",
    Language.TAMIL: "tamil",
    Language.TELUGU: "telugu",
    Language.KANNADA: "kannada",
    Language.MALAYALAM: "malayalam",
}

LATIN_FILLER = (
    "ok", "bro", "yaar", "lol", "plz", "nice", "super", "video",
    "like", "share", "follow", "first",
)

EMOJI = ("\U0001F600", "\U0001F602", "\U0001F44D", "\U0001F64F",
         "\U0001F525", "\U0001F4AF", "\U0001F621", "\U0001F92C")

ABUSIVE_RATE = 0.47
ROMAN_RATE = 0.30
FILLER_RATE = 0.12
EMOJI_RATE = 0.15

_VOCAB_SEED = 0x5EED_10C5  # vocabulary is fixed, independent of the corpus seed
_N_BENIGN = 40
_N_ABUSIVE = 6


def _script_inventory(script: str):
    # stick to the core consonant (base+0x15..0x39) and matra (base+0x3E..
    # 0x4C) ranges shared by the Indic blocks, skipping archaic letters
    lo, hi = SCRIPT_BLOCKS[script]
    consonants, matras, independents = [], [], []
    for cp, (latin, cls) in romanization_table().items():
        if not (lo <= cp <= hi):
            continue
        offset = cp - lo
        if cls == "consonant" and latin and 0x15 <= offset <= 0x39:
            consonants.append(cp)
        elif cls == "vowel_dep" and 0x3E <= offset <= 0x4C and latin in (
                "aa", "i", "ii", "u", "uu", "e", "o"):
            matras.append(cp)
        elif cls == "vowel_ind" and offset <= 0x14 and latin in (
                "a", "aa", "i", "u", "e", "o"):
            independents.append(cp)
    return sorted(consonants), sorted(matras), sorted(independents)


def _build_vocab():
    """Fixed per-script word lists: benign words plus abusive marker words."""
    vocab = {}
    for script in SCRIPT_BLOCKS:
        rng = np.random.default_rng(derive_seed(_VOCAB_SEED, script))
        consonants, matras, independents = _script_inventory(script)
        words: list[str] = []
        seen = set()
        while len(words) < _N_BENIGN + _N_ABUSIVE:
            parts = []
            if rng.random() < 0.25:
                parts.append(chr(independents[rng.integers(len(independents))]))
            for _ in range(rng.integers(2, 4)):
                parts.append(chr(consonants[rng.integers(len(consonants))]))
                if rng.random() < 0.6:
                    parts.append(chr(matras[rng.integers(len(matras))]))
            word = "".join(parts)
            if word not in seen:
                seen.add(word)
                words.append(word)
        vocab[script] = (tuple(words[:_N_BENIGN]), tuple(words[_N_BENIGN:]))
    return vocab


_VOCAB_CACHE: Optional[dict] = None


def _vocab():
    global _VOCAB_CACHE
    if _VOCAB_CACHE is None:
        _VOCAB_CACHE = _build_vocab()
    return _VOCAB_CACHE


def _nb(rng: np.random.Generator, r: float, mean: float) -> int:
    return int(rng.negative_binomial(r, r / (r + mean)))


def generate_synthetic_corpus(
    n: int,
    seed: int,
    language_weights: Optional[Mapping[Language, float]] = None,
) -> Corpus:
    """Generate a labeled corpus of ``n`` comments, deterministically.

    ``language_weights`` maps languages to non-negative sampling weights
    (missing languages get weight 0); the default is the skewed production
    mix with Hindi most common.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    weights_map = DEFAULT_LANGUAGE_WEIGHTS if language_weights is None else language_weights
    weights = np.array([float(weights_map.get(lang, 0.0)) for lang in ALL_LANGUAGES])
    if (weights < 0).any():
        raise ValueError("language weights must be non-negative")
    if weights.sum() <= 0:
        raise ValueError("language weights must not all be zero")
    weights = weights / weights.sum()

    rng = np.random.default_rng(derive_seed(seed, "synthetic-corpus"))
    vocab = _vocab()

    lang_noise = {
        lang: (0.04 + 0.12 * (i % 4) / 3.0, 0.01 + 0.06 * (i % 3) / 2.0)
        for i, lang in enumerate(ALL_LANGUAGES)
    }

    n_posts = max(1, n // 4)
    lang_idx = rng.choice(len(ALL_LANGUAGES), size=n, p=weights)
    labels = (rng.random(n) < ABUSIVE_RATE).astype(np.int8)
    post_of = rng.integers(0, n_posts, size=n)

    texts = []
    for i in range(n):
        lang = ALL_LANGUAGES[lang_idx[i]]
        script = LANGUAGE_SCRIPT[lang]
        benign, abusive = vocab[script]
        miss_rate, false_rate = lang_noise[lang]

        k = int(rng.integers(3, 13))
        words = [benign[rng.integers(len(benign))] for _ in range(k)]
        if labels[i] == 1:
            if rng.random() >= miss_rate:
                for _ in range(1 + int(rng.poisson(0.7))):
                    pos = int(rng.integers(0, len(words) + 1))
                    words.insert(pos, abusive[rng.integers(_N_ABUSIVE)])
        elif rng.random() < false_rate:
            pos = int(rng.integers(0, len(words) + 1))
            words.insert(pos, abusive[rng.integers(_N_ABUSIVE)])

        romanized = rng.random() < ROMAN_RATE
        if romanized:
            words = [romanize(w) for w in words]
        for j in range(len(words)):
            if rng.random() < FILLER_RATE:
                words[j] = LATIN_FILLER[rng.integers(len(LATIN_FILLER))]
        text = " ".join(words)
        if rng.random() < EMOJI_RATE:
            text = text + EMOJI[rng.integers(len(EMOJI))]
        texts.append(text)

    # post-level bases reflect how abusive the post's comment section is
    post_abusive_share = np.zeros(n_posts)
    post_rows = np.zeros(n_posts)
    for i in range(n):
        post_rows[post_of[i]] += 1
        post_abusive_share[post_of[i]] += labels[i]
    with np.errstate(invalid="ignore"):
        post_abusive_share = np.where(
            post_rows > 0, post_abusive_share / np.maximum(post_rows, 1), 0.0
        )
    base_report = np.array(
        [_nb(rng, 2.0, 1.0 + 12.0 * post_abusive_share[p]) for p in range(n_posts)]
    )
    base_like = np.array([_nb(rng, 1.2, 20.0) for _ in range(n_posts)])

    records = []
    seen_per_post: dict[int, int] = {}
    for i in range(n):
        p = int(post_of[i])
        k = seen_per_post.get(p, 0)
        seen_per_post[p] = k + 1
        report_post = int(base_report[p]) + int(rng.poisson(2.0 * k))
        like_post = int(base_like[p]) + int(rng.poisson(3.0 * k))
        if labels[i] == 1:
            report_comment = _nb(rng, 2.0, 6.0)
            like_comment = _nb(rng, 1.0, 1.2)
        else:
            report_comment = _nb(rng, 2.0, 0.6)
            like_comment = _nb(rng, 1.0, 2.5)
        records.append(
            CommentRecord(
                comment_id=f"c{i:07d}",
                text=texts[i],
                language=ALL_LANGUAGES[lang_idx[i]],
                post_index=p,
                report_count_post=report_post,
                like_count_post=like_post,
                report_count_comment=report_comment,
                like_count_comment=like_comment,
                label=int(labels[i]),
            )
        )
    return Corpus(records=tuple(records), role="train")


def split_corpus(corpus: Corpus, fractions: tuple[float, ...], seed: int) -> list[Corpus]:
    """Label-stratified random split; parts keep the corpus row order.

    ``fractions`` must sum to 1; the final part absorbs rounding remainders.
    """
    if abs(sum(fractions) - 1.0) > 1e-9 or any(f < 0 for f in fractions):
        raise ValueError(f"fractions must be non-negative and sum to 1, got {fractions}")
    if not corpus.has_labels():
        raise ValueError("split_corpus requires a labeled corpus")
    rng = np.random.default_rng(derive_seed(seed, "corpus-split"))
    labels = corpus.labels()
    part_indices: list[list[int]] = [[] for _ in fractions]
    for cls in (0, 1):
        idx = np.flatnonzero(labels == cls)
        idx = idx[rng.permutation(len(idx))]
        start = 0
        for part, frac in enumerate(fractions):
            take = round(frac * len(idx)) if part < len(fractions) - 1 else len(idx) - start
            take = min(take, len(idx) - start)
            part_indices[part].extend(idx[start:start + take].tolist())
            start += take
    return [corpus.subset(sorted(ix)) for ix in part_indices]
