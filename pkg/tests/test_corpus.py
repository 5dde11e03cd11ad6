import random

import numpy as np
import pytest

from toxistack import (
    AlignmentError,
    CommentRecord,
    Corpus,
    CorpusFormatError,
    Language,
    ProbabilityColumn,
    parse_language,
    read_corpus,
    read_probability_column,
    write_corpus,
    write_probability_column,
)

LANGS = list(Language)

# text pool stresses the CSV escaping rules: delimiters, quotes, newlines,
# multi-script content and emoji
NASTY_TEXTS = [
    "plain text",
    "comma, separated",
    'quoted "text" here',
    "new\nline",
    "mixed, \"everything\"\nhere",
    "नमस्ते दोस्त",
    "👍🏽ok",
    "",
    "  leading and trailing  ",
    "line\r\nwindows",
]


def random_corpus(rng: random.Random, n: int, labeled: bool = True) -> Corpus:
    records = []
    for i in range(n):
        records.append(
            CommentRecord(
                comment_id=f"c{i:05d}",
                text=rng.choice(NASTY_TEXTS) + (f" tail{rng.randrange(1000)}" if rng.random() < 0.5 else ""),
                language=rng.choice(LANGS),
                post_index=rng.randrange(0, max(1, n // 3)),
                report_count_post=rng.randrange(0, 50),
                like_count_post=rng.randrange(0, 200),
                report_count_comment=rng.randrange(0, 20),
                like_count_comment=rng.randrange(0, 40),
                label=rng.randrange(2) if labeled else None,
            )
        )
    return Corpus(records=tuple(records), role="train" if labeled else "test")


def test_parse_language_case_insensitive():
    assert parse_language("hindi") is Language.HINDI
    assert parse_language("HINDI") is Language.HINDI
    assert parse_language(" Odia ") is Language.ODIA
    with pytest.raises(ValueError, match="klingon"):
        parse_language("klingon")


def test_read_three_row_file(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text(
        "comment_id,text,language,post_index,report_count_post,like_count_post,"
        "report_count_comment,like_count_comment,label\n"
        "a,hello,Hindi,0,1,2,3,4,0\n"
        "b,bye,Tamil,0,1,2,3,4,1\n"
        "c,hi,Odia,1,0,0,0,0,0\n",
        encoding="utf-8",
    )
    corpus = read_corpus(path, role="train")
    assert len(corpus) == 3
    assert corpus.records[1].language is Language.TAMIL
    assert corpus.records[2].label == 0


def test_read_rejects_unknown_language(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text(
        "comment_id,text,language,post_index,report_count_post,like_count_post,"
        "report_count_comment,like_count_comment,label\n"
        "a,hello,Hindi,0,1,2,3,4,0\n"
        "b,bye,klingon,0,1,2,3,4,1\n",
        encoding="utf-8",
    )
    with pytest.raises(CorpusFormatError) as err:
        read_corpus(path, role="train")
    assert "line 3" in str(err.value)
    assert "klingon" in str(err.value)


@pytest.mark.parametrize(
    "row,message",
    [
        ("a,hello,Hindi,0,1,2,3,4,2", "label"),
        ("a,hello,Hindi,-1,1,2,3,4,0", "post_index"),
        ("a,hello,Hindi,0,x,2,3,4,0", "report_count_post"),
    ],
)
def test_read_rejects_malformed_rows(tmp_path, row, message):
    path = tmp_path / "c.csv"
    path.write_text(
        "comment_id,text,language,post_index,report_count_post,like_count_post,"
        "report_count_comment,like_count_comment,label\n" + row + "\n",
        encoding="utf-8",
    )
    with pytest.raises(CorpusFormatError, match=message):
        read_corpus(path, role="train")


def test_read_rejects_duplicate_id(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text(
        "comment_id,text,language,post_index,report_count_post,like_count_post,"
        "report_count_comment,like_count_comment,label\n"
        "a,hello,Hindi,0,1,2,3,4,0\n"
        "a,bye,Tamil,0,1,2,3,4,1\n",
        encoding="utf-8",
    )
    with pytest.raises(CorpusFormatError, match="duplicate"):
        read_corpus(path, role="train")


def test_read_rejects_missing_column(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text("comment_id,text,language\na,b,Hindi\n", encoding="utf-8")
    with pytest.raises(CorpusFormatError, match="header"):
        read_corpus(path, role="test")


def test_write_empty_corpus_is_header_only(tmp_path):
    path = tmp_path / "empty.csv"
    write_corpus(Corpus(records=(), role="test"), path)
    assert path.read_text(encoding="utf-8") == (
        "comment_id,text,language,post_index,report_count_post,like_count_post,"
        "report_count_comment,like_count_comment\n"
    )


def test_corpus_roundtrip_is_byte_identical(tmp_path):
    # write -> read -> write must reproduce the file exactly, including
    # records whose text contains delimiters, quotes and newlines
    rng = random.Random(1234)
    for trial in range(5):
        corpus = random_corpus(rng, n=200)
        p1 = tmp_path / f"a{trial}.csv"
        p2 = tmp_path / f"b{trial}.csv"
        write_corpus(corpus, p1)
        back = read_corpus(p1, role="train")
        assert back.records == corpus.records
        write_corpus(back, p2)
        assert p1.read_bytes() == p2.read_bytes()


def test_large_random_roundtrip(tmp_path):
    rng = random.Random(99)
    corpus = random_corpus(rng, n=1000)
    path = tmp_path / "big.csv"
    write_corpus(corpus, path)
    assert read_corpus(path, role="train").records == corpus.records


def test_unlabeled_roundtrip(tmp_path):
    rng = random.Random(7)
    corpus = random_corpus(rng, n=50, labeled=False)
    path = tmp_path / "t.csv"
    write_corpus(corpus, path)
    header = path.read_text(encoding="utf-8").split("\n", 1)[0]
    assert "label" not in header
    back = read_corpus(path, role="test")
    assert back.records == corpus.records
    with pytest.raises(CorpusFormatError, match="label"):
        read_corpus(path, role="train")


def test_corpus_rejects_duplicate_ids_in_memory():
    rec = CommentRecord("x", "t", Language.HINDI, 0, 0, 0, 0, 0, 1)
    with pytest.raises(CorpusFormatError, match="duplicate"):
        Corpus(records=(rec, rec))


def test_probability_column_validation():
    with pytest.raises(ValueError):
        ProbabilityColumn("m", ("a",), np.array([1.5]))
    with pytest.raises(ValueError):
        ProbabilityColumn("m", ("a",), np.array([float("nan")]))


def test_probability_roundtrip(tmp_path):
    rng = random.Random(5)
    corpus = random_corpus(rng, n=300)
    values = np.random.default_rng(5).random(300)
    col = ProbabilityColumn("model_a", corpus.comment_ids, values)
    p1 = tmp_path / "probs.csv"
    p2 = tmp_path / "probs2.csv"
    write_probability_column(col, p1)
    back = read_probability_column(p1, corpus)
    assert back.model_id == "probs"
    assert back.comment_ids == col.comment_ids
    assert np.array_equal(back.probabilities, col.probabilities)
    write_probability_column(back, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_probability_uniform_column(tmp_path):
    rng = random.Random(2)
    corpus = random_corpus(rng, n=4)
    path = tmp_path / "p.csv"
    lines = ["comment_id,probability"] + [f"{cid},0.5" for cid in corpus.comment_ids]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    col = read_probability_column(path, corpus)
    assert np.array_equal(col.probabilities, np.full(4, 0.5))


def test_probability_missing_id_is_named(tmp_path):
    rng = random.Random(3)
    corpus = random_corpus(rng, n=4)
    path = tmp_path / "p.csv"
    lines = ["comment_id,probability"] + [
        f"{cid},0.5" for cid in corpus.comment_ids[:-1]
    ]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    with pytest.raises(AlignmentError, match=corpus.comment_ids[-1]):
        read_probability_column(path, corpus)


def test_probability_out_of_range(tmp_path):
    rng = random.Random(4)
    corpus = random_corpus(rng, n=2)
    path = tmp_path / "p.csv"
    path.write_text(
        "comment_id,probability\n"
        f"{corpus.comment_ids[0]},0.5\n"
        f"{corpus.comment_ids[1]},1.2\n",
        encoding="utf-8",
    )
    with pytest.raises(CorpusFormatError, match="1.2"):
        read_probability_column(path, corpus)
