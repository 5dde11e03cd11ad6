"""Corpus and probability-column types plus their on-disk CSV formats.

All types are frozen after construction and safe to share across threads.
Downstream stages align to a corpus both by position and by comment_id, so
the reading paths verify the two agree and fail loudly when they do not.

Corpus file (v1 schema): UTF-8 CSV, ``\n`` line terminator, header::

    comment_id,text,language,post_index,report_count_post,like_count_post,
    report_count_comment,like_count_comment,label

``label`` is present only for labeled corpora.  Fields containing a comma,
quote or newline are double-quote escaped with embedded quotes doubled
(standard minimal CSV quoting), which makes the writer canonical: writing a
parsed file reproduces it byte for byte.

Probability file (v1 schema): header ``comment_id,probability`` with the
probability printed in Python's shortest round-trip notation, which carries
the full precision of the value (never fewer than six significant digits of
information).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

import numpy as np

from .languages import Language, parse_language

CORPUS_COLUMNS = (
    "comment_id",
    "text",
    "language",
    "post_index",
    "report_count_post",
    "like_count_post",
    "report_count_comment",
    "like_count_comment",
)
LABEL_COLUMN = "label"

COUNT_FIELDS = (
    "post_index",
    "report_count_post",
    "like_count_post",
    "report_count_comment",
    "like_count_comment",
)


class CorpusFormatError(ValueError):
    """A corpus or probability file violates the documented schema."""


class AlignmentError(ValueError):
    """A per-row column does not line up with its corpus."""


@dataclass(frozen=True)
class CommentRecord:
    comment_id: str
    text: str
    language: Language
    post_index: int
    report_count_post: int
    like_count_post: int
    report_count_comment: int
    like_count_comment: int
    label: Optional[int] = None

    def __post_init__(self):
        for name in COUNT_FIELDS:
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
        if self.label is not None and self.label not in (0, 1):
            raise ValueError(f"label must be 0 or 1, got {self.label!r}")


@dataclass(frozen=True)
class Corpus:
    records: tuple[CommentRecord, ...]
    role: str = "train"

    def __post_init__(self):
        if self.role not in ("train", "test"):
            raise ValueError(f"role must be 'train' or 'test', got {self.role!r}")
        object.__setattr__(self, "records", tuple(self.records))
        seen = set()
        for rec in self.records:
            if rec.comment_id in seen:
                raise CorpusFormatError(f"duplicate comment_id: {rec.comment_id!r}")
            seen.add(rec.comment_id)
        if self.role == "train":
            for rec in self.records:
                if rec.label is None:
                    raise CorpusFormatError(
                        f"train corpus requires a label on every record; "
                        f"{rec.comment_id!r} has none"
                    )

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def comment_ids(self) -> tuple[str, ...]:
        return tuple(rec.comment_id for rec in self.records)

    @property
    def languages(self) -> tuple[Language, ...]:
        return tuple(rec.language for rec in self.records)

    def has_labels(self) -> bool:
        return len(self.records) > 0 and all(r.label is not None for r in self.records)

    def labels(self) -> np.ndarray:
        if not all(r.label is not None for r in self.records):
            raise ValueError("corpus has unlabeled records")
        return np.array([r.label for r in self.records], dtype=np.int8)

    def subset(self, indices: Sequence[int], role: Optional[str] = None) -> "Corpus":
        return Corpus(
            records=tuple(self.records[i] for i in indices),
            role=self.role if role is None else role,
        )


@dataclass(frozen=True)
class ProbabilityColumn:
    """Per-comment probabilities from one model, aligned to a corpus."""

    model_id: str
    comment_ids: tuple[str, ...]
    probabilities: np.ndarray = field(repr=False)

    def __post_init__(self):
        probs = np.asarray(self.probabilities, dtype=np.float64)
        probs.setflags(write=False)
        object.__setattr__(self, "comment_ids", tuple(self.comment_ids))
        object.__setattr__(self, "probabilities", probs)
        if probs.ndim != 1 or len(probs) != len(self.comment_ids):
            raise ValueError("probabilities must be a 1-d array matching comment_ids")
        if len(probs) and (not np.all(np.isfinite(probs)) or probs.min() < 0.0 or probs.max() > 1.0):
            raise ValueError(f"probabilities for {self.model_id!r} must be finite and in [0, 1]")

    def __len__(self) -> int:
        return len(self.comment_ids)

    def with_values(self, probabilities: np.ndarray, model_id: Optional[str] = None) -> "ProbabilityColumn":
        return ProbabilityColumn(
            model_id=self.model_id if model_id is None else model_id,
            comment_ids=self.comment_ids,
            probabilities=probabilities,
        )


def check_alignment(column: ProbabilityColumn, corpus: Corpus) -> None:
    """Verify the column covers the corpus row for row, by comment_id."""
    ids = corpus.comment_ids
    if len(column.comment_ids) != len(ids):
        raise AlignmentError(
            f"column {column.model_id!r} has {len(column.comment_ids)} rows, "
            f"corpus has {len(ids)}"
        )
    for pos, (got, want) in enumerate(zip(column.comment_ids, ids)):
        if got != want:
            raise AlignmentError(
                f"column {column.model_id!r} misaligned at row {pos}: "
                f"expected {want!r}, found {got!r}"
            )


def _parse_count(value: str, column: str, line: int):
    try:
        parsed = int(value)
    except ValueError:
        raise CorpusFormatError(
            f"line {line}: {column} must be an integer, got {value!r}"
        ) from None
    if parsed < 0:
        raise CorpusFormatError(f"line {line}: {column} must be >= 0, got {parsed}")
    return parsed


def read_corpus(path, role: str = "train") -> Corpus:
    """Read a corpus file, checking every invariant along the way.

    A train-role read requires the label column with a 0/1 value on every
    row; a test-role read accepts the label column being present or absent.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CorpusFormatError(f"{path}: empty file, expected a header row") from None
        with_label = tuple(header) == CORPUS_COLUMNS + (LABEL_COLUMN,)
        if not with_label and tuple(header) != CORPUS_COLUMNS:
            raise CorpusFormatError(
                f"{path}: unexpected header {header!r}; expected "
                f"{','.join(CORPUS_COLUMNS)}[,{LABEL_COLUMN}]"
            )
        if role == "train" and not with_label:
            raise CorpusFormatError(f"{path}: train corpus requires a {LABEL_COLUMN} column")

        n_cols = len(CORPUS_COLUMNS) + (1 if with_label else 0)
        records = []
        seen: set[str] = set()
        for row in reader:
            line = reader.line_num
            if len(row) != n_cols:
                raise CorpusFormatError(
                    f"line {line}: expected {n_cols} fields, got {len(row)}"
                )
            comment_id = row[0]
            if comment_id in seen:
                raise CorpusFormatError(f"line {line}: duplicate comment_id {comment_id!r}")
            seen.add(comment_id)
            try:
                language = parse_language(row[2])
            except ValueError as exc:
                raise CorpusFormatError(f"line {line}: {exc}") from None
            counts = [
                _parse_count(row[i], CORPUS_COLUMNS[i], line) for i in range(3, 8)
            ]
            label: Optional[int] = None
            if with_label:
                raw = row[8]
                if raw != "":
                    if raw not in ("0", "1"):
                        raise CorpusFormatError(
                            f"line {line}: label must be 0 or 1, got {raw!r}"
                        )
                    label = int(raw)
                elif role == "train":
                    raise CorpusFormatError(f"line {line}: missing label in train corpus")
            records.append(
                CommentRecord(
                    comment_id=comment_id,
                    text=row[1],
                    language=language,
                    post_index=counts[0],
                    report_count_post=counts[1],
                    like_count_post=counts[2],
                    report_count_comment=counts[3],
                    like_count_comment=counts[4],
                    label=label,
                )
            )
    return Corpus(records=tuple(records), role=role)


def write_corpus(corpus: Corpus, path) -> None:
    """Write a corpus in the canonical v1 schema.

    The label column is emitted when every record carries a label; a corpus
    mixing labeled and unlabeled records is not serialisable.
    """
    labeled = [r.label is not None for r in corpus.records]
    if any(labeled) and not all(labeled):
        raise CorpusFormatError("corpus mixes labeled and unlabeled records")
    with_label = bool(labeled) and all(labeled)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CORPUS_COLUMNS + ((LABEL_COLUMN,) if with_label else ()))
        for rec in corpus.records:
            row = [
                rec.comment_id,
                rec.text,
                rec.language.value,
                str(rec.post_index),
                str(rec.report_count_post),
                str(rec.like_count_post),
                str(rec.report_count_comment),
                str(rec.like_count_comment),
            ]
            if with_label:
                row.append(str(rec.label))
            writer.writerow(row)


def format_probability(p: float) -> str:
    # repr() is numerically canonical: float(format_probability(p)) == p.
    return repr(float(p))


def read_probability_column(path, corpus: Corpus, model_id: Optional[str] = None) -> ProbabilityColumn:
    """Read a probability file and verify it aligns with ``corpus``.

    ``model_id`` defaults to the file's stem.
    """
    import os

    if model_id is None:
        model_id = os.path.splitext(os.path.basename(os.fspath(path)))[0]
    entries: dict[str, float] = {}
    order: list[str] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CorpusFormatError(f"{path}: empty file") from None
        if header != ["comment_id", "probability"]:
            raise CorpusFormatError(f"{path}: unexpected header {header!r}")
        for row in reader:
            line = reader.line_num
            if len(row) != 2:
                raise CorpusFormatError(f"line {line}: expected 2 fields, got {len(row)}")
            cid, raw = row
            if cid in entries:
                raise CorpusFormatError(f"line {line}: duplicate comment_id {cid!r}")
            try:
                p = float(raw)
            except ValueError:
                raise CorpusFormatError(
                    f"line {line}: probability must be a number, got {raw!r}"
                ) from None
            if not np.isfinite(p) or p < 0.0 or p > 1.0:
                raise CorpusFormatError(
                    f"line {line}: probability {raw} outside [0, 1] for {cid!r}"
                )
            entries[cid] = p
            order.append(cid)

    ids = corpus.comment_ids
    missing = [cid for cid in ids if cid not in entries]
    if missing:
        raise AlignmentError(f"{path}: missing probability for comment_id {missing[0]!r}")
    extra = set(entries) - set(ids)
    if extra:
        raise AlignmentError(f"{path}: probability for unknown comment_id {sorted(extra)[0]!r}")
    if tuple(order) != ids:
        first = next(i for i, (a, b) in enumerate(zip(order, ids)) if a != b)
        raise AlignmentError(
            f"{path}: row order disagrees with corpus at row {first} "
            f"({order[first]!r} vs {ids[first]!r})"
        )
    probs = np.array([entries[cid] for cid in ids], dtype=np.float64)
    return ProbabilityColumn(model_id=model_id, comment_ids=ids, probabilities=probs)


def write_probability_column(column: ProbabilityColumn, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("comment_id,probability\n")
        writer = csv.writer(fh, lineterminator="\n")
        for cid, p in zip(column.comment_ids, column.probabilities):
            writer.writerow([cid, format_probability(p)])
