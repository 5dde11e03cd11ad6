"""Character n-gram linear scorer over hashed features.

Stands in for the heavyweight text models whose probabilities the pipeline
normally ingests from files, so the whole thing can run end to end on a
laptop.  Text is reduced to hashed character n-grams of
``strip_emoji(text)`` and scored with a logistic-loss linear model trained
by plain sequential SGD (determinism is worth more than speed at this
scale).

Hashing is the documented FNV-1a variant from :mod:`toxistack.hashing`:
feature index comes from the low bits of the 64-bit hash, the contribution
sign from its top bit (signed hashing halves collision bias).  Nothing here
depends on Python's per-process hash salt, so probability files reproduce
across runs and platforms.

Model file format (``NGLM v1``, little-endian): magic ``NGLM``, u16
version, u16 n_min, u16 n_max, u16 reserved, u64 hash_dim, i64 seed, f64
bias, then hash_dim f64 weights.
"""

from __future__ import annotations

import struct
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from .corpus import Corpus, ProbabilityColumn
from .hashing import derive_seed, hash_ngrams
from .translit import strip_emoji

_MAGIC = b"NGLM"
_VERSION = 1
_HEADER = struct.Struct("<4sHHHHQqd")

_L2_DEFAULT = 1e-6  # mild, fixed; avoids per-run tuning


def _sigmoid(z: np.ndarray) -> np.ndarray:
    # clip keeps exp() in range; output stays strictly inside (0, 1)
    return 1.0 / (1.0 + np.exp(-np.clip(z, -35.0, 35.0)))


def _codepoints(text: str) -> np.ndarray:
    return np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32)


class HashedNgramClassifier(BaseEstimator, ClassifierMixin):
    """Logistic model over signed hashed character n-grams.

    Parameters
    ----------
    n_min, n_max : n-gram length range (inclusive).
    hash_dim : feature dimension, must be a power of two.
    epochs : SGD passes over the data.
    learning_rate : SGD step size.
    l2 : L2 penalty, applied per update to the touched coordinates.
    seed : controls shuffling and feature hashing.
    """

    def __init__(self, n_min=3, n_max=5, hash_dim=2 ** 18, epochs=5,
                 learning_rate=0.1, l2=_L2_DEFAULT, seed=0):
        self.n_min = n_min
        self.n_max = n_max
        self.hash_dim = hash_dim
        self.epochs = epochs
        self.learning_rate = learning_rate
        self.l2 = l2
        self.seed = seed

    def _check_params(self):
        if not (1 <= self.n_min <= self.n_max):
            raise ValueError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.hash_dim < 2 or self.hash_dim & (self.hash_dim - 1):
            raise ValueError(f"hash_dim must be a power of two, got {self.hash_dim}")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")

    def _features(self, text: str) -> tuple[np.ndarray, np.ndarray]:
        """(indices, signs) of all hashed n-grams of one text."""
        cps = _codepoints(strip_emoji(text))
        mask = np.uint64(self.hash_dim - 1)
        idx_parts, sgn_parts = [], []
        for n in range(self.n_min, self.n_max + 1):
            h = hash_ngrams(cps, n, seed=self.seed)
            if len(h) == 0:
                continue
            idx_parts.append((h & mask).astype(np.int64))
            sgn_parts.append(1.0 - 2.0 * (h >> np.uint64(63)).astype(np.float64))
        if not idx_parts:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.float64)
        return np.concatenate(idx_parts), np.concatenate(sgn_parts)

    def fit(self, X, y):
        self._check_params()
        texts = list(X)
        labels = np.asarray(y, dtype=np.float64)
        if len(texts) != len(labels):
            raise ValueError("X and y length mismatch")
        if len(texts) == 0:
            raise ValueError("cannot fit on an empty corpus")
        if not (np.any(labels == 0) and np.any(labels == 1)):
            raise ValueError("training corpus must contain both classes")

        feats = [self._features(t) for t in texts]
        w = np.zeros(self.hash_dim, dtype=np.float64)
        bias = 0.0
        lr = float(self.learning_rate)
        rng = np.random.default_rng(derive_seed(self.seed, "ngram-sgd"))

        losses = []
        for _ in range(self.epochs):
            for i in rng.permutation(len(texts)):
                idx, sgn = feats[i]
                z = bias + float(np.dot(w[idx], sgn))
                p = float(_sigmoid(np.float64(z)))
                g = p - labels[i]
                if len(idx):
                    np.subtract.at(w, idx, lr * (g * sgn + self.l2 * w[idx]))
                bias -= lr * g
            losses.append(self._full_loss(feats, labels, w, bias))

        self.weights_ = w
        self.bias_ = bias
        self.classes_ = np.array([0, 1])
        self.loss_history_ = losses
        return self

    def _full_loss(self, feats, labels, w, bias) -> float:
        margins = np.array(
            [bias + float(np.dot(w[idx], sgn)) for idx, sgn in feats]
        )
        return float(np.mean(np.logaddexp(0.0, margins) - labels * margins))

    def _margins(self, texts) -> np.ndarray:
        w, bias = self.weights_, self.bias_
        out = np.empty(len(texts), dtype=np.float64)
        for i, t in enumerate(texts):
            idx, sgn = self._features(t)
            out[i] = bias + float(np.dot(w[idx], sgn))
        return out

    def decision_function(self, X):
        return self._margins(list(X))

    def predict_proba(self, X):
        p = _sigmoid(self.decision_function(X))
        return np.column_stack([1.0 - p, p])

    def predict(self, X):
        return (self.predict_proba(X)[:, 1] >= 0.5).astype(np.int64)


def score_corpus(model: HashedNgramClassifier, corpus: Corpus, model_id: str,
                 threads: int = 1) -> ProbabilityColumn:
    """Score every record; row-parallel, output always in corpus order."""
    texts = [rec.text for rec in corpus.records]
    if threads <= 1 or len(texts) < 256:
        margins = model._margins(texts)
    else:
        chunk = (len(texts) + threads - 1) // threads
        spans = [(s, min(s + chunk, len(texts))) for s in range(0, len(texts), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda sp: model._margins(texts[sp[0]:sp[1]]), spans))
        margins = np.concatenate(parts) if parts else np.empty(0)
    return ProbabilityColumn(
        model_id=model_id,
        comment_ids=corpus.comment_ids,
        probabilities=_sigmoid(margins),
    )


def save_baseline(model: HashedNgramClassifier, path) -> None:
    header = _HEADER.pack(
        _MAGIC, _VERSION, model.n_min, model.n_max, 0,
        model.hash_dim, model.seed, model.bias_,
    )
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(model.weights_.astype("<f8").tobytes())


def load_baseline(path) -> HashedNgramClassifier:
    with open(path, "rb") as fh:
        raw = fh.read(_HEADER.size)
        if len(raw) != _HEADER.size:
            raise ValueError(f"{path}: truncated model header")
        magic, version, n_min, n_max, _, hash_dim, seed, bias = _HEADER.unpack(raw)
        if magic != _MAGIC:
            raise ValueError(f"{path}: not a NGLM model file")
        if version != _VERSION:
            raise ValueError(f"{path}: unsupported NGLM version {version}")
        weights = np.frombuffer(fh.read(), dtype="<f8")
    if len(weights) != hash_dim:
        raise ValueError(f"{path}: expected {hash_dim} weights, found {len(weights)}")
    model = HashedNgramClassifier(n_min=n_min, n_max=n_max, hash_dim=hash_dim, seed=seed)
    model.weights_ = weights.astype(np.float64)
    model.bias_ = bias
    model.classes_ = np.array([0, 1])
    return model
