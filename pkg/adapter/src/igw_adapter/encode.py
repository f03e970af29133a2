"""Text encoders behind one interface: vector plus model tag.

`builtin:hash-v1` is a feature-hashing bag of unigrams and bigrams,
unit-normalized; it needs no downloads and is deterministic across runs and
platforms. Any other tag is treated as a sentence-transformers model name
and loaded lazily.
"""

from __future__ import annotations

import hashlib
import math
import re

import numpy as np

BUILTIN_TAG = "builtin:hash-v1"
BUILTIN_DIM = 64

MODE_SYMMETRIC = "symmetric"
MODE_QUERY = "query"
MODE_PASSAGE = "passage"
MODES = (MODE_SYMMETRIC, MODE_QUERY, MODE_PASSAGE)

_WORDS_RE = re.compile(r"[a-z0-9']+")


class EncoderError(ValueError):
    pass


class ModelLoadError(RuntimeError):
    pass


class HashEncoder:
    """Deterministic fallback encoder; one vector space for all modes."""

    def __init__(self, dim: int = BUILTIN_DIM):
        self.dim = dim
        self.tag = BUILTIN_TAG

    def _features(self, text: str) -> list[str]:
        words = _WORDS_RE.findall(text.lower())
        return words + [f"{a}_{b}" for a, b in zip(words, words[1:])]

    def encode(self, text: str) -> list[float]:
        features = self._features(text)
        if not features:
            raise EncoderError("cannot encode empty text")
        vec = np.zeros(self.dim, dtype=np.float64)
        for feat in features:
            digest = hashlib.sha256(feat.encode("utf-8")).digest()
            index = int.from_bytes(digest[:4], "big") % self.dim
            sign = 1.0 if digest[4] % 2 == 0 else -1.0
            vec[index] += sign
        norm = math.sqrt(float(vec @ vec))
        if norm == 0.0:
            vec[0] = 1.0
            norm = 1.0
        return [float(x) for x in vec / norm]


class SentenceTransformerEncoder:
    """Wrapper over a sentence-transformers model tag."""

    def __init__(self, tag: str):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise ModelLoadError(
                f"sentence-transformers is not installed (needed for {tag!r})"
            ) from exc
        try:
            self._model = SentenceTransformer(tag)
        except Exception as exc:
            raise ModelLoadError(f"cannot load model {tag!r}: {exc}") from exc
        self.tag = tag
        self.dim = int(self._model.get_sentence_embedding_dimension())

    def encode(self, text: str) -> list[float]:
        if not text.strip():
            raise EncoderError("cannot encode empty text")
        vec = self._model.encode([text], convert_to_numpy=True,
                                 show_progress_bar=False)[0]
        return [float(x) for x in vec]


def make_encoder(tag: str):
    if tag == BUILTIN_TAG or tag.startswith("builtin:hash"):
        return HashEncoder()
    return SentenceTransformerEncoder(tag)
