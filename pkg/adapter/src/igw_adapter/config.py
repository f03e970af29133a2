"""Adapter configuration: which model answers which mode.

Tags are configuration, not code. Embedding tags default to the published
general-purpose bi-encoder family (symmetric) and the MS MARCO passage
retriever (asymmetric); `builtin:*` tags select the deterministic offline
components. Structured-prediction backends (tagging, frames, coreference)
currently resolve to the builtin rules only; a learned backend plugs in by
tag once its runtime is available in the deployment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .encode import BUILTIN_TAG, MODES, ModelLoadError, make_encoder

SYMMETRIC_DEFAULT = "sentence-transformers/all-mpnet-base-v2"
ASYMMETRIC_DEFAULT = "sentence-transformers/msmarco-distilbert-base-v4"
RULES_TAG = "builtin:rules-v1"


@dataclass
class AdapterConfig:
    symmetric_model: str = SYMMETRIC_DEFAULT
    query_model: str = ASYMMETRIC_DEFAULT
    passage_model: str = ASYMMETRIC_DEFAULT
    srl_model: str = RULES_TAG
    coref_model: str = RULES_TAG
    batch_size: int = 32
    device: str = "cpu"

    @classmethod
    def builtin(cls) -> "AdapterConfig":
        """Fully offline configuration."""
        return cls(symmetric_model=BUILTIN_TAG, query_model=BUILTIN_TAG,
                   passage_model=BUILTIN_TAG)

    @classmethod
    def from_env(cls) -> "AdapterConfig":
        if os.environ.get("IGW_ADAPTER_BUILTIN") == "1":
            return cls.builtin()
        cfg = cls()
        cfg.symmetric_model = os.environ.get("IGW_SYMMETRIC_MODEL",
                                             cfg.symmetric_model)
        cfg.query_model = os.environ.get("IGW_QUERY_MODEL", cfg.query_model)
        cfg.passage_model = os.environ.get("IGW_PASSAGE_MODEL",
                                           cfg.passage_model)
        return cfg


@dataclass
class ResolvedBackends:
    config: AdapterConfig
    encoders: dict = field(default_factory=dict)  # mode -> encoder

    def encoder(self, mode: str):
        if mode not in MODES:
            raise ValueError(f"unknown encode mode: {mode!r}")
        return self.encoders[mode]


def resolve(config: AdapterConfig) -> ResolvedBackends:
    """Load every configured backend; failures abort startup."""
    if config.srl_model != RULES_TAG or config.coref_model != RULES_TAG:
        raise ModelLoadError(
            "only the builtin rule backend is available for structured "
            f"prediction in this build (got srl={config.srl_model!r}, "
            f"coref={config.coref_model!r})")
    tag_by_mode = {
        "symmetric": config.symmetric_model,
        "query": config.query_model,
        "passage": config.passage_model,
    }
    encoders = {}
    cache: dict[str, object] = {}
    for mode, tag in tag_by_mode.items():
        if tag not in cache:
            cache[tag] = make_encoder(tag)
        encoders[mode] = cache[tag]
    return ResolvedBackends(config, encoders)
