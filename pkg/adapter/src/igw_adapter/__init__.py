"""Annotation adapter: raw policy text in, interchange corpus out.

This package owns every model-ish concern the deterministic engine refuses
to: sentence segmentation, tokenization, tagging, frames, coreference
chains, and embeddings. It talks to the engine only through the corpus
directory format and the one-endpoint encode contract.
"""

__version__ = "0.1.0"
