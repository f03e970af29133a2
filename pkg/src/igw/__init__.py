"""Institutional grammar workbench.

Deterministic engine for parsing policy statements into institutional
constituents, comparing and retrieving policies in embedding space,
clustering constituents into labeled topics, building actor-object
networks, and scoring parser output against gold annotations.

All NLP model inference lives outside this package; the engine consumes
pre-annotated statements and pre-computed vectors through the corpus
interchange format.
"""

__version__ = "0.1.0"
