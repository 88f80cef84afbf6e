"""Offline phrase-based menu translation engine with a disambiguation DB."""

from .corpus import ParallelCorpus, PhrasePair, corpus_stats, parse_corpus
from .decoder import BACKEND, DecoderWeights, KBestList, translate
from .pipeline import Bundle, BuildManifest, build, evaluate, load_bundle

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Bundle", "BuildManifest", "DecoderWeights", "KBestList",
    "ParallelCorpus", "PhrasePair", "build", "corpus_stats", "evaluate",
    "load_bundle", "parse_corpus", "translate",
]
