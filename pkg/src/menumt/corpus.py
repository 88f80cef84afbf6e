"""Bilingual corpus ingestion, tokenization and n-gram statistics.

The corpus file format is UTF-8, one phrase pair per line:

    source<TAB>target[<TAB>flag[<TAB>topic]]

where flag is "std" (standardized, goes to the training set) or "121"
(one-to-one, kept out of training). Lines starting with '#' and blank
lines are ignored.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass, field

JOINER = "&"

STD_FLAG = "std"
ONE_TO_ONE_FLAG = "121"
DEFAULT_TOPIC = "general"


class CorpusError(ValueError):
    """Malformed corpus input; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


def _strip_outer_punct(token):
    # keep internal hyphens, apostrophes and the consolidation joiner
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start]).startswith("P") \
            and token[start] not in "&":
        start += 1
    while end > start and unicodedata.category(token[end - 1]).startswith("P") \
            and token[end - 1] not in "&":
        end -= 1
    return token[start:end]


def tokenize(text, allow_joined=True):
    """Split on whitespace, lowercase, strip surrounding punctuation.

    Diacritics are preserved (accents are meaningful in menu Spanish).
    With allow_joined=False, tokens containing the reserved '&' joiner
    are rejected.
    """
    tokens = []
    for raw in text.split():
        tok = _strip_outer_punct(raw.lower())
        if not tok:
            continue
        if not allow_joined and JOINER in tok:
            raise CorpusError("token %r contains reserved joiner %r" % (tok, JOINER))
        tokens.append(tok)
    return tokens


@dataclass(frozen=True)
class PhrasePair:
    source: tuple
    target: tuple
    standardized: bool = True
    topic: str = DEFAULT_TOPIC

    def __post_init__(self):
        if not self.source or not self.target:
            raise ValueError("phrase pair sides must be non-empty")


@dataclass(frozen=True)
class ParallelCorpus:
    pairs: tuple
    source_lang: str = "es"
    target_lang: str = "en"

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def side(self, which):
        if which not in ("source", "target"):
            raise ValueError("side must be 'source' or 'target'")
        return [getattr(p, which) for p in self.pairs]


@dataclass
class NgramStats:
    line_count: int
    word_count: int
    distinct_ngrams: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "lines": self.line_count,
            "words": self.word_count,
            "ngrams": {str(n): c for n, c in sorted(self.distinct_ngrams.items())},
        }


def parse_corpus(raw, source_lang="es", target_lang="en", allow_joined=False):
    """Parse the tab-separated corpus format into a ParallelCorpus."""
    pairs = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 2:
            raise CorpusError("expected at least source<TAB>target", lineno)
        if len(fields) > 4:
            raise CorpusError("too many fields (%d)" % len(fields), lineno)
        source_text, target_text = fields[0], fields[1]
        flag = fields[2].strip() if len(fields) > 2 and fields[2].strip() else STD_FLAG
        topic = fields[3].strip() if len(fields) > 3 and fields[3].strip() else DEFAULT_TOPIC
        if flag not in (STD_FLAG, ONE_TO_ONE_FLAG):
            raise CorpusError("unknown flag %r" % flag, lineno)
        try:
            source = tuple(tokenize(source_text, allow_joined=allow_joined))
            target = tuple(tokenize(target_text, allow_joined=allow_joined))
        except CorpusError as exc:
            raise CorpusError(str(exc), lineno) from None
        if not source:
            raise CorpusError("empty source side", lineno)
        if not target:
            raise CorpusError("empty target side", lineno)
        pairs.append(PhrasePair(source, target, flag == STD_FLAG, topic))
    return ParallelCorpus(tuple(pairs), source_lang, target_lang)


def serialize_corpus(corpus):
    """Inverse of parse_corpus on well-formed corpora."""
    lines = []
    for pair in corpus:
        flag = STD_FLAG if pair.standardized else ONE_TO_ONE_FLAG
        lines.append("\t".join(
            (" ".join(pair.source), " ".join(pair.target), flag, pair.topic)))
    return "\n".join(lines) + ("\n" if lines else "")


def ngrams(tokens, n):
    return [tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1)]


def corpus_stats(corpus, side="source", nmax=3):
    """Count lines, words and distinct n-grams (1..nmax) on one side."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    lines = corpus.side(side)
    word_count = sum(len(toks) for toks in lines)
    distinct = {}
    for n in range(1, nmax + 1):
        seen = Counter()
        for toks in lines:
            seen.update(ngrams(toks, n))
        distinct[n] = len(seen)
    return NgramStats(len(lines), word_count, distinct)
