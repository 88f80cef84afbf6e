"""Training-set split and n-gram consolidation.

Standardized pairs go to the training set; non-standardized pairs are
kept aside as one-to-one material, grouped by topic. Consolidation
rewrites a multi-word sequence into a single '&'-joined token so the
n-gram distribution shifts toward small n and the two sides of a pair
get closer in length.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .corpus import JOINER, ParallelCorpus, PhrasePair, ngrams

SOURCE = "source"
TARGET = "target"


@dataclass(frozen=True)
class ConsolidationRule:
    pattern: tuple
    side: str = SOURCE
    order_index: int = 0

    def __post_init__(self):
        if len(self.pattern) < 2:
            raise ValueError("rule pattern needs at least two tokens")
        if self.side not in (SOURCE, TARGET):
            raise ValueError("side must be 'source' or 'target'")

    @property
    def joined(self):
        return JOINER.join(self.pattern)


@dataclass
class CorporaSplit:
    training: ParallelCorpus
    one_to_one: dict = field(default_factory=dict)


def split_standardized(corpus):
    """Partition a corpus into training pairs and per-topic one-to-one sets."""
    training = []
    one_to_one = defaultdict(list)
    for pair in corpus:
        if pair.standardized:
            training.append(pair)
        else:
            one_to_one[pair.topic].append(pair)
    return CorporaSplit(
        ParallelCorpus(tuple(training), corpus.source_lang, corpus.target_lang),
        dict(one_to_one),
    )


def apply_rules(tokens, rules):
    """Rewrite every match of each rule, earlier rules first.

    Within one rule the matches are taken leftmost; a span consumed by
    an earlier (more specific) rule is a single joined token afterwards,
    so later (more general) rules cannot re-match inside it.
    """
    tokens = list(tokens)
    for rule in rules:
        pattern = rule.pattern
        size = len(pattern)
        out = []
        i = 0
        while i < len(tokens):
            if tuple(tokens[i:i + size]) == pattern:
                out.append(rule.joined)
                i += size
            else:
                out.append(tokens[i])
                i += 1
        tokens = out
    return tuple(tokens)


def mark_for_consolidation(corpus):
    """Pairs whose target is strictly shorter than their source."""
    return [p for p in corpus if len(p.target) < len(p.source)]


def auto_consolidate(marked, min_support=2, max_len=4):
    """Derive consolidation rules from n-grams shared by marked pairs.

    Every source-side n-gram (2 <= n <= max_len) present in at least
    min_support marked pairs becomes a rule. Rules are ordered longest
    pattern first so specific sequences are consumed before general
    ones; ties broken by descending support, then lexicographically.
    """
    if min_support < 2:
        raise ValueError("min_support must be >= 2")
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    support = defaultdict(int)
    for pair in marked:
        seen = set()
        for n in range(2, max_len + 1):
            seen.update(ngrams(pair.source, n))
        for gram in seen:
            support[gram] += 1
    common = [(gram, count) for gram, count in support.items() if count >= min_support]
    common.sort(key=lambda item: (-len(item[0]), -item[1], item[0]))
    return [ConsolidationRule(gram, SOURCE, index)
            for index, (gram, _) in enumerate(common)]


def consolidate_corpus(split, source_rules=(), target_rules=()):
    """Apply rules to the training set; one-to-one sets stay untouched."""
    pairs = []
    for pair in split.training:
        pairs.append(PhrasePair(
            apply_rules(pair.source, source_rules),
            apply_rules(pair.target, target_rules),
            pair.standardized, pair.topic))
    training = ParallelCorpus(tuple(pairs), split.training.source_lang,
                              split.training.target_lang)
    return CorporaSplit(training, split.one_to_one)


def parse_rules(text):
    """Rule file: lines "side<TAB>pattern tokens" in application order."""
    rules = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            side, pattern_text = line.split("\t", 1)
        except ValueError:
            raise ValueError("rule line %d: expected side<TAB>pattern" % lineno) from None
        pattern = tuple(pattern_text.split())
        if side not in (SOURCE, TARGET):
            raise ValueError("rule line %d: unknown side %r" % (lineno, side))
        if len(pattern) < 2:
            raise ValueError("rule line %d: pattern needs >= 2 tokens" % lineno)
        rules.append(ConsolidationRule(pattern, side, len(rules)))
    return rules


def serialize_rules(rules):
    return "".join("%s\t%s\n" % (r.side, " ".join(r.pattern)) for r in rules)
