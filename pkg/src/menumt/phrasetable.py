"""Phrase extraction, relative-frequency scoring and table lookup.

A trained table is built from alignment-consistent phrase pairs scored
by relative frequency; one-to-one tables carry whole phrases with unit
weight. A LookupSet lets the decoder query all tables at once.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

TRAINED = "trained"
ONE_TO_ONE = "one_to_one"


@dataclass(frozen=True)
class PhraseTableEntry:
    source: tuple
    target: tuple
    weight: float

    def __post_init__(self):
        if not 0.0 < self.weight <= 1.0:
            raise ValueError("weight must be in (0, 1], got %r" % (self.weight,))


class PhraseTable:
    def __init__(self, entries, origin=TRAINED, topic=None, max_n=3):
        self.origin = origin
        self.topic = topic
        self.max_n = max_n
        self._by_source = defaultdict(list)
        for entry in entries:
            self._by_source[entry.source].append(entry)
        for group in self._by_source.values():
            group.sort(key=lambda e: (-e.weight, e.target))

    def __len__(self):
        return sum(len(g) for g in self._by_source.values())

    def entries(self):
        for source in sorted(self._by_source):
            yield from self._by_source[source]

    def sources(self):
        return sorted(self._by_source)

    def lookup(self, source_phrase):
        return list(self._by_source.get(tuple(source_phrase), ()))


def extract_phrases(pair, align, max_n=3):
    """Alignment-consistent phrase pairs up to max_n source tokens.

    A source span is paired with the span of its aligned target indices
    when no source token outside the span links into that target span.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    links = align.links
    size = len(pair.source)
    extracted = []
    for i in range(size):
        for j in range(i + 1, min(i + max_n, size) + 1):
            inside = links[i:j]
            t_lo, t_hi = min(inside), max(inside)
            if any(t_lo <= links[o] <= t_hi
                   for o in range(size) if o < i or o >= j):
                continue
            extracted.append((pair.source[i:j], pair.target[t_lo:t_hi + 1]))
    return extracted


def score_table(extracted, max_n=3):
    """Relative-frequency weights: count(s, t) / count(s)."""
    counts = Counter(extracted)
    if not counts:
        raise ValueError("nothing to score")
    source_totals = Counter()
    for (source, _), c in counts.items():
        source_totals[source] += c
    entries = [PhraseTableEntry(source, target, c / source_totals[source])
               for (source, target), c in counts.items()]
    return PhraseTable(entries, TRAINED, max_n=max_n)


class AmbiguousOneToOneError(ValueError):
    """Same source phrase mapped to two different targets within a topic."""


def build_one_to_one(pairs, topic):
    """Whole-phrase entries with weight exactly 1.0."""
    targets = {}
    for pair in pairs:
        seen = targets.get(pair.source)
        if seen is not None and seen != pair.target:
            raise AmbiguousOneToOneError(
                "topic %r: %r maps to both %r and %r"
                % (topic, " ".join(pair.source), " ".join(seen), " ".join(pair.target)))
        targets[pair.source] = pair.target
    entries = [PhraseTableEntry(s, t, 1.0) for s, t in targets.items()]
    # whole phrases are the lookup keys, so spans must reach the longest one
    max_n = max((len(s) for s in targets), default=1)
    return PhraseTable(entries, ONE_TO_ONE, topic=topic, max_n=max_n)


class LookupSet:
    """Queries fan out over the trained table and all one-to-one tables."""

    def __init__(self, tables):
        self.tables = list(tables)

    @property
    def max_n(self):
        return max((t.max_n for t in self.tables), default=3)

    def lookup(self, source_phrase):
        results = []
        for table in self.tables:
            results.extend(table.lookup(source_phrase))
        return results

    def sources(self):
        seen = set()
        for table in self.tables:
            seen.update(table.sources())
        return sorted(seen)


def merge_tables(trained, one_to_one_tables=()):
    return LookupSet([trained, *one_to_one_tables])


def serialize_text(table):
    """Debug format: "source ||| target ||| weight" per line."""
    lines = ["%s ||| %s ||| %.10g" % (" ".join(e.source), " ".join(e.target), e.weight)
             for e in table.entries()]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_text(text, origin=TRAINED, topic=None, max_n=3):
    entries = []
    for line in text.splitlines():
        if not line.strip():
            continue
        source, target, weight = (part.strip() for part in line.split("|||"))
        entries.append(PhraseTableEntry(tuple(source.split()), tuple(target.split()),
                                        float(weight)))
    return PhraseTable(entries, origin, topic=topic, max_n=max_n)
