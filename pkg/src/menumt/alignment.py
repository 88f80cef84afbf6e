"""Lexical-translation EM training and per-pair word alignment.

Lexical translation probabilities t(target|source) are estimated by EM:
each target token is generated by exactly one source token of its pair,
chosen uniformly. The Viterbi step then links every source token to its
most probable target position.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field


@dataclass
class AlignmentModel:
    lex_prob: dict  # source token -> {target token: t(target|source)}
    iterations_run: int
    log_likelihood_trace: list = field(default_factory=list)

    def prob(self, source_token, target_token):
        return self.lex_prob.get(source_token, {}).get(target_token, 0.0)


@dataclass(frozen=True)
class PositionIndices:
    links: tuple  # links[i] = target index for source index i
    low_confidence: frozenset = frozenset()

    def __str__(self):
        return ", ".join("%d=%d" % (i, j) for i, j in enumerate(self.links))


def train_em(corpus, iterations=10):
    """Estimate t(target|source) by EM with uniform initialization."""
    pairs = [(p.source, p.target) for p in corpus]
    if not pairs:
        raise ValueError("cannot train on an empty corpus")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")

    cooc = defaultdict(set)
    for source, target in pairs:
        for s in source:
            cooc[s].update(target)
    lex = {s: {t: 1.0 / len(ts) for t in sorted(ts)} for s, ts in cooc.items()}

    trace = []
    for _ in range(iterations):
        counts = defaultdict(lambda: defaultdict(float))
        totals = defaultdict(float)
        log_likelihood = 0.0
        for source, target in pairs:
            for t in target:
                # each target token aligns to one source token; its posterior
                # is shared across the pair's source tokens
                mass = sum(lex[s][t] for s in source)
                log_likelihood += math.log(mass / len(source))
                for s in source:
                    expected = lex[s][t] / mass
                    counts[s][t] += expected
                    totals[s] += expected
        for s, row in counts.items():
            norm = totals[s]
            lex[s] = {t: c / norm for t, c in sorted(row.items())}
        trace.append(log_likelihood)

    return AlignmentModel(lex, iterations, trace)


def viterbi_align(model, pair):
    """Link each source token to its argmax target position.

    Ties break toward the lowest target index. A source token unknown to
    the model links to the positionally nearest target index and is
    flagged as low-confidence.
    """
    links = []
    low_confidence = set()
    last = len(pair.target) - 1
    for i, s in enumerate(pair.source):
        row = model.lex_prob.get(s)
        if not row:
            links.append(min(i, last))
            low_confidence.add(i)
            continue
        best_j, best_p = min(i, last), 0.0
        for j, t in enumerate(pair.target):
            p = row.get(t, 0.0)
            if p > best_p:
                best_j, best_p = j, p
        if best_p == 0.0:
            low_confidence.add(i)
        links.append(best_j)
    return PositionIndices(tuple(links), frozenset(low_confidence))


def serialize_model(model):
    """UTF-8 lines "source<TAB>target<TAB>prob", source then descending prob."""
    lines = []
    for s in sorted(model.lex_prob):
        row = model.lex_prob[s]
        for t, p in sorted(row.items(), key=lambda item: (-item[1], item[0])):
            lines.append("%s\t%s\t%.10g" % (s, t, p))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_model(text):
    lex = defaultdict(dict)
    for line in text.splitlines():
        if not line.strip():
            continue
        s, t, p = line.split("\t")
        lex[s][t] = float(p)
    return AlignmentModel(dict(lex), 0, [])
