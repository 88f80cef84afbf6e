"""Backoff n-gram language model of the target language.

Witten-Bell smoothing in its interpolated form:

    p(w|h) = (c(hw) + T(h) * p(w|h')) / (c(h) + T(h))

where T(h) is the number of distinct continuations of context h and h'
drops the oldest word. Unigram mass left over from observed types goes
to a single <unk> token, so the distribution over vocab + {<unk>} sums
to one for every context. All stored scores are log base 10.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict

BOS = "<s>"
EOS = "</s>"
UNK = "<unk>"


class LanguageModel:
    def __init__(self, order, counts, vocab):
        self.order = order
        self.counts = counts  # n -> Counter of n-gram tuples (last token never BOS)
        self.vocab = vocab  # emitted types, includes EOS
        # continuation totals/types per context, from the (n+1)-gram counts
        self._cont_total = defaultdict(float)
        self._cont_types = defaultdict(int)
        for n in range(2, order + 1):
            for gram, c in counts[n].items():
                self._cont_total[gram[:-1]] += c
                self._cont_types[gram[:-1]] += 1
        self._unigram_total = sum(counts[1].values())
        self._unigram_types = len(counts[1])

    def prob(self, word, context=()):
        """Conditional probability of one word, context most-recent-last."""
        context = tuple(context)[-(self.order - 1):] if self.order > 1 else ()
        return self._prob(self._map(word), tuple(self._map(w) if w != BOS else BOS
                                                 for w in context))

    def _map(self, word):
        return word if word in self.vocab or word == BOS else UNK

    def _prob(self, word, context):
        if not context:
            n, t = self._unigram_total, self._unigram_types
            if word == UNK:
                return t / (n + t)
            return self.counts[1].get((word,), 0) / (n + t)
        total = self._cont_total.get(context, 0.0)
        if total == 0.0:
            return self._prob(word, context[1:])
        types = self._cont_types[context]
        c = self.counts[len(context) + 1].get(context + (word,), 0)
        return (c + types * self._prob(word, context[1:])) / (total + types)

    def backoff_weight(self, context):
        """log10 weight applied when a continuation of context is unseen."""
        context = tuple(context)
        total = self._cont_total.get(context, 0.0)
        if total == 0.0:
            return 0.0
        types = self._cont_types[context]
        return math.log10(types / (total + types))

    def logprob(self, tokens):
        """log10 probability of a token sequence with sentence boundaries."""
        history = (BOS,) * (self.order - 1)
        total = 0.0
        for word in [self._map(t) for t in tokens] + [EOS]:
            total += math.log10(self._prob(word, history))
            history = (history + (word,))[1:] if self.order > 1 else ()
        return total

    def logprob_step(self, history, word):
        """One conditional log10 term plus the updated history tuple."""
        word = self._map(word)
        lp = math.log10(self._prob(word, history))
        if self.order > 1:
            history = (history + (word,))[1:]
        return lp, history

    def start_history(self):
        return (BOS,) * (self.order - 1)

    def end_logprob(self, history):
        return math.log10(self._prob(EOS, history))


def train_lm(sequences, order=3):
    """Count padded n-grams over target-side token sequences."""
    if order < 1:
        raise ValueError("order must be >= 1")
    sequences = [tuple(s) for s in sequences]
    if not sequences:
        raise ValueError("cannot train on an empty corpus")
    counts = {n: Counter() for n in range(1, order + 1)}
    vocab = set()
    for seq in sequences:
        vocab.update(seq)
        padded = (BOS,) * (order - 1) + seq + (EOS,)
        for n in range(1, order + 1):
            for i in range(len(padded) - n + 1):
                gram = padded[i:i + n]
                if gram[-1] == BOS:  # BOS is context only, never predicted
                    continue
                counts[n][gram] += 1
    vocab.add(EOS)
    return LanguageModel(order, counts, vocab)


def dump_arpa(lm):
    """ARPA-style text rendering for inspection."""
    lines = ["\\data\\"]
    for n in range(1, lm.order + 1):
        lines.append("ngram %d=%d" % (n, len(lm.counts[n])))
    for n in range(1, lm.order + 1):
        lines.append("")
        lines.append("\\%d-grams:" % n)
        for gram in sorted(lm.counts[n]):
            context, word = gram[:-1], gram[-1]
            lp = math.log10(lm._prob(word, context))
            entry = "%.6f\t%s" % (lp, " ".join(gram))
            if n < lm.order:
                bow = lm.backoff_weight(gram)
                if bow != 0.0:
                    entry += "\t%.6f" % bow
            lines.append(entry)
    lines.append("")
    lines.append("\\end\\")
    return "\n".join(lines) + "\n"
