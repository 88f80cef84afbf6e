"""K-best beam decoding over a LookupSet and a language model.

The search kernel exists twice: a Cython extension for speed and a
pure-Python fallback, selected at import (override with the
MENUMT_BACKEND=python environment variable). Both produce identical
k-best lists; benchmarks/bench_backends.py compares them.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from ..consolidation import apply_rules
from ..corpus import JOINER, tokenize

if os.environ.get("MENUMT_BACKEND") == "python":
    from . import _search_py as _kernel
    BACKEND = "python"
else:
    try:
        from . import _search_cy as _kernel  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _search_py as _kernel
        BACKEND = "python"

OOV_PENALTY = 10.0  # log10 cost for copying an unknown token through
MAX_JUMP = 3


@dataclass(frozen=True)
class DecoderWeights:
    translation: float = 1.0
    lm: float = 0.5
    distortion: float = 0.3
    word_penalty: float = -0.1  # negative: longer outputs get cheaper

    def as_tuple(self):
        return (self.translation, self.lm, self.distortion, self.word_penalty)


@dataclass(frozen=True)
class TranslationResult:
    rank: int
    tokens: tuple
    text: str
    cost: float
    components: dict

    def as_dict(self):
        return {"rank": self.rank, "text": self.text, "cost": self.cost,
                "components": dict(self.components)}


@dataclass(frozen=True)
class KBestList:
    items: tuple
    oov: tuple = ()

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    @property
    def top(self):
        return self.items[0]

    def as_dict(self):
        return {"kbest": [item.as_dict() for item in self.items],
                "oov": list(self.oov)}


def detokenize_consolidated(tokens):
    """Join tokens with spaces, expanding '&'-joined words back out."""
    return " ".join(tok.replace(JOINER, " ") for tok in tokens)


def gather_options(tokens, lookup, max_n):
    """Phrase options per source span, plus pass-through for OOV tokens."""
    n = len(tokens)
    options = []
    covered = set()
    single_match = set()
    for i in range(n):
        for j in range(i + 1, min(i + max_n, n) + 1):
            entries = lookup.lookup(tokens[i:j])
            if not entries:
                continue
            covered.update(range(i, j))
            if j == i + 1:
                single_match.add(i)
            mask = ((1 << (j - i)) - 1) << i
            for entry in entries:
                options.append((i, j, mask, entry.target, -math.log10(entry.weight)))
    for i in range(n):
        if i not in single_match:
            options.append((i, i + 1, 1 << i, (tokens[i],), OOV_PENALTY))
    oov = [tokens[i] for i in range(n) if i not in covered]
    return options, oov


def translate(text, lookup, lm, weights=DecoderWeights(), k=5, beam_size=50,
              pre_rules=None, max_jump=MAX_JUMP):
    """Decode an input phrase into a ranked k-best list."""
    if k < 1:
        raise ValueError("k must be >= 1")
    tokens = tuple(tokenize(text, allow_joined=True)) if isinstance(text, str) \
        else tuple(text)
    if not tokens:
        raise ValueError("input is empty after tokenization")
    if pre_rules:
        tokens = apply_rules(tokens, pre_rules)
    options, oov = gather_options(tokens, lookup, lookup.max_n)
    raw = _kernel.run_beam(len(tokens), options, lm, weights.as_tuple(),
                           k, beam_size, max_jump)
    items = []
    for rank, (cost, out, tm, lm_cost, dist, wp) in enumerate(raw, start=1):
        items.append(TranslationResult(
            rank, out, detokenize_consolidated(out), cost,
            {"tm": tm, "lm": lm_cost, "dist": dist, "wp": wp}))
    return KBestList(tuple(items), tuple(oov))
