import math
import random

import pytest

from menumt.langmodel import BOS, EOS, UNK, dump_arpa, train_lm

TOY = [("mint", "cream"), ("mint", "tea")]


def test_empty_corpus_rejected():
    with pytest.raises(ValueError):
        train_lm([], order=3)


def test_unigram_counts():
    lm = train_lm([("rice",)], order=1)
    # observed mass: rice and </s>, two types
    assert lm.counts[1][("rice",)] == 1
    assert lm.prob("rice") == pytest.approx(1 / (2 + 2))


def test_raw_bigram_count_from_hand_tally():
    lm = train_lm(TOY, order=2)
    assert lm.counts[1][("mint",)] == 2
    assert lm.counts[2][("mint", "cream")] == 1


def test_unseen_token_has_positive_probability():
    lm = train_lm(TOY, order=3)
    assert lm.prob("zzz") > 0
    assert lm.prob("zzz", ("mint",)) > 0
    assert lm.logprob(("zzz", "zzz")) > float("-inf")


def test_logprob_matches_hand_computed_chain():
    lm = train_lm(TOY, order=2)
    expected = (math.log10(lm.prob("mint", (BOS,)))
                + math.log10(lm.prob("cream", ("mint",)))
                + math.log10(lm.prob(EOS, ("cream",))))
    assert lm.logprob(("mint", "cream")) == pytest.approx(expected, abs=1e-12)


def test_empty_sequence_is_boundary_only():
    lm = train_lm(TOY, order=2)
    assert lm.logprob(()) == pytest.approx(math.log10(lm.prob(EOS, (BOS,))))


def test_appending_token_decreases_logprob_before_boundary():
    lm = train_lm(TOY, order=3)
    # compare raw word terms, sans the final boundary term
    short = lm.logprob(("mint",)) - math.log10(lm.prob(EOS, (BOS, "mint")))
    longer = (lm.logprob(("mint", "zzz"))
              - math.log10(lm.prob(EOS, ("mint", UNK))))
    assert longer < short


def contexts_for(lm, rng, count):
    words = sorted(lm.vocab) + [UNK]
    out = [(), (BOS,), (BOS, BOS)]
    while len(out) < count:
        size = rng.randint(1, max(1, lm.order - 1))
        out.append(tuple(rng.choice(words) for _ in range(size)))
    return out[:count]


@pytest.mark.parametrize("order", [1, 2, 3])
def test_context_normalization(order):
    lm = train_lm(TOY + [("green", "mint", "tea"), ("cream",)], order=order)
    rng = random.Random(7)
    support = sorted(lm.vocab) + [UNK]
    for context in contexts_for(lm, rng, 40):
        total = sum(lm.prob(w, context) for w in support)
        assert total == pytest.approx(1.0, abs=1e-9)


def test_counts_are_order_free():
    shuffled = list(reversed(TOY + [("green", "tea")]))
    a = train_lm(TOY + [("green", "tea")], order=3)
    b = train_lm(shuffled, order=3)
    assert a.counts == b.counts
    assert a.logprob(("mint", "tea")) == b.logprob(("mint", "tea"))


def test_unseen_trigram_backs_off_exactly():
    lm = train_lm(TOY + [("green", "tea", "cream")], order=3)
    context = ("tea", "cream")  # seen bigram context
    word = "tea"                # continuation unseen after it
    assert lm.counts[3].get(context + (word,), 0) == 0
    expected = 10 ** lm.backoff_weight(context) * lm.prob(word, ("cream",))
    assert lm.prob(word, context) == pytest.approx(expected, rel=1e-12)


def test_unseen_context_falls_through():
    lm = train_lm(TOY, order=3)
    assert lm.prob("cream", ("zzz", "mint")) == pytest.approx(
        lm.prob("cream", ("mint",)))


def test_arpa_dump_shape():
    lm = train_lm(TOY, order=2)
    text = dump_arpa(lm)
    assert text.startswith("\\data\\")
    assert "\\1-grams:" in text and "\\2-grams:" in text
    assert text.rstrip().endswith("\\end\\")
    assert "ngram 1=%d" % len(lm.counts[1]) in text


def test_stepwise_scoring_matches_whole_sequence():
    lm = train_lm(TOY + [("green", "tea")], order=3)
    tokens = ("mint", "green", "tea")
    history = lm.start_history()
    total = 0.0
    for tok in tokens:
        lp, history = lm.logprob_step(history, tok)
        total += lp
    total += lm.end_logprob(history)
    assert total == pytest.approx(lm.logprob(tokens), abs=1e-12)
