import pytest
from hypothesis import given, strategies as st

from menumt.corpus import (CorpusError, ParallelCorpus, PhrasePair,
                           corpus_stats, parse_corpus, serialize_corpus,
                           tokenize)

WORD = st.text(alphabet="abcdefghijkloñáéí", min_size=1, max_size=6)
PHRASE = st.lists(WORD, min_size=1, max_size=5).map(lambda ws: " ".join(ws))


def test_tokenize_lowercases_and_strips_punctuation():
    assert tokenize("Tortilla, de PATATAS.") == ["tortilla", "de", "patatas"]


def test_tokenize_keeps_accents_and_internal_hyphens():
    assert tokenize("pescaíto a-la-brasa") == ["pescaíto", "a-la-brasa"]


def test_tokenize_rejects_joiner_when_disallowed():
    with pytest.raises(CorpusError):
        tokenize("a&la", allow_joined=False)
    assert tokenize("a&la", allow_joined=True) == ["a&la"]


def test_parse_single_annotated_line():
    parsed = parse_corpus("tortilla de patatas\tpotato omelette\tstd\tmain\n")
    assert len(parsed) == 1
    pair = parsed.pairs[0]
    assert pair.source == ("tortilla", "de", "patatas")
    assert pair.target == ("potato", "omelette")
    assert pair.standardized
    assert pair.topic == "main"


def test_parse_empty_input():
    assert len(parse_corpus("")) == 0


def test_parse_three_lines_hand_counted():
    raw = ("arroz\trice\n"
           "café cortado\tespresso with milk\t121\tdrinks\n"
           "sopa de ajo\tgarlic soup\tstd\n")
    parsed = parse_corpus(raw)
    assert len(parsed) == 3
    assert [len(p.source) for p in parsed] == [1, 2, 3]
    assert [len(p.target) for p in parsed] == [1, 3, 2]
    assert parsed.pairs[1].standardized is False
    assert parsed.pairs[1].topic == "drinks"


def test_parse_errors_name_line_numbers():
    with pytest.raises(CorpusError, match="line 2"):
        parse_corpus("arroz\trice\nonly-one-field\n")
    with pytest.raises(CorpusError, match="line 1"):
        parse_corpus("...\trice\n")  # source empties out after stripping


def test_parse_rejects_unknown_flag():
    with pytest.raises(CorpusError):
        parse_corpus("arroz\trice\tmaybe\n")


def test_pair_sides_must_be_nonempty():
    with pytest.raises(ValueError):
        PhrasePair((), ("rice",))


def test_stats_empty_corpus():
    stats = corpus_stats(ParallelCorpus(()), "source", 3)
    assert stats.word_count == 0
    assert stats.distinct_ngrams == {1: 0, 2: 0, 3: 0}


def test_stats_hand_enumerated():
    parsed = parse_corpus("a b\tx\na b c\ty\n")
    stats = corpus_stats(parsed, "source", 3)
    assert stats.line_count == 2
    assert stats.word_count == 5
    assert stats.distinct_ngrams == {1: 3, 2: 2, 3: 1}


@st.composite
def corpora(draw):
    lines = draw(st.lists(st.tuples(PHRASE, PHRASE), min_size=0, max_size=8))
    raw = "".join("%s\t%s\t%s\n" % (s, t, draw(st.sampled_from(["std", "121"])))
                  for s, t in lines)
    return parse_corpus(raw)


@given(corpora())
def test_round_trip(parsed):
    assert parse_corpus(serialize_corpus(parsed)).pairs == parsed.pairs


@given(corpora(), st.randoms())
def test_word_count_invariant_under_reordering(parsed, rng):
    shuffled = list(parsed.pairs)
    rng.shuffle(shuffled)
    reordered = ParallelCorpus(tuple(shuffled))
    assert (corpus_stats(reordered, "source", 2).word_count
            == corpus_stats(parsed, "source", 2).word_count)


@given(corpora())
def test_ngram_counts_vanish_beyond_longest_line(parsed):
    longest = max((len(p.source) for p in parsed), default=0)
    stats = corpus_stats(parsed, "source", longest + 2)
    assert stats.distinct_ngrams[longest + 1] == 0
    assert stats.distinct_ngrams[longest + 2] == 0
