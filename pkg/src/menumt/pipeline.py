"""End-to-end build, artifact bundle loading, evaluation and timing."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field, asdict, replace
from pathlib import Path

from . import alignment, binformat, consolidation, corpus, langmodel, phrasetable
from .decoder import DecoderWeights, KBestList, translate

TRAINED_TABLE = "phrase_table.mlpt"
TRAINED_TABLE_TEXT = "phrase_table.txt"
CONSOLIDATED = "corpus.consolidated.tsv"
RULES = "rules.tsv"
ALIGNMENT_MODEL = "alignment.tsv"
LM_ARPA = "lm.arpa"
MANIFEST = "manifest.json"


class BuildError(RuntimeError):
    def __init__(self, stage, cause):
        super().__init__("stage %r failed: %s" % (stage, cause))
        self.stage = stage


@dataclass
class BuildManifest:
    corpus: str
    rules: list = field(default_factory=list)
    auto_rules: bool = True
    min_support: int = 2
    max_rule_len: int = 4
    max_n: int = 3
    k: int = 5
    beam_size: int = 50
    em_iterations: int = 10
    lm_order: int = 3
    weights: dict = field(default_factory=lambda: asdict(DecoderWeights()))
    output_dir: str = "build"

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError("unknown manifest fields: %s" % sorted(unknown))
        return cls(**data)

    def to_json(self):
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    def decoder_weights(self):
        return DecoderWeights(**self.weights)


def _sha256(data):
    return hashlib.sha256(data).hexdigest()


def _one_to_one_name(topic):
    return "one2one_%s.mlpt" % topic


def build(manifest):
    """Run the whole training pipeline; returns the artifact report dict."""
    out = Path(manifest.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    artifacts = {}

    def emit(name, data):
        if isinstance(data, str):
            data = data.encode()
        (out / name).write_bytes(data)
        artifacts[name] = _sha256(data)

    stage = "parse"
    try:
        raw = Path(manifest.corpus).read_text(encoding="utf-8")
        full = corpus.parse_corpus(raw)

        stage = "split"
        split = consolidation.split_standardized(full)
        stats_before = corpus.corpus_stats(split.training, "source", manifest.max_n)

        stage = "consolidate"
        rules = []
        for path in manifest.rules:
            rules.extend(consolidation.parse_rules(
                Path(path).read_text(encoding="utf-8")))
        if manifest.auto_rules:
            marked = consolidation.mark_for_consolidation(split.training)
            rules.extend(consolidation.auto_consolidate(
                marked, manifest.min_support, manifest.max_rule_len))
        source_rules = [r for r in rules if r.side == consolidation.SOURCE]
        target_rules = [r for r in rules if r.side == consolidation.TARGET]
        split = consolidation.consolidate_corpus(split, source_rules, target_rules)
        stats_after = corpus.corpus_stats(split.training, "source", manifest.max_n)
        emit(RULES, consolidation.serialize_rules(rules))
        merged_pairs = list(split.training.pairs)
        for topic in sorted(split.one_to_one):
            merged_pairs.extend(split.one_to_one[topic])
        emit(CONSOLIDATED, corpus.serialize_corpus(
            corpus.ParallelCorpus(tuple(merged_pairs))))

        stage = "align"
        model = alignment.train_em(split.training, manifest.em_iterations)
        emit(ALIGNMENT_MODEL, alignment.serialize_model(model))

        stage = "extract"
        extracted = []
        for pair in split.training:
            links = alignment.viterbi_align(model, pair)
            extracted.extend(phrasetable.extract_phrases(pair, links, manifest.max_n))
        trained = phrasetable.score_table(extracted, manifest.max_n)
        emit(TRAINED_TABLE_TEXT, phrasetable.serialize_text(trained))
        emit(TRAINED_TABLE, binformat.serialize_binary(trained))

        stage = "one_to_one"
        for topic in sorted(split.one_to_one):
            # keys must match decode-time input, which is rule-consolidated
            pairs = [replace(p, source=consolidation.apply_rules(p.source,
                                                                 source_rules))
                     for p in split.one_to_one[topic]]
            table = phrasetable.build_one_to_one(pairs, topic)
            emit(_one_to_one_name(topic), binformat.serialize_binary(table))

        stage = "language_model"
        lm = langmodel.train_lm(_lm_sequences(split), manifest.lm_order)
        emit(LM_ARPA, langmodel.dump_arpa(lm))
    except BuildError:
        raise
    except Exception as exc:
        raise BuildError(stage, exc) from exc

    report = {
        "options": json.loads(manifest.to_json()),
        "artifacts": artifacts,
        "stats_before": stats_before.as_dict(),
        "stats_after": stats_after.as_dict(),
        "trained_entries": len(trained),
        "rule_count": len(rules),
    }
    (out / MANIFEST).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n",
                                encoding="utf-8")
    return report


def _lm_sequences(split):
    # the LM sees every target phrase, one-to-one sets included
    sequences = [p.target for p in split.training]
    for topic in sorted(split.one_to_one):
        sequences.extend(p.target for p in split.one_to_one[topic])
    return sequences


class Bundle:
    """Loaded artifacts ready for decoding."""

    def __init__(self, lookup, lm, weights, k=5, beam_size=50, pre_rules=None):
        self.lookup = lookup
        self.lm = lm
        self.weights = weights
        self.k = k
        self.beam_size = beam_size
        self.pre_rules = pre_rules

    def translate(self, text, k=None):
        return translate(text, self.lookup, self.lm, self.weights,
                         k or self.k, self.beam_size, self.pre_rules)


def load_bundle(build_dir, mode="ondemand", consolidate_input=None):
    """Open a build directory; mode 'ondemand' (seekable binary tables)
    or 'memory' (tables fully parsed up front).

    consolidate_input: apply the build's source-side consolidation rules
    to decoder input. Default None means auto: on whenever the build has
    rules, since consolidated table keys are unreachable otherwise.
    """
    out = Path(build_dir)
    report = json.loads((out / MANIFEST).read_text(encoding="utf-8"))
    manifest = BuildManifest(**report["options"])

    tables = []
    names = [TRAINED_TABLE] + sorted(
        p.name for p in out.glob("one2one_*.mlpt"))
    for name in names:
        if mode == "ondemand":
            tables.append(binformat.open_ondemand(str(out / name)))
        elif mode == "memory":
            tables.append(binformat.load_full((out / name).read_bytes()))
        else:
            raise ValueError("mode must be 'ondemand' or 'memory'")
    lookup = phrasetable.LookupSet(tables)

    consolidated = corpus.parse_corpus(
        (out / CONSOLIDATED).read_text(encoding="utf-8"), allow_joined=True)
    split = consolidation.split_standardized(consolidated)
    lm = langmodel.train_lm(_lm_sequences(split), manifest.lm_order)

    pre_rules = None
    if consolidate_input or consolidate_input is None:
        rules = consolidation.parse_rules((out / RULES).read_text(encoding="utf-8"))
        source_rules = [r for r in rules if r.side == consolidation.SOURCE]
        if consolidate_input or source_rules:
            pre_rules = source_rules

    return Bundle(lookup, lm, manifest.decoder_weights(), manifest.k,
                  manifest.beam_size, pre_rules)


def parse_gold(text):
    """Gold test set: "source<TAB>reference" per line."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise corpus.CorpusError("expected source<TAB>reference", lineno)
        pairs.append((parts[0], parts[1]))
    return pairs


def evaluate(bundle, gold):
    """Exact-match accuracy over a gold set: top-1 and anywhere-in-k."""
    if not gold:
        raise ValueError("gold set is empty")
    top1 = topk = 0
    times = []
    for source, reference in gold:
        started = time.perf_counter()
        kbest = bundle.translate(source)
        times.append(time.perf_counter() - started)
        ref = reference.casefold().strip()
        outputs = [item.text.casefold() for item in kbest]
        if outputs and outputs[0] == ref:
            top1 += 1
        if ref in outputs:
            topk += 1
    total = len(gold)
    return {
        "entries": total,
        "top1": top1,
        "topk": topk,
        "top1_accuracy": 100.0 * top1 / total,
        "topk_accuracy": 100.0 * topk / total,
        "mean_translation_s": sum(times) / total,
    }


def bench(build_dir, inputs, repetitions=100):
    """Timing report: load (on-demand vs full) and warm translation."""
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")

    started = time.perf_counter()
    bundle = load_bundle(build_dir, mode="ondemand")
    ondemand_load = time.perf_counter() - started

    started = time.perf_counter()
    load_bundle(build_dir, mode="memory")
    full_load = time.perf_counter() - started

    report = {"load_ondemand_s": ondemand_load, "load_full_s": full_load,
              "inputs": {}}
    for text in inputs:
        started = time.perf_counter()
        bundle.translate(text)
        first = time.perf_counter() - started
        warm = []
        for _ in range(repetitions):
            started = time.perf_counter()
            bundle.translate(text)
            warm.append(time.perf_counter() - started)
        report["inputs"][text] = {
            "first_s": first,
            "warm_mean_s": sum(warm) / len(warm),
            "warm_max_s": max(warm),
        }
    return report
