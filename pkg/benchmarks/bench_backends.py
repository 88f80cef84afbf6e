"""Compare the Cython and pure-Python beam-search kernels.

Builds the bundled sample corpus into a temporary directory, then times
repeated translations through each kernel and checks that both return
identical k-best lists.

Usage: python3 benchmarks/bench_backends.py [--repetitions N]
"""

import argparse
import statistics
import sys
import tempfile
import time
from importlib import resources
from pathlib import Path

from menumt import pipeline
from menumt.decoder import gather_options

try:
    from menumt.decoder import _search_cy
except ImportError:
    _search_cy = None
from menumt.decoder import _search_py

INPUTS = [
    "arroz a la cubana",
    "gambas al ajillo",
    "sopa en salsa de tomate",
    "café cortado",
    "tortilla de patatas con pan",
]


def build_sample():
    root = Path(tempfile.mkdtemp(prefix="menumt-bench-"))
    corpus = resources.files("menumt.data").joinpath(
        "sample/corpus.tsv").read_text(encoding="utf-8")
    (root / "corpus.tsv").write_text(corpus, encoding="utf-8")
    out = root / "out"
    pipeline.build(pipeline.BuildManifest(corpus=str(root / "corpus.tsv"),
                                          output_dir=str(out)))
    return out


def time_kernel(kernel, jobs, repetitions):
    times = []
    for _ in range(repetitions):
        started = time.perf_counter()
        for n_src, options, lm, weights, k, beam, jump in jobs:
            kernel.run_beam(n_src, options, lm, weights, k, beam, jump)
        times.append(time.perf_counter() - started)
    return times


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repetitions", type=int, default=200)
    args = parser.parse_args(argv)

    bundle = pipeline.load_bundle(build_sample())
    jobs = []
    for text in INPUTS:
        from menumt.consolidation import apply_rules
        from menumt.corpus import tokenize
        tokens = tuple(tokenize(text, allow_joined=True))
        if bundle.pre_rules:
            tokens = apply_rules(tokens, bundle.pre_rules)
        options, _ = gather_options(tokens, bundle.lookup, bundle.lookup.max_n)
        jobs.append((len(tokens), options, bundle.lm,
                     bundle.weights.as_tuple(), bundle.k, bundle.beam_size, 3))

    results = {"python": time_kernel(_search_py, jobs, args.repetitions)}
    if _search_cy is not None:
        results["cython"] = time_kernel(_search_cy, jobs, args.repetitions)
        for job in jobs:
            if _search_py.run_beam(*job) != _search_cy.run_beam(*job):
                print("MISMATCH between kernels on %r" % (job[0],))
                return 1
        print("kernels agree on all %d inputs" % len(jobs))
    else:
        print("cython kernel not built; timing the python fallback only")

    for name, times in results.items():
        print("%-7s median %.3f ms  mean %.3f ms  (batch of %d inputs, %d reps)"
              % (name, 1000 * statistics.median(times),
                 1000 * statistics.mean(times), len(jobs), args.repetitions))
    if "cython" in results:
        speedup = statistics.median(results["python"]) / statistics.median(
            results["cython"])
        print("cython speedup: %.2fx" % speedup)
    return 0


if __name__ == "__main__":
    sys.exit(main())
