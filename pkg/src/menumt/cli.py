"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import alignment, consolidation, corpus, pipeline
from .menudb import MenuStore, StoreError, dialog_templates, parse_dsl

USAGE_ERROR = 1
DATA_ERROR = 2


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _emit(data, as_json=True):
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(data)


def cmd_stats(args):
    parsed = corpus.parse_corpus(_read(args.corpus), allow_joined=args.consolidated)
    stats = corpus.corpus_stats(parsed, args.side, args.nmax)
    _emit(stats.as_dict())


def cmd_split(args):
    parsed = corpus.parse_corpus(_read(args.corpus))
    split = consolidation.split_standardized(parsed)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "training.tsv").write_text(corpus.serialize_corpus(split.training),
                                      encoding="utf-8")
    summary = {"training_pairs": len(split.training), "one_to_one": {}}
    for topic, pairs in sorted(split.one_to_one.items()):
        (out / ("one2one_%s.tsv" % topic)).write_text(
            corpus.serialize_corpus(corpus.ParallelCorpus(tuple(pairs))),
            encoding="utf-8")
        summary["one_to_one"][topic] = len(pairs)
    _emit(summary)


def cmd_consolidate(args):
    parsed = corpus.parse_corpus(_read(args.corpus))
    split = consolidation.split_standardized(parsed)
    rules = []
    for path in args.rules:
        rules.extend(consolidation.parse_rules(_read(path)))
    if args.auto:
        marked = consolidation.mark_for_consolidation(split.training)
        rules.extend(consolidation.auto_consolidate(
            marked, args.min_support, args.max_rule_len))
    before = corpus.corpus_stats(split.training, "source", args.nmax)
    split = consolidation.consolidate_corpus(
        split,
        [r for r in rules if r.side == consolidation.SOURCE],
        [r for r in rules if r.side == consolidation.TARGET])
    after = corpus.corpus_stats(split.training, "source", args.nmax)
    Path(args.output).write_text(corpus.serialize_corpus(split.training),
                                 encoding="utf-8")
    if args.rules_out:
        Path(args.rules_out).write_text(consolidation.serialize_rules(rules),
                                        encoding="utf-8")
    _emit({"rules": len(rules), "before": before.as_dict(),
           "after": after.as_dict()})


def cmd_train(args):
    if args.manifest:
        manifest = pipeline.BuildManifest.from_json(_read(args.manifest))
        if args.output_dir:
            manifest.output_dir = args.output_dir
    else:
        if not args.corpus:
            raise UsageError("either --manifest or --corpus is required")
        manifest = pipeline.BuildManifest(
            corpus=args.corpus, output_dir=args.output_dir or "build")
    report = pipeline.build(manifest)
    _emit(report)


def cmd_translate(args):
    bundle = pipeline.load_bundle(args.build, mode=args.mode)
    result = bundle.translate(args.text, k=args.k)
    _emit(result.as_dict())


def cmd_evaluate(args):
    bundle = pipeline.load_bundle(args.build)
    gold = pipeline.parse_gold(_read(args.gold))
    _emit(pipeline.evaluate(bundle, gold))


def cmd_bench(args):
    _emit(pipeline.bench(args.build, args.inputs, args.repetitions))


def cmd_db_import(args):
    store = MenuStore(args.store)
    records = parse_dsl(_read(args.dsl))
    images = {}
    if args.images:
        for path in Path(args.images).iterdir():
            images[path.stem] = path.read_bytes()
    store.import_records(records, images)
    _emit({"imported_dishes": len(records), "tables": store.table_counts()})


def cmd_db_query(args):
    store = MenuStore(args.store)
    if args.kind == "dish":
        view = store.lookup_dish(args.name)
        if view is None:
            raise StoreError("unknown dish %r" % args.name)
        _emit({"name": view.name, "image_id": view.image_id,
               "ingredients": [
                   {"name": u.name, "optional": u.optional,
                    "substitutes": list(u.substitutes), "image_id": u.image_id}
                   for u in view.ingredients]})
    else:
        view = store.lookup_ingredient(args.name)
        if view is None:
            raise StoreError("unknown ingredient %r" % args.name)
        _emit({"name": view.name, "image_id": view.image_id,
               "dishes": list(view.dishes)})


def cmd_db_flag(args):
    store = MenuStore(args.store)
    if args.profile is None:
        profile = store.create_profile(args.conditions, args.ingredients)
    else:
        profile = args.profile
    flags = store.flag_dish(args.dish, profile)
    _emit({"profile": profile,
           "flags": [{"ingredient": name, "optional": optional,
                      "via_substitute": via}
                     for name, optional, via in flags],
           "dialogs": dialog_templates(args.dish, [f[0] for f in flags])})


def cmd_serve(args):
    from .service import create_app  # deferred: pulls in fastapi
    import uvicorn

    app = create_app(build_dir=args.build, store_path=args.store,
                     default_k=args.k, cors_origins=args.cors)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


class UsageError(ValueError):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="menumt",
        description="Offline menu translation engine and disambiguation DB")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="corpus n-gram statistics")
    p.add_argument("corpus")
    p.add_argument("--side", choices=["source", "target"], default="source")
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--consolidated", action="store_true",
                   help="accept '&'-joined tokens")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("split", help="split corpus into training and one-to-one")
    p.add_argument("corpus")
    p.add_argument("--output-dir", default="split")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("consolidate", help="apply/derive consolidation rules")
    p.add_argument("corpus")
    p.add_argument("--rules", action="append", default=[])
    p.add_argument("--auto", action="store_true")
    p.add_argument("--min-support", type=int, default=2)
    p.add_argument("--max-rule-len", type=int, default=4)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--output", default="consolidated.tsv")
    p.add_argument("--rules-out")
    p.set_defaults(func=cmd_consolidate)

    p = sub.add_parser("train", help="run the full build pipeline")
    p.add_argument("--manifest")
    p.add_argument("--corpus")
    p.add_argument("--output-dir")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("translate", help="translate one phrase")
    p.add_argument("text")
    p.add_argument("--build", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--mode", choices=["ondemand", "memory"], default="ondemand")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("evaluate", help="accuracy against a gold set")
    p.add_argument("--build", required=True)
    p.add_argument("--gold", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("bench", help="load/translation timing")
    p.add_argument("--build", required=True)
    p.add_argument("--repetitions", type=int, default=100)
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_bench)

    db = sub.add_parser("db", help="menu database operations")
    dbsub = db.add_subparsers(dest="db_command", required=True)

    p = dbsub.add_parser("import", help="import a DSL file")
    p.add_argument("dsl")
    p.add_argument("--store", default="menu.db")
    p.add_argument("--images", help="directory of image files keyed by stem")
    p.set_defaults(func=cmd_db_import)

    p = dbsub.add_parser("query", help="look up a dish or ingredient")
    p.add_argument("kind", choices=["dish", "ingredient"])
    p.add_argument("name")
    p.add_argument("--store", default="menu.db")
    p.set_defaults(func=cmd_db_query)

    p = dbsub.add_parser("flag", help="flag a dish against a diet profile")
    p.add_argument("dish")
    p.add_argument("--store", default="menu.db")
    p.add_argument("--profile", type=int)
    p.add_argument("--conditions", nargs="*", default=[])
    p.add_argument("--ingredients", nargs="*", default=[])
    p.set_defaults(func=cmd_db_flag)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--build", required=True)
    p.add_argument("--store")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--cors", nargs="*", default=["*"])
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except (corpus.CorpusError, StoreError, pipeline.BuildError, ValueError,
            OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return DATA_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
