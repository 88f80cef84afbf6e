"""Build a service fixture for the e2e tests.

Usage: python3 make_fixture.py OUTPUT_DIR

Trains the bundled sample corpus into OUTPUT_DIR/build and imports the
bundled sample menu into OUTPUT_DIR/menu.db, then registers one diet
condition so profile flows have something to flag.
"""

import sys
from importlib import resources
from pathlib import Path

from menumt import pipeline
from menumt.menudb import MenuStore, parse_dsl


def main():
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)

    sample = resources.files("menumt.data").joinpath("sample")
    corpus_path = out / "corpus.tsv"
    corpus_path.write_text(sample.joinpath("corpus.tsv").read_text(
        encoding="utf-8"), encoding="utf-8")
    pipeline.build(pipeline.BuildManifest(corpus=str(corpus_path),
                                          output_dir=str(out / "build")))

    store = MenuStore(out / "menu.db")
    store.import_records(parse_dsl(sample.joinpath("menu.dsl").read_text(
        encoding="utf-8")))
    store.add_condition("allium-free", ["garlic"])
    store.close()
    print(out)


if __name__ == "__main__":
    main()
