#!/usr/bin/env python3
"""Regenerate the bundled sample corpus, gold set and menu DSL.

Deterministic; run from the repository root:

    python scripts/make_sample_data.py
"""

from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "menumt" / "data" / "sample"

NOUNS = [
    ("arroz", "rice"), ("pollo", "chicken"), ("cordero", "lamb"),
    ("ternera", "beef"), ("cerdo", "pork"), ("pato", "duck"),
    ("merluza", "hake"), ("bacalao", "cod"), ("atún", "tuna"),
    ("salmón", "salmon"), ("pulpo", "octopus"), ("calamar", "squid"),
    ("gambas", "prawns"), ("mejillones", "mussels"), ("conejo", "rabbit"),
    ("crema", "cream"), ("sopa", "soup"), ("ensalada", "salad"),
    ("pimientos", "peppers"), ("champiñones", "mushrooms"),
]

# "<noun> a la <style>" -> "<style-en> <noun-en>"; 4 source words vs 2
STYLES = [
    ("cubana", "cuba-style"), ("menta", "mint"), ("plancha", "grilled"),
    ("romana", "battered"), ("brasa", "charcoal-grilled"),
]

# "<noun> en salsa de <x>" -> "<noun-en> in <x-en> sauce"; 5 vs 4
SAUCES = [("tomate", "tomato"), ("almendras", "almond"), ("vino", "wine")]

# "<noun> con <side>" -> "<noun-en> with <side-en>"; length-matched
SIDES = [
    ("patatas", "potatoes"), ("verduras", "vegetables"), ("arroz", "rice"),
    ("ajo", "garlic"), ("queso", "cheese"),
]

OMELETTES = [
    ("patatas", "potato"), ("espinacas", "spinach"), ("gambas", "prawn"),
    ("queso", "cheese"), ("champiñones", "mushroom"),
]

SINGLES = [
    ("aceitunas", "olives"), ("almejas", "clams"), ("anchoas", "anchovies"),
    ("garbanzos", "chickpeas"), ("lentejas", "lentils"), ("tomate", "tomato"),
    ("pan", "bread"), ("vino", "wine"), ("agua", "water"), ("miel", "honey"),
    ("naranja", "orange"), ("limón", "lemon"), ("fresa", "strawberry"),
    ("manzana", "apple"), ("pera", "pear"), ("uvas", "grapes"),
    ("jamón", "ham"), ("chorizo", "chorizo"), ("huevo", "egg"),
    ("leche", "milk"),
]

# non-literal pairs kept out of training, by topic
ONE_TO_ONE = {
    "drinks": [
        ("café cortado", "espresso with milk"),
        ("café solo", "single espresso"),
        ("café con hielo", "iced espresso"),
        ("tinto de verano", "red wine with lemon soda"),
        ("horchata", "tiger nut milk"),
        ("leche merengada", "sweet cinnamon iced milk"),
        ("carajillo", "coffee with brandy"),
        ("clara", "beer with lemon soda"),
    ],
    "dishes": [
        ("pescaíto frito", "battered fried fish"),
        ("ropa vieja", "shredded beef stew"),
        ("olla podrida", "slow-cooked pork and bean stew"),
        ("patatas bravas", "fried potatoes in spicy sauce"),
        ("huevos rotos", "fried eggs over chips"),
        ("pimientos del piquillo", "roasted sweet piquillo peppers"),
        ("rabo de toro", "braised oxtail"),
        ("cocido madrileño", "madrid chickpea stew"),
        ("fabada asturiana", "asturian bean and pork stew"),
        ("pulpo a feira", "galician-style boiled octopus"),
        ("migas del pastor", "shepherd's fried breadcrumbs"),
        ("salmorejo", "thick cold tomato soup"),
        ("gazpacho andaluz", "andalusian cold vegetable soup"),
        ("andrajos", "hare and flat-bread stew"),
        ("zarangollo", "murcian egg and zucchini scramble"),
        ("esgarraet", "roasted pepper and salt cod salad"),
        ("papas arrugadas", "wrinkly salted potatoes"),
        ("escalivada", "catalan roasted vegetables"),
        ("suquet de peix", "catalan fish stew"),
        ("marmitako", "basque tuna and potato stew"),
        ("pisto manchego", "la mancha vegetable ratatouille"),
        ("duelos y quebrantos", "scrambled eggs with chorizo and bacon"),
        ("caldereta de langosta", "menorcan lobster stew"),
        ("trinxat de la cerdanya", "pyrenean cabbage and potato hash"),
        ("atascaburras", "salt cod and potato mash"),
        ("gurullos con perdiz", "almerian pasta with partridge"),
        ("empedrado de lentejas", "lentil and rice salad"),
        ("ajoblanco malagueño", "cold almond and garlic soup"),
        ("porra antequerana", "thick antequera tomato cream"),
        ("flamenquín cordobés", "ham-wrapped fried pork roll"),
        ("remojón granadino", "orange and salt cod salad"),
        ("zorongollo extremeño", "roasted pepper and tomato salad"),
    ],
    "desserts": [
        ("torrijas", "spanish-style french toast"),
        ("leche frita", "fried custard squares"),
        ("arroz con leche", "cinnamon rice pudding"),
        ("crema catalana", "catalan burnt custard"),
        ("tarta de santiago", "almond pilgrim cake"),
        ("brazo de gitano", "cream-filled sponge roll"),
        ("tocino de cielo", "caramel egg-yolk flan"),
        ("polvorones", "crumbly almond shortbread"),
        ("turrón de jijona", "soft almond nougat"),
        ("pestiños", "honey-glazed fried pastry"),
    ],
}


def training_lines():
    lines = []
    for i, (noun_es, noun_en) in enumerate(NOUNS):
        # rotate so every style co-occurs with many nouns
        for offset in (0, 1, 2):
            style_es, style_en = STYLES[(i + offset) % 5]
            lines.append(("%s a la %s" % (noun_es, style_es),
                          "%s %s" % (style_en, noun_en)))
        sauce_es, sauce_en = SAUCES[i % 3]
        lines.append(("%s en salsa de %s" % (noun_es, sauce_es),
                      "%s in %s sauce" % (noun_en, sauce_en)))
        side_es, side_en = SIDES[i % 5]
        lines.append(("%s con %s" % (noun_es, side_es),
                      "%s with %s" % (noun_en, side_en)))
        lines.append((noun_es, noun_en))
    for filling_es, filling_en in OMELETTES:
        lines.append(("tortilla de %s" % filling_es, "%s omelette" % filling_en))
    for noun_es, noun_en in [("gambas", "prawns"), ("pollo", "chicken"),
                             ("conejo", "rabbit"), ("champiñones", "mushrooms")]:
        lines.append(("%s al ajillo" % noun_es, "garlic %s" % noun_en))
    for single_es, single_en in SINGLES:
        lines.append((single_es, single_en))
        lines.append(("%s de la casa" % single_es, "house %s" % single_en))
    return lines


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    corpus_lines = []
    for source, target in training_lines():
        corpus_lines.append("%s\t%s\tstd\tgeneral" % (source, target))
    for topic, pairs in sorted(ONE_TO_ONE.items()):
        for source, target in pairs:
            corpus_lines.append("%s\t%s\t121\t%s" % (source, target, topic))
    (OUT / "corpus.tsv").write_text("\n".join(corpus_lines) + "\n",
                                    encoding="utf-8")

    gold = []
    for topic, pairs in sorted(ONE_TO_ONE.items()):
        gold.extend(pairs)
    gold_lines = ["%s\t%s" % pair for pair in gold[:50]]
    (OUT / "gold.tsv").write_text("\n".join(gold_lines) + "\n", encoding="utf-8")

    dsl = """\
#bread with tomato
-bread
=toasted bread
-tomato
-olive oil
$oil
-salt
-+garlic

#tomato salad
-tomato
-olive oil
$oil
-onion
-+tuna

#garlic prawns
-prawns
-olive oil
$oil
-garlic
-+chilli
"""
    (OUT / "menu.dsl").write_text(dsl, encoding="utf-8")

    manifest = """\
{
  "corpus": "src/menumt/data/sample/corpus.tsv",
  "output_dir": "build/sample"
}
"""
    (OUT / "manifest.json").write_text(manifest, encoding="utf-8")
    print("wrote %d corpus lines, %d gold pairs" % (len(corpus_lines),
                                                    len(gold_lines)))


if __name__ == "__main__":
    main()
