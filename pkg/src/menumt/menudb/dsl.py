"""Parser for the dish/ingredient description language.

Line symbols:
    #name   start a dish; following lines belong to it until the next '#'
    -name   ingredient of the current dish
    -+name  optional ingredient
    =name   substitute for the most recent ingredient
    $name   image name for the dish (right after '#') or for the most
            recent ingredient/substitute; absent, the entity's own name
            is used as image name

Blank lines are ignored; lines are trimmed before interpretation.
"""

from __future__ import annotations

from dataclasses import dataclass


class DslError(ValueError):
    def __init__(self, message, line):
        super().__init__("line %d: %s" % (line, message))
        self.line = line


@dataclass(frozen=True)
class SubstituteRecord:
    name: str
    image: str | None = None


@dataclass(frozen=True)
class IngredientRecord:
    name: str
    optional: bool = False
    image: str | None = None
    substitutes: tuple = ()


@dataclass(frozen=True)
class DishRecord:
    name: str
    image: str | None = None
    ingredients: tuple = ()


class _DishBuilder:
    def __init__(self, name):
        self.name = name
        self.image = None
        self.ingredients = []  # [name, optional, image, [SubstituteRecord...]]

    def build(self):
        return DishRecord(self.name, self.image,
                          tuple(IngredientRecord(n, opt, img, tuple(subs))
                                for n, opt, img, subs in self.ingredients))


def parse_dsl(text):
    """Parse DSL text into DishRecord structures."""
    dishes = []
    dish = None
    last = None  # 'dish' | 'ingredient' | 'substitute'
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if dish is not None:
                dishes.append(dish.build())
            name = line[1:].strip()
            if not name:
                raise DslError("empty dish name", lineno)
            dish = _DishBuilder(name)
            last = "dish"
        elif line.startswith("-"):
            if dish is None:
                raise DslError("ingredient outside a dish", lineno)
            optional = line.startswith("-+")
            name = line[2:].strip() if optional else line[1:].strip()
            if not name:
                raise DslError("empty ingredient name", lineno)
            dish.ingredients.append([name, optional, None, []])
            last = "ingredient"
        elif line.startswith("="):
            if last not in ("ingredient", "substitute"):
                raise DslError("'=' must follow a '-' ingredient line", lineno)
            name = line[1:].strip()
            if not name:
                raise DslError("empty substitute name", lineno)
            dish.ingredients[-1][3].append(SubstituteRecord(name))
            last = "substitute"
        elif line.startswith("$"):
            name = line[1:].strip()
            if not name:
                raise DslError("empty image name", lineno)
            if last == "dish":
                dish.image = name
            elif last == "ingredient":
                dish.ingredients[-1][2] = name
            elif last == "substitute":
                subs = dish.ingredients[-1][3]
                subs[-1] = SubstituteRecord(subs[-1].name, name)
            else:
                raise DslError("'$' must follow a '#' or a '-'", lineno)
            last = None  # at most one image per entity
        else:
            raise DslError("unrecognized line %r" % line, lineno)
    if dish is not None:
        dishes.append(dish.build())
    return dishes


def serialize_dsl(records):
    """Render records back to DSL text (normalized round trip)."""
    lines = []
    for dish in records:
        lines.append("#" + dish.name)
        if dish.image:
            lines.append("$" + dish.image)
        for ing in dish.ingredients:
            lines.append(("-+" if ing.optional else "-") + ing.name)
            if ing.image:
                lines.append("$" + ing.image)
            for sub in ing.substitutes:
                lines.append("=" + sub.name)
                if sub.image:
                    lines.append("$" + sub.image)
    return "\n".join(lines) + ("\n" if lines else "")
