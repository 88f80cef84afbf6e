"""Bilingual waiter-dialog templates driven by flagged ingredients."""

from __future__ import annotations

import json
from importlib import resources


def load_templates(path=None):
    """Template file: JSON [{id, source, target, answers:[{source,target}]}].

    source/target strings may use {dish} and {ingredient} placeholders.
    The bundled default covers the en/es pair.
    """
    if path is None:
        text = resources.files("menumt.data").joinpath(
            "dialog_templates.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def dialog_templates(dish_name, flagged_ingredients, templates=None):
    """One filled-in question per template per flagged ingredient.

    Ingredients are visited in name order so output is deterministic.
    """
    if templates is None:
        templates = load_templates()
    dialogs = []
    for ingredient in sorted(set(flagged_ingredients)):
        for template in templates:
            fills = {"dish": dish_name, "ingredient": ingredient}
            dialogs.append({
                "id": template["id"],
                "ingredient": ingredient,
                "question_source": template["source"].format(**fills),
                "question_target": template["target"].format(**fills),
                "answers": [dict(a) for a in template["answers"]],
            })
    return dialogs
