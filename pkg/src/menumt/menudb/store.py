"""SQLite-backed menu store: dishes, ingredients, images and flagging.

Core relations: ingredients, dishes, images, dish_ingredients,
dish_images, ingredient_images. Diet support adds conditions, the
condition/ingredient mapping, profiles and per-profile flag rows whose
condition id is NULL for user-added ingredients.
"""

from __future__ import annotations

import sqlite3
from dataclasses import dataclass

_SCHEMA = """
CREATE TABLE IF NOT EXISTS dishes (
    id INTEGER PRIMARY KEY,
    name TEXT NOT NULL UNIQUE
);
CREATE TABLE IF NOT EXISTS ingredients (
    id INTEGER PRIMARY KEY,
    name TEXT NOT NULL UNIQUE
);
CREATE TABLE IF NOT EXISTS images (
    id INTEGER PRIMARY KEY,
    name TEXT NOT NULL UNIQUE,
    data BLOB NOT NULL
);
CREATE TABLE IF NOT EXISTS dish_ingredients (
    dish_id INTEGER NOT NULL REFERENCES dishes(id),
    ingredient_id INTEGER NOT NULL REFERENCES ingredients(id),
    optional INTEGER NOT NULL DEFAULT 0,
    substitute_for INTEGER REFERENCES ingredients(id),
    UNIQUE (dish_id, ingredient_id, substitute_for)
);
-- UNIQUE treats NULLs as distinct; base rows need their own guard
CREATE UNIQUE INDEX IF NOT EXISTS dish_ingredients_base
    ON dish_ingredients (dish_id, ingredient_id)
    WHERE substitute_for IS NULL;
CREATE TABLE IF NOT EXISTS dish_images (
    dish_id INTEGER NOT NULL REFERENCES dishes(id),
    image_id INTEGER NOT NULL REFERENCES images(id),
    UNIQUE (dish_id, image_id)
);
CREATE TABLE IF NOT EXISTS ingredient_images (
    ingredient_id INTEGER NOT NULL REFERENCES ingredients(id),
    image_id INTEGER NOT NULL REFERENCES images(id),
    UNIQUE (ingredient_id, image_id)
);
CREATE TABLE IF NOT EXISTS conditions (
    id INTEGER PRIMARY KEY,
    name TEXT NOT NULL UNIQUE
);
CREATE TABLE IF NOT EXISTS condition_ingredients (
    condition_id INTEGER NOT NULL REFERENCES conditions(id),
    ingredient_id INTEGER NOT NULL REFERENCES ingredients(id),
    UNIQUE (condition_id, ingredient_id)
);
CREATE TABLE IF NOT EXISTS profiles (
    id INTEGER PRIMARY KEY
);
CREATE TABLE IF NOT EXISTS profile_flags (
    profile_id INTEGER NOT NULL REFERENCES profiles(id),
    condition_id INTEGER REFERENCES conditions(id),
    ingredient_id INTEGER NOT NULL REFERENCES ingredients(id)
);
"""


class StoreError(ValueError):
    pass


@dataclass(frozen=True)
class IngredientUse:
    name: str
    optional: bool
    image_id: int
    substitutes: tuple  # substitute ingredient names


@dataclass(frozen=True)
class DishView:
    name: str
    image_id: int
    ingredients: tuple  # IngredientUse, declaration order


@dataclass(frozen=True)
class IngredientView:
    name: str
    image_id: int
    dishes: tuple  # dish names, sorted


class MenuStore:
    def __init__(self, path=":memory:"):
        self.path = str(path)
        self._db = sqlite3.connect(self.path, check_same_thread=False)
        self._db.executescript(_SCHEMA)
        self._db.commit()

    def close(self):
        self._db.close()

    # -- population ------------------------------------------------------

    def import_records(self, records, images=None):
        """Upsert parsed DSL records; safe to run repeatedly."""
        images = images or {}
        cur = self._db.cursor()
        for dish in records:
            dish_id = self._upsert(cur, "dishes", dish.name)
            image_id = self._upsert_image(cur, dish.image or dish.name, images)
            cur.execute("INSERT OR IGNORE INTO dish_images VALUES (?, ?)",
                        (dish_id, image_id))
            for ing in dish.ingredients:
                ing_id = self._upsert(cur, "ingredients", ing.name)
                img_id = self._upsert_image(cur, ing.image or ing.name, images)
                cur.execute("INSERT OR IGNORE INTO ingredient_images VALUES (?, ?)",
                            (ing_id, img_id))
                cur.execute(
                    "INSERT OR IGNORE INTO dish_ingredients VALUES (?, ?, ?, NULL)",
                    (dish_id, ing_id, int(ing.optional)))
                for sub in ing.substitutes:
                    sub_id = self._upsert(cur, "ingredients", sub.name)
                    sub_img = self._upsert_image(cur, sub.image or sub.name, images)
                    cur.execute(
                        "INSERT OR IGNORE INTO ingredient_images VALUES (?, ?)",
                        (sub_id, sub_img))
                    cur.execute(
                        "INSERT OR IGNORE INTO dish_ingredients VALUES (?, ?, ?, ?)",
                        (dish_id, sub_id, int(ing.optional), ing_id))
        self._db.commit()

    @staticmethod
    def _upsert(cur, table, name):
        cur.execute("INSERT OR IGNORE INTO %s (name) VALUES (?)" % table, (name,))
        cur.execute("SELECT id FROM %s WHERE name = ?" % table, (name,))
        return cur.fetchone()[0]

    @staticmethod
    def _upsert_image(cur, name, images):
        cur.execute("INSERT OR IGNORE INTO images (name, data) VALUES (?, ?)",
                    (name, images.get(name, b"")))
        cur.execute("SELECT id FROM images WHERE name = ?", (name,))
        return cur.fetchone()[0]

    # -- lookups ---------------------------------------------------------

    def lookup_dish(self, name):
        cur = self._db.cursor()
        cur.execute("SELECT id FROM dishes WHERE name = ?", (name,))
        row = cur.fetchone()
        if row is None:
            return None
        dish_id = row[0]
        cur.execute("""SELECT i.id, i.name, di.optional
                       FROM dish_ingredients di JOIN ingredients i
                         ON i.id = di.ingredient_id
                       WHERE di.dish_id = ? AND di.substitute_for IS NULL
                       ORDER BY di.rowid""", (dish_id,))
        uses = []
        for ing_id, ing_name, optional in cur.fetchall():
            subs = self._db.execute(
                """SELECT i.name FROM dish_ingredients di
                   JOIN ingredients i ON i.id = di.ingredient_id
                   WHERE di.dish_id = ? AND di.substitute_for = ?
                   ORDER BY di.rowid""", (dish_id, ing_id)).fetchall()
            uses.append(IngredientUse(ing_name, bool(optional),
                                      self._image_id("ingredient", ing_id),
                                      tuple(s[0] for s in subs)))
        return DishView(name, self._image_id("dish", dish_id), tuple(uses))

    def lookup_ingredient(self, name):
        cur = self._db.cursor()
        cur.execute("SELECT id FROM ingredients WHERE name = ?", (name,))
        row = cur.fetchone()
        if row is None:
            return None
        ing_id = row[0]
        dishes = cur.execute(
            """SELECT DISTINCT d.name FROM dish_ingredients di
               JOIN dishes d ON d.id = di.dish_id
               WHERE di.ingredient_id = ? ORDER BY d.name""", (ing_id,)).fetchall()
        return IngredientView(name, self._image_id("ingredient", ing_id),
                              tuple(d[0] for d in dishes))

    def _image_id(self, kind, entity_id):
        table = "dish_images" if kind == "dish" else "ingredient_images"
        column = "dish_id" if kind == "dish" else "ingredient_id"
        row = self._db.execute(
            "SELECT image_id FROM %s WHERE %s = ? LIMIT 1" % (table, column),
            (entity_id,)).fetchone()
        return row[0] if row else None

    def image(self, image_id):
        row = self._db.execute("SELECT name, data FROM images WHERE id = ?",
                               (image_id,)).fetchone()
        return (row[0], row[1]) if row else None

    def table_counts(self):
        tables = ("dishes", "ingredients", "images", "dish_ingredients",
                  "dish_images", "ingredient_images")
        return {t: self._db.execute("SELECT COUNT(*) FROM %s" % t).fetchone()[0]
                for t in tables}

    # -- diet profiles ---------------------------------------------------

    def add_condition(self, name, ingredient_names):
        """Register a condition and the ingredients it flags (fixture data)."""
        cur = self._db.cursor()
        cond_id = self._upsert(cur, "conditions", name)
        for ing in ingredient_names:
            cur.execute("INSERT OR IGNORE INTO condition_ingredients VALUES (?, ?)",
                        (cond_id, self._ingredient_id(ing)))
        self._db.commit()
        return cond_id

    def _ingredient_id(self, name):
        row = self._db.execute("SELECT id FROM ingredients WHERE name = ?",
                               (name,)).fetchone()
        if row is None:
            raise StoreError("unknown ingredient %r" % name)
        return row[0]

    def create_profile(self, conditions=(), user_ingredients=()):
        """Materialize flag rows; user-added rows carry a NULL condition."""
        cur = self._db.cursor()
        cond_ids = []
        for cond in conditions:
            row = cur.execute("SELECT id FROM conditions WHERE name = ?",
                              (cond,)).fetchone()
            if row is None:
                raise StoreError("unknown condition %r" % cond)
            cond_ids.append(row[0])
        ing_ids = [self._ingredient_id(name) for name in user_ingredients]
        cur.execute("INSERT INTO profiles DEFAULT VALUES")
        profile_id = cur.lastrowid
        for cond_id in cond_ids:
            for (ing_id,) in cur.execute(
                    "SELECT ingredient_id FROM condition_ingredients "
                    "WHERE condition_id = ?", (cond_id,)).fetchall():
                cur.execute("INSERT INTO profile_flags VALUES (?, ?, ?)",
                            (profile_id, cond_id, ing_id))
        for ing_id in ing_ids:
            cur.execute("INSERT INTO profile_flags VALUES (?, NULL, ?)",
                        (profile_id, ing_id))
        self._db.commit()
        return profile_id

    def profile_exists(self, profile_id):
        return self._db.execute("SELECT 1 FROM profiles WHERE id = ?",
                                (profile_id,)).fetchone() is not None

    def flagged_ingredients(self, profile_id):
        if not self.profile_exists(profile_id):
            raise StoreError("unknown profile %r" % profile_id)
        rows = self._db.execute(
            """SELECT DISTINCT i.name FROM profile_flags pf
               JOIN ingredients i ON i.id = pf.ingredient_id
               WHERE pf.profile_id = ?""", (profile_id,)).fetchall()
        return {r[0] for r in rows}

    def flag_dish(self, dish_name, profile_id):
        """Dish ingredients (substitutes included) hit by the profile."""
        dish = self.lookup_dish(dish_name)
        if dish is None:
            raise StoreError("unknown dish %r" % dish_name)
        flagged = self.flagged_ingredients(profile_id)
        hits = []
        for use in dish.ingredients:
            if use.name in flagged:
                hits.append((use.name, use.optional, False))
            for sub in use.substitutes:
                if sub in flagged:
                    hits.append((sub, use.optional, True))
        hits.sort(key=lambda h: h[0])
        return hits
