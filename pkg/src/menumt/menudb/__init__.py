from .dialog import dialog_templates, load_templates
from .dsl import (DishRecord, DslError, IngredientRecord, SubstituteRecord,
                  parse_dsl, serialize_dsl)
from .store import (DishView, IngredientUse, IngredientView, MenuStore,
                    StoreError)

__all__ = [
    "DishRecord", "DishView", "DslError", "IngredientRecord", "IngredientUse",
    "IngredientView", "MenuStore", "StoreError", "SubstituteRecord",
    "dialog_templates", "load_templates", "parse_dsl", "serialize_dsl",
]
