"""HTTP facade over the decoder and the menu store."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .menudb import MenuStore, StoreError, dialog_templates
from .pipeline import load_bundle

_PNG = b"\x89PNG\r\n\x1a\n"
_JPEG = b"\xff\xd8\xff"


class TranslateRequest(BaseModel):
    text: str
    k: int | None = None


class ProfileRequest(BaseModel):
    conditions: list[str] = []
    ingredients: list[str] = []


def _content_type(data):
    if data.startswith(_PNG):
        return "image/png"
    if data.startswith(_JPEG):
        return "image/jpeg"
    return "application/octet-stream"


def create_app(build_dir=None, store_path=None, bundle=None, store=None,
               default_k=5, cors_origins=("*",)):
    """Wire the service; pass either paths or already-loaded objects."""
    if bundle is None and build_dir is not None:
        bundle = load_bundle(build_dir)
    if store is None and store_path is not None:
        store = MenuStore(store_path)

    app = FastAPI(title="menumt service", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=list(cors_origins),
        allow_methods=["*"], allow_headers=["*"])

    def need_bundle():
        if bundle is None:
            raise HTTPException(503, "translation artifacts not loaded")
        return bundle

    def need_store():
        if store is None:
            raise HTTPException(503, "menu store not loaded")
        return store

    @app.post("/translate")
    def post_translate(req: TranslateRequest):
        if not req.text.strip():
            raise HTTPException(400, "text must be non-empty")
        k = req.k if req.k and req.k > 0 else default_k
        return need_bundle().translate(req.text, k=k).as_dict()

    @app.get("/dishes/{name}")
    def get_dish(name: str):
        view = need_store().lookup_dish(name)
        if view is None:
            raise HTTPException(404, "unknown dish %r" % name)
        return {
            "name": view.name,
            "image_id": view.image_id,
            "ingredients": [
                {"name": u.name, "optional": u.optional,
                 "substitutes": list(u.substitutes), "image_id": u.image_id}
                for u in view.ingredients],
        }

    @app.get("/ingredients/{name}")
    def get_ingredient(name: str):
        view = need_store().lookup_ingredient(name)
        if view is None:
            raise HTTPException(404, "unknown ingredient %r" % name)
        return {"name": view.name, "image_id": view.image_id,
                "dishes": list(view.dishes)}

    @app.post("/profiles")
    def post_profile(req: ProfileRequest):
        try:
            profile_id = need_store().create_profile(req.conditions,
                                                     req.ingredients)
        except StoreError as exc:
            raise HTTPException(400, str(exc)) from exc
        return {"id": profile_id}

    def _flags(name, profile):
        db = need_store()
        if not db.profile_exists(profile):
            raise HTTPException(400, "invalid profile %r" % profile)
        try:
            return db.flag_dish(name, profile)
        except StoreError as exc:
            raise HTTPException(404, str(exc)) from exc

    @app.get("/dishes/{name}/flags")
    def get_flags(name: str, profile: int = Query(...)):
        return {"flags": [
            {"ingredient": ing, "optional": optional, "via_substitute": via}
            for ing, optional, via in _flags(name, profile)]}

    @app.get("/dishes/{name}/dialog")
    def get_dialog(name: str, profile: int = Query(...)):
        flagged = [ing for ing, _, _ in _flags(name, profile)]
        return {"dialogs": dialog_templates(name, flagged)}

    @app.get("/images/{image_id}")
    def get_image(image_id: int):
        row = need_store().image(image_id)
        if row is None:
            raise HTTPException(404, "unknown image %d" % image_id)
        _, data = row
        return Response(content=data, media_type=_content_type(data),
                        headers={"Cache-Control": "public, max-age=86400"})

    return app
