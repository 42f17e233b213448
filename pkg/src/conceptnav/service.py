"""Read-only JSON service for navigating a loaded concept lattice.

One immutable session per process; every endpoint answers from
precomputed structures, so concurrent requests are safe and always
consistent.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles

from .core import Op
from .diagram import diagram_dict
from .session import Session, resolve_attribute

_OPS = {op.value: op for op in Op}


def concept_payload(session: Session, index: int) -> dict:
    """One concept with indices, resolved names, and cover links."""
    lattice = session.lattice
    ctx = session.context
    concept = lattice.concepts[index]
    x, y = session.layout.positions[index]
    return {
        "id": index,
        "extent": sorted(concept.extent),
        "extentNames": [ctx.objects[g] for g in sorted(concept.extent)],
        "intent": sorted(concept.intent),
        "intentTerms": [ctx.attributes[m].render()
                        for m in sorted(concept.intent)],
        "x": x,
        "y": y,
        "upperCovers": list(lattice.upper_covers[index]),
        "lowerCovers": list(lattice.lower_covers[index]),
    }


def create_app(session: Session, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="conceptnav", docs_url=None, redoc_url=None)
    lattice = session.lattice
    doc = diagram_dict(lattice, session.layout, session.type_name)

    def checked_index(concept_id: int) -> int:
        if not 0 <= concept_id < len(lattice):
            raise HTTPException(404, f"no concept {concept_id}")
        return concept_id

    @app.get("/api/lattice")
    def get_lattice() -> dict:
        return doc

    @app.get("/api/concepts/{concept_id}")
    def get_concept(concept_id: int) -> dict:
        return concept_payload(session, checked_index(concept_id))

    @app.get("/api/concepts/{concept_id}/covers")
    def get_covers(concept_id: int, dir: str = "down") -> dict:
        index = checked_index(concept_id)
        if dir == "up":
            covers = lattice.upper_covers[index]
        elif dir == "down":
            covers = lattice.lower_covers[index]
        else:
            raise HTTPException(400, "dir must be 'up' or 'down'")
        return {"id": index, "direction": dir, "covers": list(covers)}

    @app.post("/api/refine")
    def refine(body: dict) -> dict:
        if not isinstance(body, dict) or "concept" not in body \
                or "attribute" not in body:
            raise HTTPException(
                400, "body must carry 'concept' and 'attribute'")
        concept_id = body["concept"]
        if not isinstance(concept_id, int):
            raise HTTPException(400, "'concept' must be a concept id")
        index = checked_index(concept_id)
        attribute = body["attribute"]
        if not isinstance(attribute, dict) or "tag" not in attribute:
            raise HTTPException(400, "'attribute' must carry a 'tag'")
        op_text = attribute.get("op", "=")
        if op_text not in _OPS:
            raise HTTPException(400, f"unknown operator {op_text!r}")
        try:
            m = resolve_attribute(session.context, str(attribute["tag"]),
                                  _OPS[op_text],
                                  str(attribute.get("value", "")))
        except KeyError as exc:
            raise HTTPException(400, exc.args[0]) from None
        refined = lattice.meet({index, lattice.mu[m]})
        return concept_payload(session, refined)

    @app.get("/api/objects/{name:path}/concept")
    def object_concept(name: str) -> dict:
        try:
            g = session.context.object_index(name)
        except KeyError:
            raise HTTPException(404, f"unknown object {name!r}") from None
        return concept_payload(session, lattice.gamma[g])

    @app.get("/api/attributes")
    def attributes(tag: str | None = None) -> list[dict]:
        ctx = session.context
        out = []
        for m, term in enumerate(ctx.attributes):
            if tag is not None and term.tag != tag:
                continue
            out.append({
                "index": m,
                "tag": term.tag,
                "op": term.op.value,
                "value": term.value,
                "rendered": term.render(),
                "concept": lattice.mu[m],
            })
        return out

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True),
                  name="ui")
    return app


def serve(session: Session, host: str = "127.0.0.1", port: int = 8000,
          ui_dir: str | Path | None = None) -> None:
    import uvicorn

    uvicorn.run(create_app(session, ui_dir), host=host, port=port,
                log_level="info")
