"""HTTP service layer; run with ``uvicorn proxsweep.service:app``."""

from .app import app, create_app

__all__ = ["app", "create_app"]
