"""HTTP service exposing the verification toolkit with JSON payloads."""

from .app import app, create_app

__all__ = ["app", "create_app"]
