"""HTTP inference service and pipeline orchestration."""

from .app import create_app, diagnose
from .pipeline import run_pipeline

__all__ = ["create_app", "diagnose", "run_pipeline"]
