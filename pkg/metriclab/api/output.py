from __future__ import annotations
import argparse
from typing import Any

from metriclab.core.container import get_repository, get_settings
from metriclab.infrastructure.logger import audit_log


def emit(document: Any, args: argparse.Namespace) -> None:
    """Imprime el documento y, con -o, lo guarda también en disco."""
    text = get_repository().save(document, getattr(args, "output", None))
    print(text)


def audit(action: str, subject: str, success: bool = True, **details: Any) -> None:
    settings = get_settings()
    audit_log(
        actor="cli",
        action=action,
        subject=subject,
        mode=settings.mode,
        success=success,
        details=details or None,
        log_dir=settings.log_dir,
    )


def indices(text: str):
    return [int(v) for v in text.split(",") if v.strip()] if text else []
