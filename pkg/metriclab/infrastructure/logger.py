import json
import logging
import os
from datetime import datetime, timezone
from enum import Enum
from typing import Optional

from metriclab.core.settings import Settings

AUDIT_FILE = "audit.log"

logger = logging.getLogger("metriclab.audit")
logger.setLevel(logging.INFO)
logger.propagate = False


def _log_dir() -> str:
    return Settings.resolve().log_dir


def _bind(log_dir: str) -> None:
    """Un único FileHandler apuntando a <log_dir>/audit.log."""
    path = os.path.abspath(os.path.join(log_dir, AUDIT_FILE))
    for handler in list(logger.handlers):
        if getattr(handler, "baseFilename", None) == path:
            return
        logger.removeHandler(handler)
        handler.close()
    os.makedirs(log_dir, exist_ok=True)
    fh = logging.FileHandler(path, encoding="utf-8")
    fh.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(fh)


def audit_log(actor: str, action: str, subject: str, mode, success: bool, details=None, log_dir: Optional[str] = None):
    # Normalizar mode a string
    mode_value = mode.value if isinstance(mode, Enum) else str(mode)
    _bind(log_dir or _log_dir())
    payload = {
        "timestamp": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
        "actor": actor,
        "action": action,
        "subject": subject,
        "mode": mode_value,
        "success": success,
        "details": details,
    }
    # nunca se registran matrices completas: sólo tamaños y nombres
    logger.info(json.dumps(payload, default=str))
