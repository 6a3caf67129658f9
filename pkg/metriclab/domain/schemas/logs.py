from pydantic import BaseModel, Field
from typing import Any, Dict, Optional


class AuditLogEntry(BaseModel):
    """Una línea del audit log: nunca contiene matrices, sólo tamaños y nombres."""

    timestamp: str
    actor: str
    action: str = Field(..., description="Subcomando, p. ej. 'dist:gh' o 'reduce:bound'")
    subject: str = Field(..., description="Archivos o nombre de suite")
    mode: str
    success: bool
    details: Optional[Dict[str, Any]] = None


class LogsQuery(BaseModel):
    actor: Optional[str] = None
    action: Optional[str] = None
    subject: Optional[str] = None
    mode: Optional[str] = None
    success: Optional[bool] = None
    page: int = Field(1, ge=1)
    page_size: int = Field(50, ge=1, le=500)
