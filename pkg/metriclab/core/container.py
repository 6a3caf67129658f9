from typing import Optional

from metriclab.core.settings import Settings
from metriclab.domain.services import (
    DistanceService,
    GameService,
    LogService,
    ReductionService,
    SuiteService,
)
from metriclab.infrastructure.repository import JsonDocumentRepository, repository

# Contenedor simple para inyección de dependencias (DIP).
# configure() se llama una vez por invocación de la CLI con la configuración resuelta.
_settings: Optional[Settings] = None
_services: dict = {}


def configure(settings: Settings) -> None:
    global _settings
    _settings = settings
    _services.clear()


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = Settings.resolve()
    return _settings


def _service(key: str, factory):
    if key not in _services:
        _services[key] = factory()
    return _services[key]


def get_repository() -> JsonDocumentRepository:
    return repository


def get_distance_service() -> DistanceService:
    return _service("distance", lambda: DistanceService(get_settings()))


def get_reduction_service() -> ReductionService:
    return _service("reduction", lambda: ReductionService(get_settings()))


def get_game_service() -> GameService:
    return _service("game", lambda: GameService(get_settings()))


def get_suite_service() -> SuiteService:
    return _service("suite", lambda: SuiteService(get_settings()))


def get_log_service() -> LogService:
    return _service("log", lambda: LogService(get_settings().log_dir))
