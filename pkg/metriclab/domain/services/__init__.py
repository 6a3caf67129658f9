# Servicios de dominio
from .distance_service import DistanceService
from .reduction_service import ReductionService
from .game_service import GameService
from .suite_service import SuiteService
from .log_service import LogService

__all__ = ["DistanceService", "ReductionService", "GameService", "SuiteService", "LogService"]
