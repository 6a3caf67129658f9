import json
import logging
import os
from typing import List, Tuple

from metriclab.domain.schemas.logs import AuditLogEntry, LogsQuery
from metriclab.infrastructure.logger import AUDIT_FILE

logger = logging.getLogger(__name__)


class LogService:
    def __init__(self, log_dir: str):
        self.log_file_path = os.path.join(log_dir, AUDIT_FILE)
        logger.debug("LogService reading %s", self.log_file_path)

    def _read_all(self) -> List[AuditLogEntry]:
        if not os.path.exists(self.log_file_path):
            return []
        entries = []
        with open(self.log_file_path, "r", encoding="utf-8") as file:
            for number, line in enumerate(file, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    entries.append(AuditLogEntry(**json.loads(line)))
                except (json.JSONDecodeError, TypeError, ValueError) as e:
                    logger.warning("skipping audit line %d: %s", number, e)
        return entries

    def get_logs(self, query: LogsQuery) -> Tuple[List[AuditLogEntry], int]:
        """
        Obtiene logs con filtros y paginación.
        Retorna (logs_filtrados, total_count)
        """
        filtered = self._apply_filters(self._read_all(), query)
        # más recientes primero
        filtered.sort(key=lambda x: x.timestamp, reverse=True)
        total = len(filtered)
        start_idx = (query.page - 1) * query.page_size
        return filtered[start_idx:start_idx + query.page_size], total

    def _apply_filters(self, logs: List[AuditLogEntry], query: LogsQuery) -> List[AuditLogEntry]:
        filtered = logs
        if query.actor:
            filtered = [log for log in filtered if query.actor.lower() in log.actor.lower()]
        if query.action:
            filtered = [log for log in filtered if query.action.lower() in log.action.lower()]
        if query.subject:
            filtered = [log for log in filtered if query.subject.lower() in log.subject.lower()]
        if query.mode:
            filtered = [log for log in filtered if log.mode == query.mode]
        if query.success is not None:
            filtered = [log for log in filtered if log.success == query.success]
        return filtered

    def get_recent_logs(self, limit: int = 100) -> List[AuditLogEntry]:
        """Obtiene los logs más recientes"""
        logs, _ = self.get_logs(LogsQuery(page=1, page_size=limit))
        return logs

    def get_stats(self) -> dict:
        """Obtiene estadísticas básicas de logs"""
        all_logs = self._read_all()
        successful = len([log for log in all_logs if log.success])
        actions = {}
        modes = {}
        for log in all_logs:
            actions[log.action] = actions.get(log.action, 0) + 1
            modes[log.mode] = modes.get(log.mode, 0) + 1
        return {
            "total_operations": len(all_logs),
            "successful_operations": successful,
            "failed_operations": len(all_logs) - successful,
            "modes": modes,
            "actions": actions,
        }
