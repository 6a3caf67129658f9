import json
from fractions import Fraction

from metriclab.core.settings import Settings
from metriclab.domain.numeric import NumericMode
from metriclab.domain.schemas.logs import LogsQuery
from metriclab.domain.schemas.metric import MetricDocument
from metriclab.domain.services import LogService
from metriclab.infrastructure.logger import AUDIT_FILE, audit_log
from metriclab.infrastructure.repository import JsonDocumentRepository


class TestSettings:
    def test_defaults(self):
        s = Settings.resolve(environ={})
        assert s.mode is NumericMode.RATIONAL
        assert s.budget is None

    def test_environment_overrides_flags(self):
        s = Settings.resolve({"mode": "rational", "budget": 10}, environ={"METRICLAB_MODE": "FLOAT"})
        assert s.mode is NumericMode.FLOAT
        assert s.budget == 10

    def test_none_flags_are_ignored(self):
        s = Settings.resolve({"mode": None}, environ={"METRICLAB_BUDGET": "7"})
        assert s.mode is NumericMode.RATIONAL
        assert s.budget == 7


class TestRepository:
    def test_save_and_load(self, tmp_path):
        repo = JsonDocumentRepository()
        doc = MetricDocument(n=2, d=[[0, Fraction(1, 3)], [Fraction(1, 3), 0]])
        path = tmp_path / "nested" / "doc.json"
        text = repo.save(doc, str(path))
        assert json.loads(text)["d"][0][1] == "1/3"
        loaded = MetricDocument.model_validate(repo.load(str(path)))
        assert loaded.to_space().dist(0, 1) == Fraction(1, 3)

    def test_render_without_path(self):
        assert JsonDocumentRepository().save({"a": 1}) == '{\n  "a": 1\n}'


class TestAuditLog:
    def _write(self, log_dir):
        audit_log("cli", "dist:gh", "m.json,n.json", NumericMode.RATIONAL, True, {"sizes": [2, 2]}, log_dir=log_dir)
        audit_log("cli", "validate", "bad.json", "float", False, log_dir=log_dir)
        audit_log("cli", "suite:lemmsep", "lemmsep", NumericMode.RATIONAL, True, log_dir=log_dir)

    def test_lines_are_json(self, tmp_path):
        self._write(str(tmp_path))
        lines = (tmp_path / AUDIT_FILE).read_text(encoding="utf-8").splitlines()
        assert len(lines) == 3
        first = json.loads(lines[0])
        assert first["mode"] == "rational"
        assert first["timestamp"].endswith("Z")

    def test_filters_and_pagination(self, tmp_path):
        self._write(str(tmp_path))
        service = LogService(str(tmp_path))
        logs, total = service.get_logs(LogsQuery(success=True))
        assert total == 2
        logs, total = service.get_logs(LogsQuery(action="VALIDATE"))
        assert total == 1 and logs[0].subject == "bad.json"
        logs, total = service.get_logs(LogsQuery(page=2, page_size=2))
        assert total == 3 and len(logs) == 1

    def test_stats(self, tmp_path):
        self._write(str(tmp_path))
        stats = LogService(str(tmp_path)).get_stats()
        assert stats["total_operations"] == 3
        assert stats["failed_operations"] == 1
        assert stats["modes"] == {"rational": 2, "float": 1}

    def test_missing_file(self, tmp_path):
        assert LogService(str(tmp_path / "none")).get_recent_logs() == []

    def test_skips_broken_lines(self, tmp_path):
        (tmp_path / AUDIT_FILE).write_text("not json\n", encoding="utf-8")
        assert LogService(str(tmp_path)).get_recent_logs() == []
