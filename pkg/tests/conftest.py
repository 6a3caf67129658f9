import json
from fractions import Fraction

import pytest

from metriclab.core.container import configure
from metriclab.core.settings import Settings
from metriclab.domain.metric import validate_metric


def two_point(d):
    return validate_metric([[0, d], [d, 0]])


@pytest.fixture
def pair_1_3():
    """Dos espacios de dos puntos a distancias 1 y 3: ρ_GH = 1."""
    return two_point(1), two_point(3)


@pytest.fixture
def line3():
    """Puntos 0, 1, 3 de la recta."""
    return validate_metric([[0, 1, 3], [1, 0, 2], [3, 2, 0]])


@pytest.fixture
def equilateral5():
    return validate_metric([[0, 5, 5], [5, 0, 5], [5, 5, 0]])


@pytest.fixture
def settings(tmp_path, monkeypatch):
    monkeypatch.setenv("METRICLAB_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.delenv("METRICLAB_MODE", raising=False)
    monkeypatch.delenv("METRICLAB_BUDGET", raising=False)
    resolved = Settings.resolve()
    configure(resolved)
    return resolved


@pytest.fixture
def write_doc(tmp_path):
    """Escribe un documento JSON en tmp_path y devuelve la ruta."""

    def _write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def metric_doc():
    def _doc(rows):
        return {"kind": "metric", "n": len(rows), "d": [[str(Fraction(x)) for x in r] for r in rows]}

    return _doc
