"""Shared fixtures: the bundled sample projects, parsed once per session."""

from __future__ import annotations

from pathlib import Path

import pytest

from codesum.diagnostics import has_errors
from codesum.extractor import parse_project

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def _parsed(name: str):
    model, diagnostics, _ = parse_project(FIXTURES / name)
    assert not has_errors(diagnostics), [str(d) for d in diagnostics]
    return model


@pytest.fixture(scope="session")
def drawing_shapes_model():
    return _parsed("drawing-shapes")


@pytest.fixture(scope="session")
def nanoxml_model():
    return _parsed("nanoxml-like")


@pytest.fixture(scope="session")
def argouml_model():
    return _parsed("argouml-like")


@pytest.fixture(scope="session")
def corpus_models(drawing_shapes_model, nanoxml_model, argouml_model):
    return {
        "drawing-shapes": drawing_shapes_model,
        "nanoxml-like": nanoxml_model,
        "argouml-like": argouml_model,
    }
