import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conceptnav.engine import Engine

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fig2_path() -> Path:
    return FIXTURES / "fig2_contexts.xml"


@pytest.fixture(scope="session")
def desk_index_path() -> Path:
    return FIXTURES / "desk_index.jsonl"


@pytest.fixture(scope="session")
def desk_ontology_path() -> Path:
    return FIXTURES / "desk_ontology.jsonl"


@pytest.fixture(scope="session")
def trace_path() -> Path:
    return FIXTURES / "trace_animal_birds.jsonl"


@pytest.fixture(scope="session")
def desk_engine(desk_index_path, desk_ontology_path, fig2_path) -> Engine:
    return Engine.from_paths(desk_index_path, desk_ontology_path, fig2_path)
