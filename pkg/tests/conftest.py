from pathlib import Path

import pytest

from subtrop import parse_system

DATA = Path(__file__).parent / "data"


def read_data(name: str) -> str:
    return (DATA / name).read_text(encoding="utf-8")


def load(name: str):
    return parse_system(read_data(name))


@pytest.fixture
def data_dir() -> Path:
    return DATA
