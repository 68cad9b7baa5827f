import pathlib

import pytest

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def legacy_configs(data_dir):
    return {
        name: (data_dir / f"legacy_{name}.json").read_bytes()
        for name in ("left", "middle", "right")
    }
