"""
Shared fixtures; KOLCHIN_SEED fixes the seed of every hypothesis run
"""

from pathlib import Path

import pytest
from hypothesis import settings

from src.arith.field import BaseField
from src.dsl.builder import build_document
from src.dsl.parser import parse_spec
from src.tower.tower import GenSpec, Tower
from src.tower.upoly import ElementPoly
from src.utils.config import get_settings

DATA_DIR = Path(__file__).resolve().parents[1] / "data" / "examples"

settings.register_profile("kolchin", deadline=None, print_blob=True)
settings.load_profile("kolchin")


@pytest.hookimpl(tryfirst=True)
def pytest_configure(config):
    if config.getoption("hypothesis_seed", default=None) is None:
        config.option.hypothesis_seed = str(get_settings().seed)


def pytest_report_header(config):
    return f"kolchin seed: {config.getoption('hypothesis_seed', default=None)}"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def load_document():
    """Parse and build a shipped document by file name"""
    def load(name: str):
        return build_document(parse_spec((DATA_DIR / name).read_text(encoding="utf-8")))
    return load


@pytest.fixture
def f3t() -> Tower:
    return Tower(BaseField(3), ["t"])


@pytest.fixture
def sqrt_t():
    """F_5(t)(a) with a^2 = t"""
    K = Tower(BaseField(5), ["t"])
    return K.extend(GenSpec("a", ElementPoly.monomial(K, 2, 1, "a") - K.gen("t")))


@pytest.fixture
def root_tower():
    """F_2(t)(a) with a^2 = t, inseparable"""
    K = Tower(BaseField(2), ["t"])
    return K.extend(GenSpec("a", ElementPoly.monomial(K, 2, 1, "a") - K.gen("t")))
