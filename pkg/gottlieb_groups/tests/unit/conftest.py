import pytest

from gottlieb_groups.config import BUNDLED_CATALOG
from gottlieb_groups.tables import load_catalog


@pytest.fixture(scope="session")
def catalog():
    """The catalog shipped with the package, parsed once per test session."""
    return load_catalog(BUNDLED_CATALOG)
