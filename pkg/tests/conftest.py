import pytest

from kgunits.catalog import build_catalog
from kgunits.isoprobe import scan_minimum_counterexample


@pytest.fixture(scope="session")
def catalog_rows():
    return build_catalog(1024).rows


@pytest.fixture(scope="session")
def catalog_by_key(catalog_rows):
    return {(r.field, r.group): r for r in catalog_rows}


@pytest.fixture(scope="session")
def scan_report():
    return scan_minimum_counterexample(1024)
