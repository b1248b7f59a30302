from __future__ import annotations

import pytest


def pytest_addoption(parser):
    parser.addoption("--data-dir", default=None, help="directory with external complexes for criterion 13")


@pytest.fixture(scope="session")
def data_dir(request):
    return request.config.getoption("--data-dir")
