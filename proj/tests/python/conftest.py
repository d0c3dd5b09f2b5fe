import os
import sys

import pytest

module_dir = os.environ.get("TSS_MODULE_DIR")
if module_dir and module_dir not in sys.path:
    sys.path.insert(0, module_dir)


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("TSS_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("TSS_CLI not set")
    return path


@pytest.fixture(scope="session")
def fixtures_dir():
    path = os.environ.get("TSS_FIXTURES")
    if not path or not os.path.isdir(path):
        pytest.skip("TSS_FIXTURES not set")
    return path


@pytest.fixture(scope="session")
def tss_module():
    try:
        import _tss
    except ImportError:
        pytest.skip("_tss module not built")
    return _tss
