import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from lietriple import catalog


@pytest.fixture(scope="session")
def entries():
    return catalog.all_entries()


@pytest.fixture(scope="session")
def by_label(entries):
    return {e.label: e for e in entries}
