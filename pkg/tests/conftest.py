import os

import pytest


@pytest.fixture(autouse=True, scope="session")
def temp_cache(tmp_path_factory):
    """Point the on-disk graph cache at a fresh per-session directory."""
    path = tmp_path_factory.mktemp("tropgc-cache")
    old = os.environ.get("TROPGC_CACHE")
    os.environ["TROPGC_CACHE"] = str(path)
    yield str(path)
    if old is None:
        os.environ.pop("TROPGC_CACHE", None)
    else:
        os.environ["TROPGC_CACHE"] = old
