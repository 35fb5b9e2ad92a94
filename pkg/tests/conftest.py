import warnings

import pytest


@pytest.fixture(scope="session")
def client():
    with warnings.catch_warnings():
        # starlette's TestClient import warns about httpx pinning; noise here
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

        from landau.service import app

        with TestClient(app) as c:
            yield c
