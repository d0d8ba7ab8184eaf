"""
Test wiring: run nose-style per-test ``setup`` methods under pytest >= 8.

"""
import pytest


@pytest.fixture(autouse=True)
def _nose_style_setup(request):
    instance = getattr(request, "instance", None)
    setup = getattr(instance, "setup", None)
    if callable(setup):
        setup()
    yield
