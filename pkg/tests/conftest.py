import random

import pytest
from hypothesis import settings

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")


@pytest.fixture
def rng():
    return random.Random(1234)
