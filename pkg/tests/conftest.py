import pytest

from dsfusion import Frame


@pytest.fixture
def flrb() -> Frame:
    """The four-direction frame used throughout: front, left, right, back."""
    return Frame(["F", "L", "R", "B"])
