import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "weaklaw",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("weaklaw")


@pytest.fixture
def say(capsys):
    """Print a line to the terminal even when output is captured."""

    def emit(line: str) -> None:
        with capsys.disabled():
            print(line)

    return emit
