import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

# Exhaustive sweeps dominate the suite; hypothesis runs are kept modest
# and reproducible.
settings.register_profile(
    "suite",
    max_examples=60,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"
