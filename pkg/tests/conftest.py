"""
Pytest configuration and shared fixtures.

Author: DmitrTRC
"""

from pathlib import Path
from typing import Generator

import pytest

from sctool.domain.models import Profile, Tree
from sctool.infrastructure.config.settings import reset_settings

FIXTURES_DIR = Path(__file__).parent / "fixtures"

# ═══════════════════════════════════════════════════════════
# Fixtures: Domain Models
# ═══════════════════════════════════════════════════════════


@pytest.fixture
def smallstar() -> Profile:
    """Four voters, single-crossing on the star centered at voter 2."""
    return Profile.from_names(
        ["a", "b", "c", "d"],
        [
            ["a", "b", "c", "d"],
            ["a", "c", "b", "d"],
            ["d", "a", "c", "b"],
            ["c", "b", "a", "d"],
        ],
    )


@pytest.fixture
def smallstar_tree() -> Tree:
    """Star on four voters with center 2."""
    return Tree.star(4, center=2)


@pytest.fixture
def latin4() -> Profile:
    """Cyclic Latin square on four candidates; single-crossing on no tree."""
    return Profile.from_names(
        ["a", "b", "c", "d"],
        [
            ["a", "b", "c", "d"],
            ["b", "c", "d", "a"],
            ["c", "d", "a", "b"],
            ["d", "a", "b", "c"],
        ],
    )


@pytest.fixture
def unanimous4() -> Profile:
    """One order held by four voters (a single weighted voter line)."""
    return Profile.from_names(["a", "b", "c", "d"], [["a", "b", "c", "d"]], [4])


@pytest.fixture
def two() -> Profile:
    """Two voters with opposite orders over two candidates."""
    return Profile.from_names(["a", "b"], [["a", "b"], ["b", "a"]])


@pytest.fixture
def cycle3() -> Profile:
    """Condorcet cycle a > b > c > a."""
    return Profile.from_names(
        ["a", "b", "c"], [["a", "b", "c"], ["b", "c", "a"], ["c", "a", "b"]]
    )


# ═══════════════════════════════════════════════════════════
# Fixtures: File System
# ═══════════════════════════════════════════════════════════


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory holding the profile and tree fixture files."""
    return FIXTURES_DIR


@pytest.fixture
def temp_output_dir(tmp_path: Path) -> Generator[Path, None, None]:
    """Provide temporary output directory for testing."""
    output_dir = tmp_path / "output"
    output_dir.mkdir(parents=True, exist_ok=True)
    yield output_dir


# ═══════════════════════════════════════════════════════════
# Fixtures: Configuration
# ═══════════════════════════════════════════════════════════


@pytest.fixture(autouse=True)
def fresh_settings() -> Generator[None, None, None]:
    """Give every test its own settings singleton."""
    reset_settings()
    yield
    reset_settings()


# ═══════════════════════════════════════════════════════════
# Pytest Configuration
# ═══════════════════════════════════════════════════════════


def pytest_configure(config: pytest.Config) -> None:
    """Configure pytest with custom markers."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "slow: Slow running tests")


def pytest_collection_modifyitems(
    config: pytest.Config, items: list[pytest.Item]
) -> None:
    """Modify test collection to add markers automatically."""
    for item in items:
        # Auto-mark tests based on their location
        if "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
        elif "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
