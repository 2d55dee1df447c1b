import pytest
from typing import Callable, List, Tuple

from src.core.etapoly import compute_recurrence
from src.main import main
from src.models.polynomial import DensePolynomial

# p_6 as printed in the literature
P6_COEFFS = (7920, -18144, 14674, -5205, 805, -51, 1)


@pytest.fixture(scope="session")
def polys() -> List[DensePolynomial]:
    """Exact p_0..p_160, computed once per session."""
    return compute_recurrence(160)


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """Keep the default cache file out of the working tree."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def cache_file(tmp_path):
    """Path for a throwaway cache file."""
    return tmp_path / "test.cache"


@pytest.fixture
def run_cli(capsys) -> Callable[..., Tuple[int, str, str]]:
    """Run the CLI and return (exit code, stdout, stderr)."""

    def _run(*argv: str) -> Tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
