"""
On-disk cache of exact p_n polynomials.

File format (UTF-8 text):

    etapoly-cache v1
    n=0: 1
    n=1: 1,-1
    ...

Records appear in increasing n; every record is validated on load.
"""

import logging
import os
import re
import tempfile
from pathlib import Path
from typing import Dict, List, Optional, Union

from src.core.errors import CacheFormatError, CacheInvariantError
from src.core.etapoly import compute_recurrence, invariant_violation
from src.models.polynomial import DensePolynomial, PolyCache
from utils.logger import log_error

logger = logging.getLogger(__name__)

CACHE_HEADER = "etapoly-cache v1"
_RECORD_RE = re.compile(r"^n=(\d+): ([+-]?\d+(?:,[+-]?\d+)*)$")

PathLike = Union[str, os.PathLike]


def _format_record(n: int, poly: DensePolynomial) -> str:
    return f"n={n}: " + ",".join(str(c) for c in poly.coeffs)


def cache_save(cache: PolyCache, path: PathLike) -> None:
    """Validate every record, then replace the file atomically."""
    for n, poly in cache.records.items():
        problem = invariant_violation(n, poly)
        if problem:
            raise CacheInvariantError(n, problem)

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    lines = [CACHE_HEADER] + [_format_record(n, cache.records[n]) for n in sorted(cache.records)]
    fd, tmp_name = tempfile.mkstemp(prefix=".etapoly-", dir=str(target.parent))
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write("\n".join(lines) + "\n")
        os.replace(tmp_name, target)
    except OSError:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.info("Cache saved", extra={"extra_fields": {"path": str(target), "records": len(cache.records)}})


def cache_load(path: PathLike) -> PolyCache:
    """Parse and validate a cache file."""
    target = Path(path)
    with open(target, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()

    if not lines or lines[0].strip() != CACHE_HEADER:
        raise CacheFormatError(f"missing header '{CACHE_HEADER}'", 1)

    records: Dict[int, DensePolynomial] = {}
    last_n = -1
    for line_number, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        match = _RECORD_RE.match(line)
        if not match:
            raise CacheFormatError(f"malformed record {line[:40]!r}", line_number)
        n = int(match.group(1))
        if n in records:
            raise CacheFormatError(f"duplicate record n={n}", line_number)
        if n < last_n:
            raise CacheFormatError(f"record n={n} after n={last_n}; records must increase", line_number)
        coeffs = tuple(int(field) for field in match.group(2).split(","))
        if len(coeffs) != n + 1:
            raise CacheFormatError(f"record n={n} has {len(coeffs)} fields, expected {n + 1}", line_number)
        poly = DensePolynomial(coeffs=coeffs)
        problem = invariant_violation(n, poly)
        if problem:
            raise CacheInvariantError(n, problem)
        records[n] = poly
        last_n = n

    logger.info("Cache loaded", extra={"extra_fields": {"path": str(target), "records": len(records)}})
    return PolyCache(records=records, source=str(target))


class PolyStore:
    """
    Exact polynomials backed by an optional cache file.

    A cache that fails to load is remembered in `load_error` and ignored;
    polynomials are then recomputed from the recurrence.
    """

    def __init__(self, path: Optional[PathLike] = None):
        self.path = Path(path) if path else None
        self.load_error: Optional[Exception] = None
        self._polys: List[DensePolynomial] = []
        self._loaded = False

    def _load(self) -> None:
        if self._loaded:
            return
        self._loaded = True
        if self.path is None or not self.path.exists():
            return
        try:
            self._polys = cache_load(self.path).contiguous_prefix()
        except (CacheFormatError, CacheInvariantError, OSError, ValueError) as e:
            self.load_error = e
            log_error(e, "cache load", {"path": str(self.path)})

    def ensure_loaded(self) -> None:
        """Load the cache file now and re-raise a load failure."""
        self._load()
        if self.load_error is not None:
            raise self.load_error

    @property
    def available(self) -> int:
        """Highest n held in memory (-1 when empty)."""
        self._load()
        return len(self._polys) - 1

    def polynomials(self, n_max: int, persist: bool = False) -> List[DensePolynomial]:
        """p_0..p_{n_max}, extending by recurrence when needed."""
        self._load()
        if n_max > self.available:
            self._polys = compute_recurrence(n_max, known=self._polys)
            # a file that failed to load is left untouched
            if persist and self.path is not None and self.load_error is None:
                self.save()
        return self._polys[: n_max + 1]

    def get(self, n: int, persist: bool = False) -> DensePolynomial:
        return self.polynomials(n, persist=persist)[n]

    def holds(self, n: int) -> bool:
        """True when p_n is already in memory without computation."""
        return 0 <= n <= self.available

    def save(self) -> None:
        if self.path is None:
            return
        cache_save(PolyCache(records=dict(enumerate(self._polys))), self.path)
