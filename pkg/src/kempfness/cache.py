"""On-disk cache of reduced cohomology of full subcomplexes.

Entries are keyed by a hash of the complex and the subset ``I``; each is a
small JSON file written to a temporary name and renamed into place, so
concurrent writers never expose a partial file.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .linalg import AbelianGroup
from .simplicial import CohomologyTable, SimplicialComplex, full_subcomplex, reduced_cohomology

ENV_VAR = "KEMPFNESS_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "kempfness"


def complex_hash(K: SimplicialComplex) -> str:
    text = json.dumps(K.to_json(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()[:32]


class CachedReducedCohomology:
    """Picklable ``(K, I) -> CohomologyTable`` backed by a cache directory."""

    def __init__(self, root):
        self.root = Path(root)

    def _path(self, K: SimplicialComplex, I: int) -> Path:
        return self.root / complex_hash(K) / f"{I:x}.json"

    def __call__(self, K: SimplicialComplex, I: int) -> CohomologyTable:
        path = self._path(K, I)
        try:
            data = json.loads(path.read_text())
            table = CohomologyTable()
            for k, (free, tors) in data.items():
                table[int(k)] = AbelianGroup(free, tuple(tors))
            return table
        except (OSError, ValueError, KeyError):
            pass
        table = reduced_cohomology(full_subcomplex(K, I))
        payload = {str(k): [g.free_rank, list(g.torsion)] for k, g in sorted(table.items())}
        self._write(path, json.dumps(payload, sort_keys=True))
        return table

    @staticmethod
    def _write(path: Path, text: str) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except OSError:
            # an unwritable cache only costs recomputation
            pass
