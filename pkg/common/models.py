# common/models.py
"""Cached loader for the built-in JSON inputs under ``models/``."""
from __future__ import annotations

import os
from pathlib import Path
from threading import RLock
from typing import Any, Optional

from .config import MODELS_DIR
from .errors import InputError
from .schema import read_json


class ModelLoader:
    """
    Resolves a built-in name (``pd`` -> ``models/pd.json``) or a filesystem path.
    Parsed payloads are cached per resolved path.
    """
    def __init__(self, base_dir: Optional[str | Path] = None):
        self.base_dir = Path(base_dir or MODELS_DIR)
        self._cache: dict[str, Any] = {}
        self._lock = RLock()

    def resolve(self, name_or_path: str) -> Path:
        candidate = Path(name_or_path)
        if candidate.suffix == ".json" or os.sep in name_or_path:
            return candidate
        return self.base_dir / f"{name_or_path}.json"

    def is_builtin(self, name: str) -> bool:
        return (self.base_dir / f"{name}.json").exists()

    def builtins(self) -> list[str]:
        return sorted(p.stem for p in self.base_dir.glob("*.json"))

    def load(self, name_or_path: str) -> Any:
        path = self.resolve(name_or_path)
        key = str(path.resolve())
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        if not path.exists():
            raise InputError(f"no such input or built-in: {name_or_path}")
        data = read_json(path)
        with self._lock:
            self._cache[key] = data
        return data


_DEFAULT_LOADER = ModelLoader()


def get_model_loader() -> ModelLoader:
    return _DEFAULT_LOADER
