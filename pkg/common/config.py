# common/config.py
from __future__ import annotations
from dataclasses import dataclass
import os
from pathlib import Path

try:
    from dotenv import load_dotenv

    load_dotenv()
except ImportError:
    pass

LOG_LEVEL = os.getenv("TILECOH_LOG_LEVEL", "WARNING").upper()

# --- Paths ---
ROOT_DIR   = Path(os.getenv("TILECOH_ROOT", Path(__file__).resolve().parents[1]))
LOG_DIR    = Path(os.getenv("TILECOH_LOG_DIR", ROOT_DIR / "logs"))
MODELS_DIR = Path(os.getenv("TILECOH_MODELS_DIR", ROOT_DIR / "models"))
LOG_FILE   = os.getenv("TILECOH_LOG_FILE") or None


def _flag(name: str, default: str = "0") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


# --- Typed Config Blocks ---
@dataclass(frozen=True)
class StageParams:
    initial_depth: int = int(os.getenv("TILECOH_STAGE_DEPTH", "4"))
    max_doublings: int = int(os.getenv("TILECOH_STAGE_DOUBLINGS", "6"))

@dataclass(frozen=True)
class LimitParams:
    kernel_iterations: int = int(os.getenv("TILECOH_KERNEL_ITERATIONS", "64"))

@dataclass(frozen=True)
class RenderParams:
    track_extensions: bool = _flag("TILECOH_TRACK_EXTENSIONS")

# Canonical singletons
STAGE_PARAMS  = StageParams()
LIMIT_PARAMS  = LimitParams()
RENDER_PARAMS = RenderParams()

# Exposed helpers
def get_stage_params() -> StageParams: return STAGE_PARAMS
def get_limit_params() -> LimitParams: return LIMIT_PARAMS
def get_render_params() -> RenderParams: return RENDER_PARAMS

# --- Aggregated runtime config ---
class Config:
    LOG_LEVEL: str     = LOG_LEVEL
    ROOT_DIR: Path     = ROOT_DIR
    LOG_DIR: Path      = LOG_DIR
    LOG_FILE: str | None = LOG_FILE
    MODELS_DIR: Path   = MODELS_DIR
    STAGE_DEPTH: int   = STAGE_PARAMS.initial_depth
    STAGE_DOUBLINGS: int = STAGE_PARAMS.max_doublings
    KERNEL_ITERATIONS: int = LIMIT_PARAMS.kernel_iterations
    TRACK_EXTENSIONS: bool = RENDER_PARAMS.track_extensions
