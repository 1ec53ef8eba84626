"""On-disk layout of per-city snapshots under the cache root."""

from __future__ import annotations

import os
from pathlib import Path

from ..embedding import NeighborhoodConfig
from ..ingest.overpass import city_slug


def city_dir(root: str | Path, city_name: str) -> Path:
    return Path(root) / city_slug(city_name)


def grid_path(root: str | Path, city_name: str, resolution: int) -> Path:
    return city_dir(root, city_name) / f"grid_res{resolution}.bin"


def matrix_key(embedding_method: str, resolution: int, nc: NeighborhoodConfig) -> str:
    return f"{embedding_method}_res{resolution}_K{nc.K}_{nc.method}"


def matrix_path(root: str | Path, city_name: str, key: str) -> Path:
    return city_dir(root, city_name) / f"matrix_{key}.bin"


def norm_path(root: str | Path, city_name: str, key: str) -> Path:
    return city_dir(root, city_name) / f"matrix_{key}.norm.json"


def list_extract_dirs(root: str | Path) -> list[Path]:
    """City directories that hold an ingested extract, sorted by slug."""
    base = Path(root)
    if not base.is_dir():
        return []
    out = []
    for entry in sorted(os.listdir(base)):
        if (base / entry / "extract.bin").is_file():
            out.append(base / entry)
    return out
