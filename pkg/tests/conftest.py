"""Shared fixture-town environment for pipeline-level tests."""

import json
import shutil
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def town_city_spec(manifest: dict, name: str) -> dict:
    south, west, north, east = manifest["towns"][name]["bbox"]
    slug = name.lower()
    spec = {
        "name": name,
        "boundary": {
            "kind": "bbox", "south": south, "west": west, "north": north, "east": east,
        },
        "stations": {"source": "csv_file", "path": str(DATA / f"stations_{slug}.csv")},
    }
    return spec


@pytest.fixture(scope="session")
def fixture_env(tmp_path_factory):
    """Writable copy of the bundled towns plus a config factory."""
    root = tmp_path_factory.mktemp("towns")
    cache = root / "cache"
    shutil.copytree(DATA / "fixture_cache", cache)
    manifest = json.loads((DATA / "fixture_manifest.json").read_text())

    def make_config(**overrides):
        doc = {
            "cities": [
                town_city_spec(manifest, "Greenfield"),
                town_city_spec(manifest, "Harborview"),
            ],
            "train_cities": ["Greenfield"],
            "eval_city": "Greenfield",
            "cache_root": str(cache),
            "output_dir": str(root / "out"),
            "iterations": 3,
        }
        doc.update(overrides)
        return doc

    return {
        "root": root,
        "cache": cache,
        "manifest": manifest,
        "make_config": make_config,
    }
