"""Pipeline configuration: one JSON document, schema-validated."""

from __future__ import annotations

import copy
import hashlib
import importlib.resources
import json
import os
from dataclasses import dataclass
from pathlib import Path

import jsonschema

from ..embedding import NeighborhoodConfig

CACHE_ROOT_ENV_VAR = "STATIONSCOUT_CACHE_ROOT"

# tested neighborhood ranges per resolution
K_CAPS = {9: 3, 10: 10, 11: 25}

DEFAULTS = {
    "train_cities": None,
    "eval_city": None,
    "resolution": 11,
    "embedding_method": "category_counting",
    "neighborhood": {"K": 5, "method": "squared_diminishing"},
    "normalization": "min_max",
    "model": "random_forest",
    "imbalance_ratio": 2.5,
    "iterations": 100,
    "base_seed": 0,
    "threshold": 0.5,
    "trees": 100,
    "cache_root": None,
    "output_dir": "out",
    "overpass_endpoint": None,
    "max_workers": 2,
    "queue_limit": 16,
}

# knobs that change where things run, not what is computed
RUNTIME_KEYS = ("cache_root", "output_dir", "overpass_endpoint", "max_workers", "queue_limit")


class ConfigError(ValueError):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("invalid pipeline config:\n" + "\n".join(self.errors))


def load_schema() -> dict:
    text = (
        importlib.resources.files("stationscout") / "data" / "pipeline_config.schema.json"
    ).read_text()
    return json.loads(text)


@dataclass(frozen=True)
class CitySpec:
    name: str
    boundary: dict
    stations: dict | None

    def boundary_source(self):
        b = self.boundary
        if b["kind"] == "bbox":
            return ("bbox", (b["south"], b["west"], b["north"], b["east"]))
        if b["kind"] == "polygon_file":
            return ("polygon_file", b["path"])
        return ("osm_relation_id", b["relation_id"])

    def station_source(self):
        st = self.stations
        if st is None:
            return None
        if st["source"] == "nextbike_api":
            return ("nextbike_api", st["city_name"])
        return (st["source"], st["path"])


@dataclass(frozen=True)
class PipelineConfig:
    """Validated, defaults-applied view of the config document."""

    doc: dict

    @property
    def cities(self) -> tuple[CitySpec, ...]:
        return tuple(
            CitySpec(c["name"], c["boundary"], c.get("stations"))
            for c in self.doc["cities"]
        )

    def city(self, name: str) -> CitySpec:
        for spec in self.cities:
            if spec.name == name:
                return spec
        raise KeyError(f"city {name!r} is not in the config")

    @property
    def train_cities(self) -> tuple[str, ...]:
        return tuple(self.doc["train_cities"])

    @property
    def eval_city(self) -> str:
        return self.doc["eval_city"]

    @property
    def resolution(self) -> int:
        return self.doc["resolution"]

    @property
    def embedding_method(self) -> str:
        return self.doc["embedding_method"]

    @property
    def neighborhood(self) -> NeighborhoodConfig:
        n = self.doc["neighborhood"]
        return NeighborhoodConfig(n["K"], n["method"])

    @property
    def imbalance_ratio(self) -> float:
        return self.doc["imbalance_ratio"]

    @property
    def iterations(self) -> int:
        return self.doc["iterations"]

    @property
    def base_seed(self) -> int:
        return self.doc["base_seed"]

    @property
    def threshold(self) -> float:
        return self.doc["threshold"]

    @property
    def trees(self) -> int:
        return self.doc["trees"]

    @property
    def cache_root(self) -> str:
        configured = self.doc["cache_root"]
        if configured:
            return configured
        return os.environ.get(CACHE_ROOT_ENV_VAR, "cache")

    @property
    def output_dir(self) -> str:
        return self.doc["output_dir"]

    @property
    def overpass_endpoint(self) -> str | None:
        return self.doc["overpass_endpoint"]

    @property
    def max_workers(self) -> int:
        return self.doc["max_workers"]

    @property
    def queue_limit(self) -> int:
        return self.doc["queue_limit"]

    def fingerprint(self) -> str:
        """Digest of the experiment definition.

        Runtime knobs (paths, endpoints, worker counts) are excluded: the
        same science on a different disk is the same experiment.
        """
        doc = {k: v for k, v in self.doc.items() if k not in RUNTIME_KEYS}
        blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def with_overrides(self, **overrides) -> "PipelineConfig":
        """New config with top-level fields replaced; None means keep."""
        doc = copy.deepcopy(self.doc)
        for key, value in overrides.items():
            if value is None:
                continue
            if key in ("K", "neighborhood_method"):
                field = "K" if key == "K" else "method"
                doc["neighborhood"] = {**doc["neighborhood"], field: value}
            else:
                doc[key] = value
        return config_from_doc(doc)


def config_from_doc(doc: dict) -> PipelineConfig:
    schema = load_schema()
    validator = jsonschema.Draft202012Validator(schema)
    errors = [
        f"{'/'.join(str(p) for p in e.absolute_path) or '<root>'}: {e.message}"
        for e in sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    ]
    if errors:
        raise ConfigError(errors)

    merged = copy.deepcopy(doc)
    for key, value in DEFAULTS.items():
        if key not in merged:
            merged[key] = copy.deepcopy(value)
    for key, value in DEFAULTS["neighborhood"].items():
        merged["neighborhood"].setdefault(key, value)
    for city in merged["cities"]:
        city.setdefault("stations", None)

    names = [c["name"] for c in merged["cities"]]
    problems = []
    if len(set(names)) != len(names):
        problems.append(f"cities: duplicate names in {names}")

    cap = K_CAPS[merged["resolution"]]
    if merged["neighborhood"]["K"] > cap:
        problems.append(
            f"neighborhood/K: K={merged['neighborhood']['K']} exceeds the supported "
            f"maximum {cap} at resolution {merged['resolution']}"
        )

    with_stations = [c["name"] for c in merged["cities"] if c.get("stations")]
    if merged["train_cities"] is None:
        merged["train_cities"] = with_stations
    if not merged["train_cities"]:
        problems.append("train_cities: no cities with stations to train on")
    for name in merged["train_cities"]:
        if name not in names:
            problems.append(f"train_cities: unknown city {name!r}")
        elif name not in with_stations:
            problems.append(f"train_cities: city {name!r} has no station source")
    if merged["eval_city"] is None:
        merged["eval_city"] = names[0]
    if merged["eval_city"] not in names:
        problems.append(f"eval_city: unknown city {merged['eval_city']!r}")

    if problems:
        raise ConfigError(problems)
    return PipelineConfig(merged)


def load_config(path: str | Path) -> PipelineConfig:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError([f"not valid JSON: {exc}"]) from exc
    return config_from_doc(doc)
