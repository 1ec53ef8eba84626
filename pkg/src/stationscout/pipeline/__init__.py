"""Pipeline orchestration: config, runs, sweeps, exports, HTTP service."""

from .config import (
    CACHE_ROOT_ENV_VAR,
    K_CAPS,
    CitySpec,
    ConfigError,
    PipelineConfig,
    config_from_doc,
    load_config,
    load_schema,
)
from .heatmap import HEATMAP_FORMATS, export_heatmap, heatmap_geojson, heatmap_html
from .run import (
    PipelineError,
    PipelineResult,
    load_predictions_csv,
    prepare_cities,
    run_pipeline,
)
from .service import create_app
from .sweep import SWEEP_AXES, SweepReport, SweepRow, sweep, sweep_to_csv

__all__ = [
    "CACHE_ROOT_ENV_VAR",
    "CitySpec",
    "ConfigError",
    "HEATMAP_FORMATS",
    "K_CAPS",
    "PipelineConfig",
    "PipelineError",
    "PipelineResult",
    "SWEEP_AXES",
    "SweepReport",
    "SweepRow",
    "config_from_doc",
    "create_app",
    "export_heatmap",
    "heatmap_geojson",
    "heatmap_html",
    "load_config",
    "load_predictions_csv",
    "load_schema",
    "prepare_cities",
    "run_pipeline",
    "sweep",
    "sweep_to_csv",
]
