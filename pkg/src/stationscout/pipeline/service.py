"""HTTP facade: city listings, station layers, and queued prediction jobs."""

from __future__ import annotations

import logging
import queue
import threading
from contextlib import asynccontextmanager
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ..embedding import EmbeddingMatrix, load_matrix
from ..ingest import CityExtract
from ..ingest.extract import EXTRACT_SNAPSHOT_KIND
from ..model import repeated_experiment
from ..snapshot import load_snapshot
from . import workspace
from .config import PipelineConfig
from .heatmap import heatmap_geojson

log = logging.getLogger(__name__)


@dataclass
class CityAssets:
    extract: CityExtract
    matrix: EmbeddingMatrix


@dataclass
class Job:
    id: str
    status: str  # queued | running | done | failed
    request: dict
    result: dict | None = None
    error: str | None = None


@dataclass
class JobBoard:
    lock: threading.Lock = field(default_factory=threading.Lock)
    jobs: dict[str, Job] = field(default_factory=dict)
    counter: int = 0

    def create(self, request: dict) -> Job:
        with self.lock:
            self.counter += 1
            job = Job(id=f"job-{self.counter:04d}", status="queued", request=request)
            self.jobs[job.id] = job
            return job

    def get(self, job_id: str) -> Job | None:
        with self.lock:
            return self.jobs.get(job_id)


class PredictRequest(BaseModel):
    train_cities: list[str] = Field(min_length=1)
    eval_city: str
    threshold: float = Field(default=0.5, gt=0.0, lt=1.0)
    iterations: int | None = Field(default=None, ge=1, le=1000)


def load_city_assets(config: PipelineConfig) -> dict[str, CityAssets]:
    """Read prepared snapshots; cities missing the configured matrix are skipped."""
    key = workspace.matrix_key(
        config.embedding_method, config.resolution, config.neighborhood
    )
    assets = {}
    for city_path in workspace.list_extract_dirs(config.cache_root):
        extract = load_snapshot(city_path / "extract.bin", EXTRACT_SNAPSHOT_KIND)
        mpath = workspace.matrix_path(config.cache_root, extract.city_name, key)
        if not mpath.is_file():
            log.warning(
                "city %s has no matrix snapshot for %s; run the embed step first",
                extract.city_name, key,
            )
            continue
        assets[extract.city_name] = CityAssets(extract, load_matrix(mpath))
    return assets


def _unknown_city(name: str, available) -> HTTPException:
    return HTTPException(
        status_code=404,
        detail={"message": f"unknown city {name!r}", "available": sorted(available)},
    )


def create_app(config: PipelineConfig) -> FastAPI:
    """Build the service over prepared snapshots under the cache root.

    Jobs run on a small worker pool in FIFO order; snapshots are loaded
    once at startup and treated as read-only afterwards.
    """
    assets = load_city_assets(config)
    board = JobBoard()
    work: queue.Queue = queue.Queue(maxsize=config.queue_limit)
    threads: list[threading.Thread] = []

    def run_job(job: Job) -> None:
        job.status = "running"
        req = job.request
        try:
            iterations = req["iterations"] or config.iterations
            train_sets = [
                (assets[name].matrix, assets[name].extract.stations)
                for name in req["train_cities"]
            ]
            eval_assets = assets[req["eval_city"]]
            result = repeated_experiment(
                train_sets,
                eval_assets.matrix,
                eval_assets.extract.stations,
                ratio=config.imbalance_ratio,
                iterations=iterations,
                base_seed=config.base_seed,
                threshold=req["threshold"],
                trees=config.trees,
            )
            summary = result.summary
            job.result = {
                "heatmap": heatmap_geojson(result.predictions, None),
                "metrics": {
                    "accuracy": summary.accuracy,
                    "precision": summary.precision,
                    "recall": summary.recall,
                    "f1": summary.f1,
                    "flags": list(result.flags),
                },
                "train_cities": req["train_cities"],
                "eval_city": req["eval_city"],
                "threshold": req["threshold"],
                "iterations": iterations,
                "base_seed": config.base_seed,
            }
            job.status = "done"
        except Exception as exc:
            job.status = "failed"
            job.error = str(exc)
            log.exception("job %s failed", job.id)

    def worker() -> None:
        while True:
            job = work.get()
            if job is None:
                return
            run_job(job)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        for _ in range(config.max_workers):
            t = threading.Thread(target=worker, daemon=True)
            t.start()
            threads.append(t)
        yield
        for _ in threads:
            work.put(None)

    app = FastAPI(title="stationscout", lifespan=lifespan)

    @app.exception_handler(RequestValidationError)
    async def body_errors(request: Request, exc: RequestValidationError):
        errors = [
            {
                "field": ".".join(str(p) for p in err["loc"]),
                "message": err["msg"],
            }
            for err in exc.errors()
        ]
        return JSONResponse(
            status_code=400,
            content={"detail": "invalid request body", "errors": errors},
        )

    @app.get("/cities")
    def cities():
        return {
            "cities": [
                {
                    "name": name,
                    "stations": len(a.extract.stations),
                    "cells": len(a.matrix.rows),
                }
                for name, a in sorted(assets.items())
            ]
        }

    @app.get("/stations/{city}")
    def stations(city: str):
        if city not in assets:
            raise _unknown_city(city, assets)
        features = [
            {
                "type": "Feature",
                "geometry": {"type": "Point", "coordinates": [s.lon, s.lat]},
                "properties": {"station_id": s.station_id, "system": s.system_name},
            }
            for s in assets[city].extract.stations
        ]
        return {"type": "FeatureCollection", "features": features}

    @app.post("/predict", status_code=202)
    def submit(req: PredictRequest):
        for name in [*req.train_cities, req.eval_city]:
            if name not in assets:
                raise _unknown_city(name, assets)
        for name in req.train_cities:
            if not assets[name].extract.stations:
                raise HTTPException(
                    status_code=400,
                    detail=f"train city {name!r} has no stations",
                )
        job = board.create(req.model_dump())
        try:
            work.put_nowait(job)
        except queue.Full:
            job.status = "failed"
            job.error = "queue full"
            raise HTTPException(status_code=503, detail="job queue is full") from None
        return {"job_id": job.id, "status": job.status}

    @app.get("/jobs/{job_id}")
    def job_status(job_id: str):
        job = board.get(job_id)
        if job is None:
            raise HTTPException(status_code=404, detail=f"unknown job {job_id!r}")
        body = {"id": job.id, "status": job.status}
        if job.status == "failed":
            body["error"] = job.error
        if job.status == "done":
            body["result"] = job.result
        return body

    return app
