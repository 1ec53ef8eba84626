"""Classifier, metrics, and experiment contract tests."""

import math
import random

import numpy as np
import pytest
from shapely.geometry import box

from stationscout import h3core as h3
from stationscout.dataset import LabeledRegion, SamplingSpec, build_transfer_split
from stationscout.embedding import EmbeddingMatrix, NeighborhoodConfig
from stationscout.hexgrid import assign_features, tessellate
from stationscout.ingest import StationRecord
from stationscout.ingest.extract import CityExtract
from stationscout.model import (
    ConfusionCounts,
    ExperimentError,
    PredictionMap,
    confusion_counts,
    evaluate_predictions,
    load_model,
    matrix_fingerprint,
    predict,
    repeated_experiment,
    report_from_counts,
    save_model,
    train_classifier,
    transfer_matrix,
)

BOX = box(21.00137, 52.20119, 21.0150, 52.2100)
COLUMNS = tuple(f"c{i:02d}" for i in range(20))


@pytest.fixture(scope="module")
def cells():
    return sorted(tessellate(BOX, 11))


def synthetic_city(cells, name, n_pos, n_neg, seed, dim=20, gap=0.2):
    """Two well separated Gaussians in [0, 1]^dim plus station points.

    Positive cells get stations at their centers, so labeling recovers
    exactly the planted positives.
    """
    assert n_pos + n_neg <= len(cells)
    rng = np.random.Generator(np.random.PCG64(seed))
    chosen = list(cells[: n_pos + n_neg])
    rng.shuffle(chosen)
    rows = {}
    stations = []
    for i, cell in enumerate(chosen):
        mu = 0.5 + gap / 2 if i < n_pos else 0.5 - gap / 2
        rows[cell] = np.clip(rng.normal(mu, 0.02, size=dim), 0.0, 1.0)
        if i < n_pos:
            lat, lon = h3.cell_to_latlng(cell.index)
            stations.append(StationRecord(f"{name}-s{i}", lat, lon, name, "synthetic"))
    matrix = EmbeddingMatrix(
        name, 11, NeighborhoodConfig(0, "average"), rows, COLUMNS[:dim], True, None
    )
    return matrix, stations


@pytest.fixture(scope="module")
def city_a(cells):
    return synthetic_city(cells, "alpha", 30, 170, seed=11)


@pytest.fixture(scope="module")
def city_b(cells):
    return synthetic_city(cells, "beta", 20, 130, seed=12)


@pytest.fixture(scope="module")
def trained(city_a):
    matrix, stations = city_a
    split = build_transfer_split(matrix, stations, matrix, stations, SamplingSpec(2.0, 5))
    return train_classifier(split.train, matrix, seed=5)


def test_train_rejects_single_class(city_a):
    matrix, _ = city_a
    regions = [LabeledRegion(c, v, 0) for c, v in sorted(matrix.rows.items())][:40]
    with pytest.raises(ValueError, match="single class"):
        train_classifier(regions, matrix, seed=1)


def test_probability_is_fraction_of_tree_votes(trained, city_b):
    matrix, _ = city_b
    pmap = predict(trained, matrix)
    order = sorted(matrix.rows)
    X = np.vstack([matrix.rows[c] for c in order])
    pos_index = int(np.where(trained.forest.classes_ == 1)[0][0])
    votes = np.stack([est.predict(X) for est in trained.forest.estimators_])
    oracle = (votes == pos_index).mean(axis=0)
    for cell, expected in zip(order, oracle):
        assert pmap.probabilities[cell] == expected


def test_predictions_cover_every_cell(trained, city_b):
    matrix, _ = city_b
    pmap = predict(trained, matrix)
    assert set(pmap.probabilities) == set(matrix.rows)
    assert all(0.0 <= p <= 1.0 for p in pmap.probabilities.values())
    assert pmap.city_name == "beta"


def test_predict_rejects_config_mismatch(trained, city_b):
    matrix, _ = city_b
    other = EmbeddingMatrix(
        "beta", 11, NeighborhoodConfig(2, "average"), matrix.rows,
        matrix.column_semantics, True, None,
    )
    with pytest.raises(ValueError, match="config"):
        predict(trained, other)
    renamed = EmbeddingMatrix(
        "beta", 11, matrix.config, matrix.rows,
        tuple(f"x{i}" for i in range(20)), True, None,
    )
    with pytest.raises(ValueError, match="config"):
        predict(trained, renamed)


def test_predict_requires_normalized(trained, city_b):
    matrix, _ = city_b
    raw = EmbeddingMatrix(
        "beta", 11, matrix.config, matrix.rows, matrix.column_semantics, False, None
    )
    with pytest.raises(ValueError, match="normalized"):
        predict(trained, raw)


def test_metrics_hand_case(cells):
    # labels 1,1,0,0,1 with probs .9,.4,.6,.2,.5 at threshold .5
    labels = [1, 1, 0, 0, 1]
    probs = [0.9, 0.4, 0.6, 0.2, 0.5]
    regions = [LabeledRegion(c, np.zeros(1), l) for c, l in zip(cells[:5], labels)]
    pmap = PredictionMap("t", 11, dict(zip(cells[:5], probs)))
    report = evaluate_predictions(pmap, regions, threshold=0.5)
    assert report.counts == ConfusionCounts(tp=2, fp=1, tn=1, fn=1)
    assert report.accuracy == pytest.approx(0.6)
    assert report.precision == pytest.approx(2 / 3)
    assert report.recall == pytest.approx(2 / 3)
    assert report.f1 == pytest.approx(2 / 3)
    assert report.flags == ()


def test_metrics_match_bruteforce():
    rnd = random.Random(2024)
    for _ in range(60):
        n = rnd.randint(1, 40)
        labels = [rnd.randint(0, 1) for _ in range(n)]
        preds = [rnd.randint(0, 1) for _ in range(n)]
        counts = confusion_counts(labels, preds)
        tp = sum(1 for l, p in zip(labels, preds) if l == 1 and p == 1)
        fp = sum(1 for l, p in zip(labels, preds) if l == 0 and p == 1)
        tn = sum(1 for l, p in zip(labels, preds) if l == 0 and p == 0)
        fn = sum(1 for l, p in zip(labels, preds) if l == 1 and p == 0)
        assert counts == ConfusionCounts(tp, fp, tn, fn)
        report = report_from_counts(counts)
        assert report.accuracy == (tp + tn) / n
        assert report.precision == (tp / (tp + fp) if tp + fp else 0.0)
        assert report.recall == (tp / (tp + fn) if tp + fn else 0.0)
        p, r = report.precision, report.recall
        assert report.f1 == (2 * p * r / (p + r) if p + r else 0.0)


def test_zero_division_flags():
    report = report_from_counts(ConfusionCounts(tp=0, fp=0, tn=4, fn=0))
    assert report.precision == 0.0
    assert report.recall == 0.0
    assert report.f1 == 0.0
    assert set(report.flags) == {
        "f1_zero_division",
        "precision_zero_division",
        "recall_zero_division",
    }


def test_threshold_monotonicity(cells):
    rng = np.random.Generator(np.random.PCG64(3))
    chosen = cells[:100]
    pmap = PredictionMap("t", 11, {c: float(p) for c, p in zip(chosen, rng.random(100))})
    previous = None
    for threshold in (0.1, 0.3, 0.5, 0.7, 0.9):
        current = pmap.positives_at(threshold)
        if previous is not None:
            assert current <= previous
        previous = current


def test_evaluate_missing_cell(cells):
    regions = [LabeledRegion(cells[0], np.zeros(1), 1)]
    pmap = PredictionMap("t", 11, {cells[1]: 0.9})
    with pytest.raises(ValueError, match="missing"):
        evaluate_predictions(pmap, regions)


def test_importances(trained):
    imp = trained.importances()
    assert imp.shape == (20,)
    assert np.all(imp >= 0.0)
    assert math.isclose(float(imp.sum()), 1.0, abs_tol=1e-9)


def test_repeated_experiment_matches_manual_loop(city_a, city_b):
    train_m, train_s = city_a
    eval_m, eval_s = city_b
    result = repeated_experiment(
        [(train_m, train_s)], eval_m, eval_s,
        ratio=2.0, iterations=3, base_seed=77,
    )
    assert result.iterations == 3
    assert len(result.reports) == 3

    per_iter = []
    order = sorted(eval_m.rows)
    for i in range(3):
        split = build_transfer_split(
            train_m, train_s, eval_m, eval_s, SamplingSpec(2.0, 77 + i)
        )
        clf = train_classifier(split.train, train_m, seed=77 + i)
        pmap = predict(clf, eval_m)
        per_iter.append(np.array([pmap.probabilities[c] for c in order]))
    manual_mean = np.mean(np.stack(per_iter), axis=0)
    got = np.array([result.predictions.probabilities[c] for c in order])
    assert np.array_equal(got, manual_mean)
    lo = np.min(np.stack(per_iter), axis=0)
    hi = np.max(np.stack(per_iter), axis=0)
    assert np.all(got >= lo) and np.all(got <= hi)

    rerun = repeated_experiment(
        [(train_m, train_s)], eval_m, eval_s,
        ratio=2.0, iterations=3, base_seed=77,
    )
    assert rerun.predictions.probabilities == result.predictions.probabilities


def test_repeated_experiment_mean_metrics(city_a, city_b):
    train_m, train_s = city_a
    eval_m, eval_s = city_b
    result = repeated_experiment(
        [(train_m, train_s)], eval_m, eval_s, ratio=2.0, iterations=4, base_seed=9
    )
    for field in ("accuracy", "precision", "recall", "f1"):
        values = [getattr(r, field) for r in result.reports]
        assert getattr(result.summary, field) == pytest.approx(
            sum(values) / len(values), rel=1e-12
        )


def test_repeated_experiment_failure_names_seed(cells, city_a):
    rows = {cells[0]: np.full(20, 0.8), cells[1]: np.full(20, 0.2)}
    tiny = EmbeddingMatrix(
        "tiny", 11, NeighborhoodConfig(0, "average"), rows, COLUMNS, True, None
    )
    lat, lon = h3.cell_to_latlng(cells[0].index)
    stations = [StationRecord("s", lat, lon, "tiny", "synthetic")]
    with pytest.raises(ExperimentError, match="seed 100"):
        repeated_experiment(
            [(tiny, stations)], tiny, stations, ratio=2.0, iterations=3, base_seed=100
        )


def test_multi_city_training(city_a, city_b):
    train_a, stations_a = city_a
    train_b, stations_b = city_b
    result = repeated_experiment(
        [(train_a, stations_a), (train_b, stations_b)],
        train_b, stations_b, ratio=1.0, iterations=1, base_seed=4,
    )
    assert result.train_cities == ("alpha", "beta")
    assert result.summary.f1 >= 0.9  # in-sample on half the pool, should be easy


def test_save_load_roundtrip(trained, city_b, tmp_path):
    matrix, _ = city_b
    path = tmp_path / "model.bin"
    save_model(trained, path)
    loaded = load_model(path)
    assert loaded.fingerprint == trained.fingerprint
    assert predict(loaded, matrix).probabilities == predict(trained, matrix).probabilities

    with pytest.raises(ValueError, match="fingerprint"):
        load_model(path, expected_fingerprint="deadbeef00000000")
    forced = load_model(path, expected_fingerprint="deadbeef00000000", force=True)
    assert forced.fingerprint == trained.fingerprint


def test_transfer_matrix_order_and_values(cells, city_a, city_b):
    matrix_c, _ = synthetic_city(cells, "gamma", 10, 90, seed=13)
    datasets = [city_b, city_a, (matrix_c, [])]
    result = transfer_matrix(datasets, ratio=1.0, iterations=2, base_seed=21)
    # alpha has 30 stations, beta 20, gamma none
    assert result.order == ("alpha", "beta", "gamma")
    table = result.recall_table()
    assert set(table) == {(t, e) for t in result.order for e in result.order}
    for (train_city, eval_city), value in table.items():
        if train_city == "gamma" or eval_city == "gamma":
            assert value is None
        else:
            assert 0.0 <= value <= 1.0
    assert ("gamma", "alpha") in result.skipped
    rerun = transfer_matrix(datasets, ratio=1.0, iterations=2, base_seed=21)
    assert rerun.recall_table() == table


def test_synthetic_separation_is_learnable(cells):
    # 10 sigma between the class means
    train = synthetic_city(cells, "t1", 25, 150, seed=31, gap=0.2)
    eval_ = synthetic_city(cells, "t2", 25, 150, seed=32, gap=0.2)
    result = repeated_experiment(
        [train], eval_[0], eval_[1], ratio=2.0, iterations=1, base_seed=1
    )
    assert result.summary.f1 >= 0.95
