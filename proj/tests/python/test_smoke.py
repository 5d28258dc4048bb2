"""End-to-end smoke of the python bindings: train, predict, rules, boundary,
persistence and the perceptron bound checker."""

import math

import pytest

import tsetlin


def two_feature_data():
    """Label follows the first feature; the second is noise."""
    rows, labels = [], []
    for x in (0.05, 0.15, 0.25, 0.35, 0.65, 0.75, 0.85, 0.95):
        for y in (0.2, 0.8):
            rows.append([x, y])
            labels.append(1 if x > 0.5 else 0)
    return rows, labels


@pytest.fixture(scope="module")
def trained():
    rows, labels = two_feature_data()
    cfg = tsetlin.Config()
    cfg.clauses = 10
    cfg.T = 5
    cfg.s = 3.0
    cfg.epochs = 60
    cfg.seed = 3
    model, report = tsetlin.train(
        rows,
        labels,
        config=cfg,
        bits_per_feature=4,
        test_fraction=0.0,
        class_names=["neg", "pos"],
        feature_names=["a", "b"],
    )
    return model, report, rows, labels


def test_training_report(trained):
    model, report, rows, labels = trained
    assert model.binary
    assert model.n_classes == 2
    assert model.class_names == ["neg", "pos"]
    assert model.feature_names == ["a", "b"]
    assert report["train_accuracy"] == 1.0
    assert report["train_size"] == len(rows)
    assert report["test_size"] == 0
    assert report["test_accuracy"] is None
    assert report["warnings"] == []


def test_predictions(trained):
    model, _, rows, labels = trained
    assert model.predict_many(rows) == labels
    label, votes = model.predict([0.9, 0.5])
    assert label == 1
    assert len(votes) == 1  # binary: a single vote sum
    assert votes[0] >= 1


def test_rules(trained):
    model, _, _, _ = trained
    rules = model.rules(top_k=3)
    assert set(rules) == {"pos"}
    text, terms = rules["pos"]
    assert isinstance(text, str) and text
    assert isinstance(terms, list)
    for term in terms:
        assert all(isinstance(i, int) and i != 0 for i in term)


def test_boundary_grid(trained):
    model, _, _, _ = trained
    grid = model.boundary(0, 1, 8)
    assert len(grid) == 64
    xs = sorted({x for x, _, _, _ in grid})
    assert math.isclose(xs[0], 0.05)
    assert math.isclose(xs[-1], 0.95)
    for x, y, label, margin in grid:
        assert label in (0, 1)
        assert isinstance(margin, int)
    # High x side of the grid is class 1 territory.
    assert all(label == 1 for x, _, label, _ in grid if x > 0.6)
    assert all(label == 0 for x, _, label, _ in grid if x < 0.4)


def test_json_and_file_round_trip(trained, tmp_path):
    model, _, rows, _ = trained
    clone = tsetlin.Model.from_json(model.to_json())
    assert clone.predict_many(rows) == model.predict_many(rows)

    path = str(tmp_path / "model.json")
    model.save(path)
    loaded = tsetlin.Model.load(path)
    assert loaded.predict_many(rows) == model.predict_many(rows)
    assert loaded.to_json() == model.to_json()


def test_multiclass():
    rows, labels = [], []
    for center, cls in ((0.1, 0), (0.5, 1), (0.9, 2)):
        for d in (-0.03, 0.0, 0.03):
            rows.append([center + d, 0.5])
            labels.append(cls)
    cfg = tsetlin.Config()
    cfg.clauses = 20
    cfg.T = 5
    cfg.epochs = 60
    cfg.seed = 1
    # Four bits cannot keep nine values apart (quantile cuts merge the
    # cluster edges), so ask for eight.
    model, report = tsetlin.train(
        rows, labels, config=cfg, bits_per_feature=8, test_fraction=0.0
    )
    assert not model.binary
    assert model.n_classes == 3
    assert model.class_names == ["0", "1", "2"]
    assert report["train_accuracy"] >= 0.8
    label, votes = model.predict(rows[0])
    assert len(votes) == 3


def test_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        tsetlin.train([[0.5]], [0, 1])  # row/label mismatch
    with pytest.raises(ValueError):
        tsetlin.train([[0.5], [0.6]], [0, 0])  # one class
    with pytest.raises(ValueError):
        tsetlin.Model.from_json("not a model")


def test_perceptron_bound():
    xs = [[0, 0, 1], [0, 1, 1], [1, 0, 1], [1, 1, 1]]
    labels = [-1, -1, -1, 1]
    norm = math.sqrt(4.25)
    w_star = [1 / norm, 1 / norm, -1.5 / norm]
    gamma = 0.5 / norm

    report = tsetlin.perceptron_check_bound(xs, labels, w_star, gamma)
    assert report["holds"]
    assert report["converged"]
    assert report["binary_input"]
    assert math.isclose(report["bound"], 51.0)
    assert report["updates"] <= 51

    with pytest.raises(ValueError):  # not unit norm
        tsetlin.perceptron_check_bound(xs, labels, [1.0, 1.0, -1.5], gamma)
