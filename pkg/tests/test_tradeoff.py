import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paretofair import (
    ConfigurationError,
    Direction,
    EvaluationError,
    IngestionError,
    ObjectiveSchema,
    ObjectiveSpec,
    PredictionRecord,
    ProtocolError,
    ThresholdSweep,
    a_posteriori_evaluate,
    a_priori_select,
    build_solution_set,
    confusion_counts,
    fairness_metrics,
    utility_metrics,
)
from paretofair.tradeoff import (
    ConfusionCounts,
    MissingGroupError,
    a_priori_select_points,
    compute_metrics,
    load_predictions,
    operating_points,
    parse_metric,
)

F1_EODD = ObjectiveSchema((ObjectiveSpec("f1"), ObjectiveSpec("eodd", Direction.MINIMIZE)))


def rec(i, score, label, group="a"):
    return PredictionRecord(str(i), score, label, {"g": group})


def test_counts_examples():
    assert tuple(confusion_counts([rec(1, 0.9, 1), rec(2, 0.2, 0)], 0.5)) == (1, 0, 1, 0)
    recs = [rec(i, s, y) for i, (s, y) in enumerate([(0.1, 1), (0.0, 0), (0.7, 0), (0.3, 1)])]
    c = confusion_counts(recs, 0.0)
    assert (c.tp, c.fp) == (2, 2)


def test_threshold_tie_is_positive():
    assert confusion_counts([rec(1, 0.5, 1)], 0.5).tp == 1


def test_counts_match_per_record_oracle():
    rng = np.random.default_rng(5)
    recs = [rec(i, float(rng.random()), int(rng.integers(0, 2))) for i in range(20)]
    expected = [0, 0, 0, 0]
    for r in recs:
        pred = r.score >= 0.5
        expected[{(True, 1): 0, (True, 0): 1, (False, 0): 2, (False, 1): 3}[(pred, r.label)]] += 1
    assert list(confusion_counts(recs, 0.5)) == expected


def test_group_filter_and_missing_group():
    recs = [rec(1, 0.9, 1, "a"), rec(2, 0.9, 0, "b")]
    assert tuple(confusion_counts(recs, 0.5, ("g", "b"))) == (0, 1, 0, 0)
    with pytest.raises(MissingGroupError):
        confusion_counts(recs, 0.5, ("g", "zzz"))


def test_utility_examples():
    assert utility_metrics(ConfusionCounts(50, 0, 50, 0)) == (1.0, 1.0)
    assert utility_metrics(ConfusionCounts(0, 0, 100, 0)) == (1.0, 0.0)
    acc, f1 = utility_metrics(ConfusionCounts(30, 10, 40, 20))
    assert acc == pytest.approx(0.7)
    assert f1 == pytest.approx(60 / 90)


def _group(name, tp, fn, fp, tn):
    out, k = [], 0
    for n, score, label in ((tp, 0.9, 1), (fn, 0.1, 1), (fp, 0.9, 0), (tn, 0.1, 0)):
        for _ in range(n):
            out.append(rec(f"{name}{k}", score, label, name))
            k += 1
    return out


def test_eodd_is_max_of_rate_gaps():
    # A: TPR 0.9, FPR 0.2; B: TPR 0.6, FPR 0.1
    recs = _group("A", 9, 1, 2, 8) + _group("B", 6, 4, 1, 9)
    gf = fairness_metrics(recs, 0.5, "g")
    assert gf.eodd_diff == pytest.approx(0.3)


def test_identical_groups_have_zero_gaps():
    gf = fairness_metrics(_group("A", 3, 2, 1, 4) + _group("B", 3, 2, 1, 4), 0.5, "g")
    assert (gf.dp_diff, gf.eodd_diff, gf.minmax_f1_diff) == (0.0, 0.0, 0.0)


def test_extreme_parity_gap():
    recs = [rec(i, 0.9, i % 2, "A") for i in range(4)] + [rec(10 + i, 0.1, i % 2, "B") for i in range(4)]
    assert fairness_metrics(recs, 0.5, "g").dp_diff == 1.0


def test_single_group_rejected():
    with pytest.raises(EvaluationError, match="'g'"):
        fairness_metrics([rec(1, 0.5, 1, "A"), rec(2, 0.2, 0, "A")], 0.5, "g")


def test_group_without_positives_is_excluded_from_tpr():
    recs = _group("A", 2, 1, 1, 2) + _group("B", 0, 0, 1, 3)
    gf = fairness_metrics(recs, 0.5, "g")
    assert gf.excluded == {"TPR": ("B",)}
    assert gf.eodd_diff == pytest.approx(abs(1 / 3 - 1 / 4))


group_counts = st.tuples(*[st.integers(0, 6)] * 4).filter(lambda t: sum(t) > 0)


@settings(max_examples=100)
@given(group_counts, group_counts)
def test_gaps_invariant_to_group_relabeling(ga, gb):
    recs = _group("A", *ga) + _group("B", *gb)
    swapped = [PredictionRecord(r.sample_id, r.score, r.label, {"g": {"A": "B", "B": "A"}[r.groups["g"]]}) for r in recs]
    a, b = fairness_metrics(recs, 0.5, "g"), fairness_metrics(swapped, 0.5, "g")
    assert (a.dp_diff, a.eodd_diff, a.minmax_f1_diff) == (b.dp_diff, b.eodd_diff, b.minmax_f1_diff)
    for v in (a.dp_diff, a.eodd_diff, a.minmax_f1_diff):
        assert 0.0 <= v <= 1.0


@settings(max_examples=50)
@given(st.lists(st.tuples(st.floats(0, 1), st.integers(0, 1)), min_size=1, max_size=30), st.floats(0, 1), st.floats(0, 1))
def test_predicted_positives_monotone_in_threshold(rows, t1, t2):
    recs = [rec(i, s, y) for i, (s, y) in enumerate(rows)]
    lo, hi = sorted((t1, t2))
    a, b = confusion_counts(recs, lo), confusion_counts(recs, hi)
    assert a.tp + a.fp >= b.tp + b.fp
    assert a.total == b.total == len(rows)


def test_parse_metric():
    assert parse_metric("eodd:gender") == ("eodd", "gender")
    assert parse_metric("Accuracy") == ("accuracy", None)
    with pytest.raises(ConfigurationError):
        parse_metric("auc")
    with pytest.raises(ConfigurationError):
        parse_metric("f1:gender")


def test_compute_metrics_needs_attribute_when_ambiguous():
    recs = [PredictionRecord("1", 0.9, 1, {"g": "a", "h": "x"}), PredictionRecord("2", 0.1, 0, {"g": "b", "h": "y"})]
    with pytest.raises(ConfigurationError):
        compute_metrics(recs, 0.5, ["dp"])
    assert compute_metrics(recs, 0.5, ["dp:g"]) == {"dp:g": 1.0}


def test_threshold_sweep_validation():
    with pytest.raises(ConfigurationError):
        ThresholdSweep((0.5, 0.2))
    with pytest.raises(ConfigurationError):
        ThresholdSweep((0.0, 1.5))


def test_black_box_model_gives_one_point():
    recs = {"bb": [rec(i, float(i % 2), i % 2, "ab"[i % 3 == 0]) for i in range(10)]}
    ops = operating_points(recs, ["f1", "eodd"], (0.1, 0.5, 0.9))
    assert len(ops) == 1
    assert ops[0].threshold is None and ops[0].id == "bb"


def test_build_solution_set_with_duplicate_pair():
    # two models x three thresholds; m2@0.3 lands exactly on m1@0.3
    labels, groups = [1, 1, 0, 0, 1, 1, 0, 0], "AAAABBBB"
    m1_scores = [0.9, 0.6, 0.2, 0.55, 0.8, 0.4, 0.1, 0.65]
    m2_scores = [0.74, 0.65, 0.61, 0.03, 0.43, 0.69, 0.16, 0.39]
    records = {
        m: [rec(i, s, y, g) for i, (s, y, g) in enumerate(zip(scores, labels, groups))]
        for m, scores in (("m1", m1_scores), ("m2", m2_scores))
    }
    grid = (0.3, 0.5, 0.7)
    ops = operating_points(records, F1_EODD.names, grid)
    raw = {op.id: tuple(op.raw_metrics.values()) for op in ops}
    # m1@0.3: each group TP 2, FP 1, TN 1 -> F1 8/10, equal TPR and FPR
    assert raw["m1@0.3"] == raw["m2@0.3"] == (0.8, 0.0)
    assert len(ops) == 6 and len(set(raw.values())) == 5
    s = build_solution_set(grid, F1_EODD, records, system_name="S")
    assert [sp.id for sp in s.points] == ["m1@0.3", "m1@0.5", "m1@0.7", "m2@0.5", "m2@0.7"]


def test_load_predictions(tmp_path):
    p = tmp_path / "preds.csv"
    p.write_text("sample_id,score,label,gender,model_id\n1,0.9,1,F,m1\n2,0.1,0,M,m1\n3,0.4,1,F,m2\n")
    out = load_predictions(p)
    assert list(out) == ["m1", "m2"]
    assert out["m1"][0].groups == {"gender": "F"}


def test_load_predictions_errors(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("sample_id,score,label\n1,0.9,1\n2,high,0\n")
    with pytest.raises(IngestionError, match=r"bad\.csv:3"):
        load_predictions(p)
    p.write_text("sample_id,score\n1,0.9\n")
    with pytest.raises(IngestionError, match="label"):
        load_predictions(p)
    p.write_text("sample_id,score,label\n1,0.9,2\n")
    with pytest.raises(IngestionError, match=r":2"):
        load_predictions(p)


def _val_test_records():
    strong = [rec(i, 0.9 if i < 5 else 0.1, int(i < 5), "ab"[i % 2]) for i in range(10)]
    weak = [rec(i, 0.6 if i % 3 else 0.4, i % 2, "ab"[i % 2]) for i in range(10)]
    return {"m1": strong, "m2": weak}


def test_a_priori_selects_validation_front():
    records = _val_test_records()
    val = build_solution_set((0.5, 0.7), F1_EODD, records, system_name="S")
    combos, test = a_priori_select(val, records)
    # m1 is perfect and fair at both thresholds (deduplicated to one point); it dominates everything
    assert combos == [("m1", 0.5)]
    assert [sp.id for sp in test.points] == ["m1@0.5"]
    assert test.n_candidates == len(val)


def test_a_priori_missing_model():
    records = _val_test_records()
    val = build_solution_set((0.5,), F1_EODD, records, system_name="S")
    with pytest.raises(ProtocolError):
        a_priori_select(val, {"m2": records["m2"]})


def test_a_priori_points_by_id():
    records = _val_test_records()
    v = build_solution_set((0.5, 0.7), F1_EODD, records, system_name="S")
    ids, sel = a_priori_select_points(v, v)
    assert ids == ["m1@0.5"] and len(sel) == 1


def test_a_posteriori_is_identity():
    s = build_solution_set((0.5,), F1_EODD, _val_test_records(), system_name="S")
    assert a_posteriori_evaluate(s) is s
