import filecmp

import pytest

from paretofair.cli import main


def run(args, capsys):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def data_rows(path):
    with open(path, encoding="utf-8") as fh:
        return [ln for ln in fh.read().splitlines() if not ln.startswith("#")]


@pytest.fixture
def uc3_files(tmp_path, capsys):
    p = tmp_path / "UC3.csv"
    assert run(["synth", "--use-case", "UC3", "-o", p], capsys)[0] == 0
    # split the two systems into one file each
    header, *rows = data_rows(p)
    files = []
    for name in ("System1", "System2"):
        f = tmp_path / f"{name}.csv"
        f.write_text("\n".join([header] + [r for r in rows if r.startswith(name + ",")]) + "\n")
        files.append(f)
    return files


def _predictions(path):
    # two models, ten samples each, two groups; hand-sized so every metric is a simple fraction
    rows = ["sample_id,score,label,gender,model_id"]
    scores = {
        "m1": [0.95, 0.85, 0.7, 0.6, 0.45, 0.4, 0.3, 0.2, 0.15, 0.05],
        "m2": [0.9, 0.3, 0.65, 0.55, 0.5, 0.35, 0.25, 0.6, 0.1, 0.8],
    }
    labels = [1, 1, 1, 0, 1, 0, 1, 0, 0, 0]
    for m, sc in scores.items():
        for i, (s, y) in enumerate(zip(sc, labels)):
            rows.append(f"{m}-{i},{s},{y},{'FM'[i % 2]},{m}")
    path.write_text("\n".join(rows) + "\n")
    return path


def test_compare_uc3(uc3_files, tmp_path, capsys):
    out_dir = tmp_path / "out"
    code, out, _ = run(["compare", *uc3_files, "-o", out_dir], capsys)
    assert code == 0
    for name in ("report.csv", "report.txt", "radar.svg", "pareto.svg", "System1/front.csv", "System2/front.csv"):
        assert (out_dir / name).exists(), name
    rows = {ln.split()[0]: ln.split()[1:] for ln in data_rows(out_dir / "report.txt")[1:]}
    assert rows["System1"][1:3] == ["1.00", "0.91"]
    assert rows["System2"][1:3] == ["0.60", "0.86"]
    assert "System2" in out
    assert len(data_rows(out_dir / "System1" / "front.csv")) == 11
    meta = [ln for ln in open(out_dir / "report.csv").read().splitlines() if ln.startswith("#")]
    keys = {ln[2:].split("=", 1)[0] for ln in meta}
    assert {"config_hash", "epsilon", "sigma", "dedup", "protocol"} <= keys


def test_compare_single_system(uc3_files, tmp_path, capsys):
    code, _, _ = run(["compare", uc3_files[1], "-o", tmp_path / "o"], capsys)
    assert code == 0
    assert data_rows(tmp_path / "o" / "report.txt")[1].split()[2] == "1.00"


def test_compare_is_deterministic(uc3_files, tmp_path, capsys):
    for d in ("a", "b"):
        assert run(["compare", *uc3_files, "-o", tmp_path / d], capsys)[0] == 0
    cmp = filecmp.dircmp(tmp_path / "a", tmp_path / "b")
    assert not cmp.diff_files and not cmp.left_only and not cmp.right_only
    for sub in ("System1", "System2"):
        assert filecmp.cmp(tmp_path / "a" / sub / "front.csv", tmp_path / "b" / sub / "front.csv", shallow=False)
    for name in ("report.csv", "report.txt", "radar.svg", "pareto.svg"):
        assert filecmp.cmp(tmp_path / "a" / name, tmp_path / "b" / name, shallow=False)


def test_compare_predictions(tmp_path, capsys):
    preds = _predictions(tmp_path / "sysA.csv")
    out_dir = tmp_path / "out"
    code, _, err = run(
        ["compare", preds, "--objective", "f1=max", "--objective", "eodd=min",
         "--threshold-grid", "0.3,0.5,0.7", "-o", out_dir],
        capsys,
    )
    assert code == 0, err
    header, *rows = data_rows(out_dir / "sysA" / "front.csv")
    assert header == "system,model_id,model,threshold,f1,eodd"
    assert rows
    for r in rows:
        _, pid, model, threshold, *_ = r.split(",")
        assert pid == f"{model}@{float(threshold):g}"
        assert model in ("m1", "m2")


def test_compare_config_file(tmp_path, capsys):
    preds = _predictions(tmp_path / "sysA.csv")
    cfg = tmp_path / "run.yaml"
    cfg.write_text(
        "objectives:\n"
        "  - {name: f1, direction: max}\n"
        "  - {name: 'eodd:gender', direction: min}\n"
        "epsilon: 1e-6\n"
        "sigma: 0.1\n"
        "threshold_grid: {start: 0.0, stop: 1.0, num: 11}\n"
        "inputs:\n"
        f"  - {{path: {preds.name}, system: Alpha}}\n"
        "output_dir: results\n"
    )
    code, out, err = run(["compare", "--config", cfg], capsys)
    assert code == 0, err
    assert (tmp_path / "results" / "Alpha" / "front.csv").exists()
    assert "Alpha" in out


def test_protocols_agree_when_validation_is_test(tmp_path, capsys):
    preds = _predictions(tmp_path / "sysA.csv")
    common = ["--objective", "f1=max", "--objective", "eodd=min", "--threshold-grid", "0:1:21"]
    assert run(["compare", preds, *common, "-o", tmp_path / "post"], capsys)[0] == 0
    code, _, err = run(
        ["compare", preds, *common, "--protocol", "a_priori", "--validation", preds, "-o", tmp_path / "prio"], capsys
    )
    assert code == 0, err
    assert data_rows(tmp_path / "post" / "report.csv") == data_rows(tmp_path / "prio" / "report.csv")


def test_exit_code_missing_file(tmp_path, capsys):
    code, _, err = run(["compare", tmp_path / "nope.csv", "-o", tmp_path / "o"], capsys)
    assert code == 1
    assert "nope.csv" in err


def test_exit_code_bad_value_names_line(tmp_path, capsys):
    p = tmp_path / "bad.csv"
    p.write_text("system,model_id,a,b\nS,x,0.1,0.2\nS,y,0.3,abc\n")
    code, _, err = run(["compare", p, "-o", tmp_path / "o"], capsys)
    assert code == 1
    assert "bad.csv:3" in err


@pytest.mark.parametrize(
    "extra",
    [["--sigma", "-1"], ["--epsilon", "0"], ["--protocol", "a_priori"], ["--threshold-grid", "0.5,0.2"]],
)
def test_exit_code_configuration(uc3_files, tmp_path, capsys, extra):
    code, _, err = run(["compare", uc3_files[0], *extra, "-o", tmp_path / "o"], capsys)
    assert code == 2
    assert "configuration error" in err


def test_predictions_need_objectives(tmp_path, capsys):
    preds = _predictions(tmp_path / "p.csv")
    assert run(["compare", preds, "-o", tmp_path / "o"], capsys)[0] == 2


def test_bad_config_key(tmp_path, capsys):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("inputs: [a.csv]\nbogus: 1\n")
    code, _, err = run(["compare", "--config", cfg], capsys)
    assert code == 2 and "bogus" in err


def test_mismatched_objectives_across_systems(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    a.write_text("model_id,x,y\np,0.1,0.2\n")
    b.write_text("model_id,x,z\np,0.1,0.2\n")
    assert run(["compare", a, b, "-o", tmp_path / "o"], capsys)[0] == 2


def test_radar_command(tmp_path, capsys):
    p = tmp_path / "ind.csv"
    p.write_text("system,HV,ONVG_hat,ONVGR,UD,AS\nSystem1,0.76,0.86,0.35,0.70,0.16\nSystem2,0.73,1.00,0.46,0.77,0.15\n")
    code, out, _ = run(["radar", p, "-o", tmp_path], capsys)
    assert code == 0
    svg = (tmp_path / "radar.svg").read_text()
    # 0.76/0.86/0.35/0.70/0.16 spans 0.2866 of the unit pentagon
    assert "System1 (Δ̂ = 0.29)" in svg
    assert "System2 (Δ̂ = 0.35)" in svg
    assert "normalized 0.29" in out
    assert (tmp_path / "areas.csv").exists()


def test_dedupe_identity_is_byte_identical(tmp_path, capsys):
    src = tmp_path / "in.csv"
    src.write_text("system,model_id,obj1,obj2\nS,a,0.1,0.9\nS,b,0.5,0.5\nS,c,0.9,0.1\n")
    out = tmp_path / "out.csv"
    assert run(["dedupe", src, "--epsilon", "1e-6", "-o", out], capsys)[0] == 0
    assert data_rows(out) == data_rows(src)


def test_dedupe_merges(tmp_path, capsys):
    src = tmp_path / "in.csv"
    src.write_text("model_id,obj1,obj2\na,0.5,0.5\nb,0.5,0.5000000001\nc,0.9,0.1\n")
    code, out, _ = run(["dedupe", src], capsys)
    assert code == 0
    assert [ln.split(",")[1] for ln in out.splitlines() if not ln.startswith("#")][1:] == ["b", "c"]


def test_pareto_command(tmp_path, capsys):
    src = tmp_path / "in.csv"
    src.write_text("model_id,obj1,obj2\nhi,0.9,0.3\nlo,0.8,0.2\n")
    code, out, _ = run(["pareto", src, "-o", tmp_path / "p"], capsys)
    assert code == 0
    assert data_rows(tmp_path / "p" / "front.csv")[1:] == ["in,hi,0.9,0.3"]
    assert data_rows(tmp_path / "p" / "partition.csv")[1:] == ["in,hi,0.9,0.3,1", "in,lo,0.8,0.2,0"]
    assert (tmp_path / "p" / "pareto.svg").exists()
    assert "1 of 2" in out


def test_sweep_command(tmp_path, capsys):
    preds = _predictions(tmp_path / "p.csv")
    code, out, _ = run(["sweep", preds, "--objective", "acc", "--objective", "dp:gender",
                        "--threshold-grid", "0.5"], capsys)
    assert code == 0
    header, *rows = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert header == "system,model_id,model,threshold,acc,dp:gender"
    # m1 at 0.5: first four samples positive -> TP 3, FP 1, FN 2, TN 4; two positives per group
    assert rows[0] == "p,m1@0.5,m1,0.5,0.7,0.0"
    assert len(rows) == 2


def test_synth_is_deterministic(capsys):
    args = ["synth", "--n-points", "6", "--n-dominated", "3", "--shape", "convex", "--jitter", "0.3", "--seed", "9"]
    a, b = run(args, capsys)[1], run(args, capsys)[1]
    assert a == b
    assert len([ln for ln in a.splitlines() if not ln.startswith("#")]) == 10


def test_synth_bad_spec(capsys):
    assert run(["synth", "--n-points", "0"], capsys)[0] == 2
