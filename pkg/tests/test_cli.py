import json

from galledtrees.cli import main
from galledtrees import golden


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse errors
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_single_cell(capsys):
    code, out, _ = run(capsys, "count", "--class", "general", "--labeling", "unlabeled",
                       "-n", "5", "-g", "2")
    assert code == 0 and out.strip() == "113"


def test_count_row_with_total(capsys):
    code, out, _ = run(capsys, "count", "--class", "simplex-tc", "--labeling", "labeled",
                       "-n", "5")
    assert code == 0
    assert out.splitlines() == ["105 705 60", "total 870"]


def test_count_pretty(capsys):
    code, out, _ = run(capsys, "count", "--class", "general", "--labeling", "labeled",
                       "-n", "10", "-g", "1", "--pretty")
    assert code == 0 and out.strip() == "4,689,345,150"


def test_count_usage_error(capsys):
    code, _, err = run(capsys, "count", "--class", "general", "--labeling", "unlabeled",
                       "-n", "0")
    assert code == 2


def test_table_csv_matches_golden(capsys):
    code, out, _ = run(capsys, "table", "--class", "general", "--labeling", "unlabeled",
                       "--max-n", "12")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n," + ",".join(f"g{g}" for g in range(12)) + ",total"
    assert len(lines) == 13
    gold = golden.load_golden()["general-unlabeled"]
    row12 = lines[12].split(",")
    assert row12[0] == "12"
    assert [int(v) for v in row12[1:13]] == [gold[(12, g)] for g in range(12)]
    assert int(row12[13]) == gold[(12, "total")]


def test_table_csv_round_trip(capsys):
    code, out, _ = run(capsys, "table", "--class", "simplex-tc", "--labeling", "unlabeled",
                       "--max-n", "9")
    assert code == 0
    lines = out.strip().splitlines()
    header = lines[0].split(",")
    rebuilt = [",".join(header)]
    for line in lines[1:]:
        rebuilt.append(",".join(line.split(",")))
    assert "\n".join(rebuilt) == out.strip()


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--class", "general", "--labeling", "labeled",
                       "--max-n", "4", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert {"class": "general", "labeling": "labeled", "n": 3, "g": 1, "value": "21"} in records
    assert {"class": "general", "labeling": "labeled", "n": 4, "g": "total",
            "value": "723"} in records
    # values are strings, never numbers
    assert all(isinstance(r["value"], str) for r in records)
    # round trip: parse and re-emit
    assert json.loads(json.dumps(records)) == records


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "--class", "general", "--labeling", "unlabeled",
                       "--max-n", "1")
    assert code == 0
    assert out.strip().splitlines() == ["n,g0,total", "1,1,1"]


def test_table_engine_limit(capsys):
    code, _, err = run(capsys, "table", "--class", "general", "--labeling", "labeled",
                       "--max-n", "40")
    assert code == 3
    assert "series" in err


def test_series_arbitrary(capsys):
    code, out, _ = run(capsys, "series", "--class", "general", "--labeling", "unlabeled",
                       "--mode", "arbitrary", "-N", "10")
    assert code == 0
    assert out.strip() == "1,2,8,43,255,1637,11004,76634,547539,3992150"


def test_series_fixed_g_labeled(capsys):
    code, out, _ = run(capsys, "series", "--class", "general", "--labeling", "labeled",
                       "--mode", "fixed-g", "-g", "1", "-N", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "count-form: 0,2,21,228"
    assert lines[1] == "egf: 0,1,7/2,19/2"


def test_series_bivariate(capsys):
    code, out, _ = run(capsys, "series", "--class", "simplex-tc", "--labeling", "unlabeled",
                       "--mode", "bivariate", "-N", "5")
    assert code == 0
    assert "n=5: 3,11,1" in out


def test_series_usage(capsys):
    code, _, _ = run(capsys, "series", "--class", "general", "--labeling", "unlabeled",
                     "--mode", "fixed-g", "-N", "5")
    assert code == 2


def test_asym_constants(capsys):
    code, out, _ = run(capsys, "asym", "constants")
    assert code == 0
    lines = dict(l.split() for l in out.strip().splitlines())
    assert abs(float(lines["rho"]) - 0.40270) < 5e-6
    assert abs(float(lines["gamma"]) - 1.13003) < 5e-6
    assert float(lines["residual"]) < 1e-9


def test_asym_charsys(capsys):
    code, out, _ = run(capsys, "asym", "charsys", "--family", "simplex-unlabeled")
    assert code == 0
    vals = dict(l.split() for l in out.strip().splitlines() if len(l.split()) == 2)
    assert abs(float(vals["r"]) - 0.2344) < 5e-4
    assert abs(float(vals["delta"]) - 0.38353) < 5e-4


def test_asym_charsys_replicated(capsys):
    code, out, _ = run(capsys, "asym", "charsys", "--family", "simplex-unlabeled",
                       "--replicate-reported")
    vals = dict(l.split() for l in out.strip().splitlines() if len(l.split()) == 2)
    assert code == 0 and abs(float(vals["delta"]) - 0.3846) < 5e-4


def test_asym_ratio(capsys):
    code, out, _ = run(capsys, "asym", "ratio", "--class", "general", "--labeling",
                       "labeled", "-g", "1", "-n", "300")
    assert code == 0
    ratio = float(out.split()[1])
    assert abs(ratio - 1) < 0.1


def test_asym_estimate(capsys):
    code, out, _ = run(capsys, "asym", "estimate", "--class", "general", "--labeling",
                       "unlabeled", "-g", "1", "-n", "100")
    assert code == 0 and out.startswith("log-estimate")


def test_verify_scopes(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "tables")
    assert code == 0
    assert "4 tables, 0 mismatches" in out
    code, out, _ = run(capsys, "verify", "--scope", "bijections")
    assert code == 0


def test_verify_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "--scope", "tables")
    _, out2, _ = run(capsys, "verify", "--scope", "tables")
    assert out1 == out2


def test_golden_loader_shape():
    gold = golden.load_golden()
    assert set(gold) == set(golden.TABLE_SPECS)
    assert gold["general-unlabeled"][(5, 2)] == 113
    assert gold["simplex-unlabeled"][(25, "total")] == 4911122651176
    assert gold["general-labeled"][(12, "total")] == 43626178967384475
    assert gold["simplex-labeled"][(15, 7)] == 4382752374000
