"""Command line behavior: payload parsing, report shapes, exit codes,
byte-level determinism."""

import io
import json

import pytest

from conicnets import atlas, cli
from conicnets.errors import ResourceBudgetError
from conicnets.gf import field


def run(args, capsys):
    code = cli.main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_plane_rows(capsys):
    rows, _ = atlas.representative_pattern(field(4), "Sigma19")
    data = json.dumps({"rows": [list(r) for r in rows]})
    code, out, err = run(["classify-plane", "--q", "4", "--data", data], capsys)
    assert code == 0 and err == ""
    rec = json.loads(out)
    assert rec["label"] == "Sigma19"
    assert rec["schema"] == atlas.SCHEMA
    assert rec["q"] == 4
    assert rec["cubic_type"] == "ThreeConcurrentLines"
    assert sum(rec["od0"]) == 21
    assert rec["intersection_with_nucleus_plane"]["dimension"] in (0, 1, 2)


def test_classify_plane_bare_array_and_stdin(capsys, monkeypatch):
    rows, _ = atlas.representative_pattern(field(2), "Sigma9")
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps([list(r) for r in rows])))
    code, out, _ = run(["classify-plane", "--q", "2"], capsys)
    assert code == 0
    assert json.loads(out)["label"] == "Sigma9"


def test_classify_plane_label_payload(capsys):
    code, out, _ = run(
        ["classify-plane", "--q", "8", "--data", '{"label": "Sigma20"}'], capsys
    )
    assert code == 0
    assert json.loads(out)["label"] == "Sigma20"


def test_classify_plane_label_with_parameters(capsys):
    # an alternate trace-1 value stays in the Sigma21 orbit
    payload = '{"label": "Sigma21", "parameters": {"a": 3}}'
    code, out, _ = run(["classify-plane", "--q", "4", "--data", payload], capsys)
    assert code == 0
    assert json.loads(out)["label"] == "Sigma21"


def test_classify_plane_input_file(capsys, tmp_path):
    rows, _ = atlas.representative_pattern(field(4), "Sigma16")
    path = tmp_path / "plane.json"
    path.write_text(json.dumps({"rows": [list(r) for r in rows]}))
    code, out, _ = run(["classify-plane", "--q", "4", "--input", str(path)], capsys)
    assert code == 0
    assert json.loads(out)["label"] == "Sigma16"


def test_classify_net_strings(capsys):
    payload = '{"forms": ["X0*X2 + X1^2", "X0^2 + X0*X2 + X1*X2", "X2^2"]}'
    code, out, _ = run(["classify-net", "--q", "4", "--data", payload], capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["label"] == "Sigma18"
    assert rec["base_points"] == []
    assert rec["double_line_count"] == 1


def test_classify_net_vectors(capsys):
    forms = [list(f) for f in atlas.example_net(field(8))]
    code, out, _ = run(
        ["classify-net", "--q", "8", "--data", json.dumps({"forms": forms})], capsys
    )
    assert code == 0
    assert json.loads(out)["label"] == "Sigma18"


def test_atlas_json_q2(capsys):
    code, out, _ = run(["atlas", "--q", "2"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["mode"] == "exhaustive"
    assert all(c["pass"] for c in rec["checks"])
    assert [r["label"] for r in rec["orbits"]] == list(atlas.LABELS)
    assert sum(r["size"] for r in rec["orbits"]) == 883


def test_atlas_csv_q2(capsys):
    code, out, _ = run(["atlas", "--q", "2", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("label,size,stabilizer_order,od0,od4")
    assert len(lines) == 19
    assert lines[1].startswith("Sigma1,7,24,")


def test_output_flag_writes_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(["verify", "--q", "2", "--suite", "known-net",
                        "--output", str(path)], capsys)
    assert code == 0
    assert out == ""
    rec = json.loads(path.read_text())
    assert rec["suite"] == "known-net"


def test_deterministic_output_across_workers(capsys):
    code1, out1, _ = run(["verify", "--q", "2", "--suite", "partition"], capsys)
    code2, out2, _ = run(["verify", "--q", "2", "--suite", "partition",
                          "--workers", "2"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_double_lines_sampled(capsys):
    code, out, _ = run(["verify", "--q", "8", "--suite", "double-lines",
                        "--samples", "2000", "--seed", "11"], capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["mode"] == "sampled"
    assert rec["totals"]["violations"] == 0
    # seeded runs are reproducible
    code2, out2, _ = run(["verify", "--q", "8", "--suite", "double-lines",
                          "--samples", "2000", "--seed", "11"], capsys)
    assert out2 == out


def test_exit_code_usage_errors(capsys):
    code, _, err = run(["classify-plane", "--q", "4", "--data", "not json"], capsys)
    assert code == 2 and "error" in err
    code, _, err = run(["classify-plane", "--q", "6", "--data", "{}"], capsys)
    assert code == 2
    code, _, err = run(["classify-plane", "--q", "4", "--data", "{}"], capsys)
    assert code == 2  # neither rows nor label
    code, _, err = run(["classify-plane", "--q", "4", "--input", "/no/such/file"], capsys)
    assert code == 2
    code, _, err = run(["verify", "--q", "2", "--suite", "line-orbits"], capsys)
    assert code == 2  # suite defined only for q = 4, 8
    code, _, err = run(
        ["classify-net", "--q", "4", "--data", '{"forms": ["X9^2", "X0^2", "X1^2"]}'],
        capsys,
    )
    assert code == 2


def test_exit_code_out_of_family(capsys):
    data = '{"rows": [[1,0,0,0,0,0],[0,0,0,1,0,0],[0,0,0,0,0,1]]}'
    code, _, err = run(["classify-plane", "--q", "4", "--data", data], capsys)
    assert code == 3
    assert "out of family" in err


def test_exit_code_verification_failure(capsys, monkeypatch):
    failing = {
        "schema": atlas.SCHEMA, "suite": "known-net", "q": 2,
        "checks": [{"name": "classifies_as_sigma18", "pass": False, "details": {}}],
        "totals": {},
    }
    monkeypatch.setattr(atlas, "verify_known_net", lambda gf: failing)
    code, out, _ = run(["verify", "--q", "2", "--suite", "known-net"], capsys)
    assert code == 4


def test_exit_code_resource_budget(capsys, monkeypatch):
    def explode(s, membership_budget=None):
        raise ResourceBudgetError("orbit too large", partial=123)

    monkeypatch.setattr(atlas, "classify_plane", explode)
    code, _, err = run(
        ["classify-plane", "--q", "4", "--data", '{"label": "Sigma9"}'], capsys
    )
    assert code == 5
    assert "resource budget" in err


def test_argparse_usage_exits_2():
    with pytest.raises(SystemExit) as info:
        cli.main([])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["verify", "--q", "2", "--suite", "nonsense"])
    assert info.value.code == 2
