import json

import pytest

from kpflows import count
from kpflows.cli import run_cli


@pytest.fixture
def g3_path(tmp_path, g3):
    p = tmp_path / "g3.json"
    p.write_text(json.dumps(g3.to_json_dict()))
    return str(p)


@pytest.fixture
def k4_path(tmp_path, k4):
    p = tmp_path / "k4.json"
    p.write_text(json.dumps(k4.to_json_dict()))
    return str(p)


@pytest.fixture
def mixed_path(tmp_path, mixed_no_loop):
    p = tmp_path / "mixed.json"
    p.write_text(json.dumps(mixed_no_loop.to_json_dict()))
    return str(p)


def _run(capsys, argv):
    code = run_cli(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_stdout_decimal(self, capsys, g3_path):
        code, out, _ = _run(capsys, ["count", "--graph", g3_path, "--a", "[1,0,-1]"])
        assert code == 0 and out == "2\n"

    def test_backends_agree(self, capsys, k4_path):
        values = {}
        for backend in ("dp", "brute", "partial"):
            code, out, _ = _run(
                capsys,
                ["count", "--graph", k4_path, "--a", "[3,1,0,-4]", "--backend", backend],
            )
            assert code == 0
            values[backend] = out.strip()
        assert values == {"dp": "30", "brute": "30", "partial": "30"}

    def test_netflow_from_file(self, capsys, tmp_path, g3_path):
        a_path = tmp_path / "a.json"
        a_path.write_text('{"a": [1, 0, -1]}')
        code, out, _ = _run(capsys, ["count", "--graph", g3_path, "--a-file", str(a_path)])
        assert code == 0 and out == "2\n"

    def test_partial_backend_needs_hypothesis(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "n_plus_1": 4, "kind": "A",
            "edges": [{"i": 1, "j": 2, "sign": "-", "mult": 1},
                      {"i": 2, "j": 3, "sign": "-", "mult": 2},
                      {"i": 2, "j": 4, "sign": "-", "mult": 1},
                      {"i": 3, "j": 4, "sign": "-", "mult": 1}],
        }))
        code, _, err = _run(
            capsys,
            ["count", "--graph", str(bad), "--a", "[1,0,0,-1]", "--backend", "partial"],
        )
        assert code == 3 and "hypothesis" in err

    def test_output_file(self, capsys, tmp_path, g3_path):
        out_path = tmp_path / "result.txt"
        code, out, _ = _run(
            capsys,
            ["count", "--graph", g3_path, "--a", "[1,0,-1]", "-o", str(out_path)],
        )
        assert code == 0 and out == ""
        assert out_path.read_text() == "2\n"


class TestInputErrors:
    def test_both_netflow_sources(self, capsys, g3_path, tmp_path):
        a_path = tmp_path / "a.json"
        a_path.write_text('{"a": [1, 0, -1]}')
        code, _, err = _run(
            capsys,
            ["count", "--graph", g3_path, "--a", "[1,0,-1]", "--a-file", str(a_path)],
        )
        assert code == 2 and "not both" in err

    def test_missing_netflow(self, capsys, g3_path):
        code, _, err = _run(capsys, ["count", "--graph", g3_path])
        assert code == 2 and "netflow" in err

    def test_missing_file(self, capsys):
        code, _, err = _run(capsys, ["count", "--graph", "/nonexistent.json", "--a", "[0]"])
        assert code == 2 and "not found" in err

    def test_malformed_graph_json(self, capsys, tmp_path):
        p = tmp_path / "broken.json"
        p.write_text("{not json")
        code, _, err = _run(capsys, ["count", "--graph", str(p), "--a", "[0]"])
        assert code == 2 and "malformed JSON" in err

    def test_schema_error_names_field(self, capsys, tmp_path):
        p = tmp_path / "bad_field.json"
        p.write_text(json.dumps({"n_plus_1": 3, "kind": "A",
                                 "edges": [{"i": 1, "j": 2, "sign": "*", "mult": 1}]}))
        code, _, err = _run(capsys, ["count", "--graph", str(p), "--a", "[1,0,-1]"])
        assert code == 2 and "edges[0].sign" in err

    def test_wrong_netflow_length(self, capsys, g3_path):
        code, _, err = _run(capsys, ["count", "--graph", g3_path, "--a", "[1,0,0,-1]"])
        assert code == 2 and "length" in err

    def test_unknown_flag(self, capsys, g3_path):
        code, _, _ = _run(capsys, ["count", "--graph", g3_path, "--a", "[0,0,0]", "--bogus"])
        assert code == 2

    def test_non_integer_netflow(self, capsys, g3_path):
        code, _, err = _run(capsys, ["count", "--graph", g3_path, "--a", "[1,0.5,-1]"])
        assert code == 2


class TestEnumerate:
    def test_full_list(self, capsys, g3_path):
        code, out, _ = _run(capsys, ["enumerate", "--graph", g3_path, "--a", "[1,0,-1]"])
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "returned": 2,
            "truncated": False,
            "flows": [[0, 1, 0], [1, 0, 1]],
        }

    def test_limit_truncates(self, capsys, g3_path):
        code, out, _ = _run(
            capsys, ["enumerate", "--graph", g3_path, "--a", "[1,0,-1]", "--limit", "1"]
        )
        payload = json.loads(out)
        assert payload["returned"] == 1 and payload["truncated"] is True
        assert payload["flows"] == [[0, 1, 0]]


class TestVerify:
    def test_verdict_true_exit_zero(self, capsys, k4_path):
        code, out, _ = _run(
            capsys, ["verify", "--theorem", "a", "--graph", k4_path, "--a", "[3,1,0,-4]"]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] is True
        assert payload["lhs"] == "30" and payload["rhs"] == "10"
        assert payload["c"] == {"num": 3, "den": 1}

    def test_verdict_false_exit_one(self, capsys, mixed_path):
        code, out, _ = _run(
            capsys, ["verify", "--theorem", "c32", "--graph", mixed_path, "--a", "[2,0,0,0]"]
        )
        assert code == 1
        payload = json.loads(out)
        assert payload["verdict"] is False
        assert payload["lhs"] == "7" and payload["rhs"] == "5"

    def test_skipped_exit_three(self, capsys, mixed_path):
        code, out, _ = _run(
            capsys, ["verify", "--theorem", "c31", "--graph", mixed_path, "--a", "[2,0,0,0]"]
        )
        assert code == 3
        assert json.loads(out)["skipped"] is True

    def test_campaign(self, capsys):
        code, out, _ = _run(
            capsys,
            ["verify", "--theorem", "a", "--campaign", "3", "--n-plus-1", "4",
             "--netflows-per-seed", "2"],
        )
        assert code == 0
        lines = [json.loads(line) for line in out.strip().split("\n")]
        summary = lines[-1]
        assert summary["instances"] == 6
        assert summary["violated"] == 0
        assert all("seed" in line for line in lines[:-1])
        seeds = [line["seed"] for line in lines[:-1]]
        assert seeds == sorted(seeds)

    def test_campaign_rejects_graph(self, capsys, k4_path):
        code, _, err = _run(
            capsys,
            ["verify", "--theorem", "a", "--campaign", "2", "--graph", k4_path],
        )
        assert code == 2


class TestWitness:
    def test_certificates(self, capsys, k4_path, k4):
        code, out, _ = _run(
            capsys, ["witness", "--graph", k4_path, "--a", "[3,1,0,-4]"]
        )
        assert code == 0
        certs = json.loads(out)
        assert len(certs) == 10
        for cert in certs:
            assert set(cert) == {"partial_flow", "Y", "fiber_size", "fiber"}
            assert cert["fiber_size"] == len(cert["fiber"])
            assert cert["fiber_size"] == cert["Y"][0] + 1 + 1  # Y_{n-1} + a_{n-1} + 1
        total = sum(cert["fiber_size"] for cert in certs)
        assert total == count(k4, (3, 1, 0, -4))

    def test_hypothesis_unmet_exit_three(self, capsys, tmp_path):
        p = tmp_path / "nohyp.json"
        p.write_text(json.dumps({
            "n_plus_1": 4, "kind": "A",
            "edges": [{"i": 1, "j": 2, "sign": "-", "mult": 1},
                      {"i": 2, "j": 3, "sign": "-", "mult": 1},
                      {"i": 3, "j": 4, "sign": "-", "mult": 1}],
        }))
        code, _, _ = _run(capsys, ["witness", "--graph", str(p), "--a", "[1,0,0,-1]"])
        assert code == 3


class TestGenerate:
    def test_round_trip_through_other_commands(self, capsys, tmp_path):
        out_path = tmp_path / "generated.json"
        code, _, _ = _run(
            capsys,
            ["generate", "--n-plus-1", "4", "--theorem", "c31", "--max-mult", "2",
             "--seed", "11", "-o", str(out_path)],
        )
        assert code == 0
        obj = json.loads(out_path.read_text())
        assert obj["kind"] == "C"
        code, out, _ = _run(
            capsys, ["count", "--graph", str(out_path), "--a", "[2,1,1,0]"]
        )
        assert code == 0 and out.strip().isdigit()
        code, out, _ = _run(
            capsys,
            ["verify", "--theorem", "c31", "--graph", str(out_path), "--a", "[2,1,1,0]"],
        )
        assert code in (0, 3)
        code, _, _ = _run(
            capsys, ["witness", "--graph", str(out_path), "--a", "[2,1,1,0]"]
        )
        assert code == 0

    def test_kind_conflict(self, capsys):
        code, _, err = _run(
            capsys,
            ["generate", "--n-plus-1", "4", "--theorem", "a", "--kind", "C"],
        )
        assert code == 2 and "conflicts" in err


class TestCatalan:
    def test_match(self, capsys):
        code, out, _ = _run(capsys, ["catalan", "--n", "3"])
        assert code == 0
        payload = json.loads(out)
        assert payload == {"n": 3, "count": "10", "catalan_product": "10", "match": True}

    def test_bad_n(self, capsys):
        code, _, _ = _run(capsys, ["catalan", "--n", "0"])
        assert code == 2


class TestStdoutNeverContradictsExitCode:
    def test_verify_verdicts(self, capsys, k4_path, mixed_path):
        for argv, expect_code, expect_verdict in (
            (["verify", "--theorem", "a", "--graph", k4_path, "--a", "[3,1,0,-4]"], 0, True),
            (["verify", "--theorem", "c32", "--graph", mixed_path, "--a", "[2,0,0,0]"], 1, False),
        ):
            code, out, _ = _run(capsys, argv)
            assert code == expect_code
            assert json.loads(out)["verdict"] is expect_verdict
