import json

from slopeforge.cli import main


def run_cli(args, capsys, payload=None, monkeypatch=None, tmp_path=None):
    if payload is not None:
        path = tmp_path / "input.json"
        path.write_text(json.dumps(payload))
        args = args + ["--input", str(path)]
    code = main(args)
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out.strip() else None
    return code, out, captured.err


class TestNewtonCommand:
    def test_polygon(self, capsys, tmp_path):
        code, out, _ = run_cli(["np"], capsys, {"slopes": [["1/2", 2]]},
                               tmp_path=tmp_path)
        assert code == 0
        assert out["vertices"] == [["0", "0"], ["2", "1"]]
        assert out["height"] == "1"
        assert out["integral"] is True
        assert out["format"] == 1

    def test_svg(self, capsys, tmp_path):
        svg_path = tmp_path / "poly.svg"
        code, out, _ = run_cli(["np", "--svg", str(svg_path)], capsys,
                               {"slopes": [["0", 1], ["2", 2]]},
                               tmp_path=tmp_path)
        assert code == 0
        text = svg_path.read_text()
        assert text.startswith("<svg") and "polyline" in text

    def test_malformed_input_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(["np"], capsys, {"slopes": [["x", 2]]},
                               tmp_path=tmp_path)
        assert code == 2
        assert "slopes[0][0]" in err

    def test_invalid_json_position(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"slopes\": [")
        code = main(["np", "--input", str(path)])
        err = capsys.readouterr().err
        assert code == 2 and "input error" in err


class TestSwanCommand:
    def test_sign_character(self, capsys, tmp_path):
        payload = {
            "group": {"permutation_generators": [[2, 1]]},
            "breaks": ["1"],
            "subgroups": [[0, 1]],
            "character": {"values": ["1", "-1"]},
        }
        code, out, _ = run_cli(["swan"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["swan"] == "1"
        assert out["hasse_arf"] is True
        assert out["slopes"] == [["1", 1]]

    def test_fractional_break(self, capsys, tmp_path):
        payload = {
            "group": {"permutation_generators": [[2, 1]]},
            "breaks": ["1/2"],
            "subgroups": [[0, 1]],
            "character": {"values": ["1", "-1"]},
        }
        code, out, _ = run_cli(["swan"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["swan"] == "1/2"
        assert out["hasse_arf"] is False


class TestHerbrandCommand:
    def test_c4_chain(self, capsys, tmp_path):
        payload = {
            "group": {"permutation_generators": [[2, 3, 4, 1]]},
            "lower": [[0, 1, 2, 3]] * 3 + [[0, 2]] * 3,
        }
        code, out, _ = run_cli(["herbrand"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["phi"]["breakpoints"] == [["0", "0"], ["2", "2"], ["5", "7/2"]]
        assert out["phi"]["final_slope"] == "1/4"
        assert out["upper"]["breaks"] == ["2", "7/2"]
        assert out["upper"]["subgroups"] == [[0, 1, 2, 3], [0, 2]]


class TestInductionCommands:
    def _s3_payload(self):
        return {
            "group": {"permutation_generators": [[2, 1, 3], [2, 3, 1]]},
            "subgroup": [0, 3, 4],
        }

    def test_induce(self, capsys, tmp_path):
        payload = self._s3_payload()
        payload["character"] = {"values": [
            "1",
            {"conductor": 3, "coefficients": ["0", "1"]},
            {"conductor": 3, "coefficients": ["-1", "-1"]},
        ]}
        code, out, _ = run_cli(["induce"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["degree"] == "2"
        assert out["character"]["values"] == ["2", "0", "-1"]

    def test_tind_degree(self, capsys, tmp_path):
        payload = self._s3_payload()
        payload["character"] = {"values": [
            "1",
            {"conductor": 3, "coefficients": ["0", "1"]},
            {"conductor": 3, "coefficients": ["-1", "-1"]},
        ]}
        code, out, _ = run_cli(["tind"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["degree"] == "1"

    def test_mackey_pass(self, capsys, tmp_path):
        payload = self._s3_payload()
        omega = {"values": [
            "1",
            {"conductor": 3, "coefficients": ["0", "1"]},
            {"conductor": 3, "coefficients": ["-1", "-1"]},
        ]}
        payload["left"] = omega
        payload["right"] = omega
        code, out, _ = run_cli(["mackey"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["pass"] is True


class TestGroupCommands:
    def test_wreath_summary(self, capsys, tmp_path):
        payload = {"base": {"permutation_generators": [[2, 3, 1]]}, "ell": 2}
        code, out, _ = run_cli(["wreath"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["order"] == 18 and out["class_count"] == 9

    def test_classify_abelian_diagonal(self, capsys, tmp_path):
        payload = {
            "wreath": {"base": {"permutation_generators": [[2, 3, 1]]}, "ell": 2},
            "generators": [[1, [0, 0]], [0, [1, 1]]],
        }
        code, out, _ = run_cli(["classify"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["case"] == "semidirect"
        assert out["abelian_base"] is True
        assert out["direct_product"] is True

    def test_table_with_gcd(self, capsys, tmp_path):
        payload = {"group": {"permutation_generators": [[2, 1, 3], [2, 3, 1]]}}
        code, out, _ = run_cli(["table", "--gcd"], capsys, payload,
                               tmp_path=tmp_path)
        assert code == 0
        assert sorted(out["degrees"]) == [1, 1, 2]
        assert out["nontrivial_dims_gcd"] == 1
        assert sum(d * d for d in out["degrees"]) == out["order"]

    def test_table_bound(self, capsys, tmp_path):
        payload = {"group": {"permutation_generators": [[2, 1, 3], [2, 3, 1]]}}
        code, _, err = run_cli(["table", "--max-order", "2"], capsys, payload,
                               tmp_path=tmp_path)
        assert code == 2 and "bound" in err


class TestRobbaCommand:
    def test_wild_operator(self, capsys, tmp_path):
        payload = {"p": 3, "coefficients": ["1/2", "1"]}
        code, out, _ = run_cli(["robba"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["slope"] == "1"
        assert out["p_power_N"] == 1
        assert out["tame"] is False
        assert out["character_order"] is None

    def test_tame_operator(self, capsys, tmp_path):
        payload = {"p": 3, "coefficients": ["1/2", "9"]}
        code, out, _ = run_cli(["robba"], capsys, payload, tmp_path=tmp_path)
        assert code == 0
        assert out["slope"] == "0"
        assert out["tame"] is True
        assert out["character_order"] == 2
        assert out["reduced"]["coefficients"] == ["1/2"]


class TestWeylCommand:
    def test_two_rho(self, capsys):
        code = main(["weyl-dim", "--family", "A", "--rank", "2", "--weight", "2rho"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["dimension"] == 27

    def test_explicit_coordinates(self, capsys):
        code = main(["weyl-dim", "--family", "A", "--rank", "1",
                     "--weight", "1,-1"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0 and out["dimension"] == 3

    def test_invalid_family(self, capsys):
        code = main(["weyl-dim", "--family", "D", "--rank", "2",
                     "--weight", "2rho"])
        assert code == 2


class TestVerifyCommand:
    def test_single_suite(self, capsys):
        code = main(["verify", "--suite", "weyl-dimension"])
        captured = capsys.readouterr()
        out = json.loads(captured.out)
        assert code == 0
        assert out["pass"] is True
        assert out["suites"][0]["name"] == "weyl-dimension"
        assert "PASS weyl-dimension" in captured.err

    def test_unknown_suite(self, capsys):
        code = main(["verify", "--suite", "nonsense"])
        assert code == 2


class TestDeterminism:
    def test_round_trip_and_repeatability(self, capsys, tmp_path):
        payload = {"slopes": [["1/3", 3], ["2", 1]]}
        code1, out1, _ = run_cli(["np"], capsys, payload, tmp_path=tmp_path)
        code2, out2, _ = run_cli(["np"], capsys, payload, tmp_path=tmp_path)
        assert code1 == code2 == 0
        assert out1 == out2
