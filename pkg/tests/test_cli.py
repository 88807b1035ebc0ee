import json

import pytest

from excol.braid import is_trivial, parse_word
from excol.cli import main
from excol.collection import load, to_json_text
from excol.markov import SEED_DUAL, eval_eq1
from excol.pn import beilinson_collection


@pytest.fixture
def beilinson_file(tmp_path):
    path = tmp_path / "beilinson3.json"
    assert main(["pn", "gram", "--n", "3", "-o", str(path)]) == 0
    return path


def run(capsys, argv):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestPnGram:
    def test_file_contents(self, beilinson_file):
        assert load(beilinson_file) == beilinson_collection(3)

    def test_stdout(self, capsys):
        status, out, _ = run(capsys, ["pn", "gram", "--n", "1"])
        assert status == 0
        assert json.loads(out) == {
            "n": 1,
            "gram": [[1, 2], [0, 1]],
            "classes": "identity",
        }


class TestMutate:
    def test_delta_word(self, beilinson_file, tmp_path, capsys):
        out_path = tmp_path / "dual.json"
        status, out, _ = run(
            capsys,
            ["mutate", str(beilinson_file), "--word", "L0 L1 L2 L0 L1 L0",
             "-o", str(out_path)],
        )
        assert status == 0
        assert "(4, 6, 4, 4, 6, 4)" in out
        written = load(out_path)
        assert written.upper_entries() == (4, 6, 4, 4, 6, 4)

    def test_round_trip_bit_exact(self, beilinson_file, tmp_path, capsys):
        out_path = tmp_path / "mut.json"
        from excol.collection import apply_word

        status, _, _ = run(
            capsys,
            ["mutate", str(beilinson_file), "--word", "L0 R1", "-o", str(out_path)],
        )
        assert status == 0
        expected = apply_word(beilinson_collection(3), parse_word("L0 R1", 4))
        assert load(out_path) == expected
        assert out_path.read_text() == to_json_text(expected)

    def test_empty_word_inplace(self, beilinson_file, capsys):
        before = beilinson_file.read_text()
        status, _, _ = run(capsys, ["mutate", str(beilinson_file)])
        assert status == 0
        assert beilinson_file.read_text() == before

    def test_cancelling_word_inplace(self, beilinson_file, capsys):
        before = beilinson_file.read_text()
        status, _, _ = run(capsys, ["mutate", str(beilinson_file), "--word", "L0 R0"])
        assert status == 0
        assert beilinson_file.read_text() == before

    def test_bad_word_exits_2(self, beilinson_file, capsys):
        status, _, err = run(
            capsys, ["mutate", str(beilinson_file), "--word", "L7"]
        )
        assert status == 2
        assert "error" in err

    def test_missing_file_exits_2(self, capsys, tmp_path):
        status, _, err = run(capsys, ["mutate", str(tmp_path / "nope.json")])
        assert status == 2

    def test_json_report(self, beilinson_file, tmp_path, capsys):
        status, out, _ = run(
            capsys,
            ["mutate", str(beilinson_file), "--word", "", "-o",
             str(tmp_path / "o.json"), "--format", "json"],
        )
        assert status == 0
        payload = json.loads(out)
        assert payload["exit_status"] == 0


class TestVerify:
    @pytest.mark.parametrize("suite", ["braid", "regions", "pn"])
    def test_suites_pass(self, suite, capsys):
        status, out, _ = run(capsys, ["verify", suite])
        assert status == 0
        assert "FAIL" not in out

    def test_markov_prints_variant_comparison(self, capsys):
        status, out, _ = run(capsys, ["verify", "markov"])
        assert status == 0
        assert "-720" in out and "eq2 corrected" in out

    def test_json_format(self, capsys):
        status, out, _ = run(capsys, ["verify", "regions", "--format", "json"])
        assert status == 0
        payload = json.loads(out)
        assert payload["exit_status"] == 0
        assert all(c["passed"] for c in payload["checks"])

    def test_deterministic_given_seed(self, capsys):
        _, out1, _ = run(capsys, ["verify", "braid", "--seed", "7"])
        _, out2, _ = run(capsys, ["verify", "braid", "--seed", "7"])
        assert out1 == out2


class TestOrbit:
    def test_depth_zero_single_record(self, capsys):
        status, out, _ = run(
            capsys, ["orbit", "--tuple", "4,6,4,4,6,4", "--depth", "0"]
        )
        assert status == 0
        lines = out.strip().splitlines()
        assert len(lines) == 1
        assert lines[0].startswith("0\t(4,6,4,4,6,4)")

    def test_records_show_invariants(self, capsys):
        status, out, _ = run(
            capsys, ["orbit", "--tuple", "4,6,4,4,6,4", "--depth", "3"]
        )
        assert status == 0
        lines = out.strip().splitlines()
        assert len(lines) > 1
        for line in lines:
            assert "eq1=0" in line and "oracle=1" in line

    def test_collection_orbit(self, beilinson_file, capsys):
        status, out, _ = run(capsys, ["orbit", str(beilinson_file), "--depth", "1"])
        assert status == 0
        lines = out.strip().splitlines()
        assert len(lines) == 7  # seed plus six single mutations
        assert sum(1 for line in lines if line.startswith("0\t")) == 1

    def test_json_records(self, capsys):
        status, out, _ = run(
            capsys,
            ["orbit", "--tuple", "4,10,20,4,10,4", "--depth", "1",
             "--format", "json"],
        )
        assert status == 0
        for line in out.strip().splitlines():
            record = json.loads(line)
            assert record["eq1"] == 0 and record["oracle"] is True

    def test_cap_flags_partial(self, beilinson_file, capsys):
        status, out, err = run(
            capsys, ["orbit", str(beilinson_file), "--depth", "4", "--cap", "20"]
        )
        assert status == 1
        assert len(out.strip().splitlines()) == 20
        assert "partial" in err

    def test_needs_exactly_one_input(self, beilinson_file, capsys):
        status, _, _ = run(capsys, ["orbit", "--depth", "1"])
        assert status == 2
        status, _, _ = run(
            capsys,
            ["orbit", str(beilinson_file), "--tuple", "0,0,0,0,0,0", "--depth", "1"],
        )
        assert status == 2

    def test_bad_tuple_exits_2(self, capsys):
        status, _, _ = run(capsys, ["orbit", "--tuple", "1,2", "--depth", "1"])
        assert status == 2

    def test_eq2_variant_flag(self, capsys):
        status, out, _ = run(
            capsys,
            ["orbit", "--tuple", "4,6,4,4,6,4", "--depth", "0",
             "--eq2-variant", "printed"],
        )
        assert status == 0
        assert "eq2=-720" in out


class TestStabilizer:
    def test_beilinson_words_trivial(self, beilinson_file, capsys):
        status, out, _ = run(
            capsys, ["stabilizer", str(beilinson_file), "--max-len", "4"]
        )
        assert status == 0
        lines = out.strip().splitlines()
        assert lines
        for line in lines:
            assert is_trivial(parse_word(line, 4))


class TestRegion:
    def test_lemma41_prints_witness(self, capsys):
        status, out, _ = run(capsys, ["region", "lemma41", "--kidx", "0"])
        assert status == 0
        assert "feasible, witness:" in out

    def test_thm51_three_systems(self, capsys):
        status, out, _ = run(capsys, ["region", "thm51"])
        assert status == 0
        assert out.count("feasible, witness:") == 3

    def test_strong_json(self, capsys):
        status, out, _ = run(
            capsys, ["region", "strong", "--n", "3", "--format", "json"]
        )
        assert status == 0
        payload = json.loads(out)
        assert payload["feasible"] is True
        assert len(payload["constraints"]) == 6


class TestBraidNf:
    def test_delta(self, capsys):
        status, out, _ = run(capsys, ["braid", "nf", "L0 L1 L2 L0 L1 L0"])
        assert status == 0
        assert out.splitlines()[0] == "D^1"

    def test_trivial_flag(self, capsys):
        status, out, _ = run(capsys, ["braid", "nf", "L0 R0", "--format", "json"])
        assert status == 0
        assert json.loads(out)["trivial"] is True

    def test_parse_error(self, capsys):
        status, _, err = run(capsys, ["braid", "nf", "Q3"])
        assert status == 2
        assert "error" in err
