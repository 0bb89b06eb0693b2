import json

import pytest

from commands.common import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE
from configuration.config_system import DEFAULT_CONFIG_PATH, config
from halftheta import main


def run(capsys, *argv):
	code = main(list(argv))
	return code, capsys.readouterr().out


def test_field(capsys):
	code, out = run(capsys, "field", "--D", "793")
	payload = json.loads(out)
	assert code == EXIT_OK
	assert payload["D"] == 793
	assert payload["narrow_class_number"] == 8
	assert payload["class_group_consistent"] is True
	assert len(payload["T3"]) == 2
	assert len(payload["primes_above_2"]) == 2


def test_field_text_format(capsys):
	code, out = run(capsys, "field", "--D", "17", "--format", "text")
	assert code == EXIT_OK
	assert "Field" in out
	assert "fundamental_unit" in out


@pytest.mark.parametrize("D", ["5", "12", "0", "abc"])
def test_bad_field_is_a_usage_error(capsys, D):
	code, _ = run(capsys, "field", "--D", D)
	assert code == EXIT_USAGE


def test_wrong_number_of_weights(capsys):
	code, _ = run(capsys, "exists", "--D", "17", "--weights", "1/2")
	assert code == EXIT_USAGE


def test_unsupported_weight(capsys):
	code, _ = run(capsys, "exists", "--D", "17", "--weights", "1/2,5/2")
	assert code == EXIT_USAGE


def test_missing_field_argument():
	with pytest.raises(SystemExit) as info:
		main(["exists"])
	assert info.value.code == 2


def test_exists(capsys):
	code, out = run(capsys, "exists", "--D", "793", "--weights", "1/2,3/2")
	assert code == EXIT_OK
	assert json.loads(out)["case"] == "C2"
	code, out = run(capsys, "exists", "--D", "17", "--weights", "1/2,3/2")
	assert code == EXIT_NEGATIVE
	assert json.loads(out)["exists"] is False


def test_triple_over_q(capsys):
	code, out = run(capsys, "triple", "--D", "rational", "--weights", "1/2")
	payload = json.loads(out)
	assert code == EXIT_OK
	assert payload["witness"]["beta"] == {"x": "1/24", "y": "0"}
	assert len(payload["witness"]["S3"]) == 1


def test_count_with_witnesses(capsys):
	code, out = run(capsys, "count", "--D", "73", "--weights", "1/2,1/2", "--witnesses")
	payload = json.loads(out)
	assert code == EXIT_OK
	assert payload["class_count"] == 2
	assert len(payload["witnesses"]) == 2


def test_count_without_triples(capsys):
	code, out = run(capsys, "count", "--D", "33", "--weights", "1/2,1/2")
	assert code == EXIT_NEGATIVE
	assert json.loads(out)["class_count"] == 0


def test_theta_to_stdout(capsys):
	code, out = run(capsys, "theta", "--D", "rational", "--weights", "3/2", "--bound", "5")
	rows = [json.loads(line) for line in out.splitlines()]
	assert code == EXIT_OK
	assert [r["coeff"] for r in rows] == [2.0, -6.0, 10.0]
	assert [r["xi"]["x"] for r in rows] == ["1", "3", "5"]


def test_theta_to_file(capsys, tmp_path):
	target = tmp_path / "eta.jsonl"
	code, out = run(capsys, "theta", "--D", "rational", "--weights", "1/2", "--bound", "5", "--output", str(target))
	assert code == EXIT_OK
	assert json.loads(out)["terms"] == 3
	rows = [json.loads(line) for line in target.read_text().splitlines()]
	assert [r["sign"] for r in rows] == [1, -1, -1]


def test_theta_without_triple(capsys):
	code, _ = run(capsys, "theta", "--D", "17", "--weights", "3/2,1/2")
	assert code == EXIT_NEGATIVE


def test_verify_over_q(capsys):
	code, out = run(capsys, "verify", "--D", "rational", "--weights", "1/2", "--words", "3", "--seed", "5")
	payload = json.loads(out)
	assert code == EXIT_OK
	assert payload["ok"] is True
	assert payload["seed"] == 5
	assert payload["words_tested"] + payload["words_rejected"] == 3


def test_characters(capsys):
	code, out = run(capsys, "characters", "--D", "17")
	payload = json.loads(out)
	assert code == EXIT_OK
	assert len(payload["places"]) == 2
	for values in payload["places"].values():
		assert len(values) == 4


def test_bad_config_file(capsys, tmp_path):
	bad = tmp_path / "bad.yaml"
	bad.write_text("mp_dps: 3\n")
	try:
		code, _ = run(capsys, "--config", str(bad), "field", "--D", "17")
		assert code == EXIT_USAGE
	finally:
		config.load_config(DEFAULT_CONFIG_PATH)


def test_config_file_is_applied(capsys, tmp_path):
	custom = tmp_path / "custom.yaml"
	custom.write_text("default_trace_bound: 2\n")
	try:
		code, out = run(capsys, "--config", str(custom), "theta", "--D", "rational", "--weights", "1/2")
		assert code == EXIT_OK
		assert len(out.splitlines()) == 2
	finally:
		config.load_config(DEFAULT_CONFIG_PATH)
