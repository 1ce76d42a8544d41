import json
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command

GOLDEN = Path(__file__).parent / "golden"
SCHEMAS = json.loads((GOLDEN / "schemas.json").read_text())


def records(*args) -> list[dict]:
    out = StringIO()
    call_command(*args, "--json", stdout=out)
    return [json.loads(line) for line in out.getvalue().splitlines()]


@pytest.mark.parametrize(
    ("args", "schema"),
    [
        (("solve", "Ch"), "solve"),
        (("solve", "Ch", "--param", "dom"), "solve"),
        (("params", "Ch"), "params"),
        (("bounds", "Ch"), "bound"),
        (("classify", "Ch"), "classify"),
        (("fuzz", "--count", "3", "--n-max", "4"), "fuzz_summary"),
    ],
)
def test_json_records_keep_their_keys(args, schema):
    output = records(*args)

    assert output
    assert all(sorted(record) == SCHEMAS[schema] for record in output)


def test_bounds_are_listed_in_a_fixed_order():
    assert [record["bound"] for record in records("bounds", "Ch")] == SCHEMAS["bound_names"]


def test_params_name_every_parameter():
    (record,) = records("params", "Ch")

    assert sorted(record["parameters"]) == sorted(SCHEMAS["parameter_names"])


def test_bounds_match_the_golden_lines():
    golden = [json.loads(line) for line in (GOLDEN / "bounds_ch.jsonl").read_text().splitlines()]
    by_name = {record["bound"]: record for record in records("bounds", "Ch")}

    for expected in golden:
        assert by_name[expected["bound"]] == expected


def test_fuzz_counterexample_lines_keep_their_keys():
    output = records("fuzz", "--count", "2", "--n-min", "6", "--n-max", "6", "--checks", "oracle", "--budget", "1")

    assert [sorted(record) for record in output[:-1]] == [SCHEMAS["counterexample"]] * 2
    assert sorted(output[-1]) == SCHEMAS["fuzz_summary"]
