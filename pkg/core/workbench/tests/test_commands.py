import json
from io import StringIO

import pytest
from django.core.management import CommandError, call_command

from core.constructions.families import heawood, path, petersen
from core.graphs.graph6 import parse_graph6, to_graph6
from core.workbench.base import EXIT_FAILURE, EXIT_USAGE

P4 = to_graph6(path(4)).decode()


def run(*args) -> str:
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def test_solve_prints_value_and_witness():
    lines = run("solve", P4).splitlines()

    assert lines[0] == "value=6"
    assert [line.split()[0] for line in lines[1:]] == ["0", "1", "2", "3"]
    assert sum(int(line.split()[1]) for line in lines[1:]) == 6


def test_solve_json_record():
    record = json.loads(run("solve", "Bw", "--param", "roman", "--json"))

    assert record["graph6"] == "Bw"
    assert record["param"] == "roman"
    assert record["value"] == 2
    assert sum(record["witness"]) == 2


def test_solve_reads_a_batch_file(tmp_path):
    batch = tmp_path / "graphs.g6"
    batch.write_text(f"# two graphs\n@\n{P4}\n")

    lines = run("solve", "--file", str(batch)).splitlines()

    assert lines[0] == "# @"
    assert lines[1] == "value=2"
    assert f"# {P4}" in lines
    assert "value=6" in lines


def test_solve_rejects_malformed_graph6():
    with pytest.raises(CommandError) as excinfo:
        run("solve", "C")
    assert excinfo.value.returncode == EXIT_USAGE


def test_solve_reports_budget_exhaustion():
    with pytest.raises(CommandError) as excinfo:
        run("solve", to_graph6(petersen()).decode(), "--budget", "1")
    assert excinfo.value.returncode == EXIT_FAILURE
    assert "budget exhausted" in str(excinfo.value)


def test_verify_accepts_an_optimal_labeling(tmp_path):
    labeling = tmp_path / "p4.lab"
    labeling.write_text("0 3\n1 0\n2 0\n3 3\n")

    assert run("verify", P4, "--labeling", str(labeling)).strip() == "valid RDRD, weight 6"


def test_verify_rejects_an_invalid_labeling(tmp_path):
    labeling = tmp_path / "p4.lab"
    labeling.write_text("0 0\n1 0\n2 0\n3 3\n")
    out = StringIO()

    with pytest.raises(CommandError) as excinfo:
        call_command("verify", P4, "--labeling", str(labeling), stdout=out)

    assert excinfo.value.returncode == EXIT_FAILURE
    assert out.getvalue().startswith("invalid RDRD: vertex 0")


def test_verify_vertex_set(tmp_path):
    members = tmp_path / "p4.set"
    members.write_text("1\n2\n")

    assert run("verify", P4, "--set", str(members), "--param", "dom").strip() == "valid dominating set, size 2"


def test_verify_needs_the_matching_witness_kind(tmp_path):
    labeling = tmp_path / "p4.lab"
    labeling.write_text("0 3\n1 0\n2 0\n3 3\n")

    with pytest.raises(CommandError) as excinfo:
        run("verify", P4, "--labeling", str(labeling), "--param", "dom")
    assert excinfo.value.returncode == EXIT_USAGE


def test_verify_rejects_a_labeling_of_the_wrong_length(tmp_path):
    labeling = tmp_path / "short.lab"
    labeling.write_text("0 3\n1 3\n")

    with pytest.raises(CommandError) as excinfo:
        run("verify", P4, "--labeling", str(labeling))
    assert excinfo.value.returncode == EXIT_USAGE


def test_params_on_heawood():
    record = json.loads(run("params", to_graph6(heawood()).decode(), "--json"))

    assert record["parameters"]["rdom"] == 4
    assert record["parameters"]["rdrd"] == 11
    assert len(record["parameters"]) == 8


def test_params_table():
    table = run("params", P4)

    assert P4 in table
    assert "rdrd" in table
    assert "2dom" in table


def test_bounds_json_lines():
    records = [json.loads(line) for line in run("bounds", P4, "--json").splitlines()]

    assert {record["graph6"] for record in records} == {P4}
    assert all(record["holds"] is not False for record in records)
    assert "trees" in {record["bound"] for record in records}


def test_classify_tree():
    assert run("classify", P4).splitlines() == ["small: OTHER", "tree: TREE_T1 -> 6"]


def test_classify_small_json():
    record = json.loads(run("classify", "Bw", "--json"))

    assert record["scope"] == "small"
    assert record["classification"] == "RDRD_3"
    assert record["value"] == 3


def test_construct_prints_provenance_and_graph6():
    header, graph6 = run("construct", "complete", "n=4").splitlines()

    assert json.loads(header.removeprefix("# ")) == {"family": "complete", "params": {"n": 4}}
    assert graph6 == "C~"


def test_construct_gadget_takes_a_graph6_argument():
    graph = parse_graph6(run("construct", "gadget", "g=@").splitlines()[1])

    assert (graph.n, graph.m) == (7, 12)


def test_construct_rejects_unknown_parameters():
    with pytest.raises(CommandError) as excinfo:
        run("construct", "path", "m=4")
    assert excinfo.value.returncode == EXIT_USAGE


def test_fuzz_summary_line():
    lines = run("fuzz", "--count", "5", "--n-max", "5", "--seed", "1").splitlines()

    assert lines[-1] == "5 instances, 0 counterexamples, 0 inconclusive"


def test_fuzz_json_summary():
    lines = run("fuzz", "--mode", "trees", "--count", "4", "--n-max", "8", "--checks", "oracle,classify", "--json").splitlines()

    assert json.loads(lines[-1]) == {"instances": 4, "counterexamples": 0, "inconclusive": 0, "seed": 0, "mode": "trees"}


def test_fuzz_rejects_unknown_checks():
    with pytest.raises(CommandError) as excinfo:
        run("fuzz", "--checks", "bounds,nope")
    assert excinfo.value.returncode == EXIT_USAGE


def test_fuzz_succeeds_with_a_distinct_message_when_only_inconclusive():
    args = ("--count", "3", "--n-min", "6", "--n-max", "6", "--checks", "oracle", "--budget", "1")
    lines = run("fuzz", *args).splitlines()

    assert lines[-2] == "3 instances, 0 counterexamples, 3 inconclusive"
    assert lines[-1] == "inconclusive: 3 checks hit the node budget, nothing was refuted"


def test_fuzz_json_reports_inconclusive_runs_in_the_summary():
    args = ("--count", "2", "--n-min", "6", "--n-max", "6", "--checks", "oracle", "--budget", "1", "--json")
    lines = run("fuzz", *args).splitlines()

    summary = json.loads(lines[-1])
    assert (summary["counterexamples"], summary["inconclusive"]) == (0, 2)
    assert all(json.loads(line)["inconclusive"] for line in lines[:-1])


def test_fuzz_regular_mode_accepts_the_default_n_min():
    lines = run("fuzz", "--mode", "regular", "--count", "4", "--n-max", "6", "--checks", "bounds,claw_free").splitlines()

    assert lines[-1] == "4 instances, 0 counterexamples, 0 inconclusive"


def test_verify_accepts_a_labeling_without_zeros(tmp_path):
    labeling = tmp_path / "p4.lab"
    labeling.write_text("0 1\n1 2\n2 2\n3 1\n")

    assert run("verify", P4, "--labeling", str(labeling)).strip() == "valid RDRD, weight 6"


def test_solve_json_schema():
    record = json.loads(run("solve", P4, "--json"))

    assert set(record) == {"graph6", "param", "value", "engine", "nodes_explored", "witness"}
    assert record["engine"] == "tree"


def test_fuzz_output_does_not_depend_on_jobs():
    args = ("fuzz", "--count", "6", "--n-max", "5", "--seed", "9", "--json")

    assert run(*args, "--jobs", "1") == run(*args, "--jobs", "3")


@pytest.mark.slow
def test_fuzz_trees_against_the_oracle():
    lines = run("fuzz", "--mode", "trees", "--n-max", "12", "--count", "500", "--seed", "1", "--checks", "oracle").splitlines()

    assert lines[-1] == "500 instances, 0 counterexamples, 0 inconclusive"
