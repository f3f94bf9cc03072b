"""Command-line batch tests: exit codes, record output, report round trip."""

import json

import pytest

from clozecraft.cli import EXIT_CONFIG, EXIT_IO, EXIT_OK, load_documents, main

DOC1 = ("There were few people anywhere in the world, and none lived in the "
        "Americas. The theater stood near the river. Farmers brought "
        "vegetables to the market every morning.")
DOC2 = ("With so many children in the family, there was a constant buzz of "
        "activity. The market opened before sunrise.")


@pytest.fixture()
def input_file(tmp_path):
    path = tmp_path / "docs.txt"
    path.write_text(DOC1 + "\n" + DOC2 + "\n", encoding="utf-8")
    return path


def test_batch_generates_records_and_exits_zero(input_file, tmp_path, capsys):
    out = tmp_path / "items.jsonl"
    code = main(["--input", str(input_file), "--output", str(out), "--seed", "5"])
    assert code == EXIT_OK
    lines = out.read_text(encoding="utf-8").splitlines()
    records = [json.loads(line) for line in lines]
    assert records[-1]["record_type"] == "summary"
    items = [r for r in records if r["record_type"] == "item"]
    assert items, "expected at least one item"
    assert records[-1]["total_documents"] == 2
    report_text = capsys.readouterr().err
    assert "Batch report" in report_text
    assert f"items:     {len(items)}" in report_text


def test_directory_input_one_doc_per_file(tmp_path):
    docs = tmp_path / "docs"
    docs.mkdir()
    (docs / "a.txt").write_text(DOC1, encoding="utf-8")
    (docs / "b.txt").write_text(DOC2, encoding="utf-8")
    (docs / "ignored.md").write_text("not a doc", encoding="utf-8")
    assert len(load_documents(str(docs))) == 2


def test_report_only_round_trip(input_file, tmp_path, capsys):
    out = tmp_path / "items.jsonl"
    assert main(["--input", str(input_file), "--output", str(out)]) == EXIT_OK
    batch_report = capsys.readouterr().err.strip()
    assert main(["--report-only", str(out)]) == EXIT_OK
    replayed = capsys.readouterr().out.strip()
    assert replayed == batch_report


def test_stdout_records_when_no_output(input_file, capsys):
    assert main(["--input", str(input_file)]) == EXIT_OK
    captured = capsys.readouterr()
    lines = [json.loads(line) for line in captured.out.strip().splitlines()]
    assert lines[-1]["record_type"] == "summary"


def test_missing_input_is_config_error(capsys):
    assert main([]) == EXIT_CONFIG


def test_unreadable_input_is_io_error(tmp_path):
    assert main(["--input", str(tmp_path / "nope.txt")]) == EXIT_IO


def test_empty_input_file_is_io_error(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("\n\n", encoding="utf-8")
    assert main(["--input", str(path)]) == EXIT_IO


def test_bad_construct_is_config_error(input_file):
    assert main(["--input", str(input_file), "--constructs", "XYZ"]) == EXIT_CONFIG


def test_disabled_construct_is_config_error(input_file):
    assert main(["--input", str(input_file), "--constructs", "PCT"]) == EXIT_CONFIG


def test_bad_distractor_count_is_config_error(input_file):
    assert main(["--input", str(input_file), "--num-distractors", "0"]) == EXIT_CONFIG


def test_constructs_flag_restricts_output(input_file, tmp_path):
    out = tmp_path / "items.jsonl"
    assert main(["--input", str(input_file), "--output", str(out),
                 "--constructs", "ART"]) == EXIT_OK
    records = [json.loads(line)
               for line in out.read_text(encoding="utf-8").splitlines()]
    items = [r for r in records if r["record_type"] == "item"]
    assert items and all(r["construct"] == "ART" for r in items)


def test_malformed_record_file_is_io_error(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"record_type": "item"}\n', encoding="utf-8")
    assert main(["--report-only", str(bad)]) == EXIT_IO
    assert "line 1" in capsys.readouterr().err


def test_byte_identical_reruns(input_file, tmp_path):
    out1 = tmp_path / "one.jsonl"
    out2 = tmp_path / "two.jsonl"
    assert main(["--input", str(input_file), "--output", str(out1)]) == EXIT_OK
    assert main(["--input", str(input_file), "--output", str(out2)]) == EXIT_OK
    assert out1.read_bytes() == out2.read_bytes()
