"""Tests for report and sequence output."""
from cyclolc.sequences.cyclotomy import Variant
from cyclolc.sequences.sequence import BinarySequence, generate
from cyclolc.storage.report_store import ReportStore
from cyclolc.workflows.analysis_graph import analyze


def test_save_and_load_reports(tmp_path, example1_params):
    """Test JSON-lines output with sorted keys."""
    path = tmp_path / "out" / "reports.jsonl"
    reports = [analyze(example1_params, variant) for variant in Variant]
    assert ReportStore(path).save_reports(reports) == path

    lines = path.read_text().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith('{"b":0')
    records = ReportStore.load_reports(path)
    assert [r["lc_gcd"] for r in records] == [98, 89]


def test_save_binary(tmp_path, example2_params):
    """Test the binary export reads back."""
    path = tmp_path / "seq.bin"
    seq = generate(example2_params)
    ReportStore(path).save_binary(seq)
    assert BinarySequence.from_bytes(path.read_bytes()) == seq


def test_save_bitstring_to_stdout(capsys, example2_params):
    """Test the default destination is standard output."""
    seq = generate(example2_params)
    assert ReportStore().save_bitstring(seq) is None
    assert capsys.readouterr().out == seq.to_bitstring() + "\n"
