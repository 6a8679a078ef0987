"""
Tests for the batch command and line parsing.
"""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lens_alexander.cli.batch import BatchDefaults, parse_batch_line, process_line, run_batch
from lens_alexander.cli.commands import app
from lens_alexander.models.job import Mode
from tests.strategies import mixed_words


def _records(result):
    return [json.loads(line) for line in result.stdout.splitlines() if line.startswith("{")]


class TestParseBatchLine:
    """Tests for per-line overrides."""

    def test_overrides(self):
        """Test that fields override the shared flags."""
        job = parse_batch_line("t s1^3 ; 2 ; 5 ; 2", BatchDefaults(n=1, p=3, q=1))
        assert (job.word, job.n, job.p, job.q) == ("t s1^3", 2, 5, 2)

    def test_fallbacks(self):
        """Test that empty fields fall back to the shared flags."""
        job = parse_batch_line("t ;  ; 7", BatchDefaults(n=1, p=3, q=1))
        assert (job.n, job.p, job.q) == (1, 7, 1)

    def test_identity_word(self):
        """Test an empty word with an override."""
        job = parse_batch_line(" ; 3", BatchDefaults(mode=Mode.SOLID_TORUS))
        assert (job.word, job.n) == ("", 3)

    def test_non_lens_drops_surgery(self):
        """Test that p and q are ignored outside lens mode."""
        job = parse_batch_line("s1^3 ; 2 ; 3 ; 1", BatchDefaults(mode=Mode.CLASSICAL))
        assert job.p is None and job.q is None

    @pytest.mark.parametrize("line", ["t ; x", "t ; 1 ; 2 ; 3 ; 4", "t"])
    def test_invalid(self, line):
        """Test malformed fields and a missing strand count."""
        with pytest.raises(ValueError):
            parse_batch_line(line, BatchDefaults(p=3, q=1))


class TestProcessLine:
    """Tests for single-line processing."""

    def test_success(self):
        """Test a successful record."""
        record = process_line("t s1^3 ; 2", BatchDefaults(p=3, q=1))
        assert record.polynomial == [[1, {"t": 6}], [-1, {"t": 3}], [1, {}]]
        assert record.beta_class == 1
        assert record.error is None

    def test_invalid_job(self):
        """Test that a bad override becomes an error record."""
        record = process_line("t ; x", BatchDefaults(p=3, q=1))
        assert record.error_code == "invalid_job"

    def test_computation_error(self):
        """Test that a bad index becomes an error record."""
        record = process_line("s9 ; 2", BatchDefaults(p=3, q=1))
        assert record.error_code == "IndexOutOfRangeError"

    def test_run_batch_skips_blank_and_comments(self):
        """Test input filtering and ordering."""
        lines = ["# header\n", "t s1^3 ; 2\n", "\n", "t ; 1\n"]
        records = run_batch(lines, BatchDefaults(p=3, q=1), threads=2)
        assert [r.word for r in records] == ["t s1^3", "t"]
        assert records[1].polynomial == [[1, {}]]

    def test_unexpected_failure_is_a_record(self, monkeypatch):
        """Test that an unexpected exception on one line becomes an internal_error record."""
        def crash(*args, **kwargs):
            raise RuntimeError("boom")

        monkeypatch.setattr("lens_alexander.pipelines.modes.alex_lens", crash)
        records = run_batch(["t s1^3 ; 2\n", "s1^3 ; 2\n"], BatchDefaults(p=3, q=1), threads=2)
        assert [r.error_code for r in records] == ["internal_error", "internal_error"]
        assert records[0].error == "RuntimeError: boom"
        assert records[0].word == "t s1^3"

    @settings(max_examples=10, deadline=None)
    @given(st.lists(mixed_words(max_n=3, max_len=5), min_size=1, max_size=6))
    def test_thread_count_does_not_change_output(self, words):
        """Test that one and eight workers write identical lines in input order."""
        lines = [f"{w} ; {w.n}" for w in words]
        defaults = BatchDefaults(p=5, q=2)
        serial = [r.to_json_line() for r in run_batch(lines, defaults, threads=1)]
        threaded = [r.to_json_line() for r in run_batch(lines, defaults, threads=8)]
        assert serial == threaded
        assert serial == [r.to_json_line() for r in run_batch(lines, defaults, threads=8)]


class TestBatchCommand:
    """Tests for the batch command."""

    def test_lens_batch(self, runner, batch_file):
        """Test one JSON record per input line."""
        path = batch_file("t s1^3 ; 2", "t ; 1")
        result = runner.invoke(app, ["batch", path, "--p", "3", "--q", "1"])
        assert result.exit_code == 0
        records = _records(result)
        assert [r["word"] for r in records] == ["t s1^3", "t"]
        assert records[0]["polynomial"] == [[1, {"t": 6}], [-1, {"t": 3}], [1, {}]]
        assert records[1]["polynomial"] == [[1, {}]]

    def test_solid_torus_batch(self, runner, batch_file):
        """Test the solid torus mode with a shared strand count."""
        path = batch_file("t s1^3")
        result = runner.invoke(app, ["batch", path, "--n", "2", "--mode", "solid-torus"])
        assert result.exit_code == 0
        (record,) = _records(result)
        assert record["variables"] == ["a", "b"]
        assert record["polynomial"] == [[1, {"b": 2}], [-1, {"b": 1}], [1, {}]]

    def test_errors_are_records(self, runner, batch_file):
        """Test that a failing line does not stop the batch."""
        path = batch_file("s9 ; 2", "t ; 1")
        result = runner.invoke(app, ["batch", path, "--p", "3", "--q", "1"])
        assert result.exit_code == 0
        records = _records(result)
        assert records[0]["error_code"] == "IndexOutOfRangeError"
        assert records[1]["polynomial"] == [[1, {}]]

    def test_oracle_column(self, runner, batch_file):
        """Test the agreement column."""
        path = batch_file("t s1^3 ; 2")
        result = runner.invoke(app, ["batch", path, "--p", "3", "--q", "1", "--oracle"])
        assert _records(result)[0]["agree_oracle"] is True

    def test_empty_file(self, runner, batch_file):
        """Test that an empty file produces no records."""
        path = batch_file()
        result = runner.invoke(app, ["batch", path, "--p", "3", "--q", "1"])
        assert result.exit_code == 0
        assert _records(result) == []

    def test_missing_file(self, runner, temp_dir):
        """Test that an unreadable file exits with status 1."""
        result = runner.invoke(app, ["batch", f"{temp_dir}/absent.txt"])
        assert result.exit_code == 1

    def test_repeatable_output(self, runner, batch_file):
        """Test that identical input files give byte-identical output."""
        path = batch_file("t s1^3 ; 2", "t^-1 s1 ; 2", "s1 t s1^-1 t ; 2", "t ; 1")
        first = runner.invoke(app, ["batch", path, "--p", "5", "--q", "2"])
        second = runner.invoke(app, ["batch", path, "--p", "5", "--q", "2"])
        assert first.exit_code == 0
        assert first.stdout == second.stdout
        assert len(_records(first)) == 4
