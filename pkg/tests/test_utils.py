import logging

from src.config.config import DEFAULT_BUDGET, Config, config
from src.utils.logger import TRACE_LEVEL_NUM, level_from_name
from src.utils.partition import chunk, run_partitioned


class TestPartition:
    def test_chunks_are_contiguous(self):
        assert chunk(list(range(7)), 3) == [[0, 1, 2], [3, 4], [5, 6]]
        assert chunk([1, 2], 5) == [[1], [2]]
        assert chunk([], 4) == []

    def test_results_in_chunk_order(self):
        items = list(range(100))
        parts = run_partitioned(items, lambda c: list(c), threads=4)
        assert [x for part in parts for x in part] == items

    def test_inline_when_single_thread(self):
        assert run_partitioned([1, 2, 3], sum, threads=1) == [6]


class TestLogger:
    def test_levels(self):
        assert level_from_name("trace") == TRACE_LEVEL_NUM
        assert level_from_name("DEBUG") == logging.DEBUG
        assert level_from_name("nonsense") == logging.INFO

    def test_trace_method(self, caplog):
        log = logging.getLogger("tests.trace")
        with caplog.at_level(TRACE_LEVEL_NUM, logger="tests.trace"):
            log.trace("level 1: states=1, total=1")
        assert "level 1: states=1, total=1" in caplog.text


class TestConfig:
    def test_singleton(self):
        assert Config() is config

    def test_overlay_and_defaults(self, tmp_path):
        ini = tmp_path / "vest.ini"
        ini.write_text("[Solver]\nthreads = 3\n\n[Logging]\nlevel = debug\n", encoding="utf-8")
        try:
            config.reload(str(ini))
            assert config.threads == 3
            assert config.log_level == "DEBUG"
            assert config.budget == DEFAULT_BUDGET
            assert config.verify_trials == 50
        finally:
            config.reload(str(tmp_path / "missing.ini"))
        assert config.threads == 1

    def test_unparsable_file_falls_back(self, tmp_path):
        ini = tmp_path / "broken.ini"
        ini.write_text("this is not = an ini\n[Solver\n", encoding="utf-8")
        try:
            config.reload(str(ini))
            assert config.threads == 1
        finally:
            config.reload(str(tmp_path / "missing.ini"))
