#!/usr/bin/env python3
"""Tests for loading config/toolkit.yaml and resolving the log level."""

import json
import logging
import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from config_system.config_loader import ConfigLoader, ConfigValidationError, validate_config
from logging_config import LOG_LEVEL_ENV, JSONFormatter, LogPayload, ToolkitLogger, get_log_level_from_env_and_args

REPO_CONFIG = Path(__file__).resolve().parent / "config"


class TestToolkitConfig(unittest.TestCase):
    """Schema, defaults and error reporting of the toolkit configuration."""

    def write_config(self, root: Path, text: str) -> ConfigLoader:
        (root / "toolkit.yaml").write_text(text, encoding="utf-8")
        return ConfigLoader(str(root))

    def test_bundled_config(self):
        config = ConfigLoader(str(REPO_CONFIG)).load_toolkit_config()
        self.assertEqual(config.settings.default_field, "gf5")
        self.assertEqual(config.limits.antichain_cap, 6)
        self.assertEqual(config.sheaf.default_axiom_mode, "basis")
        self.assertFalse(config.reports.save_reports)
        self.assertTrue(validate_config(str(REPO_CONFIG)))

    def test_missing_file_gives_defaults(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            config = ConfigLoader(temp_dir).load_toolkit_config()
            self.assertEqual(config.settings.log_level, "ERROR")
            self.assertEqual(config.hopf.default_alpha_variant, 0)

    def test_values_are_normalised(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            loader = self.write_config(Path(temp_dir), "toolkit:\n  settings:\n    log_level: debug\n"
                                                      "    default_field: GF7\n")
            config = loader.load_toolkit_config()
            self.assertEqual(config.settings.log_level, "DEBUG")
            self.assertEqual(config.settings.default_field, "gf7")
            self.assertIs(loader.load_toolkit_config(), config)

    def test_invalid_values(self):
        cases = [
            "toolkit:\n  settings:\n    default_field: gf4\n",
            "toolkit:\n  settings:\n    log_level: LOUD\n",
            "toolkit:\n  limits:\n    antichain_cap: 9\n",
            "toolkit:\n  sheaf:\n    default_axiom_mode: some\n",
            "toolkit:\n  hopf:\n    default_alpha_variant: 2\n",
        ]
        for text in cases:
            with self.subTest(text=text), tempfile.TemporaryDirectory() as temp_dir:
                with self.assertRaises(ConfigValidationError):
                    self.write_config(Path(temp_dir), text).load_toolkit_config()

    def test_malformed_files(self):
        for text in ("toolkit: [unclosed\n", "- just\n- a list\n", "settings:\n  log_level: INFO\n"):
            with self.subTest(text=text), tempfile.TemporaryDirectory() as temp_dir:
                with self.assertRaises(ConfigValidationError):
                    self.write_config(Path(temp_dir), text).load_toolkit_config()

    def test_missing_directory(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            with self.assertRaises(ConfigValidationError):
                validate_config(str(Path(temp_dir) / "absent"))


class TestLogging(unittest.TestCase):
    """Level precedence and the JSON line format."""

    def test_level_precedence(self):
        with mock.patch.dict(os.environ, {LOG_LEVEL_ENV: "warning"}):
            self.assertEqual(get_log_level_from_env_and_args("info", True, "ERROR"), "DEBUG")
            self.assertEqual(get_log_level_from_env_and_args("info", False, "ERROR"), "INFO")
            self.assertEqual(get_log_level_from_env_and_args(None, False, "ERROR"), "WARNING")
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(get_log_level_from_env_and_args(None, False, "error"), "ERROR")
            self.assertEqual(get_log_level_from_env_and_args(), "INFO")

    def test_json_formatter_keeps_structured_fields(self):
        logger = logging.getLogger("piecewise.test")
        record = logger.makeRecord(logger.name, logging.INFO, "", 0, "Checked %s", ("lattice",), None)
        record.component = "Lattice"
        record.data = {"N": 3, "pair": (1, 2)}
        entry = json.loads(JSONFormatter(execution_id="abc12345").format(record))
        self.assertEqual(entry["message"], "Checked lattice")
        self.assertEqual(entry["component"], "Lattice")
        self.assertEqual(entry["data"], {"N": 3, "pair": [1, 2]})
        self.assertEqual(entry["execution_id"], "abc12345")
        self.assertTrue(entry["timestamp"].endswith("Z"))

    def test_log_with_context_attaches_payload(self):
        logger = logging.getLogger("piecewise.test.context")
        captured = []
        handler = logging.Handler()
        handler.emit = captured.append
        logger.addHandler(handler)
        logger.setLevel(logging.DEBUG)
        try:
            ToolkitLogger().log_with_context(logger, "info", "done",
                                             LogPayload(component="Sheaf", data={"covers": 5}, duration_ms=1.5))
        finally:
            logger.removeHandler(handler)
        self.assertEqual(len(captured), 1)
        self.assertEqual(captured[0].component, "Sheaf")
        self.assertEqual(captured[0].data, {"covers": 5})
        self.assertEqual(captured[0].duration_ms, 1.5)

    def test_logger_is_a_singleton(self):
        self.assertIs(ToolkitLogger(), ToolkitLogger("other"))


if __name__ == "__main__":
    unittest.main()
