import io

import pytest

from josephus.config import RunConfig, color_enabled
from josephus.visualization.formatting import format_verdict


class Terminal(io.StringIO):
    def isatty(self):
        return True


def test_color_on_for_terminals(monkeypatch):
    monkeypatch.delenv("JOSEPHUS_COLOR", raising=False)
    assert color_enabled(Terminal())


def test_color_off_when_disabled(monkeypatch):
    monkeypatch.setenv("JOSEPHUS_COLOR", "0")
    assert not color_enabled(Terminal())


def test_color_off_for_pipes(monkeypatch):
    monkeypatch.delenv("JOSEPHUS_COLOR", raising=False)
    assert not color_enabled(io.StringIO())
    assert not color_enabled(None)


def test_verdict_text_styling():
    verdict = {"reading": "kill-step", "universe": 1, "m": 1, "states_checked": 1,
               "reachable_states": 1, "morphism": True, "isomorphism": True}
    assert "\033[32mholds\033[0m" in format_verdict(verdict, "text", color=True)
    assert "\033[" not in format_verdict(verdict, "text", color=False)


def test_run_config_rejects_unknown_values():
    with pytest.raises(ValueError):
        RunConfig(command="plot")
    with pytest.raises(ValueError):
        RunConfig(command="solve", output_format="xml")
