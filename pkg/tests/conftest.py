import subprocess
import sys

import pytest


@pytest.fixture
def run_cli(tmp_path):
    """Run the installed CLI with the given arguments; optional `stdin`
    text is piped in."""

    def runner(args, stdin=None):
        return subprocess.run(
            [sys.executable, "-m", "qsic.cli", *args],
            input=stdin,
            capture_output=True,
            text=True,
            check=False,
            timeout=60,
        )

    return runner


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance scoreboard after the run, one line per
    criterion, regardless of output capture."""
    module = next((m for name, m in sys.modules.items()
                   if name.rpartition(".")[2] == "test_acceptance"
                   and m is not None), None)
    SCOREBOARD = getattr(module, "SCOREBOARD", None)
    if SCOREBOARD:
        terminalreporter.section("acceptance scoreboard")
        for line in SCOREBOARD:
            terminalreporter.write_line(line)


@pytest.fixture
def quadric_file(tmp_path):
    """Write a two-line quadric pair file and return its path."""

    def writer(a, b, name="pair.txt"):
        path = tmp_path / name
        path.write_text(" ".join(str(c) for c in a) + "\n"
                        + " ".join(str(c) for c in b) + "\n")
        return str(path)

    return writer
