import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

REPORT_PATH = pathlib.Path(__file__).resolve().parent.parent / "acceptance_report.txt"


class AcceptanceReport:
    """Collects one line per acceptance criterion plus recorded measurements."""

    def __init__(self):
        self.lines: list[str] = []

    def record(self, text: str) -> None:
        self.lines.append(text)
        print(text, flush=True)


@pytest.fixture(scope="session")
def acceptance_report():
    report = AcceptanceReport()
    yield report
    if report.lines:
        REPORT_PATH.write_text("\n".join(report.lines) + "\n")
