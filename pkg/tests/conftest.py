import pytest

import _acceptance_log


def pytest_addoption(parser):
    parser.addoption(
        "--run-stretch",
        action="store_true",
        default=False,
        help="run the long stretch verifications (multi-minute budgets)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-stretch"):
        return
    skip = pytest.mark.skip(reason="stretch run; enable with --run-stretch")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # one PASS/FAIL line per acceptance criterion, in criterion order
    if not _acceptance_log.RECORDS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in sorted(_acceptance_log.RECORDS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {criterion}: {detail}")
