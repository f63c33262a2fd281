"""One line per acceptance criterion, at the stated (exact) tolerances.

Run directly (``python tests/test_acceptance.py``) for the full table, or via
pytest, where each criterion is a test and prints its line.
"""

import sys

import pytest

from zkbredon.suite import CRITERIA, Context, format_row


@pytest.fixture(scope="module")
def ctx():
    return Context()


def _line(cid, rows):
    ok = all(r["pass"] for r in rows)
    head = f"criterion {cid}: {'PASS' if ok else 'FAIL'}"
    return ok, "\n".join([head] + ["    " + format_row(r) for r in rows])


@pytest.mark.parametrize("fn", CRITERIA, ids=[f"criterion_{i + 1}" for i in range(len(CRITERIA))])
def test_criterion(fn, ctx, capsys):
    rows = fn(ctx)
    ok, text = _line(rows[0]["id"], rows)
    with capsys.disabled():
        print("\n" + text)
    assert ok, text


if __name__ == "__main__":
    c = Context()
    failed = 0
    for fn in CRITERIA:
        rows = fn(c)
        ok, text = _line(rows[0]["id"], rows)
        failed += not ok
        print(text)
    sys.exit(1 if failed else 0)
