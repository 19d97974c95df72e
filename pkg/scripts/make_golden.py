"""Regenerate the golden table fixture used by the CLI test.

Run after a deliberate change to the table, then review the diff of
tests/fixtures/table_desk.json before keeping it.
"""

import argparse
from pathlib import Path

from weaklaw.nogo import table_report
from weaklaw.serial import dumps, jsonable

ROOT = Path(__file__).resolve().parents[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--profile", default="desk")
    ap.add_argument("--out", default=str(ROOT / "tests" / "fixtures" / "table_desk.json"))
    args = ap.parse_args()
    report = table_report(args.profile)
    if not report.matches_expected:
        raise SystemExit(f"table does not match the expected pattern: {report.mismatches()}")
    Path(args.out).write_text(dumps(jsonable(report)), encoding="utf-8")
    print(report.render_text(), end="")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
