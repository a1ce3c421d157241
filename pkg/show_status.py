#!/usr/bin/env python3
"""
Archive Status Tool
Shows how many verification reports and sweep rows the archive holds, and how many passed.
"""

import os
import argparse
from datetime import datetime
from dotenv import load_dotenv
from database import VerificationDatabase

load_dotenv()
DB_URL = os.environ.get("FVA_DB_URL")


def get_stats(db):
    return {
        'reports': db.report_stats(),
        'sweeps': db.sweep_stats(),
    }


def format_number(num):
    if num is None:
        return "0"
    return f"{num:,}"


def print_status(stats):
    print("=" * 72)
    print("VERIFICATION ARCHIVE STATUS")
    print(f"Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    print("=" * 72)

    print("\nREPORTS")
    if not stats['reports']:
        print("   (none)")
    for row in stats['reports']:
        total, passed = row['total'], row['passed'] or 0
        rate = (passed / total) * 100 if total else 0
        print(f"   {row['construction']:10s}: {format_number(passed):>6s} / {format_number(total):<6s} passed ({rate:>5.1f}%)")

    print("\nSWEEPS")
    if not stats['sweeps']:
        print("   (none)")
    for row in stats['sweeps']:
        total, passed = row['total'], row['passed'] or 0
        print(f"   {row['construction']:10s}: {format_number(passed):>6s} / {format_number(total):<6s} rows passed"
              f" over {row['sweeps']} sweep(s), max p = {row['max_p']}")
    print("\n" + "=" * 72)


def main():
    parser = argparse.ArgumentParser(description="Show verification archive status")
    parser.add_argument("--db", help="Database URL or path (default: FVA_DB_URL from .env)")
    args = parser.parse_args()

    db_url = args.db if args.db else DB_URL

    if not db_url:
        print("Error: FVA_DB_URL not found in .env and --db not provided")
        return 1

    try:
        db = VerificationDatabase(db_url)
        print_status(get_stats(db))
    except Exception as e:
        print(f"Error: {e}")
        return 1

    return 0


if __name__ == "__main__":
    exit(main())
