#!/usr/bin/env python3
import argparse
import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from frobfix.cli.fixtures import build_fixtures  # noqa: E402


def parse_args():
    parser = argparse.ArgumentParser(description="Regenerate the JSON fixtures used by self-test and the tests.")
    parser.add_argument(
        "--out",
        default=os.path.join(os.path.dirname(__file__), "..", "frobfix", "data", "fixtures"),
        help="Fixture directory.",
    )
    return parser.parse_args()


def main():
    args = parse_args()
    written = build_fixtures(os.path.abspath(args.out))
    for name, path in sorted(written.items()):
        print(f"{name}: {path}")


if __name__ == "__main__":
    main()
