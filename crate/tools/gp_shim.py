#!/usr/bin/env python3
"""Minimal stand-in for `gp -q -f`: evaluates the GP script on stdin with cypari2.

Only what the class-group bridge sends is supported: one line of GP
statements, optionally ending in `quit`. Stack-size defaults are dropped and
command-line flags are ignored.
"""
import re
import sys

import cypari2

# Stack defaults are managed here; changing them inside cypari2 crashes it.
DEFAULTS = re.compile(r"default\(\s*parisize(max)?\s*,[^)]*\)\s*;?")


def main() -> int:
    script = sys.stdin.read().strip()
    if script.endswith("quit"):
        script = script[: -len("quit")].rstrip(";").rstrip()
    script = DEFAULTS.sub("", script)
    pari = cypari2.Pari()
    pari.allocatemem(10**8, 4 * 10**9, silent=True)
    try:
        pari(script)
    except Exception as e:
        sys.stdout.flush()
        print(f"  *** {e}", file=sys.stderr)
        return 1
    sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
