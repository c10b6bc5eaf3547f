"""Numerical toolkit for lambda-Robertson and lambda-spirallike functions."""

import json
import sys

from ._core import *  # noqa: F401,F403
from ._core import run_cli as _run_cli

__all__ = [name for name in dir() if not name.startswith("_")]


def run(*args):
    """Run a CLI command in-process; returns (exit_code, parsed JSON or raw text)."""
    code, out, _err = _run_cli([str(a) for a in args])
    try:
        return code, json.loads(out)
    except ValueError:
        return code, out


def main():
    code, out, err = _run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
