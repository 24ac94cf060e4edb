"""Progress output for workflows.

Everything goes to one stream, stdout by default. Commands that print JSON
switch it to stderr so stdout carries only the document.
"""

import sys

_to_stderr = False
_quiet = False

WIDTH = 70


def use_stderr(flag: bool = True) -> None:
    global _to_stderr
    _to_stderr = flag


def set_quiet(flag: bool = True) -> None:
    global _quiet
    _quiet = flag


def say(message: str = "") -> None:
    if not _quiet:
        # looked up per call so redirected streams are honoured
        print(message, file=sys.stderr if _to_stderr else sys.stdout, flush=True)


def banner(title: str) -> None:
    say("=" * WIDTH)
    say(title)
    say("=" * WIDTH)


def rule() -> None:
    say("-" * WIDTH)


def step(index: int, total: int, message: str) -> None:
    say(f"\n[{index}/{total}] {message}")


def ok(message: str) -> None:
    say(f"  ✓ {message}")


def fail(message: str) -> None:
    say(f"  ✗ {message}")


def warn(message: str) -> None:
    say(f"  ⚠ {message}")
