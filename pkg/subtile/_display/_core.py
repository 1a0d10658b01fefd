"""
Terminal helpers: bold/red markup for diagnostics on stderr.
"""
import re
import sys

_tags = ["bold", "red"]


def bold(txt):
    """Bold font."""
    return "[bold]" + txt + "[/bold]"


def red(txt):
    """Red color font."""
    return "[red]" + txt + "[/red]"


def render(txt, stream=None):
    """Replace markup tags by terminal escapes, or strip them when not on a tty."""
    if stream is None:
        stream = sys.stderr
    term = _get_terminal(stream) if _isatty(stream) else None
    for tag in _tags:
        r = re.compile(rf"\[{tag}\](.*?)\[\/{tag}\]", re.MULTILINE | re.DOTALL)
        by = r"\1" if term is None else getattr(term, tag)(r"\1")
        txt = r.sub(by, txt)
    return txt


def _isatty(stream):
    try:
        return stream.isatty()
    except (AttributeError, ValueError):
        return False


def _get_terminal(stream=None):
    try:
        from blessings import Terminal
    except ImportError:
        return None

    try:
        return Terminal(stream=stream)
    except ValueError:
        return None
