import sys
from time import time

from ._core import bold, red, render


class session_line:
    """
    Print the elapsed time after the execution of a block of code.

    Output goes to standard error so that standard output stays reserved for
    machine-readable results.
    """

    def __init__(self, desc="Running... ", disable=False, stream=None):
        self._disable = disable
        self._tstart = None
        self._desc = desc
        self._stream = sys.stderr if stream is None else stream
        self.elapsed = None

    def __enter__(self):
        self._tstart = time()
        if not self._disable:
            self._stream.write(self._desc)
            self._stream.flush()
        return self

    def __exit__(self, exception_type, exception_value, traceback):
        from humanfriendly import format_timespan

        self.elapsed = time() - self._tstart
        if self._disable:
            return

        if exception_type is not None:
            msg = bold(red("failed")) + f" ({format_timespan(self.elapsed)}).\n"
        else:
            msg = f"done ({format_timespan(self.elapsed)}).\n"
        self._stream.write(render(msg, self._stream))
        self._stream.flush()
