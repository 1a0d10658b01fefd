from ._aligned import AlignedText, draw_title
from ._core import bold, red, render
from ._session import session_line

__all__ = ["AlignedText", "bold", "draw_title", "red", "render", "session_line"]
