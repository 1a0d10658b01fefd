class AlignedText:
    """
    Two-column ``field = value`` block, wrapped at ``config["display.text_width"]``.
    """

    def __init__(self, sep="= "):
        self._items = []
        self._sep = sep

    def add_item(self, field, value):
        self._items.append((str(field), value))

    def draw(self):
        from textwrap import TextWrapper

        from .._config import config

        if len(self._items) == 0:
            return ""

        col = max(len(f) for f, _ in self._items) + 1
        indent = " " * (col + len(self._sep))
        width = config["display.text_width"]

        lines = []
        for field, value in self._items:
            head = field.ljust(col) + self._sep
            wrapper = TextWrapper(
                initial_indent=head, width=width, subsequent_indent=indent
            )
            lines.append(wrapper.fill(str(value)))

        return "\n".join(lines)


def draw_title(title):
    """Title underlined with dashes, as the header of a result summary."""
    return f"{title}\n{'-' * len(title)}\n"
