from ._cli import cli

__all__ = ["cli"]
