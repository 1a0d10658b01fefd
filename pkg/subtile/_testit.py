def test(verbose=True, doctests=True):
    """
    Run the test suite of the installed package.

    Parameters
    ----------
    verbose : bool
        ``True`` to show diagnostic. Defaults to ``True``.
    doctests : bool
        Also run the examples in the docstrings. Defaults to ``True``.

    Returns
    -------
    int
        Exit code: ``0`` for success.
    """
    import pytest

    from .conftest import setup_tests_baseline

    setup_tests_baseline()

    args = ["--pyargs", __name__.split(".")[0]]
    if doctests:
        args = ["--doctest-plus", "--doctest-modules"] + args
    if not verbose:
        args.append("--quiet")
    return pytest.main(args)
