def pytest_configure(*_):
    setup_tests_baseline()


def pytest_runtest_setup():
    setup_tests_baseline()


def setup_tests_baseline():
    import doctest

    import numpy as np

    from ._log import setup_logging

    doctest.ELLIPSIS_MARKER = "-ignore-"
    np.set_printoptions(precision=8, floatmode="fixed")
    # Progress records from the searches would drown the test report.
    setup_logging("WARNING")
