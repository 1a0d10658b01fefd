from subtile.conftest import setup_tests_baseline


def pytest_configure(*_):
    # Baseline for the doctests in doc/*.rst, which live outside the package.
    setup_tests_baseline()
