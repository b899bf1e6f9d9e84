import pytest

from linperm import field_ctx, kernel_backend

COMPILED = kernel_backend() == "cython"

# The heaviest exhaustive sweeps are sized for the compiled core; under the
# pure-Python fallback they shrink to keep the suite responsive.
EXHAUSTIVE_FIELDS = (
    [(2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 2), (3, 1, 3), (5, 1, 2)]
    if COMPILED else
    [(2, 1, 2), (2, 1, 3), (3, 1, 2)]
)


@pytest.fixture(scope="session")
def f9():
    """GF(9) as GF(3)[t]/(t^2 + 1); enc(t) = 3."""
    return field_ctx(3, 1, 2)


@pytest.fixture(scope="session")
def f729():
    return field_ctx(3, 3, 2)
