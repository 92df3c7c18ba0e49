"""Global configuration knobs."""

import os

_DEFAULT_GENERATOR_BUDGET = 8
ENV_GENERATOR_BUDGET = "SUPERLIE_GENERATOR_BUDGET"


def generator_budget() -> int:
    """Maximum number of odd generators a Grassmann algebra may be built on.

    The monomial basis has size 2**q, so everything downstream is exponential
    in q; construction beyond the budget is refused rather than allowed to
    crawl.  Override with the SUPERLIE_GENERATOR_BUDGET environment variable.
    """
    raw = os.environ.get(ENV_GENERATOR_BUDGET)
    if raw is None:
        return _DEFAULT_GENERATOR_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{ENV_GENERATOR_BUDGET} must be an integer, got {raw!r}"
        ) from None
    if value < 0:
        raise ValueError(f"{ENV_GENERATOR_BUDGET} must be nonnegative, got {value}")
    return value
