"""Upper bounds on the number of rational places of a function field from
(generalized) Weierstrass semigroup data."""

from ._wsbound import *  # noqa: F401,F403
from ._wsbound import __version__  # noqa: F401


def load_model(path):
    """Parse and validate a model file."""
    from ._wsbound import parse_model

    with open(path, "r", encoding="utf-8") as handle:
        return parse_model(handle.read())
