"""Dehornoy ordering of B3 and the induced left orders on F2 and K_n."""

import json as _json

from ._braidlab import *  # noqa: F401,F403
from ._braidlab import verify_json as _verify_json

__version__ = "0.1.0"


def verify(seed=1, trials=100, threads=1):
    """Run the seeded suite and return the report as a dict."""
    return _json.loads(_verify_json(seed, trials, threads))
