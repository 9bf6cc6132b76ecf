"""Baumslag-Solitar groups BS(m,n) and their totally disconnected completions."""

from ._bsgroup import *  # noqa: F401,F403
from ._bsgroup import (  # noqa: F401
    CapExceeded,
    Error,
    InvalidParameters,
    OutOfHypothesis,
    ParseError,
)
