"""Exact principal-subspace computations for affine sl(n+1).

The heavy lifting lives in the C++ extension ``psv._core``; this package adds
small conveniences (JSON decoding for verification reports).
"""

import json

from ._core import Algebra as _Algebra
from ._core import Elem, ParseError

__all__ = ["Algebra", "Elem", "ParseError", "verify"]


class Algebra(_Algebra):
    def verify(self, lam, max_weight, max_charge, jobs=1, growth_cap=8, cache_dir=""):
        """Runs the two-sided graded verification and returns the report as a dict."""
        return json.loads(
            self.verify_json(lam, max_weight, max_charge, jobs, growth_cap, cache_dir)
        )


def verify(rank, lam, max_weight, max_charge, **kwargs):
    return Algebra(rank).verify(lam, max_weight, max_charge, **kwargs)
