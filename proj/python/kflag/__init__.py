"""Exact torus-equivariant K-theory of finite-type flag varieties.

Thin Python layer over the C++ engine: root systems and Weyl groups,
motivic Chern / Schubert classes of Schubert cells by fixed-point
localization, character and Whittaker formula evaluation, Poincare
polynomial product formulas, and the identity-verification suites.
"""

import json as _json

from ._kflag import (
    MismatchError,
    PreconditionError,
    RootSystem,
    UnsupportedTypeError,
    bb_product_check,
    casselman_shalika,
    chi,
    poincare,
    verify,
)
from ._kflag import cell_class_json as _cell_class_json

__all__ = [
    "MismatchError",
    "PreconditionError",
    "RootSystem",
    "UnsupportedTypeError",
    "bb_product_check",
    "casselman_shalika",
    "cell_class",
    "chi",
    "poincare",
    "verify",
]


def cell_class(rs, kind, word, lam=()):
    """Fixed-point restrictions of a cell class, as a parsed JSON object.

    ``kind`` is one of ``mc``, ``mcprime``, ``mc_opposite``, ``dual_mc``,
    ``schubert``, ``schubert_opposite``, ``point``, ``line``; ``word`` is a
    (not necessarily reduced) word in 1-based simple reflections.
    """
    return _json.loads(_cell_class_json(rs, kind, list(word), list(lam)))
