"""Exact arithmetic for down-up algebras, their module families, and the
finite-length classifier.

Scalars are passed as strings in the same grammar the command line uses:
integers, fractions like ``2/3``, the indeterminate ``q``, roots of unity
``zeta:n``, and arithmetic with ``+ - * / ^`` and parentheses. Algebra and
module elements are strings too, e.g. ``"d*d*u"`` or ``"m(3) + v(1)"``.
"""

from downup._core import (
    DownupError,
    centrality,
    classify,
    closed_form,
    confluence,
    hom_case,
    lambda_table,
    normal_form,
    periodicity,
    run,
    witness,
)

__all__ = [
    "DownupError",
    "centrality",
    "classify",
    "closed_form",
    "confluence",
    "hom_case",
    "lambda_table",
    "normal_form",
    "periodicity",
    "run",
    "witness",
]
