# Copyright (c) 2026, the cplaus authors
#
# SPDX-License-Identifier: MIT
"""Decision procedures for comparative plausibility logics over
neighbourhood models.

The heavy lifting lives in the compiled extension; this package just
re-exports its operations.
"""

from ._core import (
    atoms,
    axiom_corpus,
    calculus_logics,
    check_model,
    complexity,
    frame_conditions,
    logics,
    oracle,
    prove,
    render,
    subformulas,
)

__version__ = "0.1.0"

__all__ = [
    "atoms",
    "axiom_corpus",
    "calculus_logics",
    "check_model",
    "complexity",
    "frame_conditions",
    "logics",
    "oracle",
    "prove",
    "render",
    "subformulas",
]
