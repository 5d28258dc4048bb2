"""Interpretable weighted Tsetlin machine.

Thin Python veneer over the C++ core: train models on raw numeric rows,
predict, pull the learned rules out as DNF, and sample decision boundaries.
"""

from ._core import (
    Config,
    InputError,
    Model,
    ModelError,
    perceptron_check_bound,
    train,
)

__all__ = [
    "Config",
    "InputError",
    "Model",
    "ModelError",
    "perceptron_check_bound",
    "train",
]
