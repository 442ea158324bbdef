"""Bergsma-Dassios sign covariance t* with an O(n^2) exact algorithm."""

from ._core import (
    BoundResult,
    GridTooLarge,
    InvalidPermutationCount,
    LengthMismatch,
    NonFiniteValue,
    SampleTooLarge,
    TooFewSamples,
    TStarError,
    bound_permutation_test,
    bound_tstar,
)

__all__ = [
    "BoundResult",
    "bound_tstar",
    "bound_permutation_test",
    "TStarError",
    "LengthMismatch",
    "NonFiniteValue",
    "TooFewSamples",
    "SampleTooLarge",
    "GridTooLarge",
    "InvalidPermutationCount",
]
