"""Exact and leading-order multifold complexity of the inverted oscillator."""

from ._core import (
    ComplexityBudget,
    DegenerateSpectrum,
    DomainError,
    Error,
    PrecisionExhausted,
    UnknownFigure,
    __version__,
    figure_csv,
    harmonic,
    inner_product,
    kappa,
    leading_terms,
    loschmidt,
    precursor,
    scrambling_time,
    switchback,
)

__all__ = [
    "ComplexityBudget",
    "DegenerateSpectrum",
    "DomainError",
    "Error",
    "PrecisionExhausted",
    "UnknownFigure",
    "__version__",
    "figure_csv",
    "harmonic",
    "inner_product",
    "kappa",
    "leading_terms",
    "loschmidt",
    "precursor",
    "scrambling_time",
    "switchback",
]
