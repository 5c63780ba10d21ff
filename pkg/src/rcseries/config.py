"""Shared truncation/precision configuration for the analysis pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .exponents import Exponent, ExponentGroup

Q = Fraction


@dataclass(frozen=True)
class Settings:
    """Working precision for the pipeline.

    t_order:    exponents at or above this are unknown in series produced by
                inexact operations (exact inputs stay exact).
    jet_order:  number of certified jet coefficients when an operation
                introduces an infinite tail in the disc variable.
    radius:     working radius (> 1) for unit tests on top slices.
    rank:       rank of the exponent group.
    refine_cap: bisection budget for algebraic-number decisions.
    seed:       seed recorded in reports for reproducible sampling.
    """

    rank: int = 1
    t_order_q: Fraction = Q(5)
    jet_order: int = 16
    radius: Fraction = Q(2)
    refine_cap: int = 256
    seed: int = 0
    compose_arity_cap: int = 3

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError("rank must be >= 1")
        if self.radius <= 1:
            raise DomainError("working radius must be > 1")
        if self.jet_order < 2:
            raise DomainError("jet order too small")
        if self.t_order_q <= 0:
            raise DomainError("t-order must be positive")

    @property
    def group(self) -> ExponentGroup:
        return ExponentGroup(self.rank)

    @property
    def t_order(self) -> Exponent:
        return self.group.scalar(self.t_order_q)


DEFAULT = Settings()
