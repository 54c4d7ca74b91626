"""Shared outcome types.

Inconclusive results are first class: a search that runs out of budget raises
or returns something that says so, it never degrades into a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass


class CeclabError(Exception):
    """Base class for library errors."""


class BudgetExhausted(CeclabError):
    """A resource bound was hit before the computation could conclude."""


class FuelExhausted(BudgetExhausted):
    """An evaluation ran out of fuel mid-computation."""


class NotCapable(CeclabError):
    """The class lacks a capability the operation requires."""


class SearchExhausted(CeclabError):
    """An internal witness search hit its bound without finding anything."""


class WitnessNotFound(CeclabError):
    """A witness guaranteed by construction was missing; indicates a bug."""


class ParseError(CeclabError):
    """Term text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ArityError(CeclabError):
    """A term violates the arity discipline of the fragment."""


@dataclass(frozen=True)
class ExceedsBound:
    """No index up to `bound` matched; the true value, if any, lies beyond."""

    bound: int


@dataclass(frozen=True)
class Equal:
    pass


@dataclass(frozen=True)
class DifferAt:
    position: int


@dataclass(frozen=True)
class UnknownBeyondHorizon:
    horizon: int


@dataclass(frozen=True)
class Accept:
    """Positive verdict of a staged procedure; `at` is the stage or the
    position of the accepting cover component."""

    at: int


@dataclass(frozen=True)
class NoVerdictYet:
    """The staged procedure did not conclude within its budget.

    `budget_hit` records whether some internal bound was the limiting factor,
    as opposed to a finite search space being exhausted outright.
    """

    budget_hit: bool = True
    detail: str = ""
