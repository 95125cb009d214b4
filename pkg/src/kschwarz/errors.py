"""Shared exception types."""


class DomainError(ValueError):
    """Point outside (or too close to the boundary of) a chart domain."""


class ScenarioRejected(Exception):
    """A theorem scenario failed its curvature hypothesis gate.

    Carries a human-readable diagnosis of which hypothesis failed and where.
    """

    def __init__(self, diagnosis: str):
        super().__init__(diagnosis)
        self.diagnosis = diagnosis
