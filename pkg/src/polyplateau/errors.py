"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of a counting or enumeration routine."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would visit more nodes than its budget allows."""

    def __init__(self, budget: int, what: str = "search"):
        self.budget = budget
        super().__init__(f"{what} exceeded the node budget of {budget} candidate states")
