"""Error types shared across the package.

The CLI maps these onto its exit-code contract: verification mismatches
exit 2, exhausted search budgets exit 3, memory/resource refusals exit 4.
"""


class VerificationError(Exception):
    """A predicted quantity disagreed with an enumerated one."""


class BudgetExceededError(Exception):
    """A search or computation ran out of its configured budget."""


class ResourceLimitError(Exception):
    """A computation would exceed the configured memory budget."""
