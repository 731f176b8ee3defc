class DomainError(ValueError):
    """Parameters outside the region an operation is defined on."""


class ResourceLimitError(RuntimeError):
    """Requested size exceeds the configured cap."""
