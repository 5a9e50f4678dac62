"""Common base class for the toolkit's domain errors.

Keeping one base class lets the CLI and the HTTP service map every
semantic failure (wrong graph, bad shape, tied median, ...) to a single
exit code / status code without enumerating modules.
"""


class QwindError(Exception):
    """Base class for all domain-level errors raised by qwind."""
