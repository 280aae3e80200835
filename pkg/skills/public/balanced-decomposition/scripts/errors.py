#!/usr/bin/env python3
"""Exception hierarchy shared by every balanced-decomposition module.

The CLI maps each class to an exit code (see ``run.py``):

- 2: GraphParseError, DomainError, InputError, NotApplicableError, ResourceLimitError
- 3: ContractViolation, ConsistencyError
"""
from __future__ import annotations

from typing import Optional


class DecompositionError(Exception):
    pass


class GraphParseError(DecompositionError, ValueError):
    """Malformed graph/coloring/decomposition/certificate text."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class DomainError(DecompositionError, ValueError):
    pass


class InputError(DecompositionError):
    pass


class NotApplicableError(DecompositionError):
    pass


class ContractViolation(DecompositionError):
    pass


class ResourceLimitError(DecompositionError):
    pass


class ConsistencyError(DecompositionError):
    pass
