"""
Input validation functions for kolchin
"""

import re
from typing import Any, Iterable, Optional

from sympy import isprime

from .errors import KolchinError

SYMBOL_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*(\[[0-9]+\])*$")
INDEXED_PATTERN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)((?:\[[0-9]+\])+)$")


class ValidationError(KolchinError, ValueError):
    """Custom exception for validation errors"""
    pass


class DSLSyntaxError(ValidationError):
    """Syntax error in a document, with its position and offending token"""

    def __init__(self, message: str, line: int, column: int, token: str):
        self.line = line
        self.column = column
        self.token = token
        super().__init__(f"line {line}, column {column}: {message} (at {token!r})")


class UnresolvedSymbol(ValidationError):
    """A document refers to a symbol that is not declared"""

    def __init__(self, name: str, context: str = ""):
        self.name = name
        where = f" in {context}" if context else ""
        super().__init__(f"unresolved symbol '{name}'{where}")


class ArityMismatch(ValidationError):
    """An indexed symbol carries the wrong number of indices"""

    def __init__(self, name: str, expected: int, found: int):
        self.name = name
        self.expected = expected
        self.found = found
        super().__init__(f"'{name}' needs {expected} indices, found {found}")


def validate_prime(value: Any, field_name: str = "characteristic") -> int:
    """
    Validate a field characteristic: 0 or a prime

    Args:
        value: Value to validate
        field_name: Name of the field for error messages

    Returns:
        Validated integer characteristic

    Raises:
        ValidationError: If validation fails
    """
    try:
        number = int(value)
    except (ValueError, TypeError):
        raise ValidationError(f"{field_name} must be an integer")
    if number != 0 and not isprime(number):
        raise ValidationError(f"{field_name} must be 0 or a prime, got {number}")
    return number


def validate_count(value: Any, field_name: str, minimum: int = 0) -> int:
    """
    Validate a nonnegative (or bounded-below) integer count
    """
    if isinstance(value, bool):
        raise ValidationError(f"{field_name} must be an integer")
    try:
        number = int(value)
    except (ValueError, TypeError):
        raise ValidationError(f"{field_name} must be an integer")
    if number < minimum:
        raise ValidationError(f"{field_name} must be at least {minimum}, got {number}")
    return number


def validate_symbol_name(name: Any, field_name: str = "symbol") -> str:
    """
    Validate a symbol name, optionally carrying [k] index suffixes
    """
    if not isinstance(name, str) or not SYMBOL_PATTERN.match(name):
        raise ValidationError(f"{field_name} '{name}' is not a valid symbol")
    return name


def validate_unique_names(names: Iterable[str], what: str = "name") -> None:
    """
    Validate that names do not repeat
    """
    seen = set()
    for name in names:
        if name in seen:
            raise ValidationError(f"duplicate {what} '{name}'")
        seen.add(name)


def split_indexed_symbol(name: str, arity: Optional[int] = None) -> tuple:
    """
    Split an indexed symbol such as ``a[1][0][2]`` into its letter and indices

    Args:
        name: Symbol text
        arity: Expected number of indices, if known

    Returns:
        Tuple ``(letter, indices)``

    Raises:
        ValidationError: If the symbol carries no indices
        ArityMismatch: If the number of indices differs from ``arity``
    """
    match = INDEXED_PATTERN.match(name)
    if not match:
        raise ValidationError(f"'{name}' is not an indexed symbol")
    letter = match.group(1)
    indices = tuple(int(part) for part in re.findall(r"\[([0-9]+)\]", match.group(2)))
    if arity is not None and len(indices) != arity:
        raise ArityMismatch(name, arity, len(indices))
    return letter, indices


def validate_target(target: Any, current: tuple) -> tuple:
    """
    Validate a realization target ``(R, S)`` against the current lengths
    """
    try:
        big_r, big_s = (int(part) for part in target)
    except (ValueError, TypeError):
        raise ValidationError("target must be a pair of integers R,S")
    r, s = current
    if big_r < r or big_s < s:
        raise ValidationError(f"target ({big_r}, {big_s}) is below the kernel length ({r}, {s})")
    return big_r, big_s
