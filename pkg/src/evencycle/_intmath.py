"""Exact integer helpers for fractional powers and logarithms."""

from __future__ import annotations


def iroot_floor(value: int, root: int) -> int:
    """Largest integer q with q**root <= value."""
    if value < 0:
        raise ValueError("value must be non-negative")
    if root < 1:
        raise ValueError("root must be positive")
    if value < 2 or root == 1:
        return value
    q = 1 << ((value.bit_length() + root - 1) // root)
    while True:
        nxt = ((root - 1) * q + value // q ** (root - 1)) // root
        if nxt >= q:
            break
        q = nxt
    while q ** root > value:
        q -= 1
    while (q + 1) ** root <= value:
        q += 1
    return q


def iroot_ceil(value: int, root: int) -> int:
    """Smallest integer q with q**root >= value."""
    q = iroot_floor(value, root)
    return q if q ** root == value else q + 1


def ceil_pow_fraction(m: int, num: int, den: int) -> int:
    """``ceil(m ** (num / den))`` computed exactly."""
    return iroot_ceil(m ** num, den)


def ceil_log2(x: int) -> int:
    if x < 1:
        raise ValueError("log of non-positive number")
    return (x - 1).bit_length()
