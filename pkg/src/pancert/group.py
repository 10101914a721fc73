"""Arithmetic of Q = F_2^3 and a fixed sum-free partition of its nonzero elements.

Labels are 3-bit integers; the written triple "abc" corresponds to int("abc", 2),
so 100 is 4, 010 is 2, and so on. XOR is the group law.
"""

from __future__ import annotations

from typing import Iterable

Label = int

ALL_LABELS: tuple[Label, ...] = tuple(range(8))

# Classes keep their written order so that constructions picking "the first two
# elements of P_i" are deterministic.
PARTITION: tuple[tuple[Label, ...], ...] = (
    (0b100, 0b010),
    (0b001, 0b110, 0b101),
    (0b011, 0b111),
)

_CLASS_OF: dict[Label, int] = {x: i for i, cls in enumerate(PARTITION) for x in cls}


def add(x: Label, y: Label) -> Label:
    """Coordinatewise sum mod 2 of two labels."""
    _check_label(x)
    _check_label(y)
    return x ^ y


def classify(x: Label) -> int:
    """Index of the partition class containing x. The identity has no class."""
    _check_label(x)
    if x == 0:
        raise ValueError("identity has no class")
    return _CLASS_OF[x]


def verify_sumfree(members: Iterable[Label]) -> bool:
    """True iff a + b stays outside the set for all a, b in it (a = b included)."""
    s = set(members)
    for x in s:
        _check_label(x)
    return all((a ^ b) not in s for a in s for b in s)


def label_str(x: Label) -> str:
    """Render a label as its written triple, e.g. 5 -> "101"."""
    _check_label(x)
    return format(x, "03b")


def parse_label(s: str) -> Label:
    """Inverse of label_str; rejects anything but three 0/1 characters."""
    if not isinstance(s, str) or len(s) != 3 or any(ch not in "01" for ch in s):
        raise ValueError(f"not a 3-bit label string: {s!r}")
    return int(s, 2)


def _check_label(x: Label) -> None:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x <= 7:
        raise ValueError(f"not a label in 0..7: {x!r}")
