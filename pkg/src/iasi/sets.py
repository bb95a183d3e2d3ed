"""Finite sets of non-negative integers, sumsets, and AP detection.

Everything downstream (labelings, classification, construction) reduces to
three facts about finite integer sets:

* the sumset A+B = {a+b : a in A, b in B},
* its compatibility classes (pairs grouped by equal sum), and
* whether a set's elements form an arithmetic progression.

Elements are kept inside the 64-bit unsigned range so labels survive any
serialization boundary; arithmetic that would leave the range raises
LabelOverflowError instead of silently widening.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import LabelOverflowError

U64_MAX = 2**64 - 1

__all__ = [
    "U64_MAX",
    "IntegerSet",
    "APSet",
    "sumset",
    "detect_ap",
    "CompatibilityTable",
    "compatibility_table",
    "predicted_edge_cardinality",
]


class IntegerSet(tuple):
    """An immutable, sorted, duplicate-free tuple of non-negative integers.

    The empty set is representable (it is rejected by the operations that
    need nonempty operands, not by the type).
    """

    __slots__ = ()

    def __new__(cls, elements=()):
        seen = set()
        for e in elements:
            if isinstance(e, bool) or not isinstance(e, int):
                raise TypeError(f"set elements must be integers, got {e!r}")
            if e < 0:
                raise ValueError(f"set elements must be non-negative, got {e}")
            if e > U64_MAX:
                raise LabelOverflowError(f"element {e} exceeds the 64-bit range")
            seen.add(e)
        return tuple.__new__(cls, sorted(seen))

    @property
    def span(self) -> int:
        """max - min; 0 for singletons."""
        return self[-1] - self[0]

    def __repr__(self):
        return "IntegerSet({%s})" % ", ".join(str(e) for e in self)


@dataclass(frozen=True)
class APSet:
    """An arithmetic progression {first + i*difference : 0 <= i < length}.

    A singleton has no usable common difference; it carries ``difference``
    None, and any attempt to compare or do arithmetic with that sentinel
    fails loudly (TypeError) rather than acting like zero.
    """

    first: int
    difference: int | None
    length: int

    def __post_init__(self):
        if not isinstance(self.first, int) or self.first < 0:
            raise ValueError(f"first term must be a non-negative integer, got {self.first!r}")
        if not isinstance(self.length, int) or self.length < 1:
            raise ValueError(f"length must be a positive integer, got {self.length!r}")
        if self.length == 1:
            if self.difference is not None:
                raise ValueError("a singleton progression has no common difference")
        else:
            if not isinstance(self.difference, int) or self.difference < 1:
                raise ValueError(
                    f"common difference must be a positive integer, got {self.difference!r}"
                )
            if self.first + (self.length - 1) * self.difference > U64_MAX:
                raise LabelOverflowError("progression exceeds the 64-bit range")

    def expand(self) -> IntegerSet:
        """The progression as an IntegerSet."""
        if self.length == 1:
            return IntegerSet((self.first,))
        d = self.difference
        return IntegerSet(self.first + i * d for i in range(self.length))


def sumset(a, b) -> IntegerSet:
    """Pointwise sums of two nonempty integer sets.

    |A+B| is at least max(|A|, |B|) and at most |A|*|B|.
    """
    a = IntegerSet(a)
    b = IntegerSet(b)
    if not a or not b:
        raise ValueError("sumset requires nonempty operands")
    if a[-1] + b[-1] > U64_MAX:
        raise LabelOverflowError(
            f"maximum sum {a[-1]} + {b[-1]} exceeds the 64-bit range"
        )
    return IntegerSet(x + y for x in a for y in b)


def detect_ap(s) -> APSet | None:
    """Return the unique progression matching ``s``, or None.

    Singletons are degenerate progressions (difference sentinel None); a
    two-element set is the progression with difference max - min.
    """
    s = IntegerSet(s)
    if not s:
        raise ValueError("cannot detect a progression in the empty set")
    if len(s) == 1:
        return APSet(s[0], None, 1)
    d = s[1] - s[0]
    for prev, cur in zip(s, s[1:]):
        if cur - prev != d:
            return None
    return APSet(s[0], d, len(s))


@dataclass(frozen=True)
class CompatibilityTable:
    """Pairs of A x B grouped by their sum.

    ``classes`` maps each attainable sum to the ordered pairs realizing it,
    keyed in increasing sum order. The number of classes equals |A+B|; no
    class can exceed ``saturated_bound`` = min(|A|, |B|) pairs.
    """

    classes: dict
    saturated_bound: int

    @property
    def index(self) -> int:
        """Number of compatibility classes (= sumset cardinality)."""
        return len(self.classes)

    @property
    def trivial_sums(self) -> tuple:
        """Sums realized by exactly one pair."""
        return tuple(s for s, pairs in self.classes.items() if len(pairs) == 1)

    @property
    def saturated_sums(self) -> tuple:
        """Sums whose class reaches the min(|A|, |B|) bound."""
        return tuple(
            s for s, pairs in self.classes.items() if len(pairs) == self.saturated_bound
        )

    @property
    def maximal_size(self) -> int:
        return max(len(pairs) for pairs in self.classes.values())


def compatibility_table(a, b) -> CompatibilityTable:
    """Group A x B by equal sums, smallest sum first."""
    a = IntegerSet(a)
    b = IntegerSet(b)
    if not a or not b:
        raise ValueError("compatibility table requires nonempty operands")
    if a[-1] + b[-1] > U64_MAX:
        raise LabelOverflowError(
            f"maximum sum {a[-1]} + {b[-1]} exceeds the 64-bit range"
        )
    groups = defaultdict(list)
    for x in a:
        for y in b:
            groups[x + y].append((x, y))
    classes = {s: tuple(sorted(groups[s])) for s in sorted(groups)}
    return CompatibilityTable(classes=classes, saturated_bound=min(len(a), len(b)))


def predicted_edge_cardinality(m: int, n: int, k: int) -> int:
    """Closed-form |A+B| when A, B are progressions with differences d, k*d.

    Here m = |A| (the set with the smaller difference), n = |B|, and the
    multiplier k must satisfy 1 <= k <= m for the blocks of sums to tile
    without gaps.
    """
    for name, value in (("m", m), ("n", n), ("k", k)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"{name} must be an integer, got {value!r}")
    if m < 1 or n < 1:
        raise ValueError(f"cardinalities must be positive, got m={m}, n={n}")
    if not 1 <= k <= m:
        raise ValueError(f"multiplier k={k} outside [1, m={m}]")
    return m + k * (n - 1)
