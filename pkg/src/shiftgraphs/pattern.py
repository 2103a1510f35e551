"""Interleaving type patterns and the typing of vertex pairs.

A pattern is a word over {1,2,3} with equally many 1s and 2s.  Reading the
sorted union of two equal-width tuples x, y left to right, mark 1 for an
element only in x, 2 for only in y, 3 for shared; two vertices of a shift
graph are adjacent exactly when that word (in either argument order) equals
the graph's pattern.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyTypeError,
    InvalidCharacterError,
    NotSortedError,
    UnbalancedTypeError,
    WidthMismatchError,
)

_SWAP = str.maketrans("12", "21")


@dataclass(frozen=True)
class TypePattern:
    """Validated pattern word; `marks` is the canonical '1'/'2'/'3' string."""

    marks: str

    @property
    def width(self) -> int:
        return self.marks.count("1") + self.marks.count("3")

    @property
    def length(self) -> int:
        return len(self.marks)

    def swapped(self) -> "TypePattern":
        return TypePattern(self.marks.translate(_SWAP))

    def sigma_split(self) -> tuple[int, int] | None:
        """Return (a, b) if this pattern is 1^a 3^b 2^a, else None."""
        a = self.marks.count("1")
        b = self.marks.count("3")
        if self.marks == "1" * a + "3" * b + "2" * a:
            return a, b
        return None

    def __str__(self) -> str:
        return self.marks


def parse_type(text: str) -> TypePattern:
    """Parse and validate a pattern word such as '132' or '11322'."""
    if not text:
        raise EmptyTypeError("pattern must be nonempty")
    bad = set(text) - set("123")
    if bad:
        raise InvalidCharacterError(f"pattern may only contain 1, 2, 3; got {sorted(bad)!r}")
    if text.count("1") != text.count("2"):
        raise UnbalancedTypeError(
            f"pattern needs equally many 1s and 2s, got {text.count('1')} vs {text.count('2')}"
        )
    return TypePattern(text)


def sigma(a: int, b: int) -> TypePattern:
    """The pattern 1^a 3^b 2^a (width a+b, length 2a+b)."""
    if a < 0 or b < 0:
        raise EmptyTypeError("a and b must be nonnegative")
    if a + b == 0:
        raise EmptyTypeError("sigma(0, 0) is empty")
    return TypePattern("1" * a + "3" * b + "2" * a)


def swap_type(pattern: TypePattern) -> TypePattern:
    """Pointwise exchange of 1 and 2 marks; the word of the reversed pair."""
    return pattern.swapped()


def _check_tuple(t, name: str) -> None:
    for i in range(len(t) - 1):
        if not t[i] < t[i + 1]:
            raise NotSortedError(f"{name} must be strictly increasing, got {t!r}")


def type_of_pair(x, y) -> TypePattern:
    """Word over {1,2,3} read off the sorted union of x and y.

    Both arguments are strictly increasing tuples of the same width over a
    common ordered ground set (ints, or ordinals for symbolic queries).
    """
    if len(x) != len(y):
        raise WidthMismatchError(f"widths differ: {len(x)} vs {len(y)}")
    _check_tuple(x, "x")
    _check_tuple(y, "y")
    k = len(x)
    out = []
    i = j = 0
    while i < k or j < k:
        if i < k and j < k and x[i] == y[j]:
            out.append("3")
            i += 1
            j += 1
        elif j >= k or (i < k and x[i] < y[j]):
            out.append("1")
            i += 1
        else:
            out.append("2")
            j += 1
    return TypePattern("".join(out))


def pair_matches(x, y, pattern: TypePattern) -> bool:
    """True iff the unordered pair {x, y} is an edge of G(S, pattern).

    Equivalent to type_of_pair(x, y) in {pattern, swap(pattern)} but with an
    early-exit merge; build_graph's inner loop runs through here.
    """
    k = len(x)
    m1 = pattern.marks
    m2 = pattern.marks.translate(_SWAP)
    if len(m1) != 2 * k - _shared_budget(m1):
        # Structurally impossible; patterns of the wrong width never match.
        return False
    ok1 = ok2 = True
    i = j = pos = 0
    n1 = len(m1)
    while i < k or j < k:
        if pos >= n1:
            return False
        if i < k and j < k and x[i] == y[j]:
            c = "3"
            i += 1
            j += 1
        elif j >= k or (i < k and x[i] < y[j]):
            c = "1"
            i += 1
        else:
            c = "2"
            j += 1
        if ok1 and m1[pos] != c:
            ok1 = False
        if ok2 and m2[pos] != c:
            ok2 = False
        if not (ok1 or ok2):
            return False
        pos += 1
    return pos == n1


def _shared_budget(marks: str) -> int:
    return marks.count("3")
