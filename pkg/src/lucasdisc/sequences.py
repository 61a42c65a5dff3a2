"""Order-k linear recurrences summing the previous k terms.

Two initializations of the same recurrence

    a(n) = a(n-1) + a(n-2) + ... + a(n-k),    k >= 2,

are provided.  The Fibonacci-type family starts with
F(2-k) = ... = F(0) = 0, F(1) = 1; the Lucas-type family starts with
L(2-k) = ... = L(-1) = 0, L(0) = 2, L(1) = 1.  Indices below 2-k are
outside the domain.  Everything here is exact integer arithmetic.

Useful closed pieces, all checked by the test suite and by
``lucasdisc.lemmas``:

* L(n) = 3 * 2^(n-2) for 2 <= n <= k, and L(k+1) = 3 * 2^(k-1) - 2;
* L(n) = 2 F(n+1) - F(n) for every n >= 2 - k;
* L(n) = 2 L(n-1) - L(n-k-1) once all three indices are in range;
* parities repeat with period k + 1.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator

FIBONACCI = "fibonacci"
LUCAS = "lucas"

_FAMILIES = (FIBONACCI, LUCAS)


@dataclass(frozen=True)
class SeqParams:
    """Recurrence order ``k`` plus the initialization family."""

    k: int
    family: str

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("order k must be at least 2, got %r" % (self.k,))
        if self.family not in _FAMILIES:
            raise ValueError("family must be one of %s, got %r" % (_FAMILIES, self.family))

    @property
    def min_index(self) -> int:
        return 2 - self.k


def _initial_term(params: SeqParams, n: int) -> int:
    """Stored initial value for 2-k <= n <= 1 (no backward recursion)."""
    if n < params.min_index or n > 1:
        raise ValueError("index %d is not an initial index for k=%d" % (n, params.k))
    if params.family == FIBONACCI:
        return 1 if n == 1 else 0
    return {0: 2, 1: 1}.get(n, 0)


class SeqWindow:
    """Sliding window of the k most recent terms with a running sum.

    ``index`` is the index of the newest term in ``window``; stepping
    appends sum(window) and evicts the oldest term, so each step costs
    one big-integer addition and one subtraction.
    """

    __slots__ = ("params", "index", "window", "window_sum")

    def __init__(self, params: SeqParams) -> None:
        self.params = params
        self.index = 1
        init = [_initial_term(params, n) for n in range(params.min_index, 2)]
        self.window: deque[int] = deque(init, maxlen=params.k)
        self.window_sum = sum(init)

    def current(self) -> int:
        return self.window[-1]

    def step(self) -> tuple[int, int]:
        """Advance one index; returns (new index, new term)."""
        new = self.window_sum
        evicted = self.window[0]
        self.window.append(new)  # maxlen=k drops the oldest entry
        self.window_sum += new - evicted
        self.index += 1
        return self.index, new


def term(params: SeqParams, n: int) -> int:
    """Exact term at index ``n`` (``n >= 2 - k``)."""
    if n < params.min_index:
        raise ValueError("index %d below domain minimum %d" % (n, params.min_index))
    if n <= 1:
        return _initial_term(params, n)
    w = SeqWindow(params)
    value = w.current()
    while w.index < n:
        _, value = w.step()
    return value


def term_iter(params: SeqParams, n_start: int = 0) -> Iterator[tuple[int, int]]:
    """Yield ``(n, term)`` pairs for n = n_start, n_start + 1, ...

    The walk is incremental: total cost to reach index n is O(n + k)
    big-integer additions.
    """
    if n_start < params.min_index:
        raise ValueError("start index %d below domain minimum %d" % (n_start, params.min_index))
    for n in range(n_start, 2):
        yield n, _initial_term(params, n)
    w = SeqWindow(params)
    while True:
        n, value = w.step()
        if n >= max(n_start, 2):
            yield n, value


def lucas_from_fib(k: int, n: int) -> int:
    """Lucas-type term via the cross-family identity 2 F(n+1) - F(n)."""
    fib = SeqParams(k, FIBONACCI)
    return 2 * term(fib, n + 1) - term(fib, n)


def binom_ext(a: int, b: int) -> int:
    """Binomial with the extended convention: 0 when a < b or either side is negative."""
    if b < 0 or a < 0 or a < b:
        return 0
    return math.comb(a, b)


def cooper_howard_fib(k: int, n: int) -> int:
    """Fibonacci-type term from the binomial expansion around 2^(n-2).

    For n >= 2,

        F(n) = 2^(n-2) + sum_{j=1}^{floor((n+k)/(k+1)) - 1} C_j * 2^(n-j(k+1)-2)

    with C_j = (-1)^j * (binom(n-jk, j) - binom(n-jk-2, j-2)) under the
    extended binomial convention.  The smallest exponent reached is -2,
    so the sum is accumulated as an integer scaled by 4 and divided out
    at the end (the scaled accumulator is signed along the way).
    Indices n < 2 fall back to the recurrence walk.
    """
    if n < 2:
        return term(SeqParams(k, FIBONACCI), n)
    j_max = (n + k) // (k + 1) - 1
    scaled = 1 << n  # 4 * 2^(n-2)
    for j in range(1, j_max + 1):
        coeff = binom_ext(n - j * k, j) - binom_ext(n - j * k - 2, j - 2)
        if j % 2:
            coeff = -coeff
        exponent = n - j * (k + 1)  # >= 1 because j <= (n-1)/(k+1)
        scaled += coeff << exponent
    if scaled < 0 or scaled % 4:
        raise AssertionError("binomial expansion accumulator invalid for k=%d n=%d" % (k, n))
    return scaled >> 2


def shift_identity_check(k: int, n: int) -> bool:
    """Check L(n) = 2 L(n-1) - L(n-k-1) exactly; requires n >= 3."""
    params = SeqParams(k, LUCAS)
    if n - (k + 1) < params.min_index:
        raise ValueError("n=%d too small: n-(k+1) must be at least %d" % (n, params.min_index))
    return term(params, n) == 2 * term(params, n - 1) - term(params, n - (k + 1))
