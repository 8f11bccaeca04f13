"""Second-order linear recurrence pairs and their named specializations.

A parameter pair (a, b) defines two companion sequences sharing the
recurrence w_n = a*w_{n-1} + b*w_{n-2}:

    u: u_0 = 0, u_1 = 1        (balancing numbers at (6, -1), Fibonacci at (1, 1))
    v: v_0 = 2, v_1 = a        (Lucas numbers at (1, 1))

Lucas-balancing numbers are v_n / 2 at (6, -1); the halving is always exact.
Values are memoized per parameter pair in grow-only caches.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .combinatorics import IntegralityError

__all__ = [
    "BALANCING",
    "FIBONACCI",
    "SeqCache",
    "SeqParams",
    "balancing",
    "check_cross_recurrence",
    "fibonacci",
    "lucas",
    "lucas_balancing",
    "u",
    "v",
]


@dataclass(frozen=True)
class SeqParams:
    """Recurrence coefficients (a, b); the discriminant a^2 + 4b must be nonzero.

    A zero discriminant means a repeated characteristic root, for which the
    closed forms evaluated elsewhere in this package are not valid.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.discriminant == 0:
            raise ValueError(f"SeqParams({self.a}, {self.b}): discriminant a^2 + 4b is zero")

    @property
    def discriminant(self) -> int:
        return self.a * self.a + 4 * self.b


BALANCING = SeqParams(6, -1)
FIBONACCI = SeqParams(1, 1)


class SeqCache:
    """Grow-only table of u_n and v_n values for one parameter pair.

    Already-computed prefixes may be read concurrently; extension is
    serialized on a lock and only ever appends, so earlier entries never
    change.
    """

    def __init__(self, params: SeqParams) -> None:
        self.params = params
        self._u: list[int] = [0, 1]
        self._v: list[int] = [2, params.a]
        self._lock = threading.Lock()

    def u(self, n: int) -> int:
        if n >= len(self._u):
            self._extend(self._u, n)
        return self._u[n]

    def v(self, n: int) -> int:
        if n >= len(self._v):
            self._extend(self._v, n)
        return self._v[n]

    def _extend(self, values: list[int], n: int) -> None:
        a, b = self.params.a, self.params.b
        with self._lock:
            while len(values) <= n:
                values.append(a * values[-1] + b * values[-2])


_caches: dict[SeqParams, SeqCache] = {}
_registry_lock = threading.Lock()


def _cache_for(params: SeqParams) -> SeqCache:
    try:
        return _caches[params]
    except KeyError:
        with _registry_lock:
            return _caches.setdefault(params, SeqCache(params))


def u(params: SeqParams, n: int) -> int:
    """n-th u-term: u_0 = 0, u_1 = 1, u_n = a*u_{n-1} + b*u_{n-2}."""
    if n < 0:
        raise ValueError(f"u: index must be nonnegative, got {n}")
    return _cache_for(params).u(n)


def v(params: SeqParams, n: int) -> int:
    """n-th v-term: v_0 = 2, v_1 = a, same recurrence as u."""
    if n < 0:
        raise ValueError(f"v: index must be nonnegative, got {n}")
    return _cache_for(params).v(n)


def balancing(n: int) -> int:
    """n-th balancing number B_n: 0, 1, 6, 35, 204, ..."""
    return u(BALANCING, n)


def lucas_balancing(n: int) -> int:
    """n-th Lucas-balancing number C_n = v_n / 2 at (6, -1): 1, 3, 17, 99, ...

    v_n is even for every n (both initial values are, and the recurrence
    preserves parity here), so the division is exact.
    """
    vn = v(BALANCING, n)
    half, rem = divmod(vn, 2)
    if rem:
        raise IntegralityError(f"v_{n} = {vn} is odd; cannot halve exactly")
    return half


def fibonacci(n: int) -> int:
    """n-th Fibonacci number F_n."""
    return u(FIBONACCI, n)


def lucas(n: int) -> int:
    """n-th Lucas number L_n: 2, 1, 3, 4, 7, ..."""
    return v(FIBONACCI, n)


def check_cross_recurrence(n_max: int) -> bool:
    """True iff B_{n+1} = 3B_n + C_n and C_{n+1} = 8B_n + 3C_n for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError(f"check_cross_recurrence: n_max must be nonnegative, got {n_max}")
    for n in range(n_max + 1):
        if balancing(n + 1) != 3 * balancing(n) + lucas_balancing(n):
            return False
        if lucas_balancing(n + 1) != 8 * balancing(n) + 3 * lucas_balancing(n):
            return False
    return True
