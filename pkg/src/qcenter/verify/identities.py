"""Exact evaluation of the two binomial identities behind the root-of-unity centrality proof."""

from fractions import Fraction
from math import comb, factorial

from ..errors import RangeError


def _binom(a, b):
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def _fact(x, where):
    if x < 0:
        raise RangeError(f"factorial of negative argument {x} at {where}")
    return factorial(x)


def identity_A_sides(N, C, M):
    """Both sides of the first identity, 0 <= C, M <= floor((N-1)/2)."""
    top = (N - 1) // 2
    if N < 1 or not (0 <= C <= top and 0 <= M <= top):
        raise RangeError(f"(N, C, M) = ({N}, {C}, {M}) outside N >= 1, 0 <= C, M <= {top}")
    where = (N, C, M)
    lhs = sum(comb(N, 2 * t + 1) * _binom(top - t, top - C) * _binom(t, M)
              for t in range(top + 1))
    h = N // 2
    parity = N % 2
    rhs = (Fraction(4) ** (C - M) * _binom(C, M) * (N - 2 * C * (1 - parity))
           * Fraction(_fact(2 * h, where) * _fact(h + C - M, where) * _fact(h - M, where),
                      _fact(h, where) * _fact(2 * C + 1, where) * _fact(2 * h - 2 * M, where)
                      * _fact(h - C, where)))
    return Fraction(lhs), rhs


def identity_B_sides(n, c, d):
    """Both sides of the second identity, 0 <= c, d <= floor((n-1)/2)."""
    top = (n - 1) // 2
    if n < 1 or not (0 <= c <= top and 0 <= d <= top):
        raise RangeError(f"(n, c, d) = ({n}, {c}, {d}) outside n >= 1, 0 <= c, d <= {top}")
    where = (n, c, d)
    h = n // 2
    parity = n % 2
    lhs = Fraction(0)
    for j in range(d + 1):
        weight = Fraction(2 * d - 2 * j + 1 + (n - 2 * d - 1) ** parity, n - j)
        ratio = Fraction(
            _fact(2 * h - 2 * j, where) * _fact(n - 1 - c - d, where) * _fact(h - c, where),
            _fact(h - j, where) * _fact(d - j + 1 - parity, where)
            * _fact(2 * h - 2 * c, where) * _fact(n - 2 * d + parity - 1, where))
        lhs += _binom(n - j, j) * weight * _binom(top - d, c - j) * ratio
    rhs = (Fraction(_binom(n - 1 - d, d) * _binom(n - 1 - c, c))
           / (Fraction(n, 2) ** (1 - parity) * Fraction(n - 2 * d) ** parity))
    return lhs, rhs


def check_identity_A(N, C, M):
    lhs, rhs = identity_A_sides(N, C, M)
    return lhs == rhs


def check_identity_B(n, c, d):
    lhs, rhs = identity_B_sides(n, c, d)
    return lhs == rhs


def sweep_identity(which, max_n):
    """Evaluate every valid tuple up to ``max_n``.

    Returns ``(checked, failures)``; failures are ``(tuple, lhs, rhs)`` or
    ``(tuple, error message)`` in increasing tuple order, so the first one is
    the minimal failing tuple.
    """
    sides = identity_A_sides if which == "A" else identity_B_sides
    checked, failures = 0, []
    for n in range(1, max_n + 1):
        top = (n - 1) // 2
        for a in range(top + 1):
            for b in range(top + 1):
                checked += 1
                try:
                    lhs, rhs = sides(n, a, b)
                except RangeError as exc:
                    failures.append(((n, a, b), str(exc)))
                    continue
                if lhs != rhs:
                    failures.append(((n, a, b), lhs, rhs))
    return checked, failures
