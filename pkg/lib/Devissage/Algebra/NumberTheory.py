# Integer arithmetic helpers: Kronecker symbol, primality, small sieves.

import math
from sympy import sieve

from lib.Devissage.Errors import BadInputError

# Miller-Rabin with these bases is deterministic below this bound
DETERMINISTIC_BOUND = 341550071728321
DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17)
TRIAL_PRIMES = tuple(sieve.primerange(2, 1000))


def kronecker_symbol(a, n):
    # Binary Jacobi algorithm, extended to every integer n the way
    # Kronecker does it (n = 0, negative n, even n).
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # Peel off factors of two from n: (a/2) = 0 for even a, else +-1 by a mod 8
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a = a % n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a, n = n % a, a
    if n == 1:
        return result
    return 0


def factor_twos(n):
    # Returns (d, s) with n = d * 2^s, d odd
    s = 0
    while n % 2 == 0:
        n //= 2
        s += 1
    return n, s


def is_square(n):
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def strong_probable_prime(n, base):
    d, s = factor_twos(n - 1)
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def strong_lucas_probable_prime(n):
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    if is_square(n):
        return False
    D = 5
    while True:
        k = kronecker_symbol(D, n)
        if k == -1:
            break
        if k == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    Q = (1 - D) // 4
    half = (n + 1) // 2
    d, s = factor_twos(n + 1)

    u, v, qk = 1, 1, Q % n
    for bit in bin(d)[3:]:
        # Doubling step
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (u + v) * half % n, (D * u + v) * half % n
            qk = qk * Q % n

    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_prime(n):
    if n < 0:
        raise BadInputError("is_prime expects a non-negative integer, got %d" % n)
    if n < 2:
        return False
    for q in TRIAL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    if n < TRIAL_PRIMES[-1] ** 2:
        return True
    if n < DETERMINISTIC_BOUND:
        return all(strong_probable_prime(n, b) for b in DETERMINISTIC_BASES)
    # Baillie-PSW: composites are always rejected, primes are probable
    return strong_probable_prime(n, 2) and strong_lucas_probable_prime(n)


def next_prime(n):
    candidate = max(2, n + 1)
    while not is_prime(candidate):
        candidate += 1
    return candidate


def primes_between(low, high):
    # Primes q with low <= q < high
    return list(sieve.primerange(low, high))


def strip_prime(n, q):
    # Returns (e, m) with n = q^e * m and q not dividing m
    e = 0
    while n != 0 and n % q == 0:
        n //= q
        e += 1
    return e, n
