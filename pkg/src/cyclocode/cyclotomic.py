"""Number-theoretic helpers, cyclotomic polynomials and minimal polynomials.

Cyclotomic polynomials are computed once over the integers (coefficients are
exact Python ints) by recursive division of x^n - 1 by the Q_d for proper
divisors d, then reduced mod p for a concrete field.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import CharacteristicDividesN, NotCoprime
from .field import factorize, make_extension, nth_root_of_unity
from .poly import Poly


@dataclass(frozen=True)
class ArithmeticProfile:
    n: int
    phi: int
    omega: int
    lpf: int | None  # None for n = 1; use lpf() for the checked accessor
    divisors: tuple
    factorization: tuple

    def to_dict(self):
        return {
            "n": self.n,
            "phi": self.phi,
            "omega": self.omega,
            "lpf": self.lpf,
            "divisors": list(self.divisors),
            "factorization": [list(pe) for pe in self.factorization],
        }


def profile(n):
    if n < 1:
        raise ValueError("n must be >= 1")
    fact = tuple(factorize(n))
    phi = n
    for p, _ in fact:
        phi -= phi // p
    divs = sorted(
        d for d in range(1, n + 1) if n % d == 0
    )
    return ArithmeticProfile(
        n=n,
        phi=phi,
        omega=len(fact),
        lpf=fact[0][0] if fact else None,
        divisors=tuple(divs),
        factorization=fact,
    )


def euler_phi(n):
    return profile(n).phi


def lpf(n):
    """Least prime factor; n = 1 has none and is rejected."""
    if n < 2:
        raise ValueError("lpf is undefined for n < 2")
    return profile(n).lpf


# -- integer cyclotomic polynomials ------------------------------------------

def _int_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_divexact(a, b):
    """Exact division of integer polynomials (remainder must vanish)."""
    a = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db]
        assert c % b[-1] == 0
        f = c // b[-1]
        quot[i] = f
        if f:
            for j, bc in enumerate(b):
                a[i + j] -= f * bc
    assert all(c == 0 for c in a)
    return quot


@lru_cache(maxsize=None)
def cyclotomic_int(n):
    """Coefficients of Q_n over the integers, ascending."""
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _int_mul(den, list(cyclotomic_int(d)))
    return tuple(_int_divexact(num, den))


def cyclotomic_poly(n, ctx):
    """Q_n over the given field; requires gcd(n, char) = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % ctx.p == 0:
        raise CharacteristicDividesN(
            f"characteristic {ctx.p} divides n = {n}"
        )
    return Poly(ctx, [c % ctx.p for c in cyclotomic_int(n)])


def verify_factorization(n, ctx):
    """Check x^n - 1 = prod over d | n of Q_d, exactly over the field."""
    prod = Poly.one(ctx)
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic_poly(d, ctx)
    return prod == Poly.x_n_minus_1(ctx, n)


# -- cyclotomic cosets and minimal polynomials --------------------------------

@dataclass(frozen=True)
class CyclotomicCoset:
    n: int
    q: int
    representative: int
    members: tuple


def cosets(n, q):
    """The q-cyclotomic cosets partitioning Z_n, sorted by representative."""
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        members = []
        j = i
        while not seen[j]:
            seen[j] = True
            members.append(j)
            j = (j * q) % n
        out.append(
            CyclotomicCoset(n=n, q=q, representative=i, members=tuple(sorted(members)))
        )
    return out


def multiplicative_order_mod(q, n):
    """Order of q in the unit group of Z_n."""
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    if n == 1:
        return 1
    t = 1
    acc = q % n
    while acc != 1:
        acc = (acc * q) % n
        t += 1
    return t


def minimal_poly(s, n, ctx):
    """M^(s) = prod over j in the coset of s of (x - zeta^j), as a base-field Poly."""
    if math.gcd(n, ctx.q) != 1:
        raise NotCoprime(f"gcd({n}, {ctx.q}) != 1")
    t = multiplicative_order_mod(ctx.q, n)
    ext = make_extension(ctx, t)
    big = ext.field
    zeta = nth_root_of_unity(big, n)
    coset = next(c for c in cosets(n, ctx.q) if s % n in c.members)
    prod = Poly.one(big)
    for j in coset.members:
        prod = prod * Poly(big, [big.neg(big.pow(zeta, j)), 1])
    return Poly(ctx, [ext.retract(c) for c in prod.coeffs])
