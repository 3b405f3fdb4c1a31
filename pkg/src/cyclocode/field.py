"""Finite fields F_{p^l} with exact element arithmetic.

Elements of a field of order q = p^l are plain ints in [0, q).  The base-p
digits of the int are the polynomial-basis coordinates (digit i is the
coefficient of u^i, ascending), so the integer ordering of encodings is the
canonical lexicographic ordering used for every "smallest" tie-break.
Prime-subfield constants encode as themselves (values < p).
"""

from functools import lru_cache

from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    NotCompatible,
    NotPrime,
)

# Fields up to this order keep full q x q add/mul tables; larger contexts
# fall back to digit arithmetic per operation.
TABLE_LIMIT = 512

# Support contract: a context itself never exceeds 2^16 elements unless it
# was created as an ambient extension for root searches, capped at 2^24.
CONTEXT_LIMIT = 1 << 16
ROOT_SEARCH_LIMIT = 1 << 24


def is_prime(n):
    """Trial-division primality check; inputs are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factorize(n):
    """Prime factorization of n >= 1 as a list of (prime, exponent)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


class FieldCtx:
    """A concrete finite field F_{p^l}; immutable after construction."""

    def __init__(self, p, l=1, modulus=None):
        self.p = p
        self.l = l
        self.q = p ** l
        if l == 1:
            self.modulus = None
        else:
            if modulus is None or len(modulus) != l + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree l")
            self.modulus = tuple(c % p for c in modulus[:-1]) + (1,)
        self._add_table = None
        self._mul_table = None
        self._primitive = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- representation helpers ------------------------------------------

    def decode(self, a):
        """Base-p digits of the encoding, ascending, length l."""
        digits = []
        for _ in range(self.l):
            a, r = divmod(a, self.p)
            digits.append(r)
        return digits

    def encode(self, digits):
        v = 0
        for d in reversed(digits):
            v = v * self.p + (d % self.p)
        return v

    # -- arithmetic -------------------------------------------------------

    def _build_tables(self):
        q = self.q
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for a in range(q):
            row = a * q
            for b in range(a, q):
                s = self._add_raw(a, b)
                m = self._mul_raw(a, b)
                add[row + b] = s
                add[b * q + a] = s
                mul[row + b] = m
                mul[b * q + a] = m
        self._add_table = add
        self._mul_table = mul

    def _add_raw(self, a, b):
        if self.l == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da = self.decode(a)
        db = self.decode(b)
        return self.encode([x + y for x, y in zip(da, db)])

    def _mul_raw(self, a, b):
        p = self.p
        if self.l == 1:
            return (a * b) % p
        da = self.decode(a)
        db = self.decode(b)
        prod = [0] * (2 * self.l - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the defining polynomial
        mod = self.modulus
        for i in range(len(prod) - 1, self.l - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.l):
                    prod[i - self.l + j] = (prod[i - self.l + j] - c * mod[j]) % p
        return self.encode(prod[: self.l])

    def add(self, a, b):
        if self._add_table is not None:
            return self._add_table[a * self.q + b]
        return self._add_raw(a, b)

    def neg(self, a):
        if self.l == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.encode([-d for d in self.decode(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_raw(a, b)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self.l == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- multiplicative structure ------------------------------------------

    def element_order(self, a):
        """Least e >= 1 with a^e = 1; divides q - 1."""
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        e = self.q - 1
        for r, _ in factorize(e):
            while e % r == 0 and self.pow(a, e // r) == 1:
                e //= r
        return e

    def primitive_element(self):
        """Canonically-least generator of the multiplicative group."""
        if self._primitive is None:
            e = self.q - 1
            primes = [r for r, _ in factorize(e)] if e > 1 else []
            for a in range(1, self.q):
                if all(self.pow(a, e // r) != 1 for r in primes):
                    self._primitive = a
                    break
        return self._primitive

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.p, self.l, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.l == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.l}"

    def literal(self):
        return str(self.p) if self.l == 1 else f"{self.p}^{self.l}"


class Extension:
    """A field F_{q^m} together with the embedding of a base field into it."""

    def __init__(self, base, field, root):
        self.base = base
        self.field = field
        self._root = root  # image of the base field's generator u; None if base is prime
        self._table = None
        self._inverse = None

    def _embed_table(self):
        if self._table is None:
            if self._root is None:
                self._table = list(range(self.base.q))
            else:
                big = self.field
                powers = [1]
                for _ in range(self.base.l - 1):
                    powers.append(big.mul(powers[-1], self._root))
                table = []
                for a in range(self.base.q):
                    acc = 0
                    for d, rp in zip(self.base.decode(a), powers):
                        acc = big.add(acc, big.mul(d % self.base.p, rp))
                    table.append(acc)
                self._table = table
        return self._table

    def embed(self, a):
        return self._embed_table()[a]

    def retract(self, b):
        """Inverse of embed; raises if b is outside the embedded base field."""
        if self._inverse is None:
            self._inverse = {img: a for a, img in enumerate(self._embed_table())}
        try:
            return self._inverse[b]
        except KeyError:
            raise ValueError(f"{b} is not in the embedded base field") from None


def make_prime_field(p):
    """The prime field F_p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return _prime_field(p)


@lru_cache(maxsize=None)
def _prime_field(p):
    return FieldCtx(p)


@lru_cache(maxsize=None)
def _canonical_modulus(p, d):
    """First monic irreducible of degree d over F_p in canonical order."""
    from .poly import Poly, is_irreducible

    ctx = make_prime_field(p)
    for low in range(p ** d):
        digits = []
        v = low
        for _ in range(d):
            v, r = divmod(v, p)
            digits.append(r)
        f = Poly(ctx, digits + [1])
        if is_irreducible(f):
            return tuple(digits + [1])
    raise RuntimeError("no irreducible polynomial found")  # unreachable


@lru_cache(maxsize=None)
def _extension_field(p, l):
    if l == 1:
        return make_prime_field(p)
    return FieldCtx(p, l, _canonical_modulus(p, l))


def make_extension(base, m, cap=ROOT_SEARCH_LIMIT):
    """F_{q^m} as a single F_p-extension of degree l*m, with base embedded.

    The base field is located inside the big field as the canonically-least
    root of its defining polynomial among the elements of order dividing q-1.
    """
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if base.q ** m > cap:
        raise DegreeTooLarge(
            f"q^m = {base.q ** m} exceeds the support cap {cap}"
        )
    if m == 1:
        return Extension(base, base, base.p if base.l > 1 else None)
    big = _extension_field(base.p, base.l * m)
    if base.l == 1:
        return Extension(base, big, None)
    return Extension(base, big, _subfield_root(base, big))


def _subfield_root(base, big):
    """Canonically-least root of base's modulus among the F_q elements of big."""
    gamma = big.primitive_element()
    step = (big.q - 1) // (base.q - 1)
    mod = base.modulus
    candidates = [0] + [big.pow(gamma, step * k) for k in range(base.q - 1)]
    best = None
    for x in candidates:
        # Horner evaluation of the base modulus (prime-subfield coefficients)
        acc = 0
        for c in reversed(mod):
            acc = big.add(big.mul(acc, x), c % big.p)
        if acc == 0 and (best is None or x < best):
            best = x
    if best is None:
        raise RuntimeError("base modulus has no root in the extension")
    return best


def find_primitive_element(ctx):
    return ctx.primitive_element()


def element_order(ctx, a):
    return ctx.element_order(a)


def inv(ctx, a):
    return ctx.inv(a)


def nth_root_of_unity(ctx, n):
    """The canonical primitive n-th root of unity gamma^((q-1)/n)."""
    if n < 1 or (ctx.q - 1) % n != 0:
        raise NotCompatible(f"{n} does not divide q-1 = {ctx.q - 1}")
    return ctx.pow(ctx.primitive_element(), (ctx.q - 1) // n)


def parse_field(literal):
    """Field literal: "5" for F_5, "2^3" for F_8."""
    s = str(literal).strip()
    if "^" in s:
        p_str, l_str = s.split("^", 1)
        p, l = int(p_str), int(l_str)
    else:
        p, l = int(s), 1
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p ** l > CONTEXT_LIMIT:
        raise DegreeTooLarge(f"field order {p ** l} exceeds {CONTEXT_LIMIT}")
    return _extension_field(p, l)
