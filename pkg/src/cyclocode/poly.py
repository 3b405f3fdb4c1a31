"""Dense univariate polynomials over a FieldCtx.

Coefficients are stored ascending as field-element encodings (ints), with no
trailing zeros; the zero polynomial is the empty tuple.  All operations are
schoolbook and exact -- lengths here stay in the hundreds.
"""

from .errors import (
    ContextMismatch,
    DivisionByZero,
    OrderSearchTooLarge,
    UnitPolynomial,
    ZeroPolynomial,
)

# poly_order gives up after this many incremental steps.
ORDER_SCAN_LIMIT = 1 << 24


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        # normalize: reduce prime-field ints given as plain ints, strip zeros
        if ctx.l == 1:
            cs = [c % ctx.p for c in coeffs]
        else:
            cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [])

    @classmethod
    def one(cls, ctx):
        return cls(ctx, [1])

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [0, 1])

    @classmethod
    def x_pow(cls, ctx, k):
        return cls(ctx, [0] * k + [1])

    @classmethod
    def x_n_minus_1(cls, ctx, n):
        return cls(ctx, [ctx.neg(1)] + [0] * (n - 1) + [1])

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial (callers must check is_zero)."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatch("polynomials over different fields")

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"Poly({self.ctx!r}, {list(self.coeffs)})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly(ctx, out)

    def __neg__(self):
        ctx = self.ctx
        return Poly(ctx, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(ctx)
        if ctx.l == 1:
            p = ctx.p
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] = (out[i + j] + x * y) % p
        else:
            out = [0] * (len(a) + len(b) - 1)
            add, mul = ctx.add, ctx.mul
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly(ctx, out)

    def scale(self, c):
        ctx = self.ctx
        return Poly(ctx, [ctx.mul(c, x) for x in self.coeffs])

    def monic(self):
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(self.ctx.inv(lead))

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        ctx = self.ctx
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = ctx.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1 - db, -1, -1):
            c = rem[i + db]
            if c == 0:
                continue
            f = ctx.mul(c, inv_lead)
            quot[i] = f
            for j, bc in enumerate(other.coeffs):
                rem[i + j] = ctx.sub(rem[i + j], ctx.mul(f, bc))
        return Poly(ctx, quot), Poly(ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def pow_mod(self, e, mod):
        """self^e modulo mod, by square-and-multiply."""
        result = Poly.one(self.ctx)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    # -- evaluation ----------------------------------------------------------

    def eval(self, a, ext=None):
        """Horner evaluation at a field element.

        With ext (an Extension whose base is this polynomial's field), a is
        an element of the big field and coefficients are embedded first.
        """
        if ext is None:
            ctx = self.ctx
            coeffs = self.coeffs
        else:
            if ext.base != self.ctx:
                raise ContextMismatch("extension does not embed this field")
            ctx = ext.field
            coeffs = [ext.embed(c) for c in self.coeffs]
        acc = 0
        for c in reversed(coeffs):
            acc = ctx.add(ctx.mul(acc, a), c)
        return acc


def reciprocal(f):
    """x^deg(f) * f(1/x): reversed coefficients, trailing zeros stripped."""
    if f.is_zero:
        raise ZeroPolynomial("zero polynomial has no reciprocal")
    return Poly(f.ctx, list(reversed(f.coeffs)))


def is_irreducible(f):
    """Rabin irreducibility test over the polynomial's field."""
    if f.is_zero or f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    ctx = f.ctx
    q = ctx.q
    m = f.degree
    x = Poly.x(ctx)
    if m == 1:
        return True
    # x^(q^m) == x (mod f)
    if x.pow_mod(q ** m, f) != x % f:
        return False
    primes = {r for r in range(2, m + 1) if m % r == 0 and _is_prime_small(r)}
    for r in primes:
        h = x.pow_mod(q ** (m // r), f) - (x % f)
        if h.gcd(f).degree != 0:
            return False
    return True


def _is_prime_small(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def poly_order(f):
    """Least e >= 1 with f | x^e - 1, after stripping any power of x.

    Found by incrementally multiplying the residue of x modulo f; the first
    e with x^e = 1 is the order.  The order is bounded by q^deg(f) - 1.
    """
    if f.is_zero:
        raise ZeroPolynomial("zero polynomial has no order")
    # strip x^r so that f(0) != 0
    r = 0
    while f.coeffs[r] == 0:
        r += 1
    if r:
        f = Poly(f.ctx, f.coeffs[r:])
    if f.degree == 0:
        raise UnitPolynomial("constants have no order")
    f = f.monic()
    bound = min(f.ctx.q ** f.degree - 1, ORDER_SCAN_LIMIT)
    x = Poly.x(f.ctx)
    residue = x % f
    e = 1
    one = Poly.one(f.ctx)
    while residue != one:
        residue = (residue * x) % f
        e += 1
        if e > bound:
            raise OrderSearchTooLarge(
                f"order of degree-{f.degree} polynomial exceeds scan bound {bound}"
            )
    return e


def order_divides(f, c):
    """True iff f | x^c - 1; agrees with poly_order(f) | c."""
    if f.is_zero or f.constant_term() == 0:
        raise ZeroPolynomial("requires f(0) != 0")
    if c < 1:
        return False
    xc = Poly.x(f.ctx).pow_mod(c, f.monic())
    return xc == Poly.one(f.ctx) % f.monic()
