"""Cyclic codes, duals, canonical matrix forms and exhaustive distances.

Matrices hold field-element encodings in int64 numpy arrays; row reduction
runs through the field context so it works for prime and extension fields
alike.  The minimum-distance kernel has two paths: a Gray-code bitset walk
for F_2 (one XOR and popcount per codeword) and a chunked matrix-multiply
enumeration over the prime subfield for everything else.
"""

import math
import time
from dataclasses import dataclass

import numpy as np

from .cyclotomic import cyclotomic_poly, profile
from .errors import (
    BudgetExceeded,
    CharacteristicDividesN,
    DegreeTooLarge,
    FieldMismatch,
    LengthMismatch,
    NotADivisor,
    NotMonic,
    PrimeLength,
)
from .field import ROOT_SEARCH_LIMIT, make_extension, nth_root_of_unity
from .poly import Poly, reciprocal

DEFAULT_BUDGET = 1 << 24
_CHUNK = 1 << 15


class GenMatrix:
    """Rows spanning a linear code; rows are encodings over a FieldCtx."""

    def __init__(self, ctx, rows, n=None, canonical=False):
        arr = np.array(rows, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, n if n is not None else 0)
        if arr.ndim != 2:
            raise ValueError("rows must form a 2-D array")
        self.ctx = ctx
        self.rows = arr
        self.canonical = canonical

    @property
    def n(self):
        return self.rows.shape[1]

    @property
    def num_rows(self):
        return self.rows.shape[0]

    def rref(self):
        if self.canonical:
            return self
        ctx = self.ctx
        rows = [list(map(int, r)) for r in self.rows]
        ncols = self.n
        pivot_row = 0
        for col in range(ncols):
            pivot = next(
                (i for i in range(pivot_row, len(rows)) if rows[i][col] != 0), None
            )
            if pivot is None:
                continue
            rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
            row = rows[pivot_row]
            inv = ctx.inv(row[col])
            if inv != 1:
                rows[pivot_row] = row = [ctx.mul(inv, c) for c in row]
            for i, other in enumerate(rows):
                if i != pivot_row and other[col] != 0:
                    f = ctx.neg(other[col])
                    rows[i] = [
                        ctx.add(oc, ctx.mul(f, rc)) for oc, rc in zip(other, row)
                    ]
            pivot_row += 1
            if pivot_row == len(rows):
                break
        reduced = [r for r in rows[:pivot_row]]
        return GenMatrix(ctx, reduced, n=ncols, canonical=True)

    @property
    def rank(self):
        return self.rref().num_rows

    def __eq__(self, other):
        return (
            isinstance(other, GenMatrix)
            and self.ctx == other.ctx
            and np.array_equal(self.rows, other.rows)
        )

    def __repr__(self):
        return f"GenMatrix({self.ctx!r}, {self.num_rows}x{self.n})"


def rref(m):
    return m.rref()


@dataclass
class DistanceReport:
    d: int
    codewords_enumerated: int
    method: str
    elapsed: float

    def to_dict(self):
        return {
            "d": self.d,
            "codewords_enumerated": self.codewords_enumerated,
            "method": self.method,
            "elapsed": self.elapsed,
        }


class CyclicCode:
    """A cyclic code of length n given by a monic generator dividing x^n - 1."""

    def __init__(self, n, ctx, g, h, label=""):
        self.n = n
        self.ctx = ctx
        self.g = g
        self.h = h
        self.k = n - g.degree
        self.label = label

    def generator_matrix(self):
        gc = list(self.g.coeffs)
        rows = [
            [0] * i + gc + [0] * (self.n - len(gc) - i) for i in range(self.k)
        ]
        return GenMatrix(self.ctx, rows, n=self.n)

    def params(self):
        return (self.n, self.k)

    def to_dict(self):
        return {
            "field": self.ctx.literal(),
            "n": self.n,
            "generator": list(self.g.coeffs),
            "k": self.k,
            "label": self.label,
        }

    def __repr__(self):
        return f"CyclicCode([{self.n},{self.k}] over {self.ctx!r}, {self.label!r})"


def from_generator(g, n, label=""):
    """Cyclic code of length n generated by monic g | x^n - 1."""
    if g.is_zero or not g.is_monic:
        raise NotMonic("generator must be monic and nonzero")
    xn1 = Poly.x_n_minus_1(g.ctx, n)
    h, r = divmod(xn1, g)
    if not r.is_zero:
        raise NotADivisor(f"generator does not divide x^{n} - 1")
    return CyclicCode(n, g.ctx, g, h, label=label)


def build_Cn(n, ctx):
    """The code generated by Q_n; an [n, n - phi(n)] code."""
    if n <= 1:
        raise ValueError("build_Cn needs n > 1")
    return from_generator(cyclotomic_poly(n, ctx), n, label="C_n")


def build_Cn1(n, ctx):
    """The code generated by Q_n * Q_1; defined for composite n only."""
    if n <= 1:
        raise ValueError("build_Cn1 needs n > 1")
    if profile(n).omega == 1 and profile(n).factorization[0][1] == 1:
        raise PrimeLength(f"n = {n} is prime, the code would be the zero code")
    g = cyclotomic_poly(n, ctx) * cyclotomic_poly(1, ctx)
    return from_generator(g, n, label="C_{n,1}")


def build_repetition(n, ctx):
    """The [n, 1, n] repetition code, generated by 1 + x + ... + x^(n-1)."""
    if n < 1:
        raise ValueError("repetition code needs n >= 1")
    return from_generator(Poly(ctx, [1] * n), n, label="R_n")


def dual(c):
    """Euclidean dual: generated by the monic normalization of h^*."""
    gd = reciprocal(c.h).monic()
    return from_generator(gd, c.n, label=c.label + "^perp")


def _as_matrix(obj):
    if isinstance(obj, CyclicCode):
        return obj.generator_matrix()
    return obj


def same_code(a, b):
    """Row-space equality via identical reduced row-echelon forms."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.ctx != mb.ctx:
        raise FieldMismatch("codes over different fields")
    if ma.n != mb.n:
        raise LengthMismatch(f"lengths {ma.n} and {mb.n} differ")
    ra, rb = ma.rref(), mb.rref()
    return np.array_equal(ra.rows, rb.rows)


def sum_codes(a, b):
    """RREF basis of the sum of two codes of equal length."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.ctx != mb.ctx:
        raise FieldMismatch("codes over different fields")
    if ma.n != mb.n:
        raise LengthMismatch(f"lengths {ma.n} and {mb.n} differ")
    stacked = np.vstack([ma.rows, mb.rows])
    return GenMatrix(ma.ctx, stacked, n=ma.n).rref()


def zero_sum_subcode(c):
    """Basis of the codewords whose coordinates sum to zero."""
    m = _as_matrix(c).rref()
    ctx = m.ctx
    rows = [list(map(int, r)) for r in m.rows]
    sums = [0] * len(rows)
    for i, row in enumerate(rows):
        s = 0
        for x in row:
            s = ctx.add(s, x)
        sums[i] = s
    pivot = next((i for i, s in enumerate(sums) if s != 0), None)
    if pivot is None:
        return m
    out = []
    prow = rows[pivot]
    inv = ctx.inv(sums[pivot])
    for i, row in enumerate(rows):
        if i == pivot:
            continue
        f = ctx.neg(ctx.mul(sums[i], inv))
        out.append([ctx.add(x, ctx.mul(f, y)) for x, y in zip(row, prow)])
    return GenMatrix(ctx, out, n=m.n).rref()


def direct_sum(a, b):
    """Block-diagonal generator of the direct sum of two codes."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.ctx != mb.ctx:
        raise FieldMismatch("codes over different fields")
    top = np.hstack([ma.rows, np.zeros((ma.num_rows, mb.n), dtype=np.int64)])
    bot = np.hstack([np.zeros((mb.num_rows, ma.n), dtype=np.int64), mb.rows])
    return GenMatrix(ma.ctx, np.vstack([top, bot]), n=ma.n + mb.n)


# -- exhaustive enumeration kernels -------------------------------------------

def _gray_rows_f2(m):
    rows = []
    for r in m.rows:
        v = 0
        for j, c in enumerate(map(int, r)):
            if c:
                v |= 1 << j
        rows.append(v)
    return rows


def _min_weight_f2(m):
    """Gray-code walk: each codeword is one XOR plus a popcount."""
    rows = _gray_rows_f2(m)
    k = len(rows)
    best = m.n + 1
    cw = 0
    for i in range(1, 1 << k):
        cw ^= rows[(i & -i).bit_length() - 1]
        w = cw.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


def _weight_counts_f2(m):
    rows = _gray_rows_f2(m)
    k = len(rows)
    counts = [0] * (m.n + 1)
    counts[0] = 1
    cw = 0
    for i in range(1, 1 << k):
        cw ^= rows[(i & -i).bit_length() - 1]
        counts[cw.bit_count()] += 1
    return counts


def _prime_field_expansion(m):
    """Expand a k x n matrix over F_{p^l} to a (k*l) x (n*l) matrix over F_p."""
    ctx = m.ctx
    p, l, n = ctx.p, ctx.l, m.n
    k = m.num_rows
    out = np.zeros((k * l, n * l), dtype=np.float64)
    for r in range(k):
        for s in range(l):
            us = p ** s
            for j in range(n):
                prod = ctx.mul(us, int(m.rows[r, j]))
                out[r * l + s, j * l : (j + 1) * l] = ctx.decode(prod)
    return out


def _enumerate_weights(m, include_zero=False):
    """Yield numpy arrays of codeword weights, chunked over all messages.

    Enumerates the message space over the prime subfield (same codeword set
    as enumerating F_q^k); weights count nonzero F_q symbols.
    """
    ctx = m.ctx
    p, l, n = ctx.p, ctx.l, m.n
    gp = _prime_field_expansion(m)
    bigk = gp.shape[0]
    total = p ** bigk
    place = np.int64(p) ** np.arange(bigk, dtype=np.int64)
    start = 0 if include_zero else 1
    for lo in range(start, total, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        digits = (idx[:, None] // place) % p
        prod = digits.astype(np.float64) @ gp
        sym = np.mod(prod, p).reshape(len(idx), n, l)
        yield np.count_nonzero(sym.any(axis=2), axis=1)


def min_distance(c, budget=DEFAULT_BUDGET):
    """Exact minimum weight by exhaustive message enumeration."""
    m = _as_matrix(c).rref()
    ctx = m.ctx
    k = m.num_rows
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    count = ctx.q ** k - 1
    if count > budget:
        raise BudgetExceeded(count, budget)
    t0 = time.perf_counter()
    if ctx.q == 2:
        best = _min_weight_f2(m)
    else:
        best = m.n + 1
        for weights in _enumerate_weights(m):
            w = int(weights.min())
            if w < best:
                best = w
    return DistanceReport(
        d=best,
        codewords_enumerated=count,
        method="exhaustive-messages",
        elapsed=time.perf_counter() - t0,
    )


def weight_distribution(c, budget=DEFAULT_BUDGET):
    """Counts A_0..A_n of codewords by weight; sums to q^k."""
    m = _as_matrix(c).rref()
    ctx = m.ctx
    k = m.num_rows
    if ctx.q ** k > budget:
        raise BudgetExceeded(ctx.q ** k, budget)
    if ctx.q == 2 and k > 0:
        return _weight_counts_f2(m)
    counts = np.zeros(m.n + 1, dtype=np.int64)
    counts[0] = 1
    if k > 0:
        for weights in _enumerate_weights(m):
            counts += np.bincount(weights, minlength=m.n + 1)
    return [int(x) for x in counts]


def zeros_and_nonzeros(c, cap=ROOT_SEARCH_LIMIT):
    """Defining set T = {i : g(zeta^i) = 0} and its complement in Z_n."""
    from .cyclotomic import multiplicative_order_mod

    n, ctx = c.n, c.ctx
    if math.gcd(n, ctx.q) != 1:
        raise CharacteristicDividesN(f"gcd({n}, {ctx.q}) != 1")
    t = multiplicative_order_mod(ctx.q, n)
    if ctx.q ** t > cap:
        raise DegreeTooLarge(f"q^t = {ctx.q ** t} exceeds the cap {cap}")
    ext = make_extension(ctx, t, cap=cap)
    big = ext.field
    zeta = nth_root_of_unity(big, n)
    zeros = []
    nonzeros = []
    for i in range(n):
        if c.g.eval(big.pow(zeta, i), ext=ext) == 0:
            zeros.append(i)
        else:
            nonzeros.append(i)
    return tuple(zeros), tuple(nonzeros)
