"""Independent brute-force oracles used to cross-check the library kernels.

Everything here enumerates codewords the slow, obvious way (itertools over
message tuples, scalar field ops) so it shares no code path with the
Gray/chunked kernels it validates.
"""

import itertools

from cyclocode.codes import _as_matrix


def all_codewords(obj):
    m = _as_matrix(obj)
    ctx = m.ctx
    rows = [[int(c) for c in r] for r in m.rows]
    n = m.n
    for msg in itertools.product(range(ctx.q), repeat=len(rows)):
        word = [0] * n
        for coef, row in zip(msg, rows):
            if coef:
                for j, c in enumerate(row):
                    word[j] = ctx.add(word[j], ctx.mul(coef, c))
        yield word


def naive_min_distance(obj):
    best = None
    for word in all_codewords(obj):
        w = sum(1 for c in word if c)
        if w and (best is None or w < best):
            best = w
    return best


def naive_weight_distribution(obj):
    m = _as_matrix(obj)
    counts = [0] * (m.n + 1)
    for word in all_codewords(obj):
        counts[sum(1 for c in word if c)] += 1
    return counts
