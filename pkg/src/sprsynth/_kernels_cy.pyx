# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``: integer-polynomial kernels.

Coefficients are arbitrary-precision Python ints (they grow well past 64
bits in bisection probes), so the win over the pure-Python module comes from
typed loop counters and the removal of interpreter dispatch, not from C
integer arithmetic. Keep semantics in lockstep with ``_kernels_py``.
"""

from math import gcd

BACKEND_NAME = "cython"


cpdef list normalized(coeffs):
    cdef list c = list(coeffs)
    while c and c[len(c) - 1] == 0:
        c.pop()
    return c


cpdef list primitive(coeffs):
    cdef object g = 0
    cdef object x
    for x in coeffs:
        g = gcd(g, x if x >= 0 else -x)
        if g == 1:
            return list(coeffs)
    if g <= 1:
        return list(coeffs)
    return [x // g for x in coeffs]


cpdef list derivative(coeffs):
    cdef Py_ssize_t k
    cdef Py_ssize_t n = len(coeffs)
    return [k * coeffs[k] for k in range(1, n)]


cpdef int sign_at(list coeffs, object num, object den):
    cdef Py_ssize_t deg = len(coeffs) - 1
    cdef Py_ssize_t k
    cdef object acc = coeffs[deg]
    cdef object dp = 1
    for k in range(deg - 1, -1, -1):
        dp = dp * den
        acc = acc * num + coeffs[k] * dp
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


cdef list _neg_scaled_remainder(list f, list g):
    cdef list r = list(f)
    cdef list nr
    cdef object lg = g[len(g) - 1]
    cdef object alg = lg if lg > 0 else -lg
    cdef int slg = 1 if lg > 0 else -1
    cdef Py_ssize_t dg = len(g) - 1
    cdef Py_ssize_t shift, i
    cdef object lr
    while True:
        while r and r[len(r) - 1] == 0:
            r.pop()
        if not r or len(r) - 1 < dg:
            break
        lr = r[len(r) - 1]
        shift = len(r) - 1 - dg
        nr = [alg * x for x in r]
        if slg > 0:
            for i in range(dg + 1):
                nr[i + shift] = nr[i + shift] - lr * g[i]
        else:
            for i in range(dg + 1):
                nr[i + shift] = nr[i + shift] + lr * g[i]
        r = nr
    return [-x for x in r]


cpdef list sturm_chain(coeffs):
    cdef list p0 = primitive(normalized(coeffs))
    if not p0:
        raise ValueError("Sturm chain of the zero polynomial")
    cdef list chain = [p0]
    cdef list p1 = primitive(normalized(derivative(p0)))
    cdef list r
    if p1:
        chain.append(p1)
        while len(<list>chain[len(chain) - 1]) > 1:
            r = normalized(
                _neg_scaled_remainder(chain[len(chain) - 2], chain[len(chain) - 1])
            )
            if not r:
                break
            chain.append(primitive(r))
    return chain


cdef int _variations(list signs):
    cdef int changes = 0
    cdef int prev = 0
    cdef int s
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            changes += 1
        prev = s
    return changes


cpdef int variations_at(list chain, object num, object den):
    cdef list signs = [sign_at(p, num, den) for p in chain]
    return _variations(signs)


cpdef int variations_at_zero(list chain):
    cdef list signs = []
    cdef list p
    cdef object c0
    for p in chain:
        c0 = p[0]
        signs.append(1 if c0 > 0 else (-1 if c0 < 0 else 0))
    return _variations(signs)


cpdef int variations_at_infinity(list chain):
    cdef list signs = []
    cdef list p
    cdef object lc
    for p in chain:
        lc = p[len(p) - 1]
        signs.append(1 if lc > 0 else (-1 if lc < 0 else 0))
    return _variations(signs)


cpdef int count_roots_halfopen(list chain, object a_num, object a_den,
                               object b_num, object b_den):
    return variations_at(chain, a_num, a_den) - variations_at(chain, b_num, b_den)


cpdef int count_roots_above(list chain, object a_num, object a_den):
    return variations_at(chain, a_num, a_den) - variations_at_infinity(chain)


cpdef bint positive_on_nonneg(coeffs):
    cdef list c = normalized(coeffs)
    if not c:
        raise ValueError("positivity of the zero polynomial is undefined")
    if c[0] <= 0:
        return False
    if len(c) == 1:
        return True
    if c[len(c) - 1] < 0:
        return False
    cdef list chain = sturm_chain(c)
    return variations_at_zero(chain) == variations_at_infinity(chain)


cpdef bint is_hurwitz(coeffs):
    cdef list c = normalized(coeffs)
    cdef Py_ssize_t n = len(c) - 1
    if n < 1:
        raise ValueError("Hurwitz stability needs degree >= 1")
    if c[n] < 0:
        c = [-x for x in c]
    cdef list desc = c[::-1]
    cdef Py_ssize_t width = (n + 2) // 2
    cdef list row_prev = desc[0::2]
    cdef list row_cur = desc[1::2]
    row_cur.extend([0] * (width - len(row_cur)))
    cdef list nxt
    cdef Py_ssize_t i, j
    for i in range(n - 1):
        if row_cur[0] <= 0:
            return False
        nxt = [
            row_cur[0] * row_prev[j + 1] - row_prev[0] * row_cur[j + 1]
            for j in range(width - 1)
        ]
        nxt.append(0)
        row_prev = row_cur
        row_cur = primitive(nxt)
    return row_cur[0] > 0
