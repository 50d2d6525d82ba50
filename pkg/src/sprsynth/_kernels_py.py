"""Pure-Python integer-polynomial kernels.

These are the hot inner loops behind every stability and positivity verdict:
Routh tables, Sturm chains and sign-variation queries, all on integer
coefficient lists in ascending order (index k holds the coefficient of x^k).
Rational inputs are scaled to integers by the callers; every routine here is
exact.

A compiled twin of this module lives in ``_kernels_cy.pyx``; keep the two in
lockstep (the test suite cross-checks them).
"""

from math import gcd

BACKEND_NAME = "python"


def normalized(coeffs):
    """Drop trailing zero coefficients; the zero polynomial becomes []."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def primitive(coeffs):
    """Divide by the positive integer content, keeping signs."""
    g = 0
    for x in coeffs:
        g = gcd(g, x if x >= 0 else -x)
        if g == 1:
            return list(coeffs)
    if g <= 1:
        return list(coeffs)
    return [x // g for x in coeffs]


def derivative(coeffs):
    return [k * coeffs[k] for k in range(1, len(coeffs))]


def sign_at(coeffs, num, den):
    """Sign of p(num/den) for den > 0, via the homogenized integer value."""
    deg = len(coeffs) - 1
    acc = coeffs[deg]
    dp = 1
    for k in range(deg - 1, -1, -1):
        dp *= den
        acc = acc * num + coeffs[k] * dp
    return (acc > 0) - (acc < 0)


def _neg_scaled_remainder(f, g):
    """A positive-scalar multiple of -(f mod g), in integer arithmetic.

    Each reduction step multiplies the running remainder by |lc(g)|, so the
    result differs from the exact rational remainder only by a positive
    factor; sign sequences (all that Sturm chains need) are unaffected.
    """
    r = list(f)
    lg = g[-1]
    alg = lg if lg > 0 else -lg
    slg = 1 if lg > 0 else -1
    dg = len(g) - 1
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg or not r:
            break
        lr = r[-1]
        shift = len(r) - 1 - dg
        nr = [alg * x for x in r]
        for i in range(dg + 1):
            nr[i + shift] -= slg * lr * g[i]
        r = nr
    return [-x for x in r]


def sturm_chain(coeffs):
    """Sturm chain of p: [p, p', -rem(...), ...], content-normalized.

    Every element is a positive multiple of the classical rational chain
    element, so sign variations at any point match the classical chain.
    """
    p0 = primitive(normalized(coeffs))
    if not p0:
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p0]
    p1 = primitive(normalized(derivative(p0)))
    if p1:
        chain.append(p1)
        while len(chain[-1]) > 1:
            r = normalized(_neg_scaled_remainder(chain[-2], chain[-1]))
            if not r:
                break
            chain.append(primitive(r))
    return chain


def _variations(signs):
    changes = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            changes += 1
        prev = s
    return changes


def variations_at(chain, num, den):
    return _variations([sign_at(p, num, den) for p in chain])


def variations_at_zero(chain):
    return _variations([(p[0] > 0) - (p[0] < 0) for p in chain])


def variations_at_infinity(chain):
    return _variations([(p[-1] > 0) - (p[-1] < 0) for p in chain])


def count_roots_halfopen(chain, a_num, a_den, b_num, b_den):
    """Number of distinct real roots in (a, b]; requires p(a) != 0."""
    return variations_at(chain, a_num, a_den) - variations_at(chain, b_num, b_den)


def count_roots_above(chain, a_num, a_den):
    """Number of distinct real roots in (a, +inf); requires p(a) != 0."""
    return variations_at(chain, a_num, a_den) - variations_at_infinity(chain)


def positive_on_nonneg(coeffs):
    """Exact decision of p(t) > 0 for all t in [0, +inf).

    Sign checks at t = 0 and t = +inf, then a Sturm count certifying that no
    real root (of any multiplicity) lies in (0, +inf).
    """
    c = normalized(coeffs)
    if not c:
        raise ValueError("positivity of the zero polynomial is undefined")
    if c[0] <= 0:
        return False
    if len(c) == 1:
        return True
    if c[-1] < 0:
        return False
    chain = sturm_chain(c)
    return variations_at_zero(chain) == variations_at_infinity(chain)


def is_hurwitz(coeffs):
    """Exact Routh test: all roots in the open left half-plane.

    Rows are scaled by positive pivots and content-normalized, which keeps
    every entry an integer without changing first-column signs. Any
    nonpositive pivot (including an exact zero from a degenerate row) means
    not Hurwitz.
    """
    c = normalized(coeffs)
    n = len(c) - 1
    if n < 1:
        raise ValueError("Hurwitz stability needs degree >= 1")
    if c[-1] < 0:
        c = [-x for x in c]
    desc = c[::-1]
    width = (n + 2) // 2
    row_prev = desc[0::2]
    row_cur = desc[1::2]
    row_cur.extend([0] * (width - len(row_cur)))
    for _ in range(n - 1):
        if row_cur[0] <= 0:
            return False
        nxt = [
            row_cur[0] * row_prev[j + 1] - row_prev[0] * row_cur[j + 1]
            for j in range(width - 1)
        ]
        nxt.append(0)
        row_prev, row_cur = row_cur, primitive(nxt)
    return row_cur[0] > 0
