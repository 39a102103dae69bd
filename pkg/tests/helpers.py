"""Shared test utilities: seeded variety generator and independent oracles.

The oracles here deliberately avoid the code paths they check: the cycle
oracle multiplies out assignments one factor at a time, and the signature
oracle counts real roots of the characteristic polynomial with Sturm
chains instead of running any congruence diagonalization.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from movcone.coxeter import GramMatrix
from movcone.variety import ValidatedVariety, VarietySpec, validate


def random_variety(
    rng,
    max_l: int = 5,
    min_n: int = 1,
    max_m: int = 3,
    min_j: int = 1,
) -> ValidatedVariety:
    """Seeded random variety with codim = n (so J carries involutions)."""
    while True:
        l = rng.randint(2, max_l)
        m = rng.randint(min_n, max_m)
        dims = [m + rng.choice([0, 1, 2]) for _ in range(l)]
        j_count = min(l, max(min_j, 1))
        for pos in rng.sample(range(l), j_count):
            dims[pos] = m
        if sum(dims) < 4 or (l == 2 and dims == [2, 2]):
            continue
        degrees = []
        for _ in range(m):
            degrees.append([1] * l)
        for k in range(l):
            for _ in range(dims[k] + 1 - m):
                degrees[rng.randrange(m)][k] += 1
        return validate(
            VarietySpec(tuple(dims), tuple(tuple(row) for row in degrees))
        )


def brute_cycle_coefficients(v: ValidatedVariety) -> dict[tuple[int, ...], int]:
    """Cycle coefficients by enumerating one variable choice per factor."""
    l, m = v.spec.l, v.spec.m
    out: dict[tuple[int, ...], int] = {}
    for choice in itertools.product(range(l), repeat=m):
        coeff = 1
        expo = [0] * l
        for row, k in zip(v.spec.degrees, choice):
            coeff *= row[k]
            expo[k] += 1
        if any(e > nk for e, nk in zip(expo, v.spec.factors)):
            continue
        key = tuple(expo)
        out[key] = out.get(key, 0) + coeff
    return out


# --- exact polynomial arithmetic (ascending coefficient tuples) -----------


def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly_trim(
        tuple(
            (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
            for i in range(n)
        )
    )


def poly_neg(p):
    return tuple(-c for c in p)


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * Fraction(b)
    return poly_trim(tuple(out))


def poly_divmod(p, q):
    p = [Fraction(c) for c in p]
    q = [Fraction(c) for c in q]
    if not poly_trim(q):
        raise ZeroDivisionError
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while poly_trim(p) and len(poly_trim(p)) >= len(q):
        p = list(poly_trim(p))
        shift = len(p) - len(q)
        factor = p[-1] / q[-1]
        quot[shift] = factor
        for i, c in enumerate(q):
            p[shift + i] -= factor * c
    return poly_trim(tuple(quot)), poly_trim(tuple(p))


def poly_derivative(p):
    return poly_trim(tuple(Fraction(c) * i for i, c in enumerate(p))[1:])


def poly_monic(p):
    p = poly_trim(p)
    if not p:
        return p
    lead = Fraction(p[-1])
    return tuple(Fraction(c) / lead for c in p)


def poly_gcd(p, q):
    p, q = poly_trim(p), poly_trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_eval(p, x):
    x = Fraction(x)
    out = Fraction(0)
    for c in reversed(p):
        out = out * x + Fraction(c)
    return out


def _poly_matrix_det(rows):
    """Determinant of a matrix of polynomials by cofactor expansion."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    det = ()
    for r in range(size):
        entry = rows[r][0]
        if not poly_trim(entry):
            continue
        minor = [
            [rows[i][j] for j in range(1, size)] for i in range(size) if i != r
        ]
        term = poly_mul(entry, _poly_matrix_det(minor))
        det = poly_add(det, term if r % 2 == 0 else poly_neg(term))
    return det


def char_poly_oracle(entries) -> tuple:
    """det(xI - M) via cofactor expansion over polynomial entries."""
    size = len(entries)
    rows = [
        [
            poly_trim((Fraction(-entries[i][j]), Fraction(1 if i == j else 0)))
            for j in range(size)
        ]
        for i in range(size)
    ]
    return _poly_matrix_det(rows)


def _sturm_chain(p):
    chain = [poly_trim(p), poly_derivative(p)]
    while poly_trim(chain[-1]):
        rem = poly_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(poly_neg(rem))
    return [c for c in chain if poly_trim(c)]


def _sign_changes(chain, x):
    signs = []
    for p in chain:
        val = poly_eval(p, x)
        if val:
            signs.append(1 if val > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _distinct_roots_in(p, a, b):
    """Number of distinct real roots of square-free p in (a, b]."""
    chain = _sturm_chain(p)
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def _squarefree_factors(p):
    """Yun decomposition: list of (factor, multiplicity)."""
    p = poly_monic(p)
    dp = poly_derivative(p)
    a = poly_gcd(p, dp)
    b = poly_divmod(p, a)[0]
    c = poly_divmod(dp, a)[0]
    d = poly_add(c, poly_neg(poly_derivative(b)))
    out = []
    i = 1
    while len(poly_trim(b)) > 1:
        a_i = poly_gcd(b, d)
        if len(poly_trim(a_i)) > 1:
            out.append((a_i, i))
        b = poly_divmod(b, a_i)[0]
        c = poly_divmod(d, a_i)[0]
        d = poly_add(c, poly_neg(poly_derivative(b)))
        i += 1
    return out


def sturm_signature(g: GramMatrix) -> tuple[int, int, int]:
    """Inertia of a symmetric rational matrix by root counting.

    Real-root signs of the characteristic polynomial, counted with
    multiplicity through the square-free decomposition; fully independent
    of the congruence-diagonalization path.
    """
    p = char_poly_oracle(g.entries)
    zeros = next(i for i, c in enumerate(p) if c != 0)
    reduced = poly_trim(p[zeros:])
    if len(reduced) <= 1:
        return (0, 0, g.size)
    bound = 1 + max(abs(Fraction(c)) for c in reduced) / abs(Fraction(reduced[-1]))
    pos = neg = 0
    for factor, mult in _squarefree_factors(reduced):
        pos += mult * _distinct_roots_in(factor, 0, bound)
        neg += mult * _distinct_roots_in(factor, -bound, 0)
    assert pos + neg + zeros == g.size
    return (pos, neg, zeros)


def random_unimodular(rng, size: int):
    """Product of elementary shears and sign flips; det = +-1."""
    mat = [[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)]
    for _ in range(3 * size):
        i, j = rng.randrange(size), rng.randrange(size)
        if i == j:
            continue
        k = rng.randint(-3, 3)
        for t in range(size):
            mat[i][t] += k * mat[j][t]
    i = rng.randrange(size)
    for t in range(size):
        mat[i][t] = -mat[i][t]
    return tuple(tuple(row) for row in mat)


def congruent(g: GramMatrix, s) -> GramMatrix:
    """S^T g S over exact rationals."""
    size = g.size
    gs = [
        [sum(g.entries[i][k] * s[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]
    sgs = [
        [sum(s[k][i] * gs[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]
    return GramMatrix(tuple(tuple(row) for row in sgs))
