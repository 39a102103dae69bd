"""Intersection numbers of the complete intersection as a cycle.

The variety X = D_1 ... D_m is expanded as a polynomial in the hyperplane
classes H_1..H_l inside the ring with relations H_k^(n_k + 1) = 0.  The
coefficients b_ij of the monomials H_i H_j^(n-1) drive everything else:
the Coxeter bilinear form and the involution matrices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import SubcriticalVariety
from .variety import ValidatedVariety


@dataclass(frozen=True)
class CycleClass:
    """Monomial coefficients of the cycle, keyed by exponent vectors.

    Every stored key (e_1,..,e_l) has sum(e) = m and e_k <= n_k; every
    stored coefficient is a positive integer.
    """

    l: int
    m: int
    coeffs: dict[tuple[int, ...], int]

    def coefficient(self, exponents) -> int:
        return self.coeffs.get(tuple(exponents), 0)

    def __str__(self) -> str:
        """Human-readable polynomial, exponent-lexicographic order."""
        terms = []
        for expo in sorted(self.coeffs):
            parts = []
            for k, e in enumerate(expo, start=1):
                if e == 1:
                    parts.append(f"H{k}")
                elif e > 1:
                    parts.append(f"H{k}^{e}")
            coeff = self.coeffs[expo]
            mono = "*".join(parts) if parts else "1"
            terms.append(f"{coeff}*{mono}" if coeff != 1 else mono)
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        """Coefficient map as JSON: {"e1,e2,..": coefficient}."""
        return json.dumps(
            {",".join(map(str, expo)): c for expo, c in sorted(self.coeffs.items())},
            sort_keys=True,
        )


def cycle_class(v: ValidatedVariety) -> CycleClass:
    """Expand prod_i (sum_k a_ik H_k), truncating e_k > n_k as it goes."""
    factors = v.spec.factors
    l = v.spec.l
    acc: dict[tuple[int, ...], int] = {(0,) * l: 1}
    for row in v.spec.degrees:
        nxt: dict[tuple[int, ...], int] = {}
        for expo, coeff in acc.items():
            for k in range(l):
                if expo[k] + 1 > factors[k]:
                    continue
                new = expo[:k] + (expo[k] + 1,) + expo[k + 1 :]
                nxt[new] = nxt.get(new, 0) + coeff * row[k]
        acc = nxt
    return CycleClass(l=l, m=v.spec.m, coeffs=acc)


def _require_critical(v: ValidatedVariety, what: str):
    if v.codim != v.n:
        raise SubcriticalVariety(
            f"{what} requires codim = n; this variety has "
            f"codim {v.codim} < n = {v.n}"
        )


def b_coefficient(c: CycleClass, v: ValidatedVariety, i: int, j: int) -> int:
    """Raw coefficient of H_i H_j^(n-1) in the cycle (1-based i != j)."""
    if i == j:
        raise ValueError(f"b_ij needs i != j, got i = j = {i}")
    _require_critical(v, "b_coefficient")
    expo = [0] * c.l
    expo[i - 1] += 1
    expo[j - 1] += v.n - 1
    return c.coefficient(expo)


def pair_b_closed_form(n: int, same_carrier: bool) -> int:
    """b_ij for i,j in J: 2n when both 2s sit in the same divisor, else 2n+1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 2 * n if same_carrier else 2 * n + 1


@dataclass(frozen=True)
class BMatrixData:
    """The b-values feeding the Gram matrix and the involution columns.

    Stored pairs are exactly those with i in J or j in J.  For j in J the
    value is the raw coefficient of H_i H_j^(n-1); for j outside J (so
    i in J) the stored value is b_ji, the one the Gram matrix consumes.
    Pairs with neither index in J are never used and not computed.
    """

    J: tuple[int, ...]
    b: dict[tuple[int, int], int]

    def get(self, i: int, j: int) -> int:
        return self.b[(i, j)]


def b_matrix(v: ValidatedVariety) -> BMatrixData:
    """All b-values with an index in J, from the cycle expansion.

    Asserts the closed-form values 2n / 2n+1 for pairs inside J.
    """
    _require_critical(v, "b_matrix")
    c = cycle_class(v)
    J = set(v.J)
    carrier = v.carrier2
    b: dict[tuple[int, int], int] = {}
    for j in range(1, v.spec.l + 1):
        for i in range(1, v.spec.l + 1):
            if i == j or (i not in J and j not in J):
                continue
            if j in J:
                val = b_coefficient(c, v, i, j)
                if i in J:
                    expected = pair_b_closed_form(v.n, carrier[i] == carrier[j])
                    assert val == expected, (
                        f"b_{i}{j} = {val} disagrees with closed form {expected}"
                    )
            else:
                val = b_coefficient(c, v, j, i)
            b[(i, j)] = val
    return BMatrixData(J=v.J, b=b)
