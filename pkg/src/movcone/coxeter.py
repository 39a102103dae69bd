"""Reflection representation on N^1(X): Gram matrix, involutions, spectra.

The birational involutions iota_j (j in J) act on divisor classes in the
basis h_1..h_l by integer matrices fixing e_k (k != j) and sending
e_j -> -e_j + sum_{i != j} b_ij e_i.  Together with the bilinear form B
they realize the group generated by the involutions as a reflection group
whose chamber geometry is computed in `movcone.cones`.

Everything in this module is exact: rational congruence for signatures,
quadratic-field arithmetic for the pair eigenpairs.  Floating point only
appears in callers that cross-check against numpy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonReducedWord, SubcriticalVariety
from .intersection import BMatrixData, b_matrix
from .quadratic import QuadraticNumber, squarefree_decompose
from .variety import ValidatedVariety

Matrix = tuple[tuple[int, ...], ...]


# --- Gram matrices -------------------------------------------------------


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix of exact rationals carrying the bilinear form."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        size = len(rows)
        for row in rows:
            if len(row) != size:
                raise ValueError("Gram matrix must be square")
        for i in range(size):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i+1},{j+1})")

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access."""
        return self.entries[i - 1][j - 1]

    def to_json(self) -> list:
        """Entries as [numerator, denominator] pairs."""
        return [[[x.numerator, x.denominator] for x in row] for row in self.entries]

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def bilinear_form(
    v: ValidatedVariety, b: BMatrixData | None = None, outside_value=None
) -> GramMatrix:
    """The l x l form B of the variety.

    Diagonal 1; entry (i,j) is -b_ij/2 when j in J, -b_ji/2 when i in J.
    When neither index is in J the entry is -`outside_value`; the default
    is the literal convention -n_l (dimension of the last factor).  Any
    choice >= 1 yields the same W_J data, since those entries survive into
    no J-restricted computation.
    """
    if v.codim != v.n:
        raise SubcriticalVariety("bilinear_form requires codim = n")
    if b is None:
        b = b_matrix(v)
    if outside_value is None:
        outside_value = Fraction(v.spec.factors[-1])
    outside_value = Fraction(outside_value)
    if outside_value < 1:
        raise ValueError(f"off-J entry must be >= 1, got {outside_value}")
    l = v.spec.l
    J = set(v.J)
    rows = []
    for i in range(1, l + 1):
        row = []
        for j in range(1, l + 1):
            if i == j:
                row.append(Fraction(1))
            elif j in J or i in J:
                # stored pairs carry b_ij for j in J and b_ji otherwise
                row.append(Fraction(-b.get(i, j), 2))
            else:
                row.append(-outside_value)
        rows.append(tuple(row))
    return GramMatrix(tuple(rows))


def restrict_to_J(g: GramMatrix, J) -> GramMatrix:
    """Principal submatrix on the 1-based index set J."""
    idx = sorted(set(J))
    if not idx:
        raise ValueError("empty index set")
    if idx[0] < 1 or idx[-1] > g.size:
        raise ValueError(f"indices {idx} out of range 1..{g.size}")
    return GramMatrix(
        tuple(tuple(g.entries[i - 1][j - 1] for j in idx) for i in idx)
    )


def partition_gram(n: int, partition) -> GramMatrix:
    """Block Gram matrix of a partition r_1 <= .. <= r_n of |J|.

    Blocks have 1 on the diagonal and -n inside; all off-block entries are
    -(2n+1)/2.  Zero-size parts are skipped.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    parts = [int(r) for r in partition if int(r) != 0]
    if any(r < 0 for r in parts):
        raise ValueError("partition parts must be nonnegative")
    size = sum(parts)
    if size < 2:
        raise ValueError(f"|J| = {size} < 2")
    block_of = []
    for k, r in enumerate(parts):
        block_of.extend([k] * r)
    off = Fraction(-(2 * n + 1), 2)
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == j:
                row.append(Fraction(1))
            elif block_of[i] == block_of[j]:
                row.append(Fraction(-n))
            else:
                row.append(off)
        rows.append(tuple(row))
    return GramMatrix(tuple(rows))


def signature(g: GramMatrix) -> tuple[int, int, int]:
    """Sylvester inertia (positives, negatives, zeros), exactly.

    Symmetric congruence diagonalization over the rationals; when the
    whole remaining diagonal vanishes but some off-diagonal entry g_ij is
    nonzero, row/col i += row/col j makes the pivot 2*g_ij != 0.
    """
    a = [list(row) for row in g.entries]
    size = len(a)
    pos = neg = zero = 0
    for k in range(size):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][r] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                pair = next(
                    (
                        (r, c)
                        for r in range(k, size)
                        for c in range(r + 1, size)
                        if a[r][c] != 0
                    ),
                    None,
                )
                if pair is None:
                    zero += size - k
                    break
                r, c = pair
                if r != k:
                    a[k], a[r] = a[r], a[k]
                    for row in a:
                        row[k], row[r] = row[r], row[k]
                for t in range(size):
                    a[k][t] += a[c][t]
                for row in a:
                    row[k] += row[c]
        pivot = a[k][k]
        for r in range(k + 1, size):
            if a[r][k] == 0:
                continue
            factor = a[r][k] / pivot
            for t in range(size):
                a[r][t] -= factor * a[k][t]
            for row in a:
                row[r] -= factor * row[k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg, zero


def is_lorentzian(g: GramMatrix) -> bool:
    """True iff the signature is (size-1, 1) with no kernel."""
    if g.size < 2:
        raise ValueError("Lorentzian test needs size >= 2")
    return signature(g) == (g.size - 1, 1, 0)


# --- words and the reflection representation -----------------------------


@dataclass(frozen=True)
class ReducedWord:
    """Finite sequence over J with no two equal adjacent letters."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for a, b in zip(letters, letters[1:]):
            if a == b:
                raise NonReducedWord(f"adjacent repeated letter {a} in {letters}")

    @staticmethod
    def of(seq) -> "ReducedWord":
        if isinstance(seq, ReducedWord):
            return seq
        return ReducedWord(tuple(seq))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def reversed(self) -> "ReducedWord":
        return ReducedWord(self.letters[::-1])


def _identity(l: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(l)) for i in range(l))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    l = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v):
    """Matrix times vector; works for any exact scalar (Fraction, quadratic)."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


@dataclass(frozen=True)
class ReflectionRep:
    """Involution matrices iota_j^* for j in J, plus the bilinear form."""

    l: int
    J: tuple[int, ...]
    matrices: dict[int, Matrix]
    gram: GramMatrix

    def b_value(self, i: int, j: int) -> int:
        """b_ij read off column j of iota_j^* (j must be in J, i != j)."""
        if j not in self.matrices:
            raise ValueError(f"index {j} not in J = {self.J}")
        if i == j:
            raise ValueError("b_ij needs i != j")
        return self.matrices[j][i - 1][j - 1]

    @property
    def gram_J(self) -> GramMatrix:
        return restrict_to_J(self.gram, self.J)

    def is_lorentzian(self) -> bool:
        if len(self.J) < 2:
            return False
        return is_lorentzian(self.gram_J)


def reflection_rep(v: ValidatedVariety, outside_value=None) -> ReflectionRep:
    """Build the representation data for a codim = n variety."""
    b = b_matrix(v)
    gram = bilinear_form(v, b, outside_value)
    l = v.spec.l
    matrices = {}
    for j in v.J:
        rows = []
        for i in range(1, l + 1):
            row = [1 if i == k else 0 for k in range(1, l + 1)]
            row[j - 1] = -1 if i == j else b.get(i, j)
            rows.append(tuple(row))
        matrices[j] = tuple(rows)
    return ReflectionRep(l=l, J=v.J, matrices=matrices, gram=gram)


def involution_matrix(rep: ReflectionRep, j: int) -> Matrix:
    """The matrix of iota_j^*; only defined for j in J."""
    if j not in rep.matrices:
        raise ValueError(
            f"no birational involution for index {j}; J = {rep.J}"
        )
    return rep.matrices[j]


def check_word(rep: ReflectionRep, w) -> ReducedWord:
    """Coerce to a `ReducedWord` over this rep's J."""
    word = ReducedWord.of(w)
    for letter in word:
        if letter not in rep.matrices:
            raise NonReducedWord(f"letter {letter} not in J = {rep.J}")
    return word


def word_matrix(rep: ReflectionRep, w) -> Matrix:
    """Product of involution matrices in word order; empty word -> identity."""
    word = check_word(rep, w)
    out = _identity(rep.l)
    for letter in word:
        out = _matmul(out, rep.matrices[letter])
    return out


# --- spectra of pair products --------------------------------------------


def _char_poly(mat) -> tuple[Fraction, ...]:
    """det(xI - M) by Faddeev-LeVerrier; coefficients ascending in x."""
    size = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    m = [[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)]
    coeffs = [Fraction(1)]  # leading term
    for k in range(1, size + 1):
        am = [
            [sum(a[i][t] * m[t][j] for t in range(size)) for j in range(size)]
            for i in range(size)
        ]
        ck = -sum(am[i][i] for i in range(size)) / k
        coeffs.append(ck)
        m = [
            [am[i][j] + (ck if i == j else 0) for j in range(size)]
            for i in range(size)
        ]
    return tuple(reversed(coeffs))


def pair_product(rep: ReflectionRep, i: int, j: int) -> Matrix:
    """(iota_i iota_j)^* = iota_j^* iota_i^*, for i != j in J."""
    if i == j:
        raise ValueError("pair needs distinct indices")
    return _matmul(involution_matrix(rep, j), involution_matrix(rep, i))


def pair_char_poly(rep: ReflectionRep, i: int, j: int) -> tuple[int, ...]:
    """char poly of iota_j^* iota_i^*, ascending coefficients, exact.

    By the eigenvalue structure of pair products this always equals
    (x-1)^(l-2) (x^2 - (b_ij^2 - 2) x + 1); the computation here goes
    through the matrix so tests can compare the two routes independently.
    """
    coeffs = _char_poly(pair_product(rep, i, j))
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(c.numerator for c in coeffs)


@dataclass(frozen=True)
class PairEigenpair:
    """Dominant eigendata of iota_j^* iota_i^*.

    For n >= 2 the product is diagonalizable with a unique eigenvalue
    lambda > 1 and `vector` is an exact eigenvector in Q(sqrt(d)),
    normalized so its first nonzero coordinate is 1.  For n = 1 (b = 2)
    the product is not diagonalizable, 1 is its only eigenvalue, and the
    vector is 0 by convention.
    """

    diagonalizable: bool
    lam: QuadraticNumber
    vector: tuple[QuadraticNumber, ...]


def _kernel_vector(rows: list[list[QuadraticNumber]]) -> tuple[QuadraticNumber, ...]:
    """One nonzero kernel vector of a matrix with a 1-dim kernel."""
    size = len(rows)
    zero, one = QuadraticNumber(Fraction(0)), QuadraticNumber(Fraction(1))
    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    for c in range(size):
        pivot_row = next((t for t in range(r, size) if rows[t][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for t in range(size):
            if t != r and rows[t][c]:
                factor = rows[t][c]
                rows[t] = [x - factor * y for x, y in zip(rows[t], rows[r])]
        pivots.append((r, c))
        r += 1
    pivot_cols = {c for _, c in pivots}
    free = next(c for c in range(size) if c not in pivot_cols)
    vec = [zero] * size
    vec[free] = one
    for row, col in pivots:
        vec[col] = -rows[row][free]
    first = next(x for x in vec if x)
    inv = first.inverse()
    return tuple(x * inv for x in vec)


def pair_dominant_eigenpair(rep: ReflectionRep, i: int, j: int) -> PairEigenpair:
    """Exact dominant eigenpair of iota_j^* iota_i^* (i, j in J, i != j)."""
    mat = pair_product(rep, i, j)
    b = rep.b_value(i, j)
    zero = QuadraticNumber(Fraction(0))
    if b == 2:
        return PairEigenpair(
            diagonalizable=False,
            lam=QuadraticNumber(Fraction(1)),
            vector=(zero,) * rep.l,
        )
    t = b * b - 2
    d, f = squarefree_decompose(t * t - 4)
    lam = QuadraticNumber(Fraction(t, 2), Fraction(f, 2), d)
    rows = [
        [QuadraticNumber(Fraction(mat[r][c])) - (lam if r == c else zero)
         for c in range(rep.l)]
        for r in range(rep.l)
    ]
    vector = _kernel_vector(rows)
    return PairEigenpair(diagonalizable=True, lam=lam, vector=vector)
