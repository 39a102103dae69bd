"""Movable-cone machinery: descent to nef, chamber orbit, boundary cones.

Divisor classes are coordinate vectors in the nef basis h_1..h_l.  The
nef cone is the nonnegative orthant; the movable effective cone is its
orbit under the involution matrices.  Descent walks a class back into the
orthant by repeatedly reflecting at its unique negative J-coordinate,
with the coordinate sum s(E) as the strictly decreasing potential.

Scalars are duck-typed: `Fraction` and `QuadraticNumber` inputs both run
exactly.  Floating point appears only in `limit_direction`, which is an
explicitly iterative operation with a residual bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .coxeter import (
    Matrix,
    PairEigenpair,
    ReducedWord,
    ReflectionRep,
    _matmul,
    check_word,
    involution_matrix,
    mat_vec,
    pair_dominant_eigenpair,
    word_matrix,
)
from .errors import NoAttractingDirection, NonConvergent, NonReducedWord, NotLorentzian
from .quadratic import QuadraticNumber


def _coerce_scalar(x):
    if isinstance(x, (QuadraticNumber, Fraction)):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"divisor coordinates must be exact, got {type(x).__name__}")


@dataclass(frozen=True)
class DivisorClass:
    """Coordinates beta_1..beta_l of a divisor class in the nef basis."""

    beta: tuple

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(_coerce_scalar(x) for x in self.beta))

    @staticmethod
    def of(value) -> "DivisorClass":
        if isinstance(value, DivisorClass):
            return value
        return DivisorClass(tuple(value))

    def __iter__(self):
        return iter(self.beta)

    def __len__(self):
        return len(self.beta)


def s_value(e: DivisorClass):
    """The coordinate sum s(E) = sum beta_i, the descent potential."""
    beta = DivisorClass.of(e).beta
    total = beta[0]
    for x in beta[1:]:
        total = total + x
    return total


@dataclass(frozen=True)
class Witness:
    """First violated necessary condition for pseudoeffectivity."""

    kind: str  # "negative-outside-J" | "two-negative-in-J" | "pair-inequality"
    indices: tuple[int, ...]

    def to_json(self):
        return {"kind": self.kind, "indices": list(self.indices)}


def effectivity_witness(e, rep: ReflectionRep) -> Witness | None:
    """Check the necessary conditions (a)-(c) in order; None if all pass.

    (a) beta_k >= 0 for k outside J;
    (b) at most one beta_j < 0 for j in J;
    (c) 2 beta_j1 + b_{j1 j2} beta_j2 >= 0 for every ordered pair in J.
    """
    beta = DivisorClass.of(e).beta
    J = set(rep.J)
    for k in range(1, rep.l + 1):
        if k not in J and beta[k - 1] < 0:
            return Witness("negative-outside-J", (k,))
    negatives = [j for j in rep.J if beta[j - 1] < 0]
    if len(negatives) >= 2:
        return Witness("two-negative-in-J", tuple(negatives[:2]))
    for j1 in rep.J:
        for j2 in rep.J:
            if j1 == j2:
                continue
            if 2 * beta[j1 - 1] + rep.b_value(j1, j2) * beta[j2 - 1] < 0:
                return Witness("pair-inequality", (j1, j2))
    return None


@dataclass(frozen=True)
class TraceStep:
    letter: int | None  # None on the seed row
    beta: tuple
    s: object

    def to_json(self):
        return {
            "letter": self.letter,
            "class": [str(x) for x in self.beta],
            "s": str(self.s),
        }


@dataclass(frozen=True)
class DescentResult:
    verdict: str  # "Nef" | "Outside" | "Undetermined"
    word: ReducedWord
    final: DivisorClass
    trace: tuple[TraceStep, ...]
    witness: Witness | None = None

    def to_json(self):
        return {
            "verdict": self.verdict,
            "word": list(self.word.letters),
            "final": [str(x) for x in self.final.beta],
            "trace": [step.to_json() for step in self.trace],
            "witness": self.witness.to_json() if self.witness else None,
        }


def default_max_steps(e) -> int:
    s = s_value(e)
    return max(1000, 2 * math.ceil(s)) if s > 0 else 1000


def reduce_to_nef(e, rep: ReflectionRep, max_steps: int | None = None) -> DescentResult:
    """Descend a class toward the nef orthant.

    Returns Nef with the applied word when all coordinates become
    nonnegative, Outside with a witness when a necessary effectivity
    condition fails, and Undetermined when `max_steps` runs out (the
    honest verdict for classes near the irrational boundary).  For
    pseudoeffective integral input, s(E) drops by at least 1 per step,
    so the verdict lands within s(E) + 1 steps.
    """
    current = DivisorClass.of(e)
    if max_steps is None:
        max_steps = default_max_steps(current)
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    letters: list[int] = []
    trace = [TraceStep(None, current.beta, s_value(current))]
    for _ in range(max_steps):
        if all(x >= 0 for x in current.beta):
            return DescentResult("Nef", ReducedWord(tuple(letters)), current, tuple(trace))
        witness = effectivity_witness(current, rep)
        if witness is not None:
            return DescentResult(
                "Outside", ReducedWord(tuple(letters)), current, tuple(trace), witness
            )
        j = next(j for j in rep.J if current.beta[j - 1] < 0)
        current = DivisorClass(mat_vec(involution_matrix(rep, j), current.beta))
        letters.append(j)
        s = s_value(current)
        assert s < trace[-1].s, "descent potential failed to decrease"
        trace.append(TraceStep(j, current.beta, s))
    return DescentResult("Undetermined", ReducedWord(tuple(letters)), current, tuple(trace))


# --- chamber enumeration ---------------------------------------------------


def reduced_word_count(j_size: int, depth: int) -> int:
    """Number of reduced words of length <= depth on j_size letters."""
    return 1 + sum(j_size * (j_size - 1) ** (d - 1) for d in range(1, depth + 1))


def chamber_orbit(
    rep: ReflectionRep, depth: int, max_chambers: int = 200_000
) -> list[tuple[ReducedWord, Matrix]]:
    """All chambers of word length <= depth, breadth-first.

    Each entry is (word, matrix); the chamber is spanned by the matrix
    columns (images of the nef generators).  Count follows the reduced
    word formula; `max_chambers` bounds memory.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    expected = reduced_word_count(len(rep.J), depth)
    if expected > max_chambers:
        raise ValueError(
            f"depth {depth} gives {expected} chambers, over the cap {max_chambers}"
        )
    identity = word_matrix(rep, ())
    out: list[tuple[ReducedWord, Matrix]] = [(ReducedWord(()), identity)]
    frontier = [((), identity)]
    for _ in range(depth):
        nxt = []
        for letters, mat in frontier:
            for j in rep.J:
                if letters and letters[-1] == j:
                    continue
                grown = letters + (j,)
                grown_mat = _matmul(mat, rep.matrices[j])
                nxt.append((grown, grown_mat))
                out.append((ReducedWord(grown), grown_mat))
        frontier = nxt
    return out


# --- boundary of the movable cone ------------------------------------------


@dataclass(frozen=True)
class ConeDescription:
    """One boundary cone: a transported face or pair-eigenvector cone."""

    kind: str  # "face-outside-J" | "pair-eigen"
    face: int | None  # the omitted index i (kind "face-outside-J")
    pair: tuple[int, int] | None  # (i, j) in J (kind "pair-eigen")
    generators: tuple[tuple[QuadraticNumber, ...], ...]
    orbit_word: ReducedWord

    def to_json(self):
        data = {
            "kind": self.kind,
            "generators": [[x.to_triple() for x in g] for g in self.generators],
            "orbitWord": list(self.orbit_word.letters),
        }
        if self.face is not None:
            data["face"] = self.face
        if self.pair is not None:
            data["pair"] = list(self.pair)
        return data


def _canonical_ray(vec: tuple[QuadraticNumber, ...]) -> tuple[QuadraticNumber, ...]:
    """Scale by a positive factor so the first nonzero entry is +-1."""
    lead = next((x for x in vec if x), None)
    if lead is None:
        return vec
    scale = lead.inverse()
    if lead.sign() < 0:
        scale = -scale
    return tuple(x * scale for x in vec)


def _basis_vector(l: int, k: int) -> tuple[QuadraticNumber, ...]:
    return tuple(
        QuadraticNumber(Fraction(1 if t == k else 0)) for t in range(1, l + 1)
    )


def pair_eigendata(rep: ReflectionRep) -> dict[tuple[int, int], PairEigenpair]:
    """Dominant eigenpairs for every unordered pair {i < j} in J."""
    out = {}
    for a, i in enumerate(rep.J):
        for j in rep.J[a + 1 :]:
            out[(i, j)] = pair_dominant_eigenpair(rep, i, j)
    return out


def boundary_cones(
    rep: ReflectionRep,
    eigen: dict[tuple[int, int], PairEigenpair] | None = None,
    depth: int = 0,
) -> list[ConeDescription]:
    """Boundary cones of the movable cone, transported up to word length `depth`.

    Family "face-outside-J": for i outside J, the face spanned by the
    h_k with k != i.  Family "pair-eigen": for each pair {i,j} in J, the
    cone on the dominant eigenvector of iota_j^* iota_i^* together with
    the h_k, k != i,j (the eigenvector is 0 when n = 1).  Requires W_J
    Lorentzian; duplicates are removed by exact generator-set equality.
    """
    if not rep.is_lorentzian():
        raise NotLorentzian(
            f"boundary description needs W_J Lorentzian; J = {rep.J}"
        )
    if eigen is None:
        eigen = pair_eigendata(rep)
    J = set(rep.J)

    base: list[tuple[str, int | None, tuple[int, int] | None, tuple]] = []
    for i in range(1, rep.l + 1):
        if i in J:
            continue
        gens = tuple(_basis_vector(rep.l, k) for k in range(1, rep.l + 1) if k != i)
        base.append(("face-outside-J", i, None, gens))
    for (i, j), pair in sorted(eigen.items()):
        gens = [pair.vector] if any(pair.vector) else []
        gens.extend(
            _basis_vector(rep.l, k) for k in range(1, rep.l + 1) if k not in (i, j)
        )
        base.append(("pair-eigen", None, (i, j), tuple(gens)))

    seen = set()
    cones: list[ConeDescription] = []
    for word, mat in chamber_orbit(rep, depth):
        for kind, face, pair, gens in base:
            moved = tuple(
                sorted(_canonical_ray(mat_vec(mat, g)) for g in gens)
            )
            if moved in seen:
                continue
            seen.add(moved)
            cones.append(
                ConeDescription(
                    kind=kind, face=face, pair=pair, generators=moved, orbit_word=word
                )
            )
    return cones


# --- limit directions of periodic words -------------------------------------


@dataclass(frozen=True)
class LimitDirection:
    """Dominant eigendirection on the affine slice sum(coords) = 1."""

    direction: tuple[float, ...]
    eigenvalue: float
    residual: float
    iterations: int


def limit_direction(
    rep: ReflectionRep, w, tol: float = 1e-12, max_iter: int = 100_000
) -> LimitDirection:
    """Attracting direction of the periodic infinite word w w w ...

    Power iteration on the slice, with the sup-norm relative residual as
    the convergence certificate.  Raises `NoAttractingDirection` when the
    spectral radius is 1 (reflections, or words in the n = 1 case).
    """
    word = check_word(rep, w)
    if len(word) == 0:
        raise NonReducedWord("need a nonempty word")
    if len(word) > 1 and word.letters[0] == word.letters[-1]:
        raise NonReducedWord(
            "periodic repetition of the word must stay reduced (first != last letter)"
        )
    mat = np.array(word_matrix(rep, word), dtype=float)
    radius = max(abs(np.linalg.eigvals(mat)))
    # genuine growth rates of these reciprocal integer matrices are Salem-like
    # (>= 1.17...); values this close to 1 are defective-eigenvalue scatter
    if radius <= 1 + 1e-3:
        raise NoAttractingDirection(
            f"word {list(word.letters)} has spectral radius 1; "
            "no attracting direction"
        )
    v = np.ones(rep.l) / rep.l
    for it in range(1, max_iter + 1):
        mv = mat @ v
        growth = mv.sum()
        if abs(growth) < 1e-300:
            raise NonConvergent("iterate left the affine slice")
        v_next = mv / growth
        residual = np.max(np.abs(mat @ v_next - radius * v_next)) / np.max(
            np.abs(v_next)
        )
        v = v_next
        if residual < tol:
            return LimitDirection(
                direction=tuple(float(x) for x in v),
                eigenvalue=float(radius),
                residual=float(residual),
                iterations=it,
            )
    raise NonConvergent(
        f"residual did not reach {tol} within {max_iter} iterations"
    )
