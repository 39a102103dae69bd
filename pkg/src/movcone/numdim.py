"""Numerical dimension of dominant eigenclasses of birational automorphisms.

For a word whose matrix has spectral radius lambda_1 > 1, the eigenvalue
structure over a Lorentzian W_J is {lambda_1, 1/lambda_1, unit circle}.
The volume numerical dimension of the dominant eigenclass is
dimX * (1 + log mu_1 / log lambda_1)^-1, which collapses to the exact
rational dimX/2 whenever lambda_1 = mu_1 is certified.

Length-2 words are handled exactly through the quadratic field; longer
words use float eigensolvers and report residual bounds, never claiming
exactness.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cones import DivisorClass, reduce_to_nef, s_value
from .coxeter import ReducedWord, ReflectionRep, check_word, pair_dominant_eigenpair, word_matrix
from .errors import NoGrowth, NonConvergent, NonReducedWord, NotLorentzian
from .quadratic import QuadraticNumber
from .variety import ValidatedVariety


@dataclass(frozen=True)
class SpectralReport:
    """Spectral data of one word matrix g^*.

    lambda1/mu1 are the spectral radii of g^* and (g^-1)^* with residual
    bounds (0.0 on the exact pair path).  unit_others says every other
    eigenvalue has modulus 1 within tol; certified_equal says
    lambda1 = mu1 is certified (exactly, or within tol with a reciprocal
    partner present); sum_interior says Delta+ + Delta- descends strictly
    inside the nef chamber, the operational bigness check.
    """

    word: ReducedWord
    lambda1: float
    lambda1_bound: float
    mu1: float
    mu1_bound: float
    unit_others: bool
    delta_plus: tuple[float, ...]
    delta_minus: tuple[float, ...]
    sum_interior: bool
    certified_equal: bool
    exact_pair: bool
    lam_exact: QuadraticNumber | None
    tol: float

    def to_json(self):
        return {
            "word": list(self.word.letters),
            "lambda1": self.lambda1,
            "lambda1Bound": self.lambda1_bound,
            "mu1": self.mu1,
            "mu1Bound": self.mu1_bound,
            "unitOthers": self.unit_others,
            "deltaPlus": list(self.delta_plus),
            "deltaMinus": list(self.delta_minus),
            "sumInterior": self.sum_interior,
            "certifiedEqual": self.certified_equal,
            "exactPair": self.exact_pair,
            "lambdaExact": self.lam_exact.to_triple() if self.lam_exact else None,
            "tol": self.tol,
        }


def _power_eigvec(mat: np.ndarray, tol: float, max_iter: int = 100_000):
    """Dominant eigenvector by power iteration; returns (vector, residual)."""
    radius = max(abs(np.linalg.eigvals(mat)))
    v = np.ones(mat.shape[0]) / mat.shape[0]
    for _ in range(max_iter):
        mv = mat @ v
        norm = np.max(np.abs(mv))
        if norm < 1e-300:
            raise NonConvergent("power iterate vanished")
        v = mv / norm
        residual = np.max(np.abs(mat @ v - radius * v)) / np.max(np.abs(v))
        if residual < tol:
            return v, residual
    raise NonConvergent(f"residual did not reach {tol}")


def _orient_positive(vec):
    """Flip the sign so the coordinate sum is positive (the movable side)."""
    total = sum(vec) if not isinstance(vec, np.ndarray) else vec.sum()
    if isinstance(total, float):
        return vec if total > 0 else -vec
    return vec if total > 0 else tuple(-x for x in vec)


def _rationalize(vec: np.ndarray) -> DivisorClass:
    scale = np.max(np.abs(vec))
    return DivisorClass(
        tuple(Fraction(float(x / scale)).limit_denominator(10**12) for x in vec)
    )


def spectral_report(rep: ReflectionRep, w, tol: float = 1e-9) -> SpectralReport:
    """Full spectral report for a cyclically reduced word.

    Raises `NoGrowth` when the spectral radius is 1 (single letters, or
    any word in the n = 1 case; growth below 1 + 1e-3 counts as none,
    since genuine growth rates of these integer matrices are Salem-like,
    bounded away from 1), `NotLorentzian` when W_J is not, and
    `NonReducedWord` when the periodic repetition of w is not reduced.
    """
    word = check_word(rep, w)
    if len(word) == 0:
        raise NonReducedWord("need a nonempty word")
    if len(word) == 1:
        raise NoGrowth("a single involution has spectrum {+-1}")
    if word.letters[0] == word.letters[-1]:
        raise NonReducedWord(
            "periodic repetition of the word must stay reduced (first != last letter)"
        )
    if not rep.is_lorentzian():
        raise NotLorentzian(f"spectral structure needs W_J Lorentzian; J = {rep.J}")

    exact_pair = len(word) == 2
    pair = None
    if exact_pair:
        # word (a, b) has matrix iota_a^* iota_b^* = iota_j^* iota_i^* with j=a, i=b
        a, b = word.letters
        pair = pair_dominant_eigenpair(rep, b, a)
        if not pair.diagonalizable:
            raise NoGrowth(
                f"word {list(word.letters)}: pair product is unipotent (n = 1 case)"
            )

    mat = np.array(word_matrix(rep, word), dtype=float)
    eigs = np.linalg.eigvals(mat)
    moduli = np.sort(np.abs(eigs))
    lambda1 = float(moduli[-1])
    # genuine growth rates here are Salem-like (>= 1.17...); a radius this
    # close to 1 is defective-eigenvalue scatter around a parabolic element
    if not exact_pair and lambda1 <= 1 + max(tol, 1e-3):
        raise NoGrowth(f"word {list(word.letters)} has spectral radius 1")
    mu1 = float(1 / moduli[0])
    unit_others = bool(np.all(np.abs(moduli[1:-1] - 1) <= tol))
    reciprocal_present = bool(np.min(np.abs(moduli - 1 / lambda1)) <= tol)

    lam_exact = None
    if exact_pair:
        lam_exact = pair.lam
        lambda1 = float(pair.lam)
        mu1 = lambda1
        delta_plus_exact = _orient_positive(pair.vector)
        delta_minus_exact = _orient_positive(tuple(x.conjugate() for x in pair.vector))
        delta_plus = tuple(float(x) for x in delta_plus_exact)
        delta_minus = tuple(float(x) for x in delta_minus_exact)
        sum_class = DivisorClass(
            tuple(x + y for x, y in zip(delta_plus_exact, delta_minus_exact))
        )
        lambda1_bound = mu1_bound = 0.0
        certified_equal = True
    else:
        vp, rp = _power_eigvec(mat, tol=tol)
        inv = np.array(word_matrix(rep, word.reversed()), dtype=float)
        vm, rm = _power_eigvec(inv, tol=tol)
        vp, vm = _orient_positive(vp), _orient_positive(vm)
        vp, vm = vp / np.max(np.abs(vp)), vm / np.max(np.abs(vm))
        delta_plus, delta_minus = tuple(vp), tuple(vm)
        sum_class = _rationalize(vp + vm)
        lambda1_bound, mu1_bound = float(rp), float(rm)
        certified_equal = unit_others and abs(lambda1 - mu1) <= tol * lambda1 and reciprocal_present

    descent = reduce_to_nef(sum_class, rep)
    sum_interior = descent.verdict == "Nef" and all(x > 0 for x in descent.final.beta)

    return SpectralReport(
        word=word,
        lambda1=lambda1,
        lambda1_bound=lambda1_bound,
        mu1=mu1,
        mu1_bound=mu1_bound,
        unit_others=unit_others,
        delta_plus=delta_plus,
        delta_minus=delta_minus,
        sum_interior=sum_interior,
        certified_equal=certified_equal,
        exact_pair=exact_pair,
        lam_exact=lam_exact,
        tol=tol,
    )


def nu_vol(rep: ReflectionRep, v: ValidatedVariety, report: SpectralReport):
    """Volume numerical dimension of the dominant eigenclass.

    Exact Fraction(dimX, 2) on the certified path (unit_others together
    with a certified lambda1 = mu1); otherwise the float value of
    dimX * (1 + log mu1 / log lambda1)^-1, unrounded.
    """
    if not report.lambda1 > 1:
        raise ValueError("nu_vol needs spectral radius lambda1 > 1")
    if report.unit_others and report.certified_equal:
        return Fraction(v.dimX, 2)
    return v.dimX / (1 + math.log(report.mu1) / math.log(report.lambda1))


def batch_reports(
    rep: ReflectionRep, v: ValidatedVariety, words, tol: float = 1e-9
) -> list[tuple[SpectralReport, object]]:
    """Reports and nu_vol values for a list of words, in input order."""
    out = []
    for w in words:
        report = spectral_report(rep, w, tol=tol)
        out.append((report, nu_vol(rep, v, report)))
    return out


def write_csv(rows: list[tuple[SpectralReport, object]], path):
    """Batch table: word, lambda1, mu1, nu_vol, certified."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["word", "lambda1", "mu1", "nu_vol", "certified"])
        for report, value in rows:
            certified = report.unit_others and report.certified_equal
            writer.writerow(
                [
                    " ".join(f"s{j}" for j in report.word.letters),
                    repr(report.lambda1),
                    repr(report.mu1),
                    str(value),
                    certified,
                ]
            )
