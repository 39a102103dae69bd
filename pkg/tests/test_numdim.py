import csv
import json
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from movcone.coxeter import GramMatrix, ReflectionRep, reflection_rep, word_matrix
from movcone.errors import NoGrowth, NonReducedWord, NotLorentzian
from movcone.numdim import batch_reports, nu_vol, spectral_report, write_csv

from helpers import random_variety


def test_paper_example_pair(paper433, paper433_rep):
    report = spectral_report(paper433_rep, (2, 3))
    expected = (47 + math.sqrt(2205)) / 2
    assert report.lambda1 == pytest.approx(expected, rel=1e-14)
    assert report.mu1 == report.lambda1
    assert report.exact_pair and report.lambda1_bound == 0.0
    assert report.unit_others and report.certified_equal
    assert report.sum_interior
    value = nu_vol(paper433_rep, paper433, report)
    assert value == Fraction(7, 2)
    assert isinstance(value, Fraction)


def test_figure1_pair(figure1, figure1_rep):
    report = spectral_report(figure1_rep, (2, 3))
    assert nu_vol(figure1_rep, figure1, report) == Fraction(5, 2)


def test_wehler_composition_of_all_involutions(wehler, wehler_rep):
    report = spectral_report(wehler_rep, (1, 2, 3, 4))
    assert report.lambda1 > 1
    assert report.unit_others and report.certified_equal
    assert report.sum_interior
    assert nu_vol(wehler_rep, wehler, report) == Fraction(3, 2)  # dim X = 3


def test_no_growth_cases(paper433_rep, wehler_rep):
    with pytest.raises(NoGrowth):
        spectral_report(paper433_rep, (2,))
    with pytest.raises(NoGrowth):
        spectral_report(wehler_rep, (1, 2))  # unipotent pair, n = 1


def test_word_validation(paper433_rep):
    with pytest.raises(NonReducedWord):
        spectral_report(paper433_rep, ())
    with pytest.raises(NonReducedWord):
        spectral_report(paper433_rep, (2, 3, 2))
    with pytest.raises(NonReducedWord):
        spectral_report(paper433_rep, (2, 2))


def test_not_lorentzian_refused(paper433_rep):
    # synthetic rep carrying a degenerate restricted form
    fake = ReflectionRep(
        l=paper433_rep.l,
        J=paper433_rep.J,
        matrices=paper433_rep.matrices,
        gram=GramMatrix(
            (
                (Fraction(1), Fraction(-1), Fraction(0)),
                (Fraction(-1), Fraction(1), Fraction(-1)),
                (Fraction(0), Fraction(-1), Fraction(1)),
            )
        ),
    )
    with pytest.raises(NotLorentzian):
        spectral_report(fake, (2, 3))


def _random_cyclic_word(rng, J, max_len):
    while True:
        length = rng.randint(2, max_len)
        letters = []
        ok = True
        for _ in range(length):
            options = [j for j in J if not letters or j != letters[-1]]
            if len(letters) == length - 1:
                options = [j for j in options if j != letters[0]]
            if not options:
                ok = False
                break
            letters.append(rng.choice(options))
        if ok:
            return tuple(letters)


def test_reciprocal_pairing_and_unit_modulus_property():
    rng = random.Random(70707)
    produced = 0
    while produced < 30:
        v = random_variety(rng, min_j=2)
        rep = reflection_rep(v)
        if not rep.is_lorentzian():
            continue
        word = _random_cyclic_word(rng, rep.J, 6)
        try:
            report = spectral_report(rep, word)
        except NoGrowth:
            continue
        eigs = np.linalg.eigvals(np.array(word_matrix(rep, word), dtype=float))
        moduli = np.abs(eigs)
        assert np.min(np.abs(moduli - report.lambda1)) < 1e-9 * report.lambda1
        assert np.min(np.abs(moduli - 1 / report.lambda1)) < 1e-9
        assert report.unit_others
        # |det| = 1: the moduli multiply to 1 (float error scales with lambda1)
        assert np.prod(moduli) == pytest.approx(1.0, abs=1e-9 * report.lambda1)
        assert nu_vol(rep, v, report) == Fraction(v.dimX, 2)
        produced += 1


def test_report_json_and_csv(tmp_path, figure1, figure1_rep):
    rows = batch_reports(figure1_rep, figure1, [(2, 3), (3, 2)])
    payload = [r.to_json() for r, _ in rows]
    parsed = json.loads(json.dumps(payload))
    assert parsed[0]["word"] == [2, 3]
    assert parsed[0]["lambdaExact"] == ["23/2", "5/2", 21]
    path = tmp_path / "batch.csv"
    write_csv(rows, path)
    with open(path, newline="") as fh:
        table = list(csv.DictReader(fh))
    assert table[0]["word"] == "s2 s3"
    assert table[0]["nu_vol"] == "5/2"
    assert table[0]["certified"] == "True"
    assert float(table[0]["lambda1"]) == pytest.approx(report_lambda(rows[0][0]))


def report_lambda(report):
    return report.lambda1


def test_nu_vol_requires_growth(paper433, paper433_rep):
    report = spectral_report(paper433_rep, (2, 3))
    bogus = report.__class__(**{**report.__dict__, "lambda1": 1.0})
    with pytest.raises(ValueError):
        nu_vol(paper433_rep, paper433, bogus)
