import pytest

from movcone.coxeter import reflection_rep
from movcone.variety import VarietySpec, validate

# the running example: P^4 x P^3 x P^3, multidegrees (2,2,1),(2,1,1),(1,1,2)
PAPER_433 = VarietySpec((4, 3, 3), ((2, 2, 1), (2, 1, 1), (1, 1, 2)), name="p4xp3xp3")
# P^3 x P^2 x P^2, multidegrees (2,2,1),(2,1,2): the rank-3 figure variety
FIGURE1 = VarietySpec((3, 2, 2), ((2, 2, 1), (2, 1, 2)), name="figure1")
# quartic-type hypersurface in (P^1)^4
WEHLER = VarietySpec((1, 1, 1, 1), ((2, 2, 2, 2),), name="wehler")
# seven factors; B_J is the printed 5x5 block example
WORKED_5X5 = VarietySpec(
    (6, 5, 3, 3, 3, 3, 3),
    ((3, 1, 2, 1, 1, 2, 1), (2, 2, 1, 2, 2, 1, 1), (2, 3, 1, 1, 1, 1, 2)),
    name="worked5x5",
)
# |J| = 3 with the three 2s in three distinct divisors
THREE_J = VarietySpec(
    (4, 3, 3, 3), ((3, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2)), name="threeJ"
)
# unique minimal factor: |J| = 1
SINGLE_J = VarietySpec((3, 4, 4), ((2, 1, 2), (1, 2, 1), (1, 2, 2)), name="singleJ")
# codim < n: subcritical
SUBCRITICAL = VarietySpec((3, 3), ((2, 2), (2, 2)), name="subcritical")
# n = 1 on three factors: the degenerate (v_lambda = 0) rank-3 picture
RANK3_N1 = VarietySpec((1, 1, 3), ((2, 2, 4),), name="rank3n1")


@pytest.fixture(scope="session")
def paper433():
    return validate(PAPER_433)


@pytest.fixture(scope="session")
def paper433_rep(paper433):
    return reflection_rep(paper433)


@pytest.fixture(scope="session")
def figure1():
    return validate(FIGURE1)


@pytest.fixture(scope="session")
def figure1_rep(figure1):
    return reflection_rep(figure1)


@pytest.fixture(scope="session")
def wehler():
    return validate(WEHLER)


@pytest.fixture(scope="session")
def wehler_rep(wehler):
    return reflection_rep(wehler)


@pytest.fixture(scope="session")
def worked5x5():
    return validate(WORKED_5X5)


@pytest.fixture(scope="session")
def three_j_rep():
    return reflection_rep(validate(THREE_J))


@pytest.fixture(scope="session")
def single_j_rep():
    return reflection_rep(validate(SINGLE_J))


@pytest.fixture(scope="session")
def subcritical():
    return validate(SUBCRITICAL)
