"""Variety configuration: parsing, validation, derived invariants.

A variety is specified by the dimensions of the projective-space factors
and the multidegree matrix of the complete-intersection divisors.  The
config grammar is a small key/value format::

    factors = [4, 3, 3]
    degrees = [[2,2,1],[2,1,1],[1,1,2]]
    name    = "example"        # optional

All indices exposed by this package (J, carrier rows, word letters) are
1-based, matching the H_1..H_l naming of divisor classes.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AmbientTooSmall,
    AnticanonicalViolation,
    CodimTooLarge,
    ConfigSyntaxError,
    SubcriticalVariety,
    ValidationError,
)


@dataclass(frozen=True)
class VarietySpec:
    """Raw shape data: factor dimensions and the multidegree matrix.

    ``factors[k-1]`` is the dimension n_k of the k-th projective factor;
    ``degrees[i-1][k-1]`` is the degree a_ik of the i-th divisor on it.
    Construction checks shape and positivity only; `validate` checks the
    geometric requirements.
    """

    factors: tuple[int, ...]
    degrees: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(n) for n in self.factors))
        object.__setattr__(
            self, "degrees", tuple(tuple(int(a) for a in row) for row in self.degrees)
        )
        l = len(self.factors)
        if l < 2:
            raise ValidationError(f"need at least 2 factors, got {l}")
        if not self.degrees:
            raise ValidationError("need at least one divisor multidegree row")
        for row in self.degrees:
            if len(row) != l:
                raise ValidationError(
                    f"ragged degree matrix: row {row} has {len(row)} entries, expected {l}"
                )
        if any(n < 1 for n in self.factors):
            raise ValidationError("factor dimensions must be >= 1")
        if any(a < 1 for row in self.degrees for a in row):
            raise ValidationError("degree entries must be >= 1")

    @property
    def l(self) -> int:
        return len(self.factors)

    @property
    def m(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class ValidatedVariety:
    """A `VarietySpec` that passed validation, with derived invariants.

    n is the minimal factor dimension, J the (1-based) set of factors
    attaining it, dimX = sum(n_i) - m, codim = m.  When codim = n each
    J-column of the degree matrix carries exactly one 2; `carrier2` maps
    j in J to the (1-based) divisor row holding it.
    """

    spec: VarietySpec
    n: int
    J: tuple[int, ...]
    dimX: int
    codim: int
    carrier2_map: dict[int, int] | None = field(repr=False)

    @property
    def subcritical(self) -> bool:
        """True when codim < n: Mov(X) = Nef(X) and Bir(X) acts trivially."""
        return self.codim < self.n

    @property
    def carrier2(self) -> dict[int, int]:
        if self.carrier2_map is None:
            raise SubcriticalVariety(
                "carrier2 is only defined when codim = n "
                f"(here codim = {self.codim} < n = {self.n})"
            )
        return dict(self.carrier2_map)

    @property
    def name(self) -> str:
        return self.spec.name


def validate(spec: VarietySpec) -> ValidatedVariety:
    """Check the geometric requirements and compute derived invariants.

    Raises `AnticanonicalViolation`, `CodimTooLarge` or `AmbientTooSmall`,
    each naming the violated condition.  Deterministic and idempotent.
    """
    factors, degrees = spec.factors, spec.degrees
    l, m = spec.l, spec.m

    for k in range(l):
        total = sum(row[k] for row in degrees)
        if total != factors[k] + 1:
            raise AnticanonicalViolation(column=k + 1, got=total, expected=factors[k] + 1)

    n = min(factors)
    if m > n:
        raise CodimTooLarge(
            f"codim {m} exceeds the smallest factor dimension {n}; "
            "no such Calabi-Yau complete intersection"
        )

    if sum(factors) < 4:
        raise AmbientTooSmall(f"sum of factor dimensions is {sum(factors)}, need >= 4")
    if l == 2 and factors[0] == 2 and factors[1] == 2:
        raise AmbientTooSmall("the P^2 x P^2 ambient (factors (2,2)) is excluded")

    J = tuple(k + 1 for k in range(l) if factors[k] == n)

    carrier2 = None
    if m == n:
        carrier2 = {}
        for j in J:
            twos = [i + 1 for i in range(m) if degrees[i][j - 1] == 2]
            # forced by the anticanonical column sum n+1 over m=n entries >= 1
            assert len(twos) == 1 and all(
                degrees[i][j - 1] in (1, 2) for i in range(m)
            ), f"column {j} does not split as one 2 and {n - 1} ones"
            carrier2[j] = twos[0]

    return ValidatedVariety(
        spec=spec,
        n=n,
        J=J,
        dimX=sum(factors) - m,
        codim=m,
        carrier2_map=carrier2,
    )


# --- config text parsing -------------------------------------------------

_PUNCT = {"=", "[", "]", ","}


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
        elif c in _PUNCT:
            tokens.append(_Token(c, c, line, col))
            i += 1
            col += 1
        elif c == '"':
            start_line, start_col = line, col
            i += 1
            col += 1
            chars = []
            while i < len(text) and text[i] not in '"\n':
                chars.append(text[i])
                i += 1
                col += 1
            if i >= len(text) or text[i] != '"':
                raise ConfigSyntaxError("unterminated string", start_line, start_col)
            i += 1
            col += 1
            tokens.append(_Token("string", "".join(chars), start_line, start_col))
        elif c.isdigit() or (c == "-" and i + 1 < len(text) and text[i + 1].isdigit()):
            start_col = col
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), line, start_col))
            col += j - i
            i = j
        elif c.isalpha() or c == "_":
            start_col = col
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
        else:
            raise ConfigSyntaxError(f"unexpected character {c!r}", line, col)
    tokens.append(_Token("eof", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ConfigSyntaxError(
                f"expected {kind!r}, found {tok.value!r}", tok.line, tok.col
            )
        return tok

    def int_list(self) -> list[int]:
        self.expect("[")
        items = []
        if self.peek().kind == "]":
            self.next()
            return items
        while True:
            tok = self.expect("int")
            if tok.value <= 0:
                raise ConfigSyntaxError(
                    f"non-positive entry {tok.value}", tok.line, tok.col
                )
            items.append(tok.value)
            tok = self.next()
            if tok.kind == "]":
                return items
            if tok.kind != ",":
                raise ConfigSyntaxError(
                    f"expected ',' or ']', found {tok.value!r}", tok.line, tok.col
                )

    def int_matrix(self) -> list[list[int]]:
        open_tok = self.expect("[")
        rows = []
        if self.peek().kind == "]":
            self.next()
            return rows
        while True:
            row_tok = self.peek()
            row = self.int_list()
            if rows and len(row) != len(rows[0]):
                raise ConfigSyntaxError(
                    f"ragged degree matrix: row has {len(row)} entries, "
                    f"previous rows have {len(rows[0])}",
                    row_tok.line,
                    row_tok.col,
                )
            rows.append(row)
            tok = self.next()
            if tok.kind == "]":
                return rows
            if tok.kind != ",":
                raise ConfigSyntaxError(
                    f"expected ',' or ']', found {tok.value!r}", tok.line, tok.col
                )
        raise ConfigSyntaxError("unterminated matrix", open_tok.line, open_tok.col)


def parse_spec(text: str) -> VarietySpec:
    """Parse a variety config document into a `VarietySpec`.

    Shape problems (ragged matrix, non-positive entries) and syntax errors
    raise `ConfigSyntaxError` with 1-based line/column.
    """
    parser = _Parser(_tokenize(text))
    factors = None
    degrees = None
    name = ""
    while parser.peek().kind != "eof":
        key = parser.expect("ident")
        parser.expect("=")
        if key.value == "factors":
            factors = parser.int_list()
        elif key.value == "degrees":
            degrees = parser.int_matrix()
        elif key.value == "name":
            name = parser.expect("string").value
        else:
            raise ConfigSyntaxError(f"unknown key {key.value!r}", key.line, key.col)
    if factors is None:
        raise ConfigSyntaxError("missing 'factors'", 1, 1)
    if degrees is None:
        raise ConfigSyntaxError("missing 'degrees'", 1, 1)
    if degrees and len(degrees[0]) != len(factors):
        raise ConfigSyntaxError(
            f"degree rows have {len(degrees[0])} entries but there are "
            f"{len(factors)} factors",
            1,
            1,
        )
    return VarietySpec(factors=tuple(factors), degrees=tuple(map(tuple, degrees)), name=name)


def load(path) -> ValidatedVariety:
    """Parse and validate the config file at `path`."""
    with open(path, "r", encoding="utf-8") as fh:
        return validate(parse_spec(fh.read()))
