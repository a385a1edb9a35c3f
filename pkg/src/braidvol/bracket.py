"""Brute-force Kauffman bracket of a closed-braid diagram.

The bracket is the state sum over all 2^c smoothing assignments,

    <D> = sum over states  A^(a-b) * delta^(loops - 1),   delta = -A^2 - A^(-2),

with a and b the number of A- and B-smoothed crossings and loops the number
of circles the smoothing leaves.  A positive letter's A-smoothing lets both
strands pass straight through; a negative letter's A-smoothing joins them in
a cap and a cup; B-smoothings are the other way around.

The closure pattern of the diagram away from the crossing boxes never
changes, so it is precomputed as a fixed perfect matching on the 4c crossing
terminals; each state only picks one of two pairings inside every box, and
loops are counted by walking the alternating cycles.  Coefficients are exact
Python integers throughout.

This module exists to cross-check the penultimate-coefficient identity
|coeff(top - 4)| = 1 + (e' - v) of the reduced state graph on A-adequate
diagrams, so it favors transparency over speed: the only shortcut is the
precomputed matching.  Anything past ~20 crossings is refused.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CrossingLimitError, OracleError, PreconditionError
from .states import is_A_adequate, resolve_all_A
from .words import SyllableWord

__all__ = [
    "LaurentPolynomial",
    "BracketSummary",
    "kauffman_bracket",
    "stable_penultimate_coefficient",
    "DEFAULT_MAX_CROSSINGS",
]

DEFAULT_MAX_CROSSINGS = 20


@dataclass(frozen=True)
class LaurentPolynomial:
    """A Laurent polynomial in one variable with integer coefficients.

    ``terms`` is sorted by degree and never contains a zero coefficient, so
    equality is structural.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((d, c) for d, c in self.terms if c))
        degrees = [d for d, _ in cleaned]
        if len(set(degrees)) != len(degrees):
            raise ValueError("duplicate degrees")
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> LaurentPolynomial:
        return cls(tuple(coeffs.items()))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> LaurentPolynomial:
        return cls(((degree, coeff),))

    @classmethod
    def zero(cls) -> LaurentPolynomial:
        return cls()

    @classmethod
    def one(cls) -> LaurentPolynomial:
        return cls(((0, 1),))

    def coefficient(self, degree: int) -> int:
        for d, c in self.terms:
            if d == degree:
                return c
        return 0

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    @property
    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[0][0]

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        coeffs = dict(self.terms)
        for d, c in other.terms:
            coeffs[d] = coeffs.get(d, 0) + c
        return LaurentPolynomial.from_dict(coeffs)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(tuple((d, -c) for d, c in self.terms))

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        coeffs: dict[int, int] = {}
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                d = d1 + d2
                coeffs[d] = coeffs.get(d, 0) + c1 * c2
        return LaurentPolynomial.from_dict(coeffs)

    def scaled(self, factor: int) -> LaurentPolynomial:
        return LaurentPolynomial(tuple((d, c * factor) for d, c in self.terms))

    def inverted_variable(self) -> LaurentPolynomial:
        """Substitute A -> A^(-1)."""
        return LaurentPolynomial(tuple((-d, c) for d, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{d}:{c}" for d, c in self.terms)


@dataclass(frozen=True)
class BracketSummary:
    """Degree-end data of the bracket of an A-adequate diagram."""

    c: int
    num_all_A_circles: int
    top_degree: int
    top_coefficient: int
    penultimate_abs: int

    def to_json_dict(self) -> dict:
        return {
            "crossings": self.c,
            "all_A_circles": self.num_all_A_circles,
            "top_degree": self.top_degree,
            "top_coefficient": self.top_coefficient,
            "penultimate_abs": self.penultimate_abs,
        }


_PASS = (2, 3, 0, 1)  # terminal partner under the straight-through pairing
_JOIN = (1, 0, 3, 2)  # terminal partner under the cap/cup pairing


def _fixed_matching(word: SyllableWord) -> tuple[list[int], int]:
    """Partner array over the 4c crossing terminals, plus free-column loops.

    Terminals of crossing i are 4i..4i+3 = (top-left, top-right, bottom-left,
    bottom-right).  The matching follows the strands between boxes and around
    the closure; columns no crossing touches close into standalone circles
    counted separately.
    """
    n = word.n
    letters = word.letters
    partner = [-1] * (4 * len(letters))
    carrier: list[int | None] = [None] * (n + 1)  # 1-based columns
    first_touch: list[int | None] = [None] * (n + 1)

    def attach(col: int, terminal: int) -> None:
        held = carrier[col]
        if held is None:
            first_touch[col] = terminal
        else:
            partner[held] = terminal
            partner[terminal] = held

    for i, g in enumerate(letters):
        col = abs(g)
        attach(col, 4 * i)
        attach(col + 1, 4 * i + 1)
        carrier[col] = 4 * i + 2
        carrier[col + 1] = 4 * i + 3

    free_loops = 0
    for col in range(1, n + 1):
        held = carrier[col]
        if held is None:
            free_loops += 1
            continue
        top = first_touch[col]
        partner[held] = top
        partner[top] = held
    return partner, free_loops


def kauffman_bracket(
    word: SyllableWord, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> LaurentPolynomial:
    """The Kauffman bracket of the closure of ``word``, exactly.

    Every state is enumerated, so the crossing count is capped hard.
    """
    c = word.crossings
    if c > max_crossings:
        raise CrossingLimitError(c, max_crossings)
    letters = word.letters
    partner, free_loops = _fixed_matching(word)

    # pairing option inside box i for the A-smoothing: 0 = pass, 1 = join
    a_option = [0 if g > 0 else 1 for g in letters]
    tables = (_PASS, _JOIN)
    total_nodes = 4 * c
    # jump[k][u]: follow the strand from u, then take the A-pairing (k = 0)
    # or B-pairing (k = 1) at the box we land in; pbox[u] is that box
    pbox = [partner[u] >> 2 for u in range(total_nodes)]
    jump = (
        [
            (pbox[u] << 2) | tables[a_option[pbox[u]]][partner[u] & 3]
            for u in range(total_nodes)
        ],
        [
            (pbox[u] << 2) | tables[a_option[pbox[u]] ^ 1][partner[u] & 3]
            for u in range(total_nodes)
        ],
    )

    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << c):
        visited = bytearray(total_nodes)
        cycles = 0
        for start in range(total_nodes):
            if visited[start]:
                continue
            cycles += 1
            node = start
            while not visited[node]:
                visited[node] = 1
                visited[partner[node]] = 1
                node = jump[(mask >> pbox[node]) & 1][node]
        b = mask.bit_count()
        key = (b, cycles + free_loops)
        counts[key] = counts.get(key, 0) + 1

    delta = LaurentPolynomial.from_dict({2: -1, -2: -1})
    delta_powers = [LaurentPolynomial.one()]
    bracket = LaurentPolynomial.zero()
    for (b, loops), count in sorted(counts.items()):
        while len(delta_powers) <= loops - 1:
            delta_powers.append(delta_powers[-1] * delta)
        term = delta_powers[loops - 1].scaled(count)
        bracket = bracket + LaurentPolynomial.monomial(c - 2 * b) * term
    return bracket


def stable_penultimate_coefficient(
    word: SyllableWord, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> BracketSummary:
    """Bracket degree-end summary for an A-adequate closed braid.

    The top degree of the bracket of an A-adequate diagram is
    c + 2(|s_A| - 1) with top coefficient of absolute value 1, and the next
    nonzero coefficient sits exactly four degrees below; its absolute value
    is the quantity the volume bounds consume.  Both facts are asserted, not
    assumed: a violation raises rather than returning silently wrong data.
    """
    state = resolve_all_A(word)
    if not is_A_adequate(state):
        raise PreconditionError(
            "penultimate coefficient needs an A-adequate diagram"
        )
    bracket = kauffman_bracket(word, max_crossings)
    num_circles = len(state.circles)
    top_degree = word.crossings + 2 * (num_circles - 1)
    if bracket.is_zero or bracket.max_degree != top_degree:
        raise OracleError(
            f"bracket top degree {bracket.terms[-1][0] if bracket.terms else None}"
            f" != predicted {top_degree}"
        )
    top_coefficient = bracket.coefficient(top_degree)
    if abs(top_coefficient) != 1:
        raise OracleError(
            f"top coefficient {top_coefficient} not of absolute value 1"
        )
    penultimate_abs = abs(bracket.coefficient(top_degree - 4))
    return BracketSummary(
        c=word.crossings,
        num_all_A_circles=num_circles,
        top_degree=top_degree,
        top_coefficient=top_coefficient,
        penultimate_abs=penultimate_abs,
    )
