"""Schreier conjugacy normal forms for 3-strand braids.

B_3 is generated by x = (sigma_1 sigma_2 sigma_1)^(-1) and y = sigma_1
sigma_2, with C = x^(-2) = y^3 generating the center.  Modulo the center the
group is the free product Z/2 * Z/3, so every conjugacy class has a unique
representative C^k * eta with eta a cyclic word in x, y, y^2 containing no
xx and no yyy.  The pipeline is

    sigma word  -->  positive xy word  -->  reduce xx -> C^(-1), yyy -> C
                -->  classify the residue eta  -->  rewrite eta in sigmas.

Substitutions: sigma_1 = y^2 x, sigma_2 = x y^2, sigma_1^(-1) = x y,
sigma_2^(-1) = y x.  The reduced residue is one of

    (xy)^p1 (xy^2)^q1 ... (xy)^ps (xy^2)^qs   (the generic shape)
    (xy)^p | (xy^2)^q | y | y^2 | x | empty,

which translate to sigma_1^(-p1) sigma_2^(q1) ..., sigma_1^p, sigma_1 sigma_2,
(sigma_1 sigma_2)^2, C^(-1) sigma_1 sigma_2 sigma_1, and the identity.  The
generic pair list is canonicalized to its lexicographically least rotation, so
two 3-braids are conjugate iff their forms compare equal.

The closure of a 3-braid is hyperbolic iff its form is generic and the braid
is not conjugate to sigma_1^p sigma_2^q.  Two-syllable normal forms follow
closed patterns once both exponents are clear of the degenerate range, so the
conjugacy test inverts those patterns to propose candidate (p, q) pairs,
verifies each by direct normal-form comparison, and sweeps a small exponent
window for the leftovers (the exponent sum pins q once p is chosen).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import PreconditionError
from .families import check_main_lemma
from .words import BraidWord, SyllableWord, cyclically_reduce_into_syllables

__all__ = [
    "XYWord",
    "EtaKind",
    "SchreierForm",
    "HyperbolicityResult",
    "to_xy",
    "normalize_xy",
    "to_sigma_form",
    "schreier_normal_form",
    "is_generic",
    "direct_read_k",
    "direct_read_s",
    "conjugate_3braids",
    "is_hyperbolic_closure_3braid",
]

X = "x"
Y = "y"


@dataclass(frozen=True)
class XYWord:
    """A cyclic positive word in x, y as run-length pairs, times C^j."""

    runs: tuple[tuple[str, int], ...]
    j: int = 0

    def __post_init__(self) -> None:
        for ch, count in self.runs:
            if ch not in (X, Y) or count < 1:
                raise ValueError(f"bad run {(ch, count)!r}")

    @property
    def length(self) -> int:
        return sum(count for _, count in self.runs)


class EtaKind(str, Enum):
    GENERIC = "generic"
    POWER_SIGMA1 = "power_sigma1"
    SIGMA12 = "sigma12"
    SIGMA121 = "sigma121"
    SIGMA1212 = "sigma1212"
    EMPTY = "empty"


def _least_rotation(
    pairs: tuple[tuple[int, int], ...]
) -> tuple[tuple[int, int], ...]:
    return min(pairs[i:] + pairs[:i] for i in range(len(pairs)))


@dataclass(frozen=True)
class SchreierForm:
    """The conjugacy normal form C^k * eta' of a 3-braid."""

    k: int
    kind: EtaKind
    pairs: tuple[tuple[int, int], ...] = ()  # generic only, p_i, q_i >= 1
    power: int = 0  # POWER_SIGMA1 only, nonzero

    def __post_init__(self) -> None:
        if self.kind is EtaKind.GENERIC:
            if not self.pairs or any(p < 1 or q < 1 for p, q in self.pairs):
                raise ValueError("generic form needs pairs with p, q >= 1")
            object.__setattr__(self, "pairs", _least_rotation(self.pairs))
        elif self.pairs:
            raise ValueError("pairs only apply to the generic form")
        if self.kind is EtaKind.POWER_SIGMA1:
            if self.power == 0:
                raise ValueError("sigma_1 power must be nonzero")
        elif self.power:
            raise ValueError("power only applies to the power form")

    @property
    def s(self) -> int:
        """Number of syllable pairs in the generic shape (0 otherwise)."""
        return len(self.pairs)

    @property
    def generic(self) -> bool:
        return self.kind is EtaKind.GENERIC

    @property
    def degenerate_eta(self) -> bool:
        """True for the residues eta in {x, 1} with inferred sigma images."""
        return self.kind in (EtaKind.SIGMA121, EtaKind.EMPTY)

    @property
    def exponent_sum(self) -> int:
        base = {
            EtaKind.GENERIC: sum(q - p for p, q in self.pairs),
            EtaKind.POWER_SIGMA1: self.power,
            EtaKind.SIGMA12: 2,
            EtaKind.SIGMA121: 3,
            EtaKind.SIGMA1212: 4,
            EtaKind.EMPTY: 0,
        }[self.kind]
        return 6 * self.k + base

    def to_braid_word(self) -> BraidWord:
        """Expand back to letters, C as (sigma_1 sigma_2 sigma_1)^2."""
        letters: list[int] = []
        block = (1, 2, 1) if self.k >= 0 else (-1, -2, -1)
        letters.extend(block * (2 * abs(self.k)))
        if self.kind is EtaKind.GENERIC:
            for p, q in self.pairs:
                letters.extend([-1] * p)
                letters.extend([2] * q)
        elif self.kind is EtaKind.POWER_SIGMA1:
            letters.extend([1 if self.power > 0 else -1] * abs(self.power))
        elif self.kind is EtaKind.SIGMA12:
            letters.extend((1, 2))
        elif self.kind is EtaKind.SIGMA121:
            letters.extend((1, 2, 1))
        elif self.kind is EtaKind.SIGMA1212:
            letters.extend((1, 2, 1, 2))
        return BraidWord(3, tuple(letters))

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "eta_kind": self.kind.value,
            "pairs": [list(pq) for pq in self.pairs],
            "power": self.power if self.kind is EtaKind.POWER_SIGMA1 else None,
            "degenerate_eta": self.degenerate_eta,
        }


class HyperbolicityResult(NamedTuple):
    hyperbolic: bool
    reason: str | None


def _require_3braid(word: SyllableWord | BraidWord) -> SyllableWord:
    if word.n != 3:
        raise PreconditionError(f"Schreier forms need n = 3, got n = {word.n}")
    if isinstance(word, BraidWord):
        return cyclically_reduce_into_syllables(word)
    if not word.cyclically_reduced:
        return cyclically_reduce_into_syllables(word.to_braid_word())
    return word


def to_xy(word: SyllableWord | BraidWord) -> XYWord:
    """Rewrite a 3-braid word as a positive word in x and y.

    The input is cyclically reduced first (a conjugacy-safe move).
    """
    word = _require_3braid(word)
    runs: list[list] = []

    def push(ch: str, count: int) -> None:
        if runs and runs[-1][0] == ch:
            runs[-1][1] += count
        else:
            runs.append([ch, count])

    for m, r in word.syllables:
        if m == 1 and r > 0:
            for _ in range(r):
                push(Y, 2)
                push(X, 1)
        elif m == 1:
            for _ in range(-r):
                push(X, 1)
                push(Y, 1)
        elif r > 0:
            for _ in range(r):
                push(X, 1)
                push(Y, 2)
        else:
            for _ in range(-r):
                push(Y, 1)
                push(X, 1)
    return XYWord(tuple((ch, count) for ch, count in runs))


def normalize_xy(xy: XYWord) -> XYWord:
    """Exhaustively apply xx -> C^(-1) and yyy -> C, cyclically.

    Each application is an equality in B_3 (x^2 = C^(-1), y^3 = C), so the
    result represents the same element; j tracks the central exponent.  The
    residue has every x-run equal to 1 and every y-run at most 2, cyclically.
    """
    j = xy.j

    def modulo(ch: str, count: int) -> int:
        nonlocal j
        if ch == X:
            j -= count // 2
            return count % 2
        j += count // 3
        return count % 3

    stack: list[list] = []
    for ch, count in xy.runs:
        while count:
            if stack and stack[-1][0] == ch:
                count += stack.pop()[1]
            count = modulo(ch, count)
            if count:
                stack.append([ch, count])
                break
            break
    # the seam: first and last runs are cyclically adjacent
    while len(stack) >= 2 and stack[0][0] == stack[-1][0]:
        ch, count = stack.pop()
        residue = modulo(ch, stack[0][1] + count)
        if residue:
            stack[0][1] = residue
        else:
            stack.pop(0)
    if len(stack) == 1:
        ch, count = stack[0]
        residue = modulo(ch, count)
        stack = [[ch, residue]] if residue else []
    return XYWord(tuple((ch, count) for ch, count in stack), j)


def to_sigma_form(xy: XYWord) -> SchreierForm:
    """Translate a reduced xy residue into its sigma-side normal form.

    The input must already be normalized.  The lone residue x picks up one
    extra central factor: x = C^(-1) sigma_1 sigma_2 sigma_1.
    """
    runs, j = xy.runs, xy.j
    if not runs:
        return SchreierForm(k=j, kind=EtaKind.EMPTY)
    if len(runs) == 1:
        ch, count = runs[0]
        if ch == X:
            if count != 1:
                raise ValueError("residue not normalized")
            return SchreierForm(k=j - 1, kind=EtaKind.SIGMA121)
        if count == 1:
            return SchreierForm(k=j, kind=EtaKind.SIGMA12)
        if count == 2:
            return SchreierForm(k=j, kind=EtaKind.SIGMA1212)
        raise ValueError("residue not normalized")
    # alternating runs: read off the y-exponent following each x, cyclically
    total = len(runs)
    blocks: list[int] = []
    for i, (ch, count) in enumerate(runs):
        if ch != X:
            continue
        if count != 1:
            raise ValueError("residue not normalized")
        nxt_ch, nxt_count = runs[(i + 1) % total]
        if nxt_ch != Y or nxt_count > 2:
            raise ValueError("residue not normalized")
        blocks.append(nxt_count)
    if all(b == 1 for b in blocks):  # (xy)^p = sigma_1^(-p)
        return SchreierForm(k=j, kind=EtaKind.POWER_SIGMA1, power=-len(blocks))
    if all(b == 2 for b in blocks):  # (xy^2)^q = sigma_2^q ~ sigma_1^q
        return SchreierForm(k=j, kind=EtaKind.POWER_SIGMA1, power=len(blocks))
    count_blocks = len(blocks)
    start = next(
        i
        for i in range(count_blocks)
        if blocks[i] == 1 and blocks[i - 1] == 2
    )
    seq = [blocks[(start + i) % count_blocks] for i in range(count_blocks)]
    pairs: list[tuple[int, int]] = []
    i = 0
    while i < count_blocks:
        p = 0
        while i < count_blocks and seq[i] == 1:
            p += 1
            i += 1
        q = 0
        while i < count_blocks and seq[i] == 2:
            q += 1
            i += 1
        pairs.append((p, q))
    return SchreierForm(k=j, kind=EtaKind.GENERIC, pairs=tuple(pairs))


def schreier_normal_form(word: SyllableWord | BraidWord) -> SchreierForm:
    """The conjugacy normal form of a 3-braid word.

    >>> w = cyclically_reduce_into_syllables(BraidWord(3, (-1,) * 3 + (-2,) * 3))
    >>> form = schreier_normal_form(w)
    >>> form.k, form.kind.value, form.pairs
    (-1, 'generic', ((1, 1), (1, 1)))
    """
    return to_sigma_form(normalize_xy(to_xy(word)))


def is_generic(form: SchreierForm) -> bool:
    return form.generic


def _family_3braid(word: SyllableWord) -> SyllableWord:
    if word.n != 3:
        raise PreconditionError("direct reads need n = 3")
    if not check_main_lemma(word).passed:
        raise PreconditionError("direct reads need a family word")
    return word


def direct_read_k(word: SyllableWord) -> int:
    """Read k off a family 3-braid word without normalizing.

    k is minus the number of cyclic adjacencies (sigma_2 long syllable
    followed by sigma_1 long syllable).
    """
    word = _family_3braid(word)
    syl = word.syllables
    t = len(syl)
    count = 0
    for i in range(t):
        m, r = syl[i]
        m2, r2 = syl[(i + 1) % t]
        if m == 2 and r <= -3 and m2 == 1 and r2 <= -3:
            count += 1
    return -count


def direct_read_s(word: SyllableWord) -> int:
    """Read s off a family 3-braid word: the negative twist-region count."""
    word = _family_3braid(word)
    return sum(1 for _, r in word.syllables if r < 0)


def conjugate_3braids(
    a: SyllableWord | BraidWord, b: SyllableWord | BraidWord
) -> bool:
    """Whether two 3-braids are conjugate in B_3."""
    return schreier_normal_form(a) == schreier_normal_form(b)


def _two_syllable_word(p: int, q: int) -> SyllableWord:
    syllables: list[tuple[int, int]] = []
    if p:
        syllables.append((1, p))
    if q:
        syllables.append((2, q))
    return SyllableWord(3, tuple(syllables))


# Exponent window for the degenerate two-syllable cases.  Every closed
# pattern below is exact once min(|p|, |q|) >= 3 (>= 5 for the min = 1 rows),
# so a window of 8 leaves a wide safety margin.
_TWO_SYLLABLE_WINDOW = 8


def _two_syllable_candidates(form: SchreierForm) -> list[tuple[int, int]]:
    """Exponent pairs (p, q) whose word sigma_1^p sigma_2^q could have this form.

    The generic normal forms of two-syllable words, for a = |p|, b = |q|:

        p < 0 < q (either order):  k = 0,  pairs ((a, b))
        p, q <= -3:                k = -1, pairs ((a - 2, 1), (b - 2, 1))
        p = -2, q <= -3 (or sym):  k = -1, pairs ((b - 1, 2))
        p = -1, q <= -5 (or sym):  k = -1, pairs ((b - 4, 1))
        p, q >= 3:                 k = +1, pairs ((1, a - 2), (1, b - 2))
        p = 2, q >= 3 (or sym):    k = +1, pairs ((2, b - 2))
        p = 1, q >= 5 (or sym):    k = +1, pairs ((1, b - 4))

    Inverting these yields every candidate with min(a, b) beyond the window;
    the window itself covers the degenerate remainder.  Candidates are only
    proposals - the caller verifies each by computing its actual form - so
    the list errs on the generous side.
    """
    e = form.exponent_sum
    candidates: set[tuple[int, int]] = set()
    for v in range(-_TWO_SYLLABLE_WINDOW, _TWO_SYLLABLE_WINDOW + 1):
        candidates.add((v, e - v))
        candidates.add((e - v, v))
    pairs = form.pairs
    if form.k == 0 and len(pairs) == 1:
        ((a, b),) = pairs
        candidates.add((-a, b))
        candidates.add((b, -a))
    elif form.k == -1:
        if len(pairs) == 2 and pairs[0][1] == 1 and pairs[1][1] == 1:
            alpha, beta = pairs[0][0], pairs[1][0]
            candidates.add((-(alpha + 2), -(beta + 2)))
            candidates.add((-(beta + 2), -(alpha + 2)))
        elif len(pairs) == 1:
            ((a, b),) = pairs
            if b == 1:
                candidates.add((-1, -(a + 4)))
                candidates.add((-(a + 4), -1))
            elif b == 2:
                candidates.add((-2, -(a + 1)))
                candidates.add((-(a + 1), -2))
    elif form.k == 1:
        if len(pairs) == 2 and pairs[0][0] == 1 and pairs[1][0] == 1:
            alpha, beta = pairs[0][1], pairs[1][1]
            candidates.add((alpha + 2, beta + 2))
            candidates.add((beta + 2, alpha + 2))
        elif len(pairs) == 1:
            ((a, b),) = pairs
            if a == 1:
                candidates.add((1, b + 4))
                candidates.add((b + 4, 1))
            elif a == 2:
                candidates.add((2, b + 2))
                candidates.add((b + 2, 2))
    return sorted(pq for pq in candidates if pq[0] + pq[1] == e)


def is_hyperbolic_closure_3braid(
    word: SyllableWord | BraidWord,
) -> HyperbolicityResult:
    """Decide hyperbolicity of the closure of a 3-braid.

    Non-generic forms are not hyperbolic.  Generic forms are hyperbolic
    unless conjugate to some sigma_1^p sigma_2^q; candidate exponent pairs
    are read off the form (see _two_syllable_candidates) and each one is
    checked by direct normal-form comparison.
    """
    form = schreier_normal_form(word)
    if not form.generic:
        return HyperbolicityResult(False, "non-generic normal form")
    for p, q in _two_syllable_candidates(form):
        if schreier_normal_form(_two_syllable_word(p, q)) == form:
            return HyperbolicityResult(
                False, f"conjugate to sigma1^{p} sigma2^{q}"
            )
    return HyperbolicityResult(True, None)
