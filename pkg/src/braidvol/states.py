"""The all-A Kauffman state of a closed braid diagram.

Draw the braid vertically, one letter per level, and close it in an annulus
with one closure arc per strand position.  The A-smoothing of a positive
letter keeps both strands passing straight through (two *pass* arcs) and
leaves a horizontal A-segment between them; the A-smoothing of a negative
letter joins the two strands above the crossing (a *cap*) and below it
(a *cup*), leaving a vertical A-segment between cap and cup.  Smoothing every
crossing turns the diagram into a disjoint union of embedded circles, the
state circles, each with a winding number 0 or 1 around the annulus core.

The circles carry a taxonomy driven by their *support* (the set of twist-
region columns contributing a cap or cup to the circle):

* empty support: the circle runs straight around the annulus (nonwandering);
* support of size one: either one of the small circles stacked inside a
  negative twist region (small inner), or a contractible circle framing a
  positive twist region (medium inner);
* support of size two or more: a wandering circle, essential exactly when it
  winds around the annulus.

A-segments double as the edges of the state graph on the circles; collapsing
parallel edges gives the reduced graph whose negative Euler characteristic
e - v feeds every volume bound downstream.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, replace
from enum import Enum

from .errors import OracleError, PreconditionError
from .words import SyllableWord

__all__ = [
    "ArcKind",
    "SegmentOrientation",
    "CircleClass",
    "Arc",
    "Segment",
    "StateCircle",
    "AllAState",
    "ReducedStateGraph",
    "resolve_all_A",
    "classify_circles",
    "is_A_adequate",
    "satisfies_TELC",
    "twist_counts",
    "is_connected_closure",
    "reduced_graph",
    "check_oc_identity",
]


class ArcKind(str, Enum):
    PASS = "pass"
    CAP = "cap"
    CUP = "cup"
    CLOSURE = "closure"


class SegmentOrientation(str, Enum):
    HORIZONTAL = "horizontal"  # A-segment of a positive crossing
    VERTICAL = "vertical"  # A-segment of a negative crossing


class CircleClass(str, Enum):
    SMALL_INNER = "small_inner"
    MEDIUM_INNER = "medium_inner"
    ESSENTIAL_WANDERING = "essential_wandering"
    NON_ESSENTIAL_WANDERING = "non_essential_wandering"
    NONWANDERING = "nonwandering"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class Arc:
    """One smooth piece of the state: pass, cap, cup, or closure arc.

    ``column`` is the generator index for caps and cups and the strand
    position for pass and closure arcs.  ``level`` is the letter index, or -1
    for closure arcs.  ``ends`` are internal grid-point ids used for tracing;
    for closure arcs the pair is (bottom point, top point).
    """

    id: int
    kind: ArcKind
    column: int
    level: int
    ends: tuple[int, int]


@dataclass(frozen=True)
class Segment:
    """An A-segment: crossing id, owning syllable, orientation, endpoints.

    Endpoints are circle ids; they coincide exactly when the segment joins a
    circle to itself, the obstruction to A-adequacy.
    """

    crossing: int
    syllable: int
    orientation: SegmentOrientation
    endpoints: tuple[int, int]


@dataclass(frozen=True)
class StateCircle:
    """A state circle: its arcs in traversal order, winding, and class.

    ``arc_reversed[i]`` says arc ``arcs[i]`` is traversed from its second end
    to its first.  ``winding`` is the absolute homology degree around the
    annulus, always 0 or 1 for an embedded circle.
    """

    id: int
    arcs: tuple[int, ...]
    arc_reversed: tuple[bool, ...]
    winding: int
    support: frozenset[int]
    klass: CircleClass = CircleClass.UNCLASSIFIED


@dataclass(frozen=True)
class ReducedStateGraph:
    """The state graph after collapsing parallel edges."""

    vertices: int
    edges: int
    neg_chi: int  # e - v, the negative Euler characteristic
    unreduced_edges: int


@dataclass(frozen=True)
class AllAState:
    """The full all-A state of one closed-braid diagram."""

    word: SyllableWord
    circles: tuple[StateCircle, ...]
    segments: tuple[Segment, ...]
    arcs: tuple[Arc, ...]

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def crossings(self) -> int:
        return self.word.crossings

    @property
    def census(self) -> dict[CircleClass, int]:
        counts = {klass: 0 for klass in CircleClass}
        for circle in self.circles:
            counts[circle.klass] += 1
        return counts

    @property
    def m(self) -> int:
        """Number of nonessential wandering circles."""
        return self.census[CircleClass.NON_ESSENTIAL_WANDERING]


def _expand_letters(word: SyllableWord) -> list[tuple[int, int, int]]:
    letters: list[tuple[int, int, int]] = []
    for si, (m, r) in enumerate(word.syllables):
        letters.extend([(m, 1 if r > 0 else -1, si)] * abs(r))
    return letters


def resolve_all_A(word: SyllableWord) -> AllAState:
    """Smooth every crossing the A-way and trace the state circles.

    Circles come back unclassified; run :func:`classify_circles` for the
    taxonomy.  Works for any syllable word, reduced or not.
    """
    n = word.n
    letters = _expand_letters(word)
    c = len(letters)

    def point(level: int, col: int) -> int:
        return level * n + (col - 1)

    arcs: list[Arc] = []
    pass_at: dict[tuple[int, int], int] = {}  # (letter, column) -> arc id
    cap_at: dict[int, int] = {}
    cup_at: dict[int, int] = {}

    def add(kind: ArcKind, column: int, level: int, ends: tuple[int, int]) -> int:
        arc = Arc(len(arcs), kind, column, level, ends)
        arcs.append(arc)
        return arc.id

    for idx, (g, sign, _si) in enumerate(letters):
        if sign < 0:
            cap_at[idx] = add(
                ArcKind.CAP, g, idx, (point(idx, g), point(idx, g + 1))
            )
            cup_at[idx] = add(
                ArcKind.CUP, g, idx, (point(idx + 1, g), point(idx + 1, g + 1))
            )
            smoothed = (g, g + 1)
        else:
            smoothed = ()
        for col in range(1, n + 1):
            if col in smoothed:
                continue
            pass_at[(idx, col)] = add(
                ArcKind.PASS, col, idx, (point(idx, col), point(idx + 1, col))
            )
    for col in range(1, n + 1):
        add(ArcKind.CLOSURE, col, -1, (point(c, col), point(0, col)))

    if c == 0:
        # each closure arc is already a full circle around the annulus
        circles = tuple(
            StateCircle(j, (arcs[j].id,), (False,), 1, frozenset())
            for j in range(n)
        )
        return AllAState(word, circles, (), tuple(arcs))

    incident: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for arc in arcs:
        incident[arc.ends[0]].append((arc.id, 0))
        incident[arc.ends[1]].append((arc.id, 1))

    circle_of = [-1] * len(arcs)
    circles: list[StateCircle] = []
    for start in range(len(arcs)):
        if circle_of[start] != -1:
            continue
        cid = len(circles)
        seq: list[int] = []
        flips: list[bool] = []
        winding = 0
        support: set[int] = set()
        ai, from_end = start, 0
        while True:
            circle_of[ai] = cid
            arc = arcs[ai]
            seq.append(ai)
            flips.append(from_end == 1)
            if arc.kind is ArcKind.CLOSURE:
                # bottom-to-top traversal counts +1 around the annulus
                winding += 1 if from_end == 0 else -1
            elif arc.kind is not ArcKind.PASS:
                support.add(arc.column)
            exit_point = arc.ends[1 - from_end]
            first, second = incident[exit_point]
            ai, from_end = second if first[0] == ai else first
            if ai == start and from_end == 0:
                break
        if abs(winding) > 1:
            raise OracleError(
                f"embedded state circle traced with winding {winding}"
            )
        circles.append(
            StateCircle(cid, tuple(seq), tuple(flips), abs(winding), frozenset(support))
        )

    segments: list[Segment] = []
    for idx, (g, sign, si) in enumerate(letters):
        if sign > 0:
            ends = (
                circle_of[pass_at[(idx, g)]],
                circle_of[pass_at[(idx, g + 1)]],
            )
            orientation = SegmentOrientation.HORIZONTAL
        else:
            ends = (circle_of[cap_at[idx]], circle_of[cup_at[idx]])
            orientation = SegmentOrientation.VERTICAL
        segments.append(Segment(idx, si, orientation, ends))

    return AllAState(word, tuple(circles), tuple(segments), tuple(arcs))


def classify_circles(state: AllAState) -> AllAState:
    """Fill in the circle taxonomy; returns a new state, input untouched.

    Rules, in order: empty support is nonwandering; support meeting two or
    more columns wanders (essential iff winding 1); single-column support is
    a small inner circle when its only two incident segments are the vertical
    segments of consecutive crossings in one negative syllable, else medium
    inner when contractible, else left unclassified.
    """
    incident: dict[int, list[Segment]] = defaultdict(list)
    for seg in state.segments:
        for cid in set(seg.endpoints):
            incident[cid].append(seg)

    def klass_of(circle: StateCircle) -> CircleClass:
        if not circle.support:
            return CircleClass.NONWANDERING
        if len(circle.support) >= 2:
            if circle.winding == 1:
                return CircleClass.ESSENTIAL_WANDERING
            return CircleClass.NON_ESSENTIAL_WANDERING
        segs = incident[circle.id]
        if (
            len(segs) == 2
            and all(s.orientation is SegmentOrientation.VERTICAL for s in segs)
            and segs[0].syllable == segs[1].syllable
            and abs(segs[0].crossing - segs[1].crossing) == 1
        ):
            return CircleClass.SMALL_INNER
        if circle.winding == 0:
            return CircleClass.MEDIUM_INNER
        return CircleClass.UNCLASSIFIED

    circles = tuple(replace(c, klass=klass_of(c)) for c in state.circles)
    return replace(state, circles=circles)


def is_A_adequate(state: AllAState) -> bool:
    """No A-segment joins a circle to itself."""
    return all(a != b for a, b in (s.endpoints for s in state.segments))


def satisfies_TELC(state: AllAState) -> bool:
    """The two-edge loop condition.

    Every set of two or more segments joining the same circle pair must come
    from a single positive syllable (the parallel rungs of a short twist
    region); two vertical segments of a long region landing on one pair
    violate it.
    """
    groups: dict[tuple[int, int], list[Segment]] = defaultdict(list)
    for seg in state.segments:
        a, b = seg.endpoints
        groups[(a, b) if a <= b else (b, a)].append(seg)
    for group in groups.values():
        if len(group) < 2:
            continue
        if any(s.orientation is not SegmentOrientation.HORIZONTAL for s in group):
            return False
        if len({s.syllable for s in group}) != 1:
            return False
    return True


def twist_counts(word: SyllableWord) -> tuple[int, int, int]:
    """(t, t_plus, t_minus) for a cyclically reduced word.

    Syllables of the reduced form are exactly the twist regions of the
    closure diagram, short (positive) or long (negative).
    """
    if not word.cyclically_reduced:
        raise PreconditionError("twist counts need a cyclically reduced word")
    t_plus = sum(1 for _, r in word.syllables if r > 0)
    t_minus = len(word.syllables) - t_plus
    return len(word.syllables), t_plus, t_minus


def is_connected_closure(word: SyllableWord) -> bool:
    """Whether the closure diagram is connected: every generator occurs."""
    used = {m for m, _ in word.syllables}
    return all(g in used for g in range(1, word.n))


def reduced_graph(state: AllAState) -> ReducedStateGraph:
    """Collapse parallel A-segments; vertices are the state circles."""
    pairs = {
        (a, b) if a <= b else (b, a)
        for a, b in (s.endpoints for s in state.segments)
    }
    v = len(state.circles)
    e = len(pairs)
    return ReducedStateGraph(v, e, e - v, len(state.segments))


def check_oc_identity(state: AllAState) -> bool | None:
    """Whether e(G') - v(G') = t(D) - #(circles other than small inner).

    Returns None (not applicable) unless the word is cyclically reduced and
    the state is fully classified, A-adequate, TELC, and connected.
    """
    if not state.word.cyclically_reduced:
        return None
    census = state.census
    if census[CircleClass.UNCLASSIFIED]:
        return None
    if not (
        is_A_adequate(state)
        and satisfies_TELC(state)
        and is_connected_closure(state.word)
    ):
        return None
    t, _, _ = twist_counts(state.word)
    others = len(state.circles) - census[CircleClass.SMALL_INNER]
    return reduced_graph(state).neg_chi == t - others
