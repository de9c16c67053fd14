"""Word-metric machinery: witnesses, lower bounds, balls, and depth certificates.

Distances are taken in the 17-move metric of the generating set
``A = {a, s, t, at, ta, ata, as, sa, asa}`` together with inverses; see
:mod:`lampgrid.words`.  The central geometric object is the hexagon

    H_n = { (p, q) : |p| <= n, |q| <= n, |p + q| <= n }

with corners (n,0), (-n,0), (0,n), (0,-n), (n,-n), (-n,n).  Any element
whose lamps and position fit in H_n admits a witness word of length at
most 6n (:func:`witness_word`), and the triple-lamp elements produced by
:func:`make_gn` need exactly 6n, which is what the depth certificates in
:func:`certify_depth` are built on.

Breadth-first searches here are sequential and deterministic: given the
same inputs they produce identical counts and certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Element,
    Pos,
    identity,
    multiply,
    press_effect,
)
from .gf2 import solve_subset_xor
from .words import (
    EMPTY_METRIC,
    METRIC,
    Letter,
    Word,
    a_length,
    canonical_word,
    evaluate,
    format_word,
    move_elements,
)

DEFAULT_MEMORY_LIMIT_MB = 2048

# Rough CPython accounting for one stored BFS state; used for the soft
# memory cap, not for exact measurement.
_ELEMENT_COST = 160
_LAMP_COST = 100


class SingularSystemError(ValueError):
    """A press system that was expected to be solvable is not."""


class RadiusExceeded(RuntimeError):
    """The distance is only bounded below: it exceeds the search radius."""

    def __init__(self, max_radius: int):
        self.max_radius = max_radius
        super().__init__(
            f"distance exceeds search radius {max_radius}; it is at least {max_radius + 1}"
        )


class MemoryCapExceeded(RuntimeError):
    """State storage for a search outgrew the configured cap."""


def hex_norm(pos: Pos) -> int:
    """Least n with ``pos`` inside the radius-n hexagon."""
    p, q = pos
    return max(abs(p), abs(q), abs(p + q))


def in_hex(pos: Pos, n: int) -> bool:
    return hex_norm(pos) <= n


def hex_param(g: Element) -> int:
    """Least n such that every lamp of ``g`` and its position fit in H_n."""
    value = hex_norm(g.pos)
    for lamp in g.lamps:
        bound = hex_norm(lamp)
        if bound > value:
            value = bound
    return value


def in_T(pos: Pos, n: int) -> bool:
    """Membership in the triangle with corners (0,0), (0,-n), (n,-n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p, q = pos
    return 0 <= p <= n and -n <= q <= 0 and p <= -q


@dataclass(frozen=True)
class TrapezoidSolution:
    """Rows of bits over a base sequence, with the exceptional entries marked.

    Row 0 is the base; each row above is one entry shorter, left-aligned.
    Every non-summit entry equals the mod-2 sum of its at-most-two upper
    neighbours; summits can occur only at the left end of rows 0..rows-2
    and anywhere in the top row.  When the base occupies the t-axis
    segment starting at position ``j0``, the summit ``(row, index)`` names
    a button at grid position ``(row, j0 + index)``, and pressing exactly
    the summit buttons reproduces the base pattern on that segment.
    """

    base: tuple[int, ...]
    rows: int
    summits: frozenset[tuple[int, int]]


def trapezoid_summits(base, rows: int) -> TrapezoidSolution:
    """Build the trapezoid over ``base`` bottom-up, one entry at a time.

    Each new row is filled right to left, choosing every entry so that the
    entry below-right of it satisfies its mod-2 relation.  Violations then
    survive only at left ends and in the top row; those are the summits.
    """
    bits = [int(b) for b in base]
    if any(b not in (0, 1) for b in bits):
        raise ValueError("base must consist of zeros and ones")
    m = len(bits)
    if not 1 <= rows <= m:
        raise ValueError(f"rows must be in 1..{m}, got {rows}")
    levels: list[list[int]] = [bits]
    for lev in range(1, rows):
        width = m - lev
        row = [0] * width
        for u in range(width - 1, -1, -1):
            right = row[u + 1] if u + 1 < width else 0
            row[u] = levels[lev - 1][u + 1] ^ right
        levels.append(row)
    summits = set()
    for lev in range(rows - 1):
        if levels[lev][0] != levels[lev + 1][0]:
            summits.add((lev, 0))
    top = rows - 1
    for u, bit in enumerate(levels[top]):
        if bit:
            summits.add((top, u))
    return TrapezoidSolution(tuple(bits), rows, frozenset(summits))


def arc_press_solve(target, arc, segment) -> set[Pos]:
    """Subset of ``arc`` whose presses reproduce ``target`` on ``segment``.

    ``segment`` lists the lampstand positions on which equality is
    enforced; effects outside it are ignored (callers counteract them
    separately).  Elimination consumes columns in arc order and never
    selects redundant ones, so an empty target yields the empty press set.
    Raises :class:`SingularSystemError` when no subset works.
    """
    index = {pos: i for i, pos in enumerate(segment)}
    if len(index) != len(list(segment)):
        raise ValueError("segment positions must be distinct")
    want = 0
    for lamp in target:
        if lamp not in index:
            raise SingularSystemError(f"target lamp {lamp} lies outside the segment")
        want |= 1 << index[lamp]
    arc = list(arc)
    columns = []
    for vertex in arc:
        mask = 0
        for lamp in press_effect(vertex):
            bit = index.get(lamp)
            if bit is not None:
                mask |= 1 << bit
        columns.append(mask)
    combo = solve_subset_xor(columns, want)
    if combo is None:
        raise SingularSystemError(
            "press system is singular on the segment; no subset of the arc matches"
        )
    return {arc[i] for i in range(len(arc)) if combo >> i & 1}


# Letter for one unit move, keyed by (delta, press before, press after).
# Reading right to left, "at" steps in t and then presses, "ta" presses
# and then steps, and inverses swap the roles.
_MOVE_LETTERS: dict[tuple[Pos, bool, bool], Letter] = {}
for _delta, _plain, _pre, _post, _both in (
    ((0, 1), ("t", 1), ("ta", 1), ("at", 1), ("ata", 1)),
    ((0, -1), ("t", -1), ("at", -1), ("ta", -1), ("ata", -1)),
    ((1, 0), ("s", 1), ("sa", 1), ("as", 1), ("asa", 1)),
    ((-1, 0), ("s", -1), ("as", -1), ("sa", -1), ("asa", -1)),
):
    _MOVE_LETTERS[(_delta, False, False)] = Letter(*_plain)
    _MOVE_LETTERS[(_delta, True, False)] = Letter(*_pre)
    _MOVE_LETTERS[(_delta, False, True)] = Letter(*_post)
    _MOVE_LETTERS[(_delta, True, True)] = Letter(*_both)


def _walk_to(path: list[Pos], target: Pos) -> None:
    # Unit steps, adjusting p before q.
    p, q = path[-1]
    tp, tq = target
    step = 1 if tp > p else -1
    while p != tp:
        p += step
        path.append((p, q))
    step = 1 if tq > q else -1
    while q != tq:
        q += step
        path.append((p, q))


def _word_from_path(path: list[Pos], presses: set[Pos]) -> Word:
    """Fuse presses into the moves of ``path`` at each press's first visit."""
    times = set()
    for pos in presses:
        try:
            times.add(path.index(pos))
        except ValueError:
            raise RuntimeError(f"press position {pos} is not on the planned path") from None
    moves = len(path) - 1
    if moves == 0:
        return Word((Letter("a", 1),), METRIC) if times else EMPTY_METRIC
    chrono = []
    for i in range(moves):
        pre = i == 0 and 0 in times
        post = (i + 1) in times
        delta = (path[i + 1][0] - path[i][0], path[i + 1][1] - path[i][1])
        chrono.append(_MOVE_LETTERS[(delta, pre, post)])
    return Word(tuple(reversed(chrono)), METRIC)


def witness_word(g: Element) -> Word:
    """Word over the 17 moves evaluating to ``g`` with length at most 6n.

    Here n = :func:`hex_param`\\ (g).  The construction plans a lamplighter
    tour of at most 6n unit moves together with button presses at visited
    vertices, then fuses every press into an adjacent move so presses cost
    nothing.  Four plans cover the position (p, q):

    * p >= 0 always starts with an out-and-back along the negative s-axis,
      lighting the off-axis lamps.
    * p >= 0 with (p, q) in the lower triangle then tours the whole t-axis
      segment, pressing lamps directly.
    * p >= 0 otherwise descends the t-axis and climbs a trapezoid whose
      summit presses realise the t-axis pattern from positions on the
      remaining two arcs.
    * p < 0 tours the t-axis, then walks an arc parallel to the s-axis at
      height +/-n; presses on that arc are solved over GF(2) to realise
      the s-axis lamps, and their side effects on the t-axis are
      counteracted by extra presses on the segment already walked.

    The lone element that presses only the origin button is returned as
    the single letter ``a``; its length 1 exceeds the vacuous bound 6*0,
    the one exception to the estimate.
    """
    n = hex_param(g)
    if n == 0:
        if g.lamps:
            return Word((Letter("a", 1),), METRIC)
        return EMPTY_METRIC
    p, q = g.pos
    s_targets = {lamp for lamp in g.lamps if lamp[1] == 0 and lamp[0] < 0}
    t_targets = {lamp for lamp in g.lamps if lamp[0] == 0}
    path: list[Pos] = [(0, 0)]
    if p >= 0:
        _walk_to(path, (-n, 0))
        _walk_to(path, (0, 0))
        presses = set(s_targets)
        if in_T(g.pos, n):
            _walk_to(path, (0, n))
            _walk_to(path, (0, -n))
            _walk_to(path, (0, q))
            _walk_to(path, (p, q))
            presses |= t_targets
        else:
            _walk_to(path, (0, -n))
            _walk_to(path, (0, -p))
            _walk_to(path, (p, -p))
            _walk_to(path, (p, n - p))
            _walk_to(path, (p, q))
            presses |= {lamp for lamp in t_targets if lamp[1] < -p}
            base_bits = [1 if (0, j) in t_targets else 0 for j in range(-p, n + 1)]
            solution = trapezoid_summits(base_bits, p + 1)
            presses |= {(row, -p + idx) for row, idx in solution.summits}
    else:
        arc_q = -n if q <= 0 else n
        _walk_to(path, (0, -arc_q))
        _walk_to(path, (0, arc_q))
        _walk_to(path, (-n, arc_q))
        arc = [(-k, arc_q) for k in range(1, n + 1)]
        segment = [(-k, 0) for k in range(1, n + 1)]
        chosen = arc_press_solve(s_targets, arc, segment)
        presses = set(chosen)
        achieved: set[Pos] = set()
        for vertex in chosen:
            achieved ^= press_effect(vertex)
        residual = g.lamps ^ frozenset(achieved)
        for lamp in residual:
            if lamp[0] != 0 or abs(lamp[1]) > n:
                raise RuntimeError(f"arc presses left residue {lamp} off the toured t-axis")
        presses |= residual
        _walk_to(path, (p, arc_q))
        _walk_to(path, (p, q))
    return _word_from_path(path, presses)


def make_gn(n: int) -> tuple[Element, Word]:
    """The triple-lamp element at depth n and its length-6n spelling.

    The element lights (-n, 0), (0, n) and (0, -n) and returns the
    lamplighter to the origin.  The word tours exactly those three lamps,
    fusing each press into a move, for 6n letters total.
    """
    if n < 1:
        raise ValueError("make_gn requires n >= 1")
    element = Element(frozenset({(-n, 0), (0, n), (0, -n)}), (0, 0))
    letters = (
        [Letter("s", 1)] * (n - 1)
        + [Letter("sa", 1)]
        + [Letter("s", -1)] * n
        + [Letter("t", 1)] * (n - 1)
        + [Letter("ta", 1)]
        + [Letter("t", -1)] * (2 * n)
        + [Letter("at", 1)]
        + [Letter("t", 1)] * (n - 1)
    )
    return element, Word(tuple(letters), METRIC)


def tour_lower_bound(n: int) -> int:
    """Exact length of a shortest closed lattice walk from the origin that
    visits the three lines p+q = n, q = -n and p = -n.

    Computed by breadth-first search over (position, visited-line subset)
    states with positions confined to the square [-2n, 2n]^2.  Equals 6n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    size = 4 * n + 1
    off = 2 * n
    coords = np.arange(-2 * n, 2 * n + 1)
    P = coords[:, None]
    Q = coords[None, :]
    linemask = ((P + Q == n) * 1 + (Q == -n) * 2 + (P == -n) * 4).astype(np.uint8)
    line_cells = [linemask == v for v in range(8)]
    reach = np.zeros((8, size, size), dtype=bool)
    frontier = np.zeros_like(reach)
    reach[0, off, off] = True
    frontier[0, off, off] = True
    for depth in range(1, 8 * n + 2):
        new_frontier = np.zeros_like(reach)
        progressed = False
        for mask in range(8):
            layer = frontier[mask]
            if not layer.any():
                continue
            moved = np.zeros((size, size), dtype=bool)
            moved[1:, :] |= layer[:-1, :]
            moved[:-1, :] |= layer[1:, :]
            moved[:, 1:] |= layer[:, :-1]
            moved[:, :-1] |= layer[:, 1:]
            for extra in range(8):
                cells = moved & line_cells[extra]
                if not cells.any():
                    continue
                combined = mask | extra
                new = cells & ~reach[combined]
                if new.any():
                    reach[combined] |= new
                    new_frontier[combined] |= new
                    progressed = True
        if reach[7, off, off]:
            return depth
        if not progressed:
            break
        frontier = new_frontier
    raise RuntimeError("tour search exhausted its window without closing the tour")


def _move_states() -> list[Element]:
    return [el for _, el in move_elements()]


def ball_with_depths(
    radius: int, memory_limit_mb: int = DEFAULT_MEMORY_LIMIT_MB
) -> dict[Element, int]:
    """All elements of word length at most ``radius``, mapped to their length.

    Canonicalized breadth-first search: states are deduplicated by their
    normal form, each new layer prepends one of the 17 moves.  Expansion
    order is fixed, so the mapping (and its iteration order) is
    deterministic.  Raises :class:`MemoryCapExceeded` when the estimated
    state storage exceeds the cap.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    budget = memory_limit_mb * 1024 * 1024
    spent = 0
    depths: dict[Element, int] = {identity(): 0}
    frontier = [identity()]
    moves = _move_states()
    for depth in range(1, radius + 1):
        nxt: list[Element] = []
        for state in frontier:
            for mv in moves:
                child = multiply(mv, state)
                if child not in depths:
                    depths[child] = depth
                    spent += _ELEMENT_COST + _LAMP_COST * len(child.lamps)
                    if spent > budget:
                        raise MemoryCapExceeded(
                            f"ball of radius {radius} exceeds the {memory_limit_mb} MiB cap"
                        )
                    nxt.append(child)
        frontier = nxt
    return depths


def sphere_sizes(
    r_max: int, memory_limit_mb: int = DEFAULT_MEMORY_LIMIT_MB
) -> list[int]:
    """Sizes |S(0)|, ..., |S(r_max)| of the spheres about the identity."""
    depths = ball_with_depths(r_max, memory_limit_mb)
    counts = [0] * (r_max + 1)
    for depth in depths.values():
        counts[depth] += 1
    return counts


def exact_distance(g: Element, max_r: int) -> int:
    """Word length of ``g``, exact whenever it is at most ``max_r``.

    Bidirectional breadth-first search over states, expanding the smaller
    frontier one full layer at a time.  Raises :class:`RadiusExceeded`
    when the distance provably exceeds ``max_r``; the exception carries
    the radius, so the result is a lower bound rather than a number.
    """
    if max_r < 1:
        raise ValueError("max_r must be positive")
    if g == identity():
        return 0
    moves = _move_states()
    dist_a: dict[Element, int] = {identity(): 0}
    dist_b: dict[Element, int] = {g: 0}
    frontier_a = [identity()]
    frontier_b = [g]
    radius_a = radius_b = 0
    best: int | None = None
    while True:
        if best is not None and best <= radius_a + radius_b:
            return best
        if radius_a + radius_b >= max_r:
            if best is not None and best <= max_r:
                return best
            raise RadiusExceeded(max_r)
        if len(frontier_a) <= len(frontier_b):
            own, other, frontier = dist_a, dist_b, frontier_a
            radius_a += 1
            layer = radius_a
        else:
            own, other, frontier = dist_b, dist_a, frontier_b
            radius_b += 1
            layer = radius_b
        nxt: list[Element] = []
        for state in frontier:
            for mv in moves:
                child = multiply(state, mv)
                if child not in own:
                    own[child] = layer
                    nxt.append(child)
                    across = other.get(child)
                    if across is not None:
                        candidate = layer + across
                        if best is None or candidate < best:
                            best = candidate
        if own is dist_a:
            frontier_a = nxt
        else:
            frontier_b = nxt
        if not nxt:
            # The group is infinite; an empty frontier means max_r boxed us in.
            if best is not None:
                return best
            raise RadiusExceeded(max_r)


@dataclass(frozen=True)
class DepthCertificate:
    """Machine-checkable record that a radius-k neighbourhood stays in a ball.

    ``verdict == "certified"`` means: every element within distance k of
    the anchor element has word length at most ``ball_radius`` (= 6n), so
    the anchor's dead-end depth is at least k+1.
    """

    n: int
    k: int
    ball_radius: int
    neighborhood_size: int
    max_witness_length: int
    verdict: str
    failure_witness: str | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "ball_radius": self.ball_radius,
            "neighborhood_size": self.neighborhood_size,
            "max_witness_length": self.max_witness_length,
            "verdict": self.verdict,
            "failure_witness": self.failure_witness,
        }

    def describe(self) -> str:
        lines = [
            f"anchor: triple-lamp element of length exactly {self.ball_radius} (= 6*{self.n})",
            f"checked: all {self.neighborhood_size} elements within distance {self.k}",
            f"longest witness found: {self.max_witness_length}",
        ]
        if self.verdict == "certified":
            lines.append(
                f"verdict: certified; dead-end depth of the anchor is at least {self.k + 1}"
            )
        else:
            lines.append(f"verdict: FAILED at neighbour offset {self.failure_witness}")
        lines.append(
            "note: the 6n lower bound for the anchor rests on the three-line tour"
            " bound (tour_lower_bound(n) == 6n); for n = 1 it is also confirmed"
            " unconditionally by exhaustive search."
        )
        return "\n".join(lines)


def certify_depth(
    n: int, k: int, memory_limit_mb: int = DEFAULT_MEMORY_LIMIT_MB
) -> DepthCertificate:
    """Certify that the anchor element of :func:`make_gn` has depth > k.

    The neighbourhood of the anchor u consists of the products u*b for b
    in the radius-k ball.  Word length is inversion-invariant and u is an
    involution, so |u*b| = |b^-1*u|, and b -> b^-1 permutes the ball; the
    certifier therefore bounds the left-translates b*u instead.  Those
    stay inside the radius-n hexagon (k <= n grid steps from the origin,
    and presses inside the hexagon only toggle lamps inside it), so each
    admits a witness word, which is replayed and measured against 6n.

    Requires 0 <= k <= n; the hexagon argument does not reach further.
    """
    if n < 1:
        raise ValueError("certify_depth requires n >= 1")
    if not 0 <= k <= n:
        raise ValueError("certify_depth requires 0 <= k <= n")
    anchor, _ = make_gn(n)
    if multiply(anchor, anchor) != identity():
        raise RuntimeError("anchor is expected to be an involution")
    bound = 6 * n
    depths = ball_with_depths(k, memory_limit_mb)
    max_length = 0
    for b in depths:
        translate = multiply(b, anchor)
        if hex_param(translate) > n:
            return DepthCertificate(
                n, k, bound, len(depths), max_length, "failed",
                format_word(canonical_word(b)),
            )
        witness = witness_word(translate)
        if evaluate(witness) != translate:
            raise RuntimeError("witness failed to replay; witness builder is broken")
        length = a_length(witness)
        if length > bound:
            return DepthCertificate(
                n, k, bound, len(depths), max_length, "failed",
                format_word(canonical_word(b)),
            )
        if length > max_length:
            max_length = length
    return DepthCertificate(n, k, bound, len(depths), max_length, "certified", None)
