"""Words, walls, pivots and constrained reachability on dyoke graphs.

A path is a repetition-free vertex sequence with consecutive vertices
adjacent; its word is the letter sequence realizing it, stored in
application order.  A wall of a path to zero is a shift index the word
never uses (with the two directed outer boundaries -1 and m+1).  A pivot
of a vertex is a prefix-sum position divisible by n; shortest paths to
zero that keep a given wall are the workhorse for all distance bounds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .core import (
    Direction,
    DomainError,
    GraphParams,
    Letter,
    ParamMismatch,
    Vertex,
    YokeError,
    all_letters,
    shift,
    step_letter,
    zero_vertex,
)


class NotAPath(YokeError):
    """A vertex sequence is not a simple path."""


class NotAPivot(YokeError):
    """The requested position is not an inner pivot of the vertex."""


class NoPath(YokeError):
    """No path satisfying the stated constraint exists."""


class ConstraintViolatedAtStart(YokeError):
    """The start vertex itself violates the sign constraint."""


class Sign(Enum):
    NON_NEGATIVE = "non-negative"
    NON_POSITIVE = "non-positive"

    def admits(self, value: int) -> bool:
        return value >= 0 if self is Sign.NON_NEGATIVE else value <= 0


@dataclass(frozen=True)
class Path:
    """A simple path: consecutive vertices adjacent, no vertex repeated."""

    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        if not self.vertices:
            raise NotAPath("a path has at least one vertex")
        p = self.vertices[0].params
        for v in self.vertices[1:]:
            if v.params != p:
                raise ParamMismatch("path vertices belong to different instances")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if step_letter(a, b) is None:
                raise NotAPath(f"{a} and {b} are not adjacent")
        if len(set(self.vertices)) != len(self.vertices):
            raise NotAPath("path repeats a vertex")

    @property
    def params(self) -> GraphParams:
        return self.vertices[0].params

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        """Number of steps (one less than the number of vertices)."""
        return len(self.vertices) - 1


@dataclass(frozen=True)
class Word:
    """The letters of a path, in application order from its start."""

    letters: tuple[Letter, ...]

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return render_word(self)


def render_word(word: Word) -> str:
    """Render like "L2 R0 L2": direction letter + index, space-separated."""
    return " ".join(str(lt) for lt in word.letters)


def word_of_path(path: Path) -> Word:
    """The letter sequence realizing the path.

    Each step has a unique explaining letter except on tiny moduli
    (n <= 2), where the left letter is chosen as the documented tie-break.
    """
    letters = []
    for a, b in zip(path.vertices, path.vertices[1:]):
        lt = step_letter(a, b)
        if lt is None:
            raise NotAPath(f"{a} and {b} are not adjacent")
        letters.append(lt)
    return Word(tuple(letters))


def walls(word: Word, m: int) -> frozenset[int]:
    """Wall positions of a word, as a subset of [-1, m+1].

    An inner position p in [0, m] is a wall iff no letter with index p
    occurs.  -1 is a wall iff no left shift at 0 occurs; m+1 is a wall iff
    no right shift at m occurs.
    """
    used = {lt.index for lt in word.letters}
    out = set(range(m + 1)) - used
    if not any(lt.index == 0 and lt.direction is Direction.LEFT for lt in word.letters):
        out.add(-1)
    if not any(lt.index == m and lt.direction is Direction.RIGHT for lt in word.letters):
        out.add(m + 1)
    return frozenset(out)


def pivots(v: Vertex) -> frozenset[int]:
    """Positions p in [-1, m+1] whose entry prefix sum is divisible by n.

    The empty prefix gives p = -1 and the full sum gives p = m+1, so both
    outer positions are pivots of every vertex.
    """
    n = v.params.n
    out = {-1}
    acc = 0
    for p, e in enumerate(v.entries):
        acc += e
        if acc % n == 0:
            out.add(p)
    return frozenset(out)


@dataclass(frozen=True)
class PivotStats:
    """Pivot-derived quantities of a dyoke vertex.

    p_l / p_r are the nearest pivots strictly below / at-or-above m/2, i_c
    is the closed interval (p_l + 1, p_r) between them, and h2 is twice the
    distance from m/2 to the nearest pivot (doubled so odd m stays exact).
    """

    pivots: frozenset[int]
    p_l: int
    p_r: int
    i_c: tuple[int, int]
    h2: int


def pivot_stats(v: Vertex) -> PivotStats:
    m = v.params.m
    piv = pivots(v)
    p_l = max(p for p in piv if 2 * p < m)
    p_r = min(p for p in piv if 2 * p >= m)
    h2 = min(abs(2 * p - m) for p in piv)
    return PivotStats(piv, p_l, p_r, (p_l + 1, p_r), h2)


def h_const(n: int, m: int) -> int:
    """Twice the pivot-gap threshold for instances with 1 < n <= m.

    Returns n when m - n is even and n + 1 when it is odd.
    """
    if not 1 < n <= m:
        raise DomainError(f"need 1 < n <= m, got n={n}, m={m}")
    return n if (m - n) % 2 == 0 else n + 1


def trivial_pivot_path(v: Vertex, p: int) -> Path:
    """The explicit path to zero induced by an inner pivot p.

    Entries left of p are handled one by one, left to right: a +1 is pushed
    into the left bucket with left shifts, a -1 is filled from it with
    right shifts.  Entries right of p are handled right to left toward the
    right bucket symmetrically.  Bucket values drain to zero exactly
    because the prefix sum at p is divisible by n.

    The raw move sequence costs sum(i*|v_i|) over i <= p plus
    sum((m+1-i)*|v_i|) over i > p; when mixing signs makes it revisit a
    vertex, the revisit loops are cut so the result is a simple path (then
    strictly shorter than the raw count).  The wall at p survives either
    way, since no shift at index p is ever used.
    """
    m = v.params.m
    if not (0 <= p <= m and p in pivots(v)):
        raise NotAPivot(f"{p} is not an inner pivot of {v}")
    seq = [v]
    cur = v

    def apply(letter):
        nonlocal cur
        cur = shift(cur, letter)
        seq.append(cur)

    for i in range(1, p + 1):
        if cur.entries[i] == 1:
            for j in range(i - 1, -1, -1):
                apply(Letter.left(j))
        elif cur.entries[i] == -1:
            for j in range(i):
                apply(Letter.right(j))
    for i in range(m, p, -1):
        if cur.entries[i] == 1:
            for j in range(i, m + 1):
                apply(Letter.right(j))
        elif cur.entries[i] == -1:
            for j in range(m, i - 1, -1):
                apply(Letter.left(j))
    return Path(tuple(_cut_revisits(seq)))


def _cut_revisits(seq):
    """Drop loops from a walk, keeping the first visit of each vertex."""
    while True:
        first = {}
        for idx, x in enumerate(seq):
            if x in first:
                seq = seq[: first[x] + 1] + seq[idx + 1 :]
                break
            first[x] = idx
        else:
            return seq


def _banned_letters(p: int, m: int) -> frozenset[Letter]:
    """Directed steps a path with wall p may not use."""
    if p == -1:
        return frozenset({Letter.left(0)})
    if p == m + 1:
        return frozenset({Letter.right(m)})
    return frozenset({Letter.left(p), Letter.right(p)})


def _bfs(start: Vertex, allowed, vertex_ok=None, target=None):
    """Plain BFS over effective shifts, optionally letter- or vertex-restricted.

    Returns the distance map, stopping early when `target` is reached.
    """
    dist = {start: 0}
    frontier = deque([start])
    while frontier:
        cur = frontier.popleft()
        d = dist[cur] + 1
        for lt in allowed:
            nxt = shift(cur, lt)
            if nxt == cur or nxt in dist:
                continue
            if vertex_ok is not None and not vertex_ok(nxt):
                continue
            dist[nxt] = d
            if target is not None and nxt == target:
                return dist
            frontier.append(nxt)
    return dist


def pivot_distance(v: Vertex, p: int) -> int:
    """Length of a shortest path from v to zero that has wall p.

    The BFS excludes every directed step that would break the wall: both
    directions at an inner p, only the left shift at 0 for p = -1, only the
    right shift at m for p = m+1.  Raises NoPath when no such path exists,
    which happens exactly when p is not a pivot of v.
    """
    m = v.params.m
    if not -1 <= p <= m + 1:
        raise ValueError(f"wall position {p} outside [-1, {m + 1}]")
    banned = _banned_letters(p, m)
    allowed = tuple(lt for lt in all_letters(m) if lt not in banned)
    target = zero_vertex(v.params)
    dist = _bfs(v, allowed, target=target)
    if target not in dist:
        raise NoPath(f"no path from {v} to zero with wall {p}")
    return dist[target]


def wall_distance_map(params: GraphParams, p: int) -> dict[Vertex, int]:
    """pivot_distance(v, p) for every v of the instance at once.

    Computed by one BFS from zero over the reversed steps: a forward path
    avoiding a letter corresponds to a backward path avoiding its inverse.
    Vertices missing from the map have no path with wall p (p is not among
    their pivots).
    """
    m = params.m
    banned = {lt.inverse() for lt in _banned_letters(p, m)}
    allowed = tuple(lt for lt in all_letters(m) if lt not in banned)
    return _bfs(zero_vertex(params), allowed)


def check_shift_direction(word: Word) -> bool:
    """True iff, per index, all shifts of the word go one direction."""
    seen: dict[int, Direction] = {}
    for lt in word.letters:
        if seen.setdefault(lt.index, lt.direction) is not lt.direction:
            return False
    return True


def interval_shift_count(path: Path, interval: tuple[int, int]) -> int:
    """Number of steps moving a unit between two entries inside [a, b]."""
    a, b = interval
    m = path.params.m
    if not 0 <= a <= b <= m + 1:
        raise ValueError(f"interval {interval} not inside [0, {m + 1}]")
    word = word_of_path(path)
    return sum(1 for lt in word.letters if a <= lt.index and lt.index + 1 <= b)


def sign_constrained_distance(z: Vertex, i: int, sign: Sign) -> int:
    """Shortest distance from z to zero through vertices with entry i sign-constrained.

    The BFS never leaves the set of vertices whose i-th entry is
    non-negative (or non-positive).  Raises ConstraintViolatedAtStart when
    z itself breaks the constraint and NoPath when zero is unreachable.
    """
    m = z.params.m
    if not 1 <= i <= m:
        raise ValueError(f"constrained index {i} outside [1, {m}]")
    if not sign.admits(z.entries[i]):
        raise ConstraintViolatedAtStart(f"entry {i} of {z} is not {sign.value}")
    target = zero_vertex(z.params)
    dist = _bfs(
        z,
        all_letters(m),
        vertex_ok=lambda w: sign.admits(w.entries[i]),
        target=target,
    )
    if target not in dist:
        raise NoPath(f"zero unreachable from {z} with entry {i} {sign.value}")
    return dist[target]


def sign_constrained_map(params: GraphParams, i: int, sign: Sign) -> dict[Vertex, int]:
    """sign_constrained_distance(z, i, sign) for all admissible z at once.

    The constraint restricts vertices, not step directions, so the induced
    subgraph is undirected and one BFS from zero covers every start.
    """
    m = params.m
    if not 1 <= i <= m:
        raise ValueError(f"constrained index {i} outside [1, {m}]")
    return _bfs(
        zero_vertex(params),
        all_letters(m),
        vertex_ok=lambda w: sign.admits(w.entries[i]),
    )


def is_pivot_path(path: Path) -> bool:
    """True iff the path is a shortest route to zero among those sharing one of its walls."""
    if not path.end.is_zero:
        raise ValueError("is_pivot_path expects a path ending at the zero vertex")
    word = word_of_path(path)
    for p in walls(word, path.params.m):
        if path.length == pivot_distance(path.start, p):
            return True
    return False
