"""Vertex model and elementary moves for yoke and dyoke graphs.

A vertex of Y(n,m) or Z(n,m) is an integer tuple (u_0, ..., u_{m+1}).
The two end entries ("buckets") live in Z_n and are always stored as their
smallest non-negative representative; the m middle entries are confined to
{0,1} in the yoke family and to {-1,0,1} in the dyoke family; all entries
sum to 0 mod n.  Two vertices are adjacent when one is obtained from the
other by moving a single unit between a pair of neighbouring entries.

The move "left shift at i" transfers one unit from entry i+1 into entry i;
"right shift at i" transfers one unit from entry i into entry i+1.  A move
that would push a middle entry out of its domain leaves the vertex fixed,
so every shift is a total function on the vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class YokeError(Exception):
    """Base class for every error raised by this package."""


class LengthMismatch(YokeError):
    """An entry sequence does not have the m+2 entries the instance needs."""


class EntryOutOfDomain(YokeError):
    """A bucket left [0, n-1] or a middle entry left its allowed set."""


class SumNotZeroModN(YokeError):
    """The entries of a would-be vertex do not sum to 0 mod n."""


class ParamMismatch(YokeError):
    """Operands belong to different instances or the wrong graph family."""


class DomainError(YokeError):
    """Arguments lie outside the domain on which a quantity is defined."""


class Family(Enum):
    """The two graph families sharing the vertex layout."""

    YOKE = "yoke"
    DYOKE = "dyoke"

    @property
    def middle_min(self) -> int:
        return 0 if self is Family.YOKE else -1

    @property
    def middle_states(self) -> int:
        """Number of values a middle entry can take (2 or 3)."""
        return 2 if self is Family.YOKE else 3


class Direction(Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class GraphParams:
    """Instance parameters: modulus n >= 1, middle length m >= 0, family."""

    n: int
    m: int
    family: Family

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise DomainError(f"need n >= 1 and m >= 0, got n={self.n}, m={self.m}")

    @classmethod
    def yoke(cls, n: int, m: int) -> "GraphParams":
        return cls(n, m, Family.YOKE)

    @classmethod
    def dyoke(cls, n: int, m: int) -> "GraphParams":
        return cls(n, m, Family.DYOKE)

    @property
    def width(self) -> int:
        """Number of entries of a vertex, m + 2."""
        return self.m + 2

    @property
    def vertex_count(self) -> int:
        """n * 2^m for the yoke family, n * 3^m for the dyoke family."""
        return self.n * self.family.middle_states**self.m


@dataclass(frozen=True)
class Vertex:
    """A validated vertex of one instance.

    Equality and ordering of vertices are defined on the entry tuple;
    buckets are kept reduced to [0, n-1] so equality is structural.
    """

    entries: tuple[int, ...]
    params: GraphParams

    def __post_init__(self):
        p = self.params
        if len(self.entries) != p.width:
            raise LengthMismatch(
                f"expected {p.width} entries for m={p.m}, got {len(self.entries)}"
            )
        if not (0 <= self.entries[0] < p.n and 0 <= self.entries[-1] < p.n):
            raise EntryOutOfDomain(f"bucket outside [0, {p.n - 1}] in {self.entries}")
        lo = p.family.middle_min
        for e in self.entries[1:-1]:
            if not lo <= e <= 1:
                raise EntryOutOfDomain(
                    f"middle entry {e} outside [{lo}, 1] in {self.entries}"
                )
        if sum(self.entries) % p.n != 0:
            raise SumNotZeroModN(f"entries {self.entries} sum to {sum(self.entries)}")

    def __str__(self):
        return render_vertex(self)

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)


@dataclass(frozen=True)
class Letter:
    """A directed shift: the index i in [0, m] and the direction of travel."""

    index: int
    direction: Direction

    @classmethod
    def left(cls, index: int) -> "Letter":
        return cls(index, Direction.LEFT)

    @classmethod
    def right(cls, index: int) -> "Letter":
        return cls(index, Direction.RIGHT)

    def inverse(self) -> "Letter":
        flipped = Direction.RIGHT if self.direction is Direction.LEFT else Direction.LEFT
        return Letter(self.index, flipped)

    def __str__(self):
        return f"{self.direction.value}{self.index}"


def zero_vertex(params: GraphParams) -> Vertex:
    return Vertex((0,) * params.width, params)


def all_letters(m: int) -> tuple[Letter, ...]:
    """All 2(m+1) letters, left shifts first.

    The order is the documented tie-break: when two letters explain the same
    step of a path (possible only for n <= 2), the earlier letter wins, so a
    left shift is always preferred.
    """
    lefts = tuple(Letter.left(i) for i in range(m + 1))
    rights = tuple(Letter.right(i) for i in range(m + 1))
    return lefts + rights


def parse_vertex(text: str, params: GraphParams) -> Vertex:
    """Parse a literal like "(3,0,-1,1,2)" into a validated vertex.

    Spaces after commas are tolerated.  Raises ValueError for text that is
    not a parenthesized integer list, and the usual validation errors
    (LengthMismatch, EntryOutOfDomain, SumNotZeroModN) for bad entries.
    """
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"not a vertex literal: {text!r}")
    body = s[1:-1]
    try:
        entries = tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"not a vertex literal: {text!r}") from None
    return Vertex(entries, params)


def render_vertex(v: Vertex) -> str:
    """The canonical literal: parenthesized, comma-separated, no spaces."""
    return "(" + ",".join(str(e) for e in v.entries) + ")"


def complete_vertex(prefix, params: GraphParams) -> Vertex:
    """Build the vertex whose first m+1 entries are `prefix`.

    The last bucket is forced by the sum condition, so a vertex is
    determined by its first m+1 entries.
    """
    prefix = tuple(prefix)
    if len(prefix) != params.m + 1:
        raise LengthMismatch(
            f"expected {params.m + 1} prefix entries, got {len(prefix)}"
        )
    last = (-sum(prefix)) % params.n
    return Vertex(prefix + (last,), params)


def shift(v: Vertex, letter: Letter) -> Vertex:
    """Apply one directed shift, with fixed-point semantics.

    A left shift at i increments entry i and decrements entry i+1; a right
    shift does the opposite.  Buckets wrap mod n.  If a middle entry would
    leave its domain the move is infeasible and v is returned unchanged.
    """
    p = v.params
    i = letter.index
    if not 0 <= i <= p.m:
        raise ValueError(f"letter index {i} outside [0, {p.m}]")
    if letter.direction is Direction.LEFT:
        gain, lose = i, i + 1
    else:
        gain, lose = i + 1, i
    e = v.entries
    if 1 <= gain <= p.m and e[gain] >= 1:
        return v
    if 1 <= lose <= p.m and e[lose] <= p.family.middle_min:
        return v
    out = list(e)
    out[gain] += 1
    out[lose] -= 1
    last = p.m + 1
    if gain in (0, last):
        out[gain] %= p.n
    if lose in (0, last):
        out[lose] %= p.n
    return Vertex(tuple(out), p)


def neighbors(v: Vertex) -> set[Vertex]:
    """All vertices one shift away from v.

    Fixed points are dropped, as is v itself (the graphs have no loops:
    for n = 1, m = 0 both shifts return to v and the set is empty).  For
    n <= 2 two distinct letters can reach the same vertex; the set keeps
    the graph simple.
    """
    out = {shift(v, lt) for lt in all_letters(v.params.m)}
    out.discard(v)
    return out


def step_letter(a: Vertex, b: Vertex):
    """The letter explaining the step a -> b, or None if not adjacent.

    Scanned in `all_letters` order, so when two letters explain the same
    step the left one is returned.
    """
    if a.params != b.params or a == b:
        return None
    for lt in all_letters(a.params.m):
        if shift(a, lt) == b:
            return lt
    return None


def mu(v: Vertex) -> Vertex:
    """Entrywise negation, an involutive automorphism of the dyoke graph.

    Buckets are re-reduced mod n; middle entries flip sign inside {-1,0,1}.
    """
    p = v.params
    if p.family is not Family.DYOKE:
        raise ParamMismatch("mu is defined on dyoke vertices")
    e = [-x for x in v.entries]
    e[0] %= p.n
    e[-1] %= p.n
    return Vertex(tuple(e), p)


def phi(v: Vertex, u: Vertex) -> Vertex:
    """The difference map v - u, embedding the yoke graph into dyoke space.

    Buckets are subtracted mod n, middle entries over the integers; the
    result is a valid dyoke vertex of the same (n, m).
    """
    if v.params != u.params:
        raise ParamMismatch(f"params differ: {v.params} vs {u.params}")
    if v.params.family is not Family.YOKE:
        raise ParamMismatch("phi takes two yoke vertices")
    p = v.params
    e = [a - b for a, b in zip(v.entries, u.entries)]
    e[0] %= p.n
    e[-1] %= p.n
    return Vertex(tuple(e), GraphParams.dyoke(p.n, p.m))


def split_to_yoke_pair(z: Vertex) -> tuple[Vertex, Vertex]:
    """Split a dyoke vertex z into yoke vertices (v, u) with phi(v, u) = z.

    v keeps z's left bucket and the positive parts of the middle entries,
    u takes the negative parts; both last buckets are completed by the sum
    condition.
    """
    p = z.params
    if p.family is not Family.DYOKE:
        raise ParamMismatch("split_to_yoke_pair takes a dyoke vertex")
    yp = GraphParams.yoke(p.n, p.m)
    v_prefix = [z.entries[0]] + [max(0, e) for e in z.entries[1:-1]]
    u_prefix = [0] + [max(0, -e) for e in z.entries[1:-1]]
    return complete_vertex(v_prefix, yp), complete_vertex(u_prefix, yp)
