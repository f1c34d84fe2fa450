"""Exhaustive desk-scale audits of the structural lemmas.

Each audit checks one extensional claim over a whole instance (or a seeded
sample where the claim quantifies over an infinite supply of witnesses)
and reports how many checks ran.  The CLI prints one line per audit;
the test suite asserts on the same results.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import formulas, metrics, paths
from .core import GraphParams, Vertex, mu, neighbors, phi, split_to_yoke_pair, zero_vertex
from .metrics import DistanceField
from .paths import Path, Sign


@dataclass
class AuditResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


def _fail(name, checked, detail):
    return AuditResult(name, False, checked, detail)


def _ok(name, checked):
    return AuditResult(name, True, checked)


def _triangle(k: int) -> int:
    return k * (k + 1) // 2 if k > 0 else 0


def lex_geodesic_to_zero(field: DistanceField, v: Vertex) -> Path:
    """The geodesic to zero that always steps to the smallest next vertex.

    `field` holds distances from zero; by symmetry a neighbor one level
    down is one step closer to zero, and taking the lexicographically
    smallest such neighbor makes the extraction reproducible.
    """
    seq = [v]
    while field[seq[-1]] > 0:
        seq.append(
            min(
                (w for w in neighbors(seq[-1]) if field[w] == field[seq[-1]] - 1),
                key=lambda x: x.entries,
            )
        )
    return Path(tuple(seq))


def random_geodesic_to_zero(field: DistanceField, v: Vertex, rng: random.Random) -> Path:
    """A geodesic to zero with uniformly random descent choices."""
    seq = [v]
    while field[seq[-1]] > 0:
        down = sorted(
            (w for w in neighbors(seq[-1]) if field[w] == field[seq[-1]] - 1),
            key=lambda x: x.entries,
        )
        seq.append(rng.choice(down))
    return Path(tuple(seq))


def audit_shift_direction(zp: GraphParams, field: DistanceField, alternatives=2, seed=0):
    """Every extracted geodesic to zero uses each index in one direction only."""
    name = "shift-direction-uniform"
    rng = random.Random(seed)
    checked = 0
    for v, _ in field.items():
        words = [paths.word_of_path(lex_geodesic_to_zero(field, v))]
        words += [
            paths.word_of_path(random_geodesic_to_zero(field, v, rng))
            for _ in range(alternatives)
        ]
        for word in words:
            checked += 1
            if not paths.check_shift_direction(word):
                return _fail(name, checked, f"mixed directions in geodesic of {v}")
    return _ok(name, checked)


def _all_wall_maps(zp: GraphParams) -> dict[int, dict[Vertex, int]]:
    return {p: paths.wall_distance_map(zp, p) for p in range(-1, zp.m + 2)}


def audit_pivot_path_minimum(zp: GraphParams, field: DistanceField):
    """d(v, 0) is the minimum wall-constrained distance over the pivots of v,
    wall-constrained paths exist exactly at pivots, and every extracted
    geodesic realizes one of its own walls."""
    name = "geodesics-are-pivot-paths"
    maps = _all_wall_maps(zp)
    checked = 0
    for v, d in field.items():
        piv = paths.pivots(v)
        for p, mp in maps.items():
            checked += 1
            if (v in mp) != (p in piv):
                return _fail(name, checked, f"wall {p} reachability disagrees with pivots of {v}")
        best = min(maps[p][v] for p in piv)
        checked += 1
        if best != d:
            return _fail(name, checked, f"min pivot distance {best} != d={d} for {v}")
        path = lex_geodesic_to_zero(field, v)
        word = paths.word_of_path(path)
        checked += 1
        if not any(
            maps[p].get(v) == path.length for p in paths.walls(word, zp.m)
        ):
            return _fail(name, checked, f"geodesic of {v} is not a pivot path")
    return _ok(name, checked)


def audit_trivial_path_bounds(zp: GraphParams):
    """For every inner pivot, the explicit drain path is at least as long as
    the wall-constrained optimum and at most the split-sum ceiling."""
    name = "trivial-path-bounds"
    maps = _all_wall_maps(zp)
    checked = 0
    m = zp.m
    for v in metrics.enumerate_vertices(zp):
        for p in sorted(paths.pivots(v)):
            if not 0 <= p <= m:
                continue
            length = paths.trivial_pivot_path(v, p).length
            ceiling = _triangle(p) + _triangle(m - p)
            checked += 1
            if not maps[p][v] <= length <= ceiling:
                return _fail(
                    name,
                    checked,
                    f"trivial path for {v} at {p}: {maps[p][v]} <= {length} <= {ceiling} fails",
                )
    return _ok(name, checked)


def _empty_bucket_violation(path: Path) -> bool:
    """True if some step pulls a unit out of an already-empty bucket."""
    m = path.params.m
    word = paths.word_of_path(path)
    for v, lt in zip(path.vertices, word.letters):
        if lt.index == m and lt.direction.value == "L" and v.entries[-1] == 0:
            return True
        if lt.index == 0 and lt.direction.value == "R" and v.entries[0] == 0:
            return True
    return False


def audit_interval_counts(zp: GraphParams):
    """On clean drain paths, per-interval step counts match the weighted entry sums.

    Scope: trivial paths that came out at their raw cost (no revisit was
    cut) and never pull from an empty bucket; within those, every interval
    between consecutive walls that shifts uniformly left must contain
    sum(i * v_i) steps, and uniformly right sum((m+1-i) * v_i) steps.
    """
    name = "interval-shift-counts"
    checked = 0
    m = zp.m
    for v in metrics.enumerate_vertices(zp):
        raw_costs = {
            p: sum(i * abs(e) for i, e in enumerate(v.entries[: p + 1]))
            + sum(
                (m + 1 - i) * abs(e)
                for i, e in enumerate(v.entries[p + 1 :], start=p + 1)
            )
            for p in sorted(paths.pivots(v))
            if 0 <= p <= m
        }
        for p, raw in raw_costs.items():
            path = paths.trivial_pivot_path(v, p)
            if path.length != raw or _empty_bucket_violation(path):
                continue
            word = paths.word_of_path(path)
            inner_walls = sorted(w for w in paths.walls(word, m) if 0 <= w <= m)
            bounds = [-1] + inner_walls + [m + 1]
            for lo, hi in zip(bounds, bounds[1:]):
                interval = (lo + 1, hi)
                steps = [lt for lt in word.letters if lo + 1 <= lt.index and lt.index + 1 <= hi]
                if not steps:
                    continue
                directions = {lt.direction.value for lt in steps}
                if len(directions) > 1:
                    continue
                count = len(steps)
                span = v.entries[interval[0] : interval[1] + 1]
                if directions == {"L"}:
                    expect = sum(i * e for i, e in enumerate(span, start=interval[0]))
                else:
                    expect = sum((m + 1 - i) * e for i, e in enumerate(span, start=interval[0]))
                checked += 1
                if count != expect:
                    return _fail(
                        name,
                        checked,
                        f"{v} pivot {p} interval {interval}: {count} steps, expected {expect}",
                    )
    return _ok(name, checked)


def audit_sign_constraints(zp: GraphParams, field: DistanceField):
    """Zero-valued entries cost nothing to pin: both sign-restricted
    distances to zero equal the unrestricted distance."""
    name = "sign-constrained-distances"
    checked = 0
    for i in range(1, zp.m + 1):
        maps = {
            sign: paths.sign_constrained_map(zp, i, sign)
            for sign in (Sign.NON_NEGATIVE, Sign.NON_POSITIVE)
        }
        for v, d in field.items():
            if v.entries[i] != 0:
                continue
            for sign, mp in maps.items():
                checked += 1
                if mp.get(v) != d:
                    return _fail(
                        name,
                        checked,
                        f"{sign.value} distance of {v} at entry {i} is {mp.get(v)}, unrestricted {d}",
                    )
    return _ok(name, checked)


def audit_negation_symmetry(zp: GraphParams, field: DistanceField, edge_limit=200_000):
    """Entrywise negation is an involutive automorphism fixing zero; it
    preserves distance to zero and the central pivot interval."""
    name = "negation-symmetry"
    checked = 0
    zero = zero_vertex(zp)
    if mu(zero) != zero:
        return _fail(name, 1, "negation moved the zero vertex")
    exhaustive_edges = zp.vertex_count * (zp.m + 1) <= edge_limit
    for v, d in field.items():
        w = mu(v)
        checked += 3
        if mu(w) != v:
            return _fail(name, checked, f"negation is not an involution at {v}")
        if field[w] != d:
            return _fail(name, checked, f"d({v})={d} but d(mu)={field[w]}")
        if paths.pivot_stats(v).i_c != paths.pivot_stats(w).i_c:
            return _fail(name, checked, f"central interval moved under negation of {v}")
        if exhaustive_edges:
            wn = neighbors(w)
            for x in neighbors(v):
                checked += 1
                if mu(x) not in wn:
                    return _fail(name, checked, f"edge {v}~{x} not preserved")
    return _ok(name, checked)


def audit_difference_embedding(yp: GraphParams, samples=10, seed=0):
    """Subtracting a fixed vertex embeds the plain graph isomorphically, and
    the positive/negative split inverts it on every difference vertex."""
    name = "difference-embedding"
    rng = random.Random(seed)
    verts = list(metrics.enumerate_vertices(yp))
    adj = {v: neighbors(v) for v in verts}
    anchors = verts if len(verts) <= samples else rng.sample(verts, samples)
    checked = 0
    for u in anchors:
        image = {v: phi(v, u) for v in verts}
        image_adj = {z: neighbors(z) for z in image.values()}
        for v in verts:
            for w in verts:
                if w is v:
                    continue
                checked += 1
                if (w in adj[v]) != (image[w] in image_adj[image[v]]):
                    return _fail(name, checked, f"adjacency of {v},{w} not preserved by u={u}")
    zparams = GraphParams.dyoke(yp.n, yp.m)
    for z in metrics.enumerate_vertices(zparams):
        v, u = split_to_yoke_pair(z)
        checked += 1
        if phi(v, u) != z:
            return _fail(name, checked, f"split of {z} gives difference {phi(v, u)}")
    return _ok(name, checked)


def audit_distance_preservation(yp: GraphParams, pairs=200, seed=0, exhaustive_below=100):
    """Distances in the plain graph equal difference-vertex distances to zero."""
    name = "distance-preservation"
    verts = list(metrics.enumerate_vertices(yp))
    zfield = metrics.bfs_from(zero_vertex(GraphParams.dyoke(yp.n, yp.m)))
    if len(verts) <= exhaustive_below:
        sampled = [(v, u) for v in verts for u in verts]
    else:
        rng = random.Random(seed)
        sampled = [(rng.choice(verts), rng.choice(verts)) for _ in range(pairs)]
    fields: dict[Vertex, DistanceField] = {}
    checked = 0
    for v, u in sampled:
        if v not in fields:
            fields[v] = metrics.bfs_from(v)
        checked += 1
        dy = fields[v][u]
        dz = zfield[phi(v, u)]
        if dy != dz:
            return _fail(name, checked, f"d({v},{u})={dy} but difference distance is {dz}")
    return _ok(name, checked)


def audit_ecc_lower_bound(zp: GraphParams, field: DistanceField):
    """The half-full-buckets witness sits at least floor(n(m+1)/2) from zero."""
    name = "eccentricity-lower-bound"
    if zp.n % 2 == 1 and zp.m == 0:
        return AuditResult(name, True, 0, "witness undefined for odd n with m = 0")
    w = formulas.lower_bound_witness(zp.n, zp.m)
    bound = zp.n * (zp.m + 1) // 2
    if field[w] < bound:
        return _fail(name, 1, f"witness {w} at distance {field[w]} < {bound}")
    return _ok(name, 1)


def audit_case_bounds(zp: GraphParams, field: DistanceField):
    """The three per-vertex upper bounds behind the n <= m diameter cases."""
    name = "case-upper-bounds"
    n, m = zp.n, zp.m
    if not 1 < n <= m:
        return AuditResult(name, True, 0, f"needs 1 < n <= m, got n={n}, m={m}")
    h2c = paths.h_const(n, m)
    dz = formulas.d0(n, m)
    checked = 0
    for v, d in field.items():
        st = paths.pivot_stats(v)
        tails = _triangle(st.p_l) + _triangle(m - st.p_r)
        if st.h2 < h2c:
            checked += 1
            if d > dz:
                return _fail(name, checked, f"near-middle pivot bound fails at {v}: {d} > {dz}")
        middle = sum(v.entries[st.i_c[0] : st.i_c[1] + 1])
        if middle == n:
            bound = tails + n * (m + 1) // 2
            checked += 1
            if d > bound:
                return _fail(name, checked, f"full-interval bound fails at {v}: {d} > {bound}")
        if middle == 0 and st.i_c[0] >= 1 and st.i_c[1] <= m:
            gamma = st.p_r - st.p_l
            bound = tails + (gamma // 2) * ((gamma + 1) // 2)
            checked += 1
            if d > bound:
                return _fail(name, checked, f"balanced-interval bound fails at {v}: {d} > {bound}")
    return _ok(name, checked)


def audit_extremal_distances(zp: GraphParams, field: DistanceField):
    """The two extremal vertices land exactly at their closed-form distances."""
    name = "extremal-distances"
    n, m = zp.n, zp.m
    if not 1 < n <= m:
        return AuditResult(name, True, 0, f"needs 1 < n <= m, got n={n}, m={m}")
    checked = 1
    got = field[formulas.u0_vertex(n, m)]
    want = formulas.d0(n, m)
    if got != want:
        return _fail(name, checked, f"d(u0,0)={got}, formula {want}")
    if n < m and (m - n) % 2 == 1:
        checked += 1
        got = field[formulas.u1_vertex(n, m)]
        want = formulas.d1(n, m)
        if got != want:
            return _fail(name, checked, f"d(u1,0)={got}, formula {want}")
    return _ok(name, checked)


def audit_metric_sanity(zp: GraphParams, seed=0, triples=10):
    """BFS distances are symmetric and satisfy the triangle inequality."""
    name = "metric-sanity"
    rng = random.Random(seed)
    verts = list(metrics.enumerate_vertices(zp))
    checked = 0
    for _ in range(triples):
        a, b, c = (rng.choice(verts) for _ in range(3))
        fa, fb = metrics.bfs_from(a), metrics.bfs_from(b)
        checked += 2
        if fa[b] != fb[a]:
            return _fail(name, checked, f"d({a},{b}) asymmetric")
        if fa[c] > fa[b] + fb[c]:
            return _fail(name, checked, f"triangle inequality fails on {a},{b},{c}")
    return _ok(name, checked)


def audit_diameter_matches(n: int, m: int, allpairs_budget=None):
    """Formula, all-pairs diameter and eccentricity of zero agree."""
    name = "diameter-equals-eccentricity"
    yp = GraphParams.yoke(n, m)
    ecc = metrics.eccentricity(zero_vertex(GraphParams.dyoke(n, m)))
    value = formulas.diameter_formula(n, m).value
    checked = 1
    if ecc != value:
        return _fail(name, checked, f"eccentricity {ecc} != formula {value}")
    budget = allpairs_budget if allpairs_budget is not None else metrics.ALL_PAIRS_BUDGET
    try:
        diam = metrics.diameter_bfs(yp, budget)
    except metrics.BudgetExceeded:
        return AuditResult(name, True, checked, "all-pairs check skipped by budget")
    checked += 1
    if diam != value:
        return _fail(name, checked, f"all-pairs diameter {diam} != formula {value}")
    return _ok(name, checked)


def run_instance_audits(n: int, m: int, seed=0) -> list[AuditResult]:
    """Run every audit that applies to instance (n, m)."""
    zp = GraphParams.dyoke(n, m)
    yp = GraphParams.yoke(n, m)
    field = metrics.bfs_from(zero_vertex(zp))
    big = zp.vertex_count > 2500
    results = [
        audit_shift_direction(zp, field, seed=seed),
        audit_pivot_path_minimum(zp, field),
        audit_trivial_path_bounds(zp),
        audit_interval_counts(zp),
        audit_sign_constraints(zp, field),
        audit_negation_symmetry(zp, field),
        audit_ecc_lower_bound(zp, field),
        audit_case_bounds(zp, field),
        audit_extremal_distances(zp, field),
        audit_metric_sanity(zp, seed=seed),
        audit_diameter_matches(n, m),
    ]
    if not big:
        results.insert(6, audit_difference_embedding(yp, seed=seed))
        results.insert(7, audit_distance_preservation(yp, seed=seed))
    return results
