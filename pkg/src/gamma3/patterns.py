"""Builders for the fixed menagerie of named graphs and multigraphs.

Each builder returns a Pattern: a Multigraph plus role labels for
distinguished vertices and groups of interchangeable roles (used by the
matcher to quotient witness symmetry).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .multigraph import Multigraph, MultigraphError


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Multigraph
    roles: Dict[str, int] = field(default_factory=dict)
    role_groups: Tuple[Tuple[str, ...], ...] = ()

    def role_vertex(self, role: str) -> int:
        return self.roles[role]


def _simple(name: str, n: int, pairs: Sequence[Tuple[int, int]], roles=None, groups=()) -> Pattern:
    return Pattern(name, Multigraph.from_simple_edges(n, pairs), roles or {}, tuple(groups))


# -- small fixed graphs -------------------------------------------------

def claw() -> Pattern:
    return _simple("K1,3", 4, [(0, 1), (0, 2), (0, 3)],
                   {"center": 0, "leaf1": 1, "leaf2": 2, "leaf3": 3},
                   [("leaf1", "leaf2", "leaf3")])


def path(k: int) -> Pattern:
    return _simple(f"P{k}", k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Pattern:
    return Pattern(f"C{k}", Multigraph.cycle(k))


def complete(k: int) -> Pattern:
    return Pattern(f"K{k}", Multigraph.complete(k))


def triangle() -> Pattern:
    return complete(3)


def complete_bipartite(r: int, s: int) -> Pattern:
    pairs = [(i, r + j) for i in range(r) for j in range(s)]
    roles = {f"v{i+1}": i for i in range(r)}
    roles.update({f"w{j+1}": r + j for j in range(s)})
    groups = [tuple(f"v{i+1}" for i in range(r)), tuple(f"w{j+1}" for j in range(s))]
    return _simple(f"K{r},{s}", r + s, pairs, roles, groups)


def gamma(i: int) -> Pattern:
    """Two triangles joined by a path of length i.

    Vertices: t1,t2 on the first triangle, path p1..p_{i+1}, t3,t4 on the
    second triangle.
    """
    if i < 1:
        raise MultigraphError("gamma index must be >= 1")
    # t1=0, t2=1, p1..p_{i+1} = 2..i+2, t3, t4 = i+3, i+4
    p = [2 + j for j in range(i + 1)]
    t3, t4 = i + 3, i + 4
    pairs = [(0, 1), (0, p[0]), (1, p[0])]
    pairs += [(p[j], p[j + 1]) for j in range(i)]
    pairs += [(p[-1], t3), (p[-1], t4), (t3, t4)]
    roles = {"t1": 0, "t2": 1, "t3": t3, "t4": t4}
    roles.update({f"p{j+1}": p[j] for j in range(i + 1)})
    return _simple(f"Gamma{i}", i + 5, pairs, roles,
                   [("t1", "t2"), ("t3", "t4")])


def z(i: int) -> Pattern:
    """Triangle with a path of length i attached to one vertex."""
    pairs = [(0, 1), (1, 2), (0, 2)] + [(2 + j, 3 + j) for j in range(i)]
    return _simple(f"Z{i}", i + 3, pairs, {"attach": 2, "tip": 2 + i})


# -- diamonds ----------------------------------------------------------

def diamond() -> Pattern:
    """D = K4 - e; a, b adjacent to everything, c1, c2 nonadjacent."""
    return _simple("D", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
                   {"a": 0, "b": 1, "c1": 2, "c2": 3},
                   [("a", "b"), ("c1", "c2")])


def diamond1() -> Pattern:
    """D with the edge a-c1 subdivided by d1."""
    pairs = [(0, 1), (0, 3), (1, 2), (1, 3), (0, 4), (4, 2)]
    return _simple("D1", 5, pairs, {"a": 0, "b": 1, "c1": 2, "c2": 3, "d1": 4})


def diamond2() -> Pattern:
    """D with both edges a-ci subdivided by di (6-cycle plus chord ab)."""
    pairs = [(0, 1), (1, 2), (1, 3), (0, 4), (4, 2), (0, 5), (5, 3)]
    return _simple("D2", 6, pairs,
                   {"a": 0, "b": 1, "c1": 2, "c2": 3, "d1": 4, "d2": 5})


# -- K^M multigraph families --------------------------------------------

def k2r_multi(doubled: Sequence[Tuple[int, int]], r: int = 4) -> Pattern:
    """Member of the K^M_{2,r} family.

    doubled lists, per spoke i (0-based), which of (w_i v1, w_i v2) get a
    parallel edge: pairs (i, 0) for w_i v1 and (i, 1) for w_i v2.  Every
    spoke needs at least one doubled edge.
    """
    ds = set(doubled)
    for i, side in ds:
        if not (0 <= i < r and side in (0, 1)):
            raise MultigraphError(f"bad doubled spoke ({i},{side})")
    if any(all((i, s) not in ds for s in (0, 1)) for i in range(r)):
        raise MultigraphError("each spoke needs at least one doubled edge")
    edges = []
    for i in range(r):
        w = 2 + i
        edges.append((0, w, 2 if (i, 0) in ds else 1))
        edges.append((1, w, 2 if (i, 1) in ds else 1))
    g = Multigraph.build(2 + r, edges)
    roles = {"v1": 0, "v2": 1}
    roles.update({f"w{i+1}": 2 + i for i in range(r)})
    return Pattern(f"K^M_2,{r}", g, roles,
                   (tuple(f"w{i+1}" for i in range(r)),))


def krp4_multi(doubled: Sequence[int], r: int = 4) -> Pattern:
    """Member of the K^M_{rP4} family: r disjoint paths v1-w_i-z_i-v2
    sharing only the endpoints.

    doubled[i] in {0,1,2} picks which edge of path i gets a parallel edge
    (0: v1 w_i, 1: w_i z_i, 2: z_i v2); one per path here (the family
    allows more; matching treats doubles as lower bounds anyway).
    """
    if len(doubled) != r:
        raise MultigraphError("need one doubled-edge choice per path")
    edges = []
    for i in range(r):
        w, zv = 2 + 2 * i, 3 + 2 * i
        ms = [2 if doubled[i] == j else 1 for j in range(3)]
        if doubled[i] not in (0, 1, 2):
            raise MultigraphError("each path needs at least one doubled edge")
        edges += [(0, w, ms[0]), (w, zv, ms[1]), (zv, 1, ms[2])]
    g = Multigraph.build(2 + 2 * r, edges)
    roles = {"v1": 0, "v2": 1}
    for i in range(r):
        roles[f"w{i+1}"] = 2 + 2 * i
        roles[f"z{i+1}"] = 3 + 2 * i
    return Pattern(f"K^M_{r}P4", g, roles)


# -- preimages of Gamma3 -------------------------------------------------

def f1() -> Pattern:
    """Tree: path q1..q5 with two pendant vertices at each end."""
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (0, 6), (4, 7), (4, 8)]
    roles = {"q1": 0, "q2": 1, "q3": 2, "q4": 3, "q5": 4,
             "s1": 5, "s2": 6, "s3": 7, "s4": 8}
    return _simple("F1", 9, pairs, roles, [("s1", "s2"), ("s3", "s4")])


def f2() -> Pattern:
    """Path q1..q5, double edge s12-q1, pendant pair s3, s4 at q5."""
    edges = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1),
             (5, 0, 2), (4, 6, 1), (4, 7, 1)]
    roles = {"q1": 0, "q2": 1, "q3": 2, "q4": 3, "q5": 4,
             "s12": 5, "s3": 6, "s4": 7}
    return Pattern("F2", Multigraph.build(8, edges), roles, (("s3", "s4"),))


def f3() -> Pattern:
    """Path q1..q5 with a double edge hung on each end."""
    edges = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1),
             (5, 0, 2), (6, 4, 2)]
    roles = {"q1": 0, "q2": 1, "q3": 2, "q4": 3, "q5": 4,
             "s12": 5, "s34": 6}
    return Pattern("F3", Multigraph.build(7, edges), roles)


def gamma3_preimages() -> List[Pattern]:
    return [f1(), f2(), f3()]


# -- cycles with parallel edges -------------------------------------------

def c9m() -> Pattern:
    """C9 with one parallel edge added on x0x1, x3x4 and x6x7."""
    edges = []
    for i in range(9):
        j = (i + 1) % 9
        m = 2 if i in (0, 3, 6) else 1
        edges.append((i, j, m))
    roles = {f"x{i}": i for i in range(9)}
    return Pattern("C9M", Multigraph.build(9, edges), roles)


# -- Wagner graph and variants ---------------------------------------------

def wagner() -> Pattern:
    """W: the cycle x0..x7 plus the four diameters."""
    pairs = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return _simple("W", 8, pairs, {f"x{i}": i for i in range(8)})


def wagner_rim_edges() -> List[Tuple[int, int]]:
    return [tuple(sorted((i, (i + 1) % 8))) for i in range(8)]


def wagner_chords() -> List[Tuple[int, int]]:
    return [(i, i + 4) for i in range(4)]


def wagner_plus() -> Pattern:
    """W+: W with one pendant edge attached to every vertex."""
    g = wagner().graph
    for v in range(8):
        g = g.with_pendant(v)
    return Pattern("W+", g)


def _wagner_decorated(edge: Tuple[int, int], extra: int = 1) -> Multigraph:
    """Subdivide one edge of W and add `extra` parallel edges between the
    new vertex and one of its neighbours (the neighbour gets degree 4)."""
    g = wagner().graph.subdivide(*edge)
    w = g.n - 1
    return g.with_edge(edge[0], w, extra)


def wagner1() -> Pattern:
    """W1: rim edge of W subdivided, one half doubled."""
    e = (0, 1)
    g = _wagner_decorated(e)
    return Pattern("W1", g, {"v": e[0], "new": g.n - 1})


def wagner2() -> Pattern:
    """W2: chord of W subdivided, one half doubled."""
    e = (0, 4)
    g = _wagner_decorated(e)
    return Pattern("W2", g, {"v": e[0], "new": g.n - 1})


def wagner_family(max_extra: int = 3) -> List[Multigraph]:
    """The set of W-variants with one subdivided edge and 1..max_extra
    added parallel edges at the new vertex (both edge orbits of W)."""
    out = []
    for e in [(0, 1), (0, 4)]:
        for extra in range(1, max_extra + 1):
            out.append(_wagner_decorated(e, extra))
    return out


def wagner3() -> Pattern:
    """W3: W with each of its four chords subdivided once."""
    g = wagner().graph
    for u, v in wagner_chords():
        g = g.subdivide(u, v)
    return Pattern("W3", g)


# -- wheels and squared paths ------------------------------------------------

def wheel(k: int) -> Pattern:
    """W_k: cycle of length k plus a hub joined to every cycle vertex."""
    pairs = [(i, (i + 1) % k) for i in range(k)] + [(k, i) for i in range(k)]
    return _simple(f"wheel{k}", k + 1, pairs, {"hub": k})


def p6_squared() -> Pattern:
    pairs = [(i, i + 1) for i in range(5)] + [(i, i + 2) for i in range(4)]
    return _simple("P6^2", 6, pairs, {f"v{i}": i for i in range(6)})


def p6_squared_plus() -> Pattern:
    pairs = [(i, i + 1) for i in range(5)] + [(i, i + 2) for i in range(4)] + [(0, 5)]
    return _simple("P6^2+", 6, pairs, {f"v{i}": i for i in range(6)})


# -- line-graph obstructions ----------------------------------------------

def g_obstruction(i: int) -> Pattern:
    """The seven minimal non-line-graphs; 1, 2, 3, 4 coincide with K1,3,
    P6^2, wheel5, P6^2+."""
    if i == 1:
        return claw()
    if i == 2:
        return p6_squared()
    if i == 3:
        return wheel(5)
    if i == 4:
        return p6_squared_plus()
    if i == 5:
        # path L-M1-M2-R with two vertices T, B joined to all four
        pairs = [(0, 1), (1, 2), (2, 3)]
        pairs += [(4, j) for j in range(4)] + [(5, j) for j in range(4)]
        return _simple("G5", 6, pairs)
    if i == 6:
        # 0=T 1=a 2=b 3=c 4=d 5=L 6=R
        pairs = [(0, 5), (5, 6), (6, 0), (0, 1), (1, 5), (5, 4), (4, 6),
                 (6, 2), (2, 0), (0, 3), (3, 4), (4, 1), (1, 2), (2, 4),
                 (5, 3), (3, 1), (3, 2)]
        return _simple("G6", 7, pairs)
    if i == 7:
        # 0=T 1=m 2=L 3=R 4=p 5=q 6=B
        pairs = [(0, 2), (2, 4), (4, 5), (5, 3), (3, 0), (0, 1), (1, 6),
                 (6, 2), (2, 1), (1, 3), (3, 6), (6, 4), (4, 1), (1, 5),
                 (5, 6), (2, 3)]
        return _simple("G7", 7, pairs)
    raise MultigraphError(f"no obstruction graph G{i}")


def line_graph_obstructions() -> List[Pattern]:
    return [g_obstruction(i) for i in range(1, 8)]


def builder_catalog() -> List[Pattern]:
    """Everything with a fixed shape, for the `pattern list` CLI verb."""
    pats = [
        claw(), triangle(), diamond(), diamond1(), diamond2(),
        gamma(1), gamma(2), gamma(3), gamma(4), gamma(5),
        z(1), z(2), f1(), f2(), f3(), c9m(),
        complete_bipartite(2, 4),
        wagner(), wagner_plus(), wagner1(), wagner2(), wagner3(),
        wheel(4), wheel(5), p6_squared(), p6_squared_plus(),
    ]
    pats += [g_obstruction(i) for i in range(5, 8)]
    pats.append(k2r_multi([(0, 0), (1, 0), (2, 0), (3, 0)]))
    pats.append(krp4_multi([1, 1, 1, 1]))
    return pats
