"""Hamiltonicity machinery: hamiltonian paths, Hamilton-connectedness
with certificates, trail-based characterizations on the preimage, and
strongly-spanning-trailable testing.

Certificate generation and verification are deliberately separate code
paths: the verifier replays adjacency only and never calls the solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple

from . import trails
from .canon import canonical_hash
from .kernels import hampath
from .multigraph import Multigraph, MultigraphError
from .trails import dct_exists, find_dct, idt_exists, spanning_trail_exists  # noqa: F401 (re-export)


def _adj_masks(g: Multigraph) -> List[int]:
    masks = [0] * g.n
    for v in range(g.n):
        for w in g.adj(v):
            masks[v] |= 1 << w
    return masks


def hamiltonian_path(g: Multigraph, a: int, b: int) -> Optional[List[int]]:
    """A hamiltonian (a,b)-path of the underlying simple graph, or None."""
    if a == b:
        raise MultigraphError("hamiltonian path endpoints must differ")
    return hampath(g.n, _adj_masks(g), a, b)


def hamiltonian_path_brute(g: Multigraph, a: int, b: int) -> Optional[List[int]]:
    """Oracle: try every permutation of the interior.  Tests only."""
    if a == b:
        raise MultigraphError("hamiltonian path endpoints must differ")
    rest = [v for v in g.vertices() if v not in (a, b)]
    for perm in itertools.permutations(rest):
        seq = [a, *perm, b]
        if all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)):
            return seq
    return None


# -- certificates -------------------------------------------------------------


@dataclass
class HamiltonCertificate:
    graph_hash: str
    paths: Dict[Tuple[int, int], List[int]]

    def serialize(self) -> str:
        lines = [f"cert {self.graph_hash}"]
        for (a, b), p in sorted(self.paths.items()):
            lines.append(f"path {a} {b} : " + " ".join(str(v) for v in p))
        return "\n".join(lines) + "\n"


class CertificateError(ValueError):
    pass


def parse_certificates(text: str) -> List[HamiltonCertificate]:
    certs: List[HamiltonCertificate] = []
    cur: Optional[HamiltonCertificate] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "cert":
            if len(parts) != 2:
                raise CertificateError(f"line {lineno}: malformed cert line")
            cur = HamiltonCertificate(parts[1], {})
            certs.append(cur)
        elif parts[0] == "path":
            if cur is None:
                raise CertificateError(f"line {lineno}: path before cert header")
            if len(parts) < 5 or parts[3] != ":":
                raise CertificateError(f"line {lineno}: malformed path line")
            try:
                a, b = int(parts[1]), int(parts[2])
                seq = [int(x) for x in parts[4:]]
            except ValueError:
                raise CertificateError(f"line {lineno}: non-integer vertex id")
            cur.paths[(min(a, b), max(a, b))] = seq if a < b else list(reversed(seq))
        else:
            raise CertificateError(f"line {lineno}: unknown directive {parts[0]!r}")
    return certs


def _pair_search(args):
    n, masks, a, b = args
    return (a, b), hampath(n, masks, a, b)


def hamilton_connected(
    g: Multigraph, workers: int = 1
) -> Tuple[bool, Optional[HamiltonCertificate], Optional[Tuple[int, int]]]:
    """(connected?, certificate, witness pair).  The certificate covers
    every unordered vertex pair on success; the witness names the first
    pair with no hamiltonian path on failure."""
    if g.n < 3:
        raise MultigraphError("Hamilton-connectedness needs >= 3 vertices")
    masks = _adj_masks(g)
    pairs = list(itertools.combinations(range(g.n), 2))
    paths: Dict[Tuple[int, int], List[int]] = {}
    if workers > 1:
        with Pool(workers) as pool:
            jobs = [(g.n, masks, a, b) for a, b in pairs]
            for (a, b), p in pool.map(_pair_search, jobs):
                if p is None:
                    return False, None, (a, b)
                paths[(a, b)] = p
    else:
        for a, b in pairs:
            p = hampath(g.n, masks, a, b)
            if p is None:
                return False, None, (a, b)
            paths[(a, b)] = p
    return True, HamiltonCertificate(canonical_hash(g), paths), None


def verify_certificate(g: Multigraph, cert: HamiltonCertificate) -> Tuple[bool, str]:
    """Independent replay: hash match, full pair coverage, each path a
    hamiltonian (a,b)-path under g's adjacency."""
    if cert.graph_hash != canonical_hash(g):
        return False, "hash mismatch: certificate is for a different graph"
    want = set(itertools.combinations(range(g.n), 2))
    have = set(cert.paths)
    if want - have:
        a, b = sorted(want - have)[0]
        return False, f"missing pair ({a},{b})"
    for (a, b), seq in sorted(cert.paths.items()):
        if len(seq) != g.n or set(seq) != set(range(g.n)):
            return False, f"pair ({a},{b}): not a permutation of the vertices"
        if not ((seq[0] == a and seq[-1] == b) or (seq[0] == b and seq[-1] == a)):
            return False, f"pair ({a},{b}): endpoints wrong"
        for i in range(len(seq) - 1):
            if g.mult(seq[i], seq[i + 1]) < 1:
                return False, (
                    f"pair ({a},{b}): step {seq[i]}-{seq[i+1]} is not an edge"
                )
    return True, "ok"


# -- preimage-side characterizations ------------------------------------------


def hamilton_connected_via_idt(
    h: Multigraph,
) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """All distinct edge-copy pairs admit an IDT (copies of one multiedge
    count as distinct); equals Hamilton-connectedness of L(h)."""
    if h.num_edge_copies() < 3:
        raise MultigraphError("IDT characterization requires >= 3 edge copies")
    m = h.num_edge_copies()
    for e, f in itertools.combinations(range(m), 2):
        if not idt_exists(h, e, f):
            return False, (e, f)
    return True, None


def subdivided_pair(h: Multigraph, c1, c2, series: bool) -> Tuple[Multigraph, int, int]:
    """H(e1,e2): both chosen edges subdivided; series=True places both new
    vertices inside one edge copy (the e1 = e2 case)."""
    if series:
        u, v = c1
        g = h.subdivide(u, v)
        w1 = h.n
        g = g.subdivide(u, w1)
        return g, w1, h.n + 1
    g = h.subdivide(*c1)
    g = g.subdivide(*c2)
    return g, h.n, h.n + 1


def strongly_spanning_trailable(
    h: Multigraph,
) -> Tuple[bool, Optional[Tuple]]:
    """For every edge pair (equal allowed), the doubly-subdivided graph
    has a spanning trail between the two new vertices."""
    if not h.is_connected() or h.num_edge_copies() < 2:
        raise MultigraphError("requires a connected multigraph with >= 2 edges")
    classes = h.edge_classes()
    cases = []
    for i, c1 in enumerate(classes):
        cases.append((c1, c1, True))  # e1 = e2, one copy subdivided twice
        if h.mult(*c1) >= 2:
            cases.append((c1, c1, False))  # two parallel copies
        for c2 in classes[i + 1:]:
            cases.append((c1, c2, False))
    for c1, c2, series in cases:
        g, s, t = subdivided_pair(h, c1, c2, series)
        if not spanning_trail_exists(g, s, t):
            return False, (c1, c2, "series" if series else "parallel")
    return True, None
