"""Qutrit Kochen-Specker contradiction from the Hesse SIC and the four MUBs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import qmath
from .constructions import MubSet, SicSet, build_hesse_sic, build_qutrit_mubs

EDGE_THRESHOLD = 1e-8
AMBIGUOUS_BAND = (1e-10, 1e-6)


class AmbiguousOrthogonalityError(RuntimeError):
    """A squared overlap is neither clearly zero nor clearly nonzero."""


@dataclass(frozen=True)
class AffinePlane:
    points: tuple[int, ...]
    parallel_classes: tuple[tuple[frozenset, ...], ...]

    @property
    def lines(self) -> list[frozenset]:
        return [line for cls in self.parallel_classes for line in cls]


def affine_plane() -> AffinePlane:
    """AG(2,3) with point n at grid position divmod(n - 1, 3).

    Parallel classes come in the order horizontals, verticals, diagonals
    (c - r constant) and anti-diagonals (r + c constant).
    """
    coords = {n: divmod(n - 1, 3) for n in range(1, 10)}
    directions = ((1, 0), (0, 1), (-1, 1), (1, 1))  # line: a*r + b*c = k (mod 3)
    classes = []
    for a, b in directions:
        classes.append(
            tuple(
                frozenset(n for n, (r, c) in coords.items() if (a * r + b * c) % 3 == k)
                for k in range(3)
            )
        )
    return AffinePlane(tuple(coords), tuple(classes))


def line_label(line) -> str:
    return "".join(str(n) for n in sorted(line))


@dataclass(frozen=True)
class OrthogonalityGraph:
    """Bipartite graph: SIC index (1..9) -- MUB label, edge iff orthogonal."""

    sic_nodes: tuple[int, ...]
    mub_nodes: tuple[str, ...]
    bases: tuple[tuple[str, ...], ...]
    edges: frozenset = field(default_factory=frozenset)

    def neighbours_of_mub(self, label: str) -> frozenset:
        return frozenset(i for i, m in self.edges if m == label)

    def neighbours_of_sic(self, index: int) -> frozenset:
        return frozenset(m for i, m in self.edges if i == index)

    def degrees(self) -> tuple[set[int], set[int]]:
        return (
            {len(self.neighbours_of_sic(i)) for i in self.sic_nodes},
            {len(self.neighbours_of_mub(m)) for m in self.mub_nodes},
        )

    def to_dot(self) -> str:
        lines = ["graph orthogonality {"]
        lines += [f'  "P{i}" [shape=circle];' for i in self.sic_nodes]
        lines += [f'  "M{m}" [shape=box];' for m in self.mub_nodes]
        lines += [f'  "P{i}" -- "M{m}";' for i, m in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(
    hesse: SicSet | None = None, mubs: MubSet | None = None, threshold: float = EDGE_THRESHOLD
) -> OrthogonalityGraph:
    """Orthogonality graph between the 9 SIC kets and the 12 MUB kets.

    Raises:
        AmbiguousOrthogonalityError: if a squared overlap falls in the guard band.
        RuntimeError: if the degrees are not 4 (SIC side) and 3 (MUB side).
    """
    hesse = build_hesse_sic() if hesse is None else hesse
    mubs = build_qutrit_mubs(hesse) if mubs is None else mubs
    overlaps = np.abs(mubs.kets.conj() @ hesse.kets.T) ** 2
    lo, hi = AMBIGUOUS_BAND
    if np.any((overlaps >= lo) & (overlaps <= hi)):
        raise AmbiguousOrthogonalityError(f"squared overlap inside [{lo}, {hi}]")
    edges = frozenset(
        (int(i) + 1, mubs.labels[m]) for m, i in zip(*np.nonzero(overlaps < threshold))
    )
    graph = OrthogonalityGraph(
        tuple(range(1, len(hesse) + 1)),
        mubs.labels,
        tuple(tuple(mubs.labels[k] for k in basis) for basis in mubs.bases),
        edges,
    )
    if graph.degrees() != ({4}, {3}):
        raise RuntimeError(f"unexpected degrees {graph.degrees()}")
    return graph


def enumerate_assignments(graph: OrthogonalityGraph) -> list[tuple[tuple[str, ...], int]]:
    """Every way of giving w = 1 to one vector per basis, with the number of SIC projectors left unzeroed."""
    out = []
    for choice in itertools.product(*graph.bases):
        zeroed = frozenset().union(*(graph.neighbours_of_mub(m) for m in choice))
        out.append((choice, len(graph.sic_nodes) - len(zeroed)))
    return out


@dataclass(frozen=True)
class ContradictionReport:
    required_sum: int
    max_achievable: int
    min_achievable: int
    per_assignment: list[tuple[tuple[str, ...], int]]
    born_sums: list[float]

    @property
    def contradiction(self) -> bool:
        return self.max_achievable < self.required_sum

    def to_dict(self) -> dict:
        return {
            "required_sum": self.required_sum,
            "max_achievable": self.max_achievable,
            "min_achievable": self.min_achievable,
            "contradiction": self.contradiction,
            "born_sums": self.born_sums,
            "per_assignment": [{"choice": list(c), "survivors": s} for c, s in self.per_assignment],
        }


def ks_report(
    hesse: SicSet | None = None,
    mubs: MubSet | None = None,
    n_states: int = 20,
    seed: int = 0,
) -> ContradictionReport:
    """Compare the noncontextual bound on sum_i w(Pi_i) with the value d * w(I) = 3 it must take."""
    hesse = build_hesse_sic() if hesse is None else hesse
    mubs = build_qutrit_mubs(hesse) if mubs is None else mubs
    assignments = enumerate_assignments(build_graph(hesse, mubs))
    survivors = [s for _, s in assignments]
    # sum_i w(Pi_i) = d sum_i w(Pi_i / d) = d w(I)
    required = hesse.dim * 1
    rng = np.random.default_rng(seed)
    projectors = hesse.projectors
    born = [
        float(sum(qmath.trace(rho @ p).real for p in projectors))
        for rho in (qmath.random_density(3, rng) for _ in range(n_states))
    ]
    return ContradictionReport(required, max(survivors), min(survivors), assignments, born)
