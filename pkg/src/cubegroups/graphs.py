"""Decorated graphs: involution data, trajectories, admissibility, edge partitions, relators.

A decorated graph assigns to each generator label s an involution j_s of the
label set with j_s(s) = s.  Seeding the recurrence s3 = j_{s2}(s1),
s4 = j_{s3}(s2), ... with two distinct labels produces a trajectory; the graph
is admissible when every trajectory closes up with period 4 and the composite
of the four involutions along one period is the identity permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    DistinctLabelsRequiredError,
    DuplicateLabelError,
    NotAdmissibleError,
    NotFourPeriodicError,
    UnknownLabelError,
)

Permutation = dict[str, str]


def _check_label(labels, s):
    if s not in labels:
        raise UnknownLabelError(s)


@dataclass(frozen=True)
class DecoratedGraph:
    """An ordered label set plus one label-fixing involution per label.

    ``involutions[s]`` is a total self-map of the label set, stored as a dict.
    The label order is significant: it fixes basis order, serialization order,
    and the deterministic order of every sweep.
    """

    labels: tuple[str, ...]
    involutions: dict[str, Permutation]

    def __post_init__(self):
        seen = set()
        for s in self.labels:
            if not s or any(ch.isspace() for ch in s):
                raise ValueError(f"bad label {s!r}: must be nonempty without whitespace")
            if s in seen:
                raise DuplicateLabelError(s)
            seen.add(s)
        if set(self.involutions) != seen:
            raise ValueError("involutions must be keyed by exactly the label set")
        for s, j in self.involutions.items():
            if set(j) != seen or set(j.values()) != seen:
                raise ValueError(f"involution for {s!r} is not a self-map of the label set")
            for u, v in j.items():
                if j[v] != u:
                    raise ValueError(f"map for {s!r} is not an involution ({u}->{v}->{j[v]})")
            if j[s] != s:
                raise ValueError(f"involution for {s!r} must fix {s!r}")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def apply(self, s: str, t: str) -> str:
        """Image of t under the involution attached to s."""
        _check_label(self.involutions, s)
        _check_label(self.involutions, t)
        return self.involutions[s][t]

    def label_index(self, s: str) -> int:
        _check_label(self.involutions, s)
        return self.labels.index(s)

    def restricted(self, subset) -> "DecoratedGraph":
        """Restriction to an invariant label subset, preserving label order.

        Each kept involution must map the subset into itself; raises ValueError
        otherwise (callers restrict to invariant subsets only).
        """
        keep = set(subset)
        labels = tuple(s for s in self.labels if s in keep)
        invs = {}
        for s in labels:
            j = self.involutions[s]
            if any(j[t] not in keep for t in keep):
                raise ValueError(f"subset {sorted(keep)} is not invariant under j_{s}")
            invs[s] = {t: j[t] for t in keep}
        return DecoratedGraph(labels, invs)


class TrajectoryKind(Enum):
    FOUR_CYCLE = "four-cycle"
    ANGLE = "angle"
    SINGLE_EDGE = "single-edge"
    NOT_PERIODIC = "not-periodic"


@dataclass(frozen=True)
class Trajectory:
    seed: tuple[str, str]
    terms: tuple[str, str, str, str, str, str]
    kind: TrajectoryKind

    @property
    def period(self) -> tuple[str, str, str, str]:
        return self.terms[:4]

    @property
    def is_periodic(self) -> bool:
        return self.kind is not TrajectoryKind.NOT_PERIODIC


def trajectory(g: DecoratedGraph, s1: str, s2: str) -> Trajectory:
    """First six terms of the recurrence seeded at (s1, s2), with classification.

    The recurrence is a deterministic map on ordered pairs of labels, so the
    sequence is 4-periodic exactly when the pair state (s5, s6) returns to
    (s1, s2); no further unrolling is needed.
    """
    _check_label(g.involutions, s1)
    _check_label(g.involutions, s2)
    if s1 == s2:
        raise DistinctLabelsRequiredError(s1)
    terms = [s1, s2]
    for _ in range(4):
        terms.append(g.apply(terms[-1], terms[-2]))
    terms = tuple(terms)
    if (terms[4], terms[5]) != (s1, s2):
        kind = TrajectoryKind.NOT_PERIODIC
    else:
        distinct = len(set(terms[:4]))
        if distinct == 2:
            kind = TrajectoryKind.SINGLE_EDGE
        elif distinct == 3:
            kind = TrajectoryKind.ANGLE
        else:
            kind = TrajectoryKind.FOUR_CYCLE
    return Trajectory((s1, s2), terms, kind)


def holonomy(g: DecoratedGraph, s1: str, s2: str) -> Permutation:
    """Composite j_{s4} o j_{s3} o j_{s2} o j_{s1} along one period of the seed.

    Only defined for 4-periodic trajectories.
    """
    traj = trajectory(g, s1, s2)
    if not traj.is_periodic:
        raise NotFourPeriodicError(traj.seed)
    comp = {}
    for t in g.labels:
        x = t
        for s in traj.period:
            x = g.apply(s, x)
        comp[t] = x
    return comp


def identity_permutation(labels) -> Permutation:
    return {s: s for s in labels}


@dataclass(frozen=True)
class AdmissibilityFailure:
    seed: tuple[str, str]
    kind: str  # "NotFourPeriodic" or "Holonomy"
    witness: Permutation | None = None


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    failures: tuple[AdmissibilityFailure, ...]


def seed_pairs(g: DecoratedGraph):
    """All ordered pairs of distinct labels, in label order."""
    return ((u, v) for u, v in itertools.product(g.labels, repeat=2) if u != v)


def is_admissible(g: DecoratedGraph) -> AdmissibilityReport:
    """Check every trajectory for 4-periodicity and trivial holonomy.

    Failures are reported as data, one entry per failing seed, in label order.
    """
    failures = []
    ident = identity_permutation(g.labels)
    for u, v in seed_pairs(g):
        traj = trajectory(g, u, v)
        if not traj.is_periodic:
            failures.append(AdmissibilityFailure((u, v), "NotFourPeriodic"))
            continue
        h = holonomy(g, u, v)
        if h != ident:
            failures.append(AdmissibilityFailure((u, v), "Holonomy", witness=h))
    return AdmissibilityReport(not failures, tuple(failures))


def admissible_quick(g: DecoratedGraph) -> bool:
    """Short-circuit admissibility test: stops at the first failing seed."""
    for u, v in seed_pairs(g):
        traj = trajectory(g, u, v)
        if not traj.is_periodic:
            return False
        for t in g.labels:
            x = t
            for s in traj.period:
                x = g.involutions[s][x]
            if x != t:
                return False
    return True


def require_admissible(g: DecoratedGraph) -> None:
    report = is_admissible(g)
    if not report.admissible:
        raise NotAdmissibleError(report)


@dataclass(frozen=True)
class EdgeGroup:
    """One block of the edge partition.

    For a four-cycle, ``vertices`` is the cyclic vertex sequence (canonical
    rotation/reversal); for an angle it is (end, apex, end); for a single edge
    the sorted pair.
    """

    kind: TrajectoryKind
    vertices: tuple[str, ...]

    @property
    def edges(self) -> frozenset[frozenset[str]]:
        v = self.vertices
        if self.kind is TrajectoryKind.FOUR_CYCLE:
            pairs = [(v[i], v[(i + 1) % 4]) for i in range(4)]
        elif self.kind is TrajectoryKind.ANGLE:
            pairs = [(v[0], v[1]), (v[1], v[2])]
        else:
            pairs = [(v[0], v[1])]
        return frozenset(frozenset(p) for p in pairs)


def _canonical_cycle(cycle):
    variants = []
    for seq in (cycle, cycle[::-1]):
        for r in range(4):
            variants.append(seq[r:] + seq[:r])
    return min(variants)


def edge_partition(g: DecoratedGraph) -> tuple[EdgeGroup, ...]:
    """Partition the unordered label pairs into 4-cycles, angles, and single edges.

    Requires 4-periodicity of every trajectory (checked seed by seed).
    """
    covered = set()
    groups = []
    for u, v in itertools.combinations(g.labels, 2):
        edge = frozenset((u, v))
        if edge in covered:
            continue
        traj = trajectory(g, u, v)
        if not traj.is_periodic:
            raise NotAdmissibleError(
                AdmissibilityReport(False, (AdmissibilityFailure((u, v), "NotFourPeriodic"),))
            )
        s1, s2, s3, s4 = traj.period
        if traj.kind is TrajectoryKind.SINGLE_EDGE:
            group = EdgeGroup(traj.kind, tuple(sorted((s1, s2))))
        elif traj.kind is TrajectoryKind.ANGLE:
            if s1 == s3:
                apex, ends = s1, (s2, s4)
            else:  # s2 == s4
                apex, ends = s2, (s1, s3)
            lo, hi = sorted(ends)
            group = EdgeGroup(traj.kind, (lo, apex, hi))
        else:
            group = EdgeGroup(traj.kind, _canonical_cycle((s1, s2, s3, s4)))
        new_edges = group.edges
        if new_edges & covered:
            raise NotAdmissibleError(
                AdmissibilityReport(False, (AdmissibilityFailure((u, v), "NotFourPeriodic"),))
            )
        covered |= new_edges
        groups.append(group)
    return tuple(groups)


def presentation_relators(g: DecoratedGraph) -> list[tuple[str, ...]]:
    """Relator words: one square per generator plus one 4-letter word per
    trajectory class.

    Trajectories related by cyclic rotation or reversal give the same relation,
    so each class contributes its lexicographically least representative.
    """
    require_admissible(g)
    squares = [(s, s) for s in g.labels]
    classes = {_canonical_cycle(trajectory(g, u, v).period) for u, v in seed_pairs(g)}
    return squares + sorted(classes)
