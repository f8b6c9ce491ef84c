"""Geometric ground truth: the face lattice of Conv(W . lambda), by brute force.

Faces are exposed as argmax sets of linear functionals that are constant
on the blocks of an ordered set partition of the coordinates; the braid
arrangement refines the normal fan of every W-orbit polytope, so these
functionals reach every nonempty face. Nothing here uses the lattice
formulas of ``orbitope.hvector``.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import multiset_partitions, multiset_permutations

from orbitope.coxeter import SimpleSubset, mask_components
from orbitope.errors import GuardViolation, InputError, InvariantViolation
from orbitope.settings import get_settings
from orbitope.state import FVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Weight:
    """Integer point of (n+1)-space, weakly decreasing left to right."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise InputError("a weight needs at least one coordinate")
        if any(a < b for a, b in zip(coords, coords[1:])):
            raise InputError(f"weight {coords} is not weakly decreasing")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def stabilizer(self) -> SimpleSubset:
        """J = {s_i : coords_i == coords_{i+1}}."""
        c = self.coords
        return SimpleSubset.of(self.n, (i + 1 for i in range(self.n) if c[i] == c[i + 1]))


@dataclass(frozen=True)
class OrbitPointSet:
    """Distinct coordinate permutations of a weight, in lexicographic order."""

    points: tuple[tuple[int, ...], ...]
    array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "array", np.array(self.points, dtype=np.int64))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def width(self) -> int:
        return len(self.points[0])


@dataclass(frozen=True, slots=True)
class OrderedSetPartition:
    """Disjoint nonempty blocks covering {1..m}, in order."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = [x for block in self.blocks for x in block]
        if any(not block for block in self.blocks) or sorted(seen) != list(
            range(1, len(seen) + 1)
        ):
            raise InputError(f"{self.blocks} is not an ordered set partition")

    @property
    def m(self) -> int:
        return sum(len(block) for block in self.blocks)

    def functional(self) -> tuple[int, ...]:
        """Value (#blocks - j) on every coordinate of the j-th block (1-based)."""
        values = [0] * self.m
        count = len(self.blocks)
        for j, block in enumerate(self.blocks, start=1):
            for position in block:
                values[position - 1] = count - j
        return tuple(values)


@dataclass(frozen=True, slots=True)
class Face:
    vertices: tuple[int, ...]
    dim: int


@dataclass(frozen=True)
class FaceLattice:
    """All nonempty faces of an orbit polytope; order by set inclusion."""

    faces: tuple[Face, ...]

    @property
    def dimension(self) -> int:
        return max(face.dim for face in self.faces)

    def faces_of_dim(self, dim: int) -> list[Face]:
        return [face for face in self.faces if face.dim == dim]

    def f_vector(self) -> FVector:
        counts = Counter(face.dim for face in self.faces)
        return FVector(counts=tuple(counts[i] for i in range(self.dimension + 1)))

    def dump(self) -> str:
        return "\n".join(
            f"dim {face.dim}: " + " ".join(str(v) for v in face.vertices)
            for face in self.faces
        )


def canonical_weight(n: int, j: SimpleSubset) -> Weight:
    """Runs of positions linked by J get values m-1, m-2, ..., 0 left to right."""
    if j.n != n:
        raise InputError(f"subset {j.label()} belongs to A_{j.n}, not A_{n}")
    run_of = list(range(n + 1))
    for a, b in mask_components(j.mask):
        # s_a..s_b glue positions a..b+1 into one run
        for position in range(a, b + 2):
            run_of[position - 1] = run_of[a - 1]
    labels = sorted(set(run_of))
    m = len(labels)
    rank = {label: r for r, label in enumerate(labels, start=1)}
    return Weight(tuple(m - rank[run_of[p]] for p in range(n + 1)))


def orbit_points(w: Weight, guard_n: Optional[int] = None) -> OrbitPointSet:
    limit = _guard(guard_n) + 1
    if w.n > limit:
        raise GuardViolation(
            f"orbit of a rank-{w.n} weight exceeds the guard n <= {limit}; raise ORBITOPE_GUARD_N"
        )
    points = tuple(tuple(p) for p in multiset_permutations(sorted(w.coords)))
    expected = math.factorial(w.n + 1)
    for size in Counter(w.coords).values():
        expected //= math.factorial(size)
    if len(points) != expected:
        raise InvariantViolation(f"orbit of {w.coords} has {len(points)} points, expected {expected}")
    return OrbitPointSet(points)


def fubini_number(m: int) -> int:
    """Number of ordered set partitions of an m-set."""
    table = [1]
    for size in range(1, m + 1):
        table.append(sum(math.comb(size, k) * table[size - k] for k in range(1, size + 1)))
    return table[m]


def ordered_set_partitions(m: int, guard_n: Optional[int] = None) -> list[OrderedSetPartition]:
    if m < 1:
        raise InputError(f"need m >= 1, got {m}")
    limit = _guard(guard_n) + 2
    if m > limit:
        raise GuardViolation(
            f"ordered set partitions of {m} points exceed the guard m <= {limit}"
        )
    result = []
    for partition in multiset_partitions(list(range(1, m + 1))):
        blocks = [tuple(block) for block in partition]
        for ordering in itertools.permutations(blocks):
            result.append(OrderedSetPartition(tuple(ordering)))
    return result


def face_of_partition(pts: OrbitPointSet, osp: OrderedSetPartition) -> frozenset[int]:
    """Indices of the points maximizing the partition's functional."""
    if osp.m != pts.width:
        raise InputError(f"partition of {osp.m} points used on {pts.width}-dimensional orbit")
    scores = pts.array @ np.array(osp.functional(), dtype=np.int64)
    return frozenset(int(i) for i in np.flatnonzero(scores == scores.max()))


def affine_dimension(pts: OrbitPointSet, vertices: tuple[int, ...]) -> int:
    """Exact rank of the difference vectors from the first vertex."""
    if len(vertices) == 1:
        return 0
    block = pts.array[list(vertices)]
    diffs = np.unique(block[1:] - block[0], axis=0)
    rows = [row for row in diffs.tolist() if any(row)]
    if not rows:
        return 0
    matrix = DomainMatrix(
        [[ZZ(v) for v in row] for row in rows], (len(rows), pts.width), ZZ
    )
    return int(matrix.convert_to(QQ).rank())


def enumerate_face_lattice(pts: OrbitPointSet, guard_n: Optional[int] = None) -> FaceLattice:
    if not len(pts):
        raise InputError("cannot build the face lattice of an empty point set")
    rank = pts.width - 1
    limit = _guard(guard_n)
    if rank > limit:
        raise GuardViolation(
            f"face lattice of a rank-{rank} orbit exceeds the guard n <= {limit}; raise ORBITOPE_GUARD_N"
        )
    partitions = ordered_set_partitions(pts.width, guard_n=limit)
    logger.info(
        "--- Enumerating faces of %d orbit points over %d ordered set partitions ---",
        len(pts),
        len(partitions),
    )
    vertex_sets = {face_of_partition(pts, osp) for osp in partitions}
    faces = []
    for vertex_set in vertex_sets:
        vertices = tuple(sorted(vertex_set))
        faces.append(Face(vertices=vertices, dim=affine_dimension(pts, vertices)))
    faces.sort(key=lambda face: (face.dim, face.vertices))
    return FaceLattice(tuple(faces))


def face_lattice(n: int, j: SimpleSubset, guard_n: Optional[int] = None) -> FaceLattice:
    limit = _guard(guard_n)
    if n > limit:
        raise GuardViolation(f"rank {n} exceeds the oracle guard n <= {limit}; raise ORBITOPE_GUARD_N")
    return enumerate_face_lattice(orbit_points(canonical_weight(n, j), limit), limit)


def f_vector_geometric(n: int, j: SimpleSubset, guard_n: Optional[int] = None) -> FVector:
    return face_lattice(n, j, guard_n).f_vector()


def is_simple(lat: FaceLattice) -> bool:
    """Every vertex lies on exactly d edges; a point does not count as simple."""
    d = lat.dimension
    if d < 1:
        return False
    degree = Counter(v for edge in lat.faces_of_dim(1) for v in edge.vertices)
    return all(degree[vertex.vertices[0]] == d for vertex in lat.faces_of_dim(0))


def _guard(guard_n: Optional[int]) -> int:
    return get_settings().guard_n if guard_n is None else guard_n
