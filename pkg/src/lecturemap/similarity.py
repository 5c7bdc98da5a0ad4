"""Lecture similarity: Dice distances over selected phrases, embedded in 2D.

Each lecture is reduced to the subset of the selected phrases it contains.
For two lectures with a phrases in common, b exclusive to the first and c
exclusive to the second, the distance is (b + c) / (2a + b + c): 0 for
identical phrase sets, 1 for disjoint ones.  Classical multidimensional
scaling turns the resulting matrix into plottable 2D coordinates, which is
exact whenever the distances are realizable in the plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Sequence

import numpy as np

from .base import Estimator
from .errors import SelectionError
from .indexer import OccurrenceTable
from .validation import check_distance_matrix


def dice_distance(members_i: Collection[int], members_j: Collection[int]) -> float:
    """Dice distance between two membership sets; both-empty counts as 0."""
    set_i, set_j = set(members_i), set(members_j)
    a = len(set_i & set_j)
    b = len(set_i - set_j)
    c = len(set_j - set_i)
    denominator = 2 * a + b + c
    if denominator == 0:
        return 0.0
    return (b + c) / denominator


def membership_sets(table: OccurrenceTable, selection: Collection[int]) -> dict[int, frozenset[int]]:
    """lecture_id -> the selected phrases present (count > 0) in it."""
    if not selection:
        raise SelectionError("phrase selection must be non-empty")
    bad = [pid for pid in selection if not 0 <= pid < table.n_phrases]
    if bad:
        raise SelectionError(f"unknown phrase ids: {sorted(bad)}")
    members: dict[int, set[int]] = {lid: set() for lid in table.lecture_ids}
    for pid in selection:
        for lid in table.entries.get(pid, {}):
            members[lid].add(pid)
    return {lid: frozenset(s) for lid, s in members.items()}


@dataclass
class DistanceMatrix:
    values: np.ndarray
    lecture_ids: tuple[int, ...]


def distance_matrix(table: OccurrenceTable, selection: Collection[int]) -> DistanceMatrix:
    if table.n_transcripts < 2:
        raise ValueError("similarity needs at least 2 transcripts")
    members = membership_sets(table, selection)
    lids = table.lecture_ids
    n = len(lids)
    values = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d = dice_distance(members[lids[i]], members[lids[j]])
            values[i, j] = values[j, i] = d
    return DistanceMatrix(values, lids)


class ClassicalMDS(Estimator):
    """Torgerson's classical scaling via eigendecomposition.

    Squared distances are double-centered into the Gram matrix
    B = -1/2 * J D^2 J; coordinates come from the top non-negative
    eigenpairs.  The output is centered at the origin with the principal
    axis along +x, and each axis's sign is fixed so the coordinate of
    largest magnitude is positive, making results reproducible.
    """

    def __init__(self, n_components: int = 2):
        self.n_components = n_components

    def fit(self, distances: "np.ndarray | Sequence[Sequence[float]]") -> "ClassicalMDS":
        d = check_distance_matrix(distances)
        n = d.shape[0]
        if n < 2:
            raise ValueError("need at least 2 points to embed")
        centering = np.eye(n) - np.full((n, n), 1.0 / n)
        gram = -0.5 * centering @ (d ** 2) @ centering
        eigenvalues, eigenvectors = np.linalg.eigh(gram)
        order = np.argsort(eigenvalues)[::-1][: self.n_components]
        coords = np.zeros((n, self.n_components))
        kept = np.zeros(self.n_components)
        for axis, idx in enumerate(order):
            lam = max(eigenvalues[idx], 0.0)
            kept[axis] = lam
            if lam > 0:
                coords[:, axis] = eigenvectors[:, idx] * np.sqrt(lam)
        coords -= coords.mean(axis=0)
        for axis in range(self.n_components):
            column = coords[:, axis]
            peak = int(np.argmax(np.abs(column)))
            if column[peak] < 0:
                coords[:, axis] = -column
        self.embedding_ = coords
        self.eigenvalues_ = kept
        self.stress_ = _stress(d, coords)
        return self

    def fit_transform(self, distances) -> np.ndarray:
        return self.fit(distances).embedding_


def _pairwise(coords: np.ndarray) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    return np.sqrt((diff ** 2).sum(axis=-1))


def _stress(d: np.ndarray, coords: np.ndarray) -> float:
    mask = np.triu_indices(d.shape[0], k=1)
    target = d[mask]
    denom = float((target ** 2).sum())
    if denom == 0.0:
        return 0.0
    achieved = _pairwise(coords)[mask]
    return float(np.sqrt(((target - achieved) ** 2).sum() / denom))


@dataclass
class Embedding2D:
    coordinates: np.ndarray  # (n, 2)
    stress: float
    lecture_ids: tuple[int, ...] = ()


def mds_embed(d: DistanceMatrix) -> Embedding2D:
    mds = ClassicalMDS(n_components=2).fit(d.values)
    return Embedding2D(mds.embedding_, mds.stress_, d.lecture_ids)


STRONG = "strong"
WEAK = "weak"


def build_graph(
    embedding: Embedding2D,
    d: DistanceMatrix,
    t_strong: float = 0.5,
    t_weak: float = 0.8,
) -> dict:
    """Nodes at their embedded positions; edges classified by distance.

    A pair at distance <= t_strong is strongly linked, one within
    (t_strong, t_weak] weakly, and anything farther is not linked at all.
    """
    if not t_strong <= t_weak:
        raise ValueError(f"need t_strong <= t_weak, got {t_strong} > {t_weak}")
    lids = embedding.lecture_ids or d.lecture_ids
    nodes = [
        {"lecture": lid, "x": float(x), "y": float(y)}
        for lid, (x, y) in zip(lids, embedding.coordinates)
    ]
    edges = []
    n = len(lids)
    for i in range(n):
        for j in range(i + 1, n):
            dist = float(d.values[i, j])
            if dist <= t_strong:
                strength = STRONG
            elif dist <= t_weak:
                strength = WEAK
            else:
                continue
            edges.append({"i": lids[i], "j": lids[j], "d": dist, "strength": strength})
    return {"nodes": nodes, "edges": edges, "stress": embedding.stress}
