"""
Seeded random stacked triangulations

Starting from K4, each step picks a bounded face uniformly at random and
stacks a new vertex inside it. The generator is numpy's PCG64 seeded from
SeedSequence([seed, n]); corpora spawn one child sequence per graph, so every
member is reproducible on its own.
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from trikit.core.errors import GraphError
from trikit.core.schema import RotationSystem, SimpleGraph, Triangulation, Triple, VertexId
from trikit.planar.triangulation import faces, require_triangulation


logger = logging.getLogger(__name__)

OUTER_LABELS: Triple = ("a1", "a2", "a3")


def vertex_label(k: int) -> VertexId:
    """Label of the k-th generated vertex (k >= 4)."""
    return f"v{k}"


def make_rng(seed: int, n: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, n])))


def _k4_rotation(inner: VertexId) -> Dict[VertexId, List[VertexId]]:
    a1, a2, a3 = OUTER_LABELS
    return {
        a1: [a3, a2, inner],
        a2: [a1, a3, inner],
        a3: [a2, a1, inner],
        inner: [a1, a2, a3],
    }


def random_stacked_triangulation(
    n: int,
    seed: int = 0,
    rng: Optional[np.random.Generator] = None
) -> Triangulation:
    """
    Build a random stacked triangulation on n vertices.

    Args:
        n: Number of vertices, at least 4
        seed: Seed combined with n when `rng` is not given
        rng: Generator to draw faces from

    Raises:
        GraphError: If n < 4.
    """
    if n < 4:
        raise GraphError(f"stacked triangulations start from K4, n must be at least 4, got {n}")
    if rng is None:
        rng = make_rng(seed, n)

    cycles = _k4_rotation(vertex_label(4))
    k4 = require_triangulation(
        SimpleGraph(adj={v: frozenset(ring) for v, ring in cycles.items()}),
        RotationSystem.from_lists(cycles),
        OUTER_LABELS,
    )
    face_list = [tuple(f) for f in faces(k4).bounded]

    for k in range(5, n + 1):
        u = vertex_label(k)
        idx = int(rng.integers(len(face_list)))
        x, y, z = face_list[idx]
        # (x, y, z) traces with succ_y(x) = z
        for corner, after in ((y, x), (z, y), (x, z)):
            ring = cycles[corner]
            ring.insert(ring.index(after) + 1, u)
        cycles[u] = [x, z, y]
        face_list[idx] = (x, y, u)
        face_list.append((y, z, u))
        face_list.append((z, x, u))

    graph = SimpleGraph(adj={v: frozenset(ring) for v, ring in cycles.items()})
    tri = require_triangulation(graph, RotationSystem.from_lists(cycles), OUTER_LABELS)
    logger.debug(f"Generated stacked triangulation, n={n}")
    return tri


def generate_corpus(sizes: Sequence[int], seed: int = 0) -> List[Triangulation]:
    """One stacked triangulation per entry of `sizes`, from child seeds of `seed`."""
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    corpus = []
    for n, child in zip(sizes, children):
        rng = np.random.Generator(np.random.PCG64(child))
        corpus.append(random_stacked_triangulation(n, rng=rng))
    logger.info(f"Generated corpus of {len(corpus)} triangulations")
    return corpus
