"""
Seeded instance generators.

Every generator draws from its own random.Random(seed); nothing reads the
global random state, so the same seed always gives the same instance.
"""

from itertools import combinations
import logging
import random

from roman3.errors import InstanceError
from roman3.graph import Graph, build_graph
from roman3.reductions.x3c import X3CInstance

logger = logging.getLogger(__name__)


def gen_block_graph(seed: int, n_target: int, max_block_size: int) -> Graph:
    """
    Grow a connected block graph by attaching cliques at random existing vertices.

    Clique sizes are drawn from 2..max_block_size and capped so that the result
    has exactly max(n_target, 1) vertices.
    """
    if max_block_size < 2:
        raise ValueError(f"max_block_size must be at least 2, got {max_block_size}")
    rng = random.Random(seed)
    n = 1
    edges: list[tuple[int, int]] = []
    while n < n_target:
        size = min(rng.randint(2, max_block_size), n_target - n + 1)
        anchor = rng.randrange(n)
        block = [anchor, *range(n, n + size - 1)]
        edges.extend(combinations(block, 2))
        n += size - 1
    return build_graph(n, edges)


def gen_tree(seed: int, n: int) -> Graph:
    return gen_block_graph(seed, n, 2)


def gen_clique(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def gen_x3c(seed: int, q: int, t: int) -> X3CInstance:
    """Plant an exact cover of 3q elements, add t - q random triples and shuffle the list."""
    if q < 1 or t < q:
        raise InstanceError(f"need q >= 1 and t >= q, got q={q}, t={t}")
    rng = random.Random(seed)
    elements = list(range(3 * q))
    rng.shuffle(elements)
    triples = [tuple(sorted(elements[3 * i:3 * i + 3])) for i in range(q)]
    for _ in range(t - q):
        triples.append(tuple(sorted(rng.sample(range(3 * q), 3))))
    order = list(range(t))
    rng.shuffle(order)
    position = {old: new for new, old in enumerate(order)}
    planted = tuple(sorted(position[i] for i in range(q)))
    logger.debug(f"generated x3c instance q={q} t={t} with planted cover {planted}")
    return X3CInstance(3 * q, tuple(triples[old] for old in order), planted)
