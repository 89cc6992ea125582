import random

import pytest

from fracmatch.graphs import Graph


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240901)


def random_graph(rnd: random.Random, n: int) -> Graph:
    m = n * (n - 1) // 2
    return Graph.from_edge_mask(n, rnd.getrandbits(m))


@pytest.fixture(scope="session")
def corpus8(tmp_path_factory):
    """Path to the 8-vertex non-isomorphic corpus, generated if not shipped."""
    from fracmatch.corpus import default_corpus_path, write_corpus

    path = default_corpus_path(8)
    if not path.exists():
        path = tmp_path_factory.mktemp("corpus") / "graphs8.g6"
        write_corpus(path, 8)
    return path
