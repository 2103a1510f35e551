from functools import lru_cache

import pytest

from shiftgraphs import build_graph, parse_type


@lru_cache(maxsize=None)
def cached_graph(n: int, pattern: str):
    return build_graph(n, parse_type(pattern))


@pytest.fixture
def graph():
    return cached_graph
