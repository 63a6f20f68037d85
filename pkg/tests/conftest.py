import pytest
from helpers import five_tensor_data, matrix_chain_data, to_network


@pytest.fixture
def five_tensor_net():
    return to_network(*five_tensor_data())


@pytest.fixture
def matrix_net():
    return to_network(*matrix_chain_data())


@pytest.fixture
def branch_net():
    # T3 - T2 - T1 - T4 with dims p=2, r=4, q=3: the smallest network
    # where a rank tie-break actually matters.
    nodes = {"T1": 1, "T2": 1, "T3": 1, "T4": 1}
    edges = [("T1", "T2", 2), ("T2", "T3", 4), ("T1", "T4", 3)]
    return to_network(nodes, edges)
