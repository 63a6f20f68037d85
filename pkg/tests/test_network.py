import json

import pytest

from tnorder import TensorNetwork, ValidationError, id_key, parse_network
from helpers import five_tensor_data, matrix_chain_data


def test_nodes_keep_file_order(five_tensor_net):
    assert five_tensor_net.nodes == ("T1", "T2", "T3", "T4", "T5")
    assert len(five_tensor_net) == 5
    assert list(five_tensor_net) == list(five_tensor_net.nodes)


def test_edges_kept_verbatim(five_tensor_net):
    assert five_tensor_net.edges == (
        ("T1", "T2", 1),
        ("T5", "T2", 2),
        ("T2", "T4", 6),
        ("T4", "T3", 5),
    )


def test_adjacency_is_symmetric(five_tensor_net):
    for u, v, size in five_tensor_net.edges:
        assert five_tensor_net.edge_size(u, v) == size
        assert five_tensor_net.edge_size(v, u) == size
        assert five_tensor_net.has_edge(u, v) and five_tensor_net.has_edge(v, u)
    assert not five_tensor_net.has_edge("T1", "T3")


def test_tensor_size_is_open_times_incident(matrix_net):
    # A carries an open leg of 20 next to the shared 30
    assert matrix_net.tensor_size("A") == 600
    assert matrix_net.tensor_size("B") == 300
    assert matrix_net.tensor_size("C") == 500


def test_nodes_accept_plain_iterable():
    net = TensorNetwork(["a", "b"], [("a", "b", 7)])
    assert net.tensor_size("a") == 7
    assert net.is_tree


def test_is_tree(five_tensor_net):
    assert five_tensor_net.is_tree
    cyc = TensorNetwork("abc", [("a", "b", 2), ("b", "c", 2), ("a", "c", 2)])
    assert not cyc.is_tree


def test_integer_node_ids_work():
    net = TensorNetwork({1: 1, 2: 3}, [(1, 2, 4)])
    assert net.tensor_size(2) == 12
    assert net.neighbors(1) == (2,)


def test_empty_network_rejected():
    with pytest.raises(ValidationError):
        TensorNetwork([], [])


def test_duplicate_node_rejected():
    with pytest.raises(ValidationError, match="duplicate"):
        TensorNetwork(["a", "a"], [])


def test_self_loop_rejected():
    with pytest.raises(ValidationError, match="self-loop"):
        TensorNetwork(["a", "b"], [("a", "a", 2), ("a", "b", 2)])


def test_duplicate_edge_rejected_even_reversed():
    with pytest.raises(ValidationError):
        TensorNetwork(["a", "b"], [("a", "b", 2), ("b", "a", 3)])


def test_unknown_endpoint_rejected():
    with pytest.raises(ValidationError, match="unknown"):
        TensorNetwork(["a", "b"], [("a", "c", 2)])


def test_disconnected_network_rejected():
    with pytest.raises(ValidationError, match="connected"):
        TensorNetwork(["a", "b", "c"], [("a", "b", 2)])


@pytest.mark.parametrize("size", [0, -3, 2.0, True, "4"])
def test_bad_edge_size_rejected(size):
    with pytest.raises(ValidationError):
        TensorNetwork(["a", "b"], [("a", "b", size)])


@pytest.mark.parametrize("open_mult", [0, -1, 1.5, False])
def test_bad_open_mult_rejected(open_mult):
    with pytest.raises(ValidationError):
        TensorNetwork({"a": open_mult, "b": 1}, [("a", "b", 2)])


def test_bool_node_id_rejected():
    with pytest.raises(ValidationError):
        TensorNetwork({True: 1, "b": 1}, [(True, "b", 2)])


def test_single_node_no_edges_ok():
    net = TensorNetwork({"x": 9}, [])
    assert net.tensor_size("x") == 9
    assert net.is_tree


def test_id_key_sorts_ints_before_strings():
    assert sorted([("b"), 10, "a", 2], key=id_key) == [2, 10, "a", "b"]


def test_to_json_round_trip(five_tensor_net):
    text = five_tensor_net.to_json()
    assert "\n" not in text.strip()
    again = parse_network(text)
    assert again.nodes == five_tensor_net.nodes
    assert again.edges == five_tensor_net.edges
    assert again.open_mult == five_tensor_net.open_mult


def test_to_json_always_writes_open(matrix_net):
    doc = json.loads(matrix_net.to_json())
    assert all("open" in node for node in doc["nodes"])
    assert doc["nodes"][0] == {"id": "A", "open": 20}


def test_parse_network_names_bad_element():
    doc = {"nodes": [{"id": "a"}, {"id": "b"}],
           "edges": [{"u": "a", "v": "b", "size": 2}, {"u": "a"}]}
    with pytest.raises(ValidationError, match="edges\\[1\\]"):
        parse_network(json.dumps(doc))
    with pytest.raises(ValidationError, match="nodes\\[1\\]"):
        parse_network('{"nodes": [{"id": "a"}, 7], "edges": []}')
    # semantic errors name the edge by its endpoints instead
    doc["edges"] = [{"u": "a", "v": "b", "size": "big"}]
    with pytest.raises(ValidationError, match="'a'-'b'"):
        parse_network(json.dumps(doc))


def test_parse_network_rejects_non_object():
    with pytest.raises(ValidationError):
        parse_network("[1, 2]")
    with pytest.raises(ValidationError):
        parse_network("not json at all")


def test_parse_network_missing_keys():
    with pytest.raises(ValidationError, match="nodes"):
        parse_network('{"edges": []}')


def test_open_defaults_to_one_when_parsing():
    net = parse_network(
        '{"nodes": [{"id": "a"}, {"id": "b"}],'
        ' "edges": [{"u": "a", "v": "b", "size": 3}]}'
    )
    assert net.open_mult["a"] == 1


def test_node_file_order_does_not_change_sizes():
    nodes, edges = five_tensor_data()
    net1 = TensorNetwork(nodes, edges)
    net2 = TensorNetwork(dict(reversed(nodes.items())), list(reversed(edges)))
    for v in nodes:
        assert net1.tensor_size(v) == net2.tensor_size(v)


def test_neighbors_follow_edge_order(five_tensor_net):
    # T2's edges appear as T1-T2, T5-T2, T2-T4 in the file
    assert five_tensor_net.neighbors("T2") == ("T1", "T5", "T4")
