import random
from fractions import Fraction

import pytest

from blackbox.circuits import (
    circuit,
    compose_circuits,
    dagger_circuit,
    identity_circuit,
    merge_parallel_edges,
    tensor_circuits,
)
from blackbox.dirichlet import extended_power_functional, power_functional
from blackbox.errors import PortCountMismatch
from blackbox.field import impedance

from util import rand_circuit, rand_composable_pair

R1 = impedance("R", 1)


def test_compose_series_example():
    g1 = circuit(["A", "B"], [("A", "B", R1)], ["A"], ["B"])
    g2 = circuit(["B'", "C"], [("B'", "C", R1)], ["B'"], ["C"])
    g = compose_circuits(g1, g2)
    assert g.graph.nodes == ("A", "B", "C")
    assert [(a, b) for a, b, _ in g.graph.edges] == [("A", "B"), ("B", "C")]
    assert g.inputs == ("A",) and g.outputs == ("C",)


def test_compose_port_count_mismatch():
    g1 = circuit(["A"], [], ["A"], ["A", "A"])
    g2 = circuit(["B"], [], ["B"], ["B"])
    with pytest.raises(PortCountMismatch):
        compose_circuits(g1, g2)


def test_fork_composed_with_its_dagger_merges_terminals():
    fork = circuit(["n"], [], ["n"], ["n", "n"])
    g = compose_circuits(fork, dagger_circuit(fork))
    assert len(g.graph.nodes) == 1
    assert g.inputs == g.outputs == (g.graph.nodes[0],)


def test_compose_circuit_with_itself():
    g = circuit(["a", "b"], [("a", "b", R1)], ["a"], ["b"])
    gg = compose_circuits(g, g)
    assert len(gg.graph.nodes) == 3
    assert len(gg.graph.edges) == 2
    from blackbox.behavior import blackbox

    assert blackbox(gg) == blackbox(
        circuit(["a", "b"], [("a", "b", impedance("R", 2))], ["a"], ["b"])
    )


def test_tensor_disjointness():
    g = circuit(["a", "b"], [("a", "b", R1)], ["a"], ["b"])
    t = tensor_circuits(g, g)
    assert t.graph.nodes == ("a", "a'", "b", "b'")
    assert len(t.graph.edges) == 2
    assert t.inputs == ("a", "a'") and t.outputs == ("b", "b'")


def test_tensor_with_empty_is_identity_up_to_nothing():
    g = circuit(["a", "b"], [("a", "b", R1)], ["a"], ["b"])
    e = circuit([])
    assert tensor_circuits(g, e) == g
    assert tensor_circuits(e, g) == g


def test_dagger_involution():
    g = circuit(["a", "b"], [("a", "b", R1)], ["a"], ["b"])
    assert dagger_circuit(dagger_circuit(g)) == g
    assert dagger_circuit(g).inputs == ("b",)


def test_identity_circuit():
    e = identity_circuit([])
    assert e.graph.nodes == () and e.inputs == ()
    g = identity_circuit(["a", "b"])
    assert g.graph.nodes == ("a", "b")
    assert g.inputs == g.outputs == ("a", "b")
    assert g.graph.edges == ()


def test_merge_parallel_edges_examples():
    two = circuit(["m", "n"], [("m", "n", impedance("R", 2)),
                              ("m", "n", impedance("R", 2))])
    merged = merge_parallel_edges(two.graph)
    assert [(a, b, str(z)) for a, b, z in merged.edges] == [("m", "n", "1")]

    loop = circuit(["m"], [("m", "m", impedance("R", 5))])
    assert merge_parallel_edges(loop.graph).edges == ()

    anti = circuit(["m", "n"], [("m", "n", R1), ("n", "m", R1)])
    merged = merge_parallel_edges(anti.graph)
    assert [(a, b, z.as_rat()) for a, b, z in merged.edges] == [("m", "n", Fraction(1, 2))]


def test_merge_preserves_power_functional():
    from blackbox.circuits import Circuit

    rng = random.Random(3)
    for _ in range(25):
        g = rand_circuit(rng, max_nodes=5, max_edges=7)
        h = Circuit(merge_parallel_edges(g.graph), g.inputs, g.outputs)
        assert extended_power_functional(g) == extended_power_functional(h)


def _closure_classes(nodes, pairs):
    # Independent oracle: repeated sweeps until no class changes.
    cls = {n: {n} for n in nodes}
    changed = True
    while changed:
        changed = False
        for a, b in pairs:
            merged = cls[a] | cls[b]
            if merged != cls[a] or merged != cls[b]:
                changed = True
                for n in merged:
                    cls[n] = merged
    return {frozenset(c) for c in cls.values()}


def test_pushout_node_count_against_transitive_closure_oracle():
    rng = random.Random(11)
    for _ in range(40):
        g1, g2 = rand_composable_pair(rng, max_nodes=5, max_edges=4)
        comp = compose_circuits(g1, g2)
        right = {n: n + "~R" for n in g2.graph.nodes}
        nodes = list(g1.graph.nodes) + [right[n] for n in g2.graph.nodes]
        pairs = [
            (g1.outputs[k], right[g2.inputs[k]]) for k in range(len(g1.outputs))
        ]
        assert len(comp.graph.nodes) == len(_closure_classes(nodes, pairs))


def test_edge_validation():
    with pytest.raises(ValueError):
        circuit(["a"], [("a", "z", R1)])
    with pytest.raises(ValueError):
        circuit(["a", "b"], [], ["z"], [])
    with pytest.raises(ValueError):
        circuit(["bad label"], [])
