"""Circuits as cospans of finite sets decorated with impedance-labelled graphs.

Node labels are nonempty whitespace-free strings ordered lexicographically;
that order fixes canonical representatives everywhere (pushout classes are
named by their smallest member, so composite circuits are deterministic).
Ports are positional lists of node labels and may repeat or omit nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PortCountMismatch
from .field import RatFunc


def _check_label(label):
    if not label or any(ch.isspace() for ch in label):
        raise ValueError(f"bad node label {label!r}")


@dataclass(frozen=True)
class LabelledGraph:
    """A finite multigraph with an impedance in F+ on every edge."""

    nodes: tuple
    edges: tuple

    def __init__(self, nodes, edges=()):
        nodes = tuple(sorted(set(nodes)))
        for n in nodes:
            _check_label(n)
        norm = []
        node_set = set(nodes)
        for src, tgt, z in edges:
            if src not in node_set or tgt not in node_set:
                raise ValueError(f"edge ({src}, {tgt}) references unknown node")
            if not isinstance(z, RatFunc) or z.is_zero():
                raise ValueError("edge impedance must be a nonzero RatFunc")
            norm.append((src, tgt, z))
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", tuple(norm))


@dataclass(frozen=True)
class Circuit:
    """A labelled graph together with ordered input and output port lists."""

    graph: LabelledGraph
    inputs: tuple
    outputs: tuple

    def __init__(self, graph, inputs, outputs):
        inputs = tuple(inputs)
        outputs = tuple(outputs)
        node_set = set(graph.nodes)
        for p in inputs + outputs:
            if p not in node_set:
                raise ValueError(f"port references unknown node {p!r}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)

    @property
    def boundary(self):
        """The terminals i(X) | o(Y), sorted."""
        return tuple(sorted(set(self.inputs) | set(self.outputs)))

    def num_inputs(self):
        return len(self.inputs)

    def num_outputs(self):
        return len(self.outputs)


def circuit(nodes, edges=(), inputs=(), outputs=()):
    return Circuit(LabelledGraph(nodes, edges), inputs, outputs)


def identity_circuit(ports):
    """The edgeless circuit whose nodes are all both inputs and outputs."""
    ports = tuple(ports)
    return Circuit(LabelledGraph(ports), ports, ports)


def _fresh_labels(taken, labels):
    """Rename ``labels`` injectively away from ``taken`` by appending primes."""
    out = {}
    used = set(taken)
    for lab in labels:
        cand = lab
        while cand in used:
            cand += "'"
        out[lab] = cand
        used.add(cand)
    return out


def merge_map(nodes, pairs):
    """Quotient map for the equivalence generated by ``pairs``.

    Each class is named by its lexicographically smallest member.
    """
    parent = {n: n for n in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra
    return {n: find(n) for n in nodes}


def compose_circuits(g1, g2):
    """Glue g2's inputs onto g1's outputs by pushout of the underlying cospans."""
    if len(g1.outputs) != len(g2.inputs):
        raise PortCountMismatch(
            f"{len(g1.outputs)} outputs cannot meet {len(g2.inputs)} inputs"
        )
    rename = _fresh_labels(g1.graph.nodes, g2.graph.nodes)
    pairs = [(g1.outputs[k], rename[g2.inputs[k]]) for k in range(len(g1.outputs))]
    all_nodes = list(g1.graph.nodes) + [rename[n] for n in g2.graph.nodes]
    j = merge_map(all_nodes, pairs)
    edges = [(j[s], j[t], z) for s, t, z in g1.graph.edges]
    edges += [(j[rename[s]], j[rename[t]], z) for s, t, z in g2.graph.edges]
    return Circuit(
        LabelledGraph({j[n] for n in all_nodes}, edges),
        [j[p] for p in g1.inputs],
        [j[rename[p]] for p in g2.outputs],
    )


def tensor_circuits(g1, g2):
    """Disjoint union; colliding labels on the right operand gain primes."""
    rename = _fresh_labels(g1.graph.nodes, g2.graph.nodes)
    nodes = list(g1.graph.nodes) + [rename[n] for n in g2.graph.nodes]
    edges = list(g1.graph.edges)
    edges += [(rename[s], rename[t], z) for s, t, z in g2.graph.edges]
    return Circuit(
        LabelledGraph(nodes, edges),
        tuple(g1.inputs) + tuple(rename[p] for p in g2.inputs),
        tuple(g1.outputs) + tuple(rename[p] for p in g2.outputs),
    )


def dagger_circuit(g):
    """Swap inputs and outputs, keeping the graph."""
    return Circuit(g.graph, g.outputs, g.inputs)


def merge_parallel_edges(graph):
    """Collapse each parallel bundle to one edge with 1/Z'' = sum of 1/Z.

    Self-loops contribute nothing to the power functional and are deleted.
    The collapsed edge runs between the sorted node pair.
    """
    bundles = {}
    for src, tgt, z in graph.edges:
        if src == tgt:
            continue
        key = (min(src, tgt), max(src, tgt))
        bundles.setdefault(key, []).append(z)
    edges = []
    for (a, b), zs in sorted(bundles.items()):
        acc = zs[0].inv()
        for z in zs[1:]:
            acc = acc + z.inv()
        edges.append((a, b, acc.inv()))
    return LabelledGraph(graph.nodes, edges)
