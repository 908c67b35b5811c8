"""The black box: from a circuit to the Lagrangian relation it imposes
between potentials and currents at its ports.

Three routes compute the same relation and are cross-checked by the tests:

* ``blackbox``       -- the categorical composite, factored through cospans
                        decorated by Dirichlet forms and Lagrangian subspaces;
* ``blackbox_fast``  -- eliminate interior nodes first, then symplectify the
                        corestricted boundary cospan;
* ``oracle_behavior``-- assemble the Kirchhoff/Ohm equations per edge and node
                        and solve the linear system outright.

Input ports report current flowing inward (sign flipped by the twist);
output ports report current flowing outward.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import _fresh_labels, merge_map
from .corel import corel_from_cospan, dagger_corelation
from .dirichlet import DirichletForm, extended_power_functional, power_functional
from .errors import NotAGraph, PortCountMismatch
from .field import ONE, ZERO
from .lagrel import (
    LagrangianRelation,
    Subspace,
    SymplSpace,
    compose_relations,
    graph_of_differential,
    identity_relation,
    nullspace,
    port_space,
    pushforward_lagrangian,
    subspace_as_relation,
    symplectify,
    tensor_relations,
    twist,
)

# -- decorated cospans -------------------------------------------------------


@dataclass(frozen=True)
class DirichletCospan:
    """A cospan of finite sets whose apex carries a Dirichlet form."""

    inputs: tuple
    outputs: tuple
    form: DirichletForm

    @property
    def nodes(self):
        return self.form.support


@dataclass(frozen=True)
class LagrCospan:
    """A cospan of finite sets whose apex carries a Lagrangian subspace."""

    inputs: tuple
    outputs: tuple
    nodes: tuple
    sub: Subspace


def to_dirichlet_cospan(g):
    """Replace the graph decoration by its extended power functional."""
    return DirichletCospan(tuple(g.inputs), tuple(g.outputs), extended_power_functional(g))


def to_lagr_cospan(dc):
    """Replace the Dirichlet form by the graph of its differential."""
    return LagrCospan(
        dc.inputs, dc.outputs, dc.form.support, graph_of_differential(dc.form)
    )


def _pushout(c1_nodes, c1_out, c2_nodes, c2_in):
    """Pushout data for gluing two cospans along matched ports.

    Returns (map1, map2, merged node tuple); apexes are first made disjoint
    by priming the right-hand labels, mirroring circuit composition.
    """
    rename = _fresh_labels(c1_nodes, c2_nodes)
    pairs = [(c1_out[k], rename[c2_in[k]]) for k in range(len(c1_out))]
    all_nodes = list(c1_nodes) + [rename[n] for n in c2_nodes]
    j = merge_map(all_nodes, pairs)
    map1 = {n: j[n] for n in c1_nodes}
    map2 = {n: j[rename[n]] for n in c2_nodes}
    return map1, map2, tuple(sorted(set(j.values())))


def compose_dirichlet_cospans(a, b):
    """Pushout of cospans, decorations pushed forward and summed."""
    if len(a.outputs) != len(b.inputs):
        raise PortCountMismatch("port lists do not match")
    map1, map2, nodes = _pushout(a.nodes, a.outputs, b.nodes, b.inputs)
    coeffs = [((map1[i], map1[j]), c) for (i, j), c in a.form.coeffs.items()
              if map1[i] != map1[j]]
    coeffs += [((map2[i], map2[j]), c) for (i, j), c in b.form.coeffs.items()
               if map2[i] != map2[j]]
    form = DirichletForm(nodes, coeffs)
    return DirichletCospan(
        tuple(map1[p] for p in a.inputs),
        tuple(map2[p] for p in b.outputs),
        form,
    )


def compose_lagr_cospans(a, b):
    """Pushout of cospans; the decorations' direct sum is pushed forward."""
    if len(a.outputs) != len(b.inputs):
        raise PortCountMismatch("port lists do not match")
    map1, map2, nodes = _pushout(a.nodes, a.outputs, b.nodes, b.inputs)
    na, nb = len(a.nodes), len(b.nodes)
    width = 2 * (na + nb)
    rows = []
    for r in a.sub.rows:
        row = [ZERO] * width
        for k in range(na):
            row[k] = r[k]
            row[na + nb + k] = r[na + k]
        rows.append(row)
    for r in b.sub.rows:
        row = [ZERO] * width
        for k in range(nb):
            row[na + k] = r[k]
            row[na + nb + na + k] = r[nb + k]
        rows.append(row)
    disjoint = tuple(a.nodes) + tuple(f"{n}~right" for n in b.nodes)
    f = {n: map1[n] for n in a.nodes}
    f.update({f"{n}~right": map2[n] for n in b.nodes})
    pushed = pushforward_lagrangian(f, disjoint, Subspace(rows, width), nodes)
    return LagrCospan(
        tuple(map1[p] for p in a.inputs),
        tuple(map2[p] for p in b.outputs),
        nodes,
        pushed,
    )


# -- the functor itself --------------------------------------------------------


def _behavior_from_name(rel, m, n):
    """Reread a relation 0 -> conj(V_X) (+) V_Y as a relation V_X -> V_Y."""
    perm = (
        list(range(m))
        + list(range(m + n, m + n + m))
        + list(range(m, m + n))
        + list(range(m + n + m, 2 * (m + n)))
    )
    rows = [tuple(r[p] for p in perm) for r in rel.sub.rows]
    return LagrangianRelation(port_space(m, "x"), port_space(n, "y"), rows)


def cospan_relation(lc):
    """Black-box a Lagrangian cospan: compose with the symplectified boundary
    and flip the sign of input currents."""
    nodes = lc.nodes
    m, n = len(lc.inputs), len(lc.outputs)
    index = {lab: k for k, lab in enumerate(nodes)}
    boundary_corel = corel_from_cospan(
        [index[p] for p in lc.inputs] + [index[p] for p in lc.outputs],
        list(range(len(nodes))),
    )
    s_boundary = symplectify(
        dagger_corelation(boundary_corel),
        SymplSpace(nodes),
        port_space(m + n, "p"),
    )
    onto_ports = compose_relations(subspace_as_relation(lc.sub, SymplSpace(nodes)), s_boundary)
    tw = tensor_relations(twist(port_space(m, "x")), identity_relation(port_space(n, "y")))
    return _behavior_from_name(compose_relations(onto_ports, tw), m, n)


def blackbox(g):
    """The external behavior of a circuit, by the categorical definition."""
    return cospan_relation(to_lagr_cospan(to_dirichlet_cospan(g)))


def blackbox_fast(g):
    """The behavior via interior-node elimination of the power functional."""
    p = extended_power_functional(g)
    boundary = g.boundary
    q = power_functional(p, boundary)
    lc = LagrCospan(tuple(g.inputs), tuple(g.outputs), boundary, graph_of_differential(q))
    return cospan_relation(lc)


def oracle_behavior(g):
    """The behavior by brute force: solve Ohm's law plus Kirchhoff's current
    law as one exact linear system and project onto the port coordinates.

    Unknowns are node potentials, edge currents, and one current share per
    port; shares at a terminal sum to the node's boundary current, matching
    the current-splitting of ideal wires.
    """
    nodes = g.graph.nodes
    edges = g.graph.edges
    ports = list(g.inputs) + list(g.outputs)
    boundary = set(g.boundary)
    nn, ne, np_ = len(nodes), len(edges), len(ports)
    node_at = {lab: k for k, lab in enumerate(nodes)}
    width = nn + ne + np_

    rows = []
    for k, (src, tgt, z) in enumerate(edges):
        row = [ZERO] * width
        row[nn + k] = z
        row[node_at[src]] = row[node_at[src]] + ONE
        row[node_at[tgt]] = row[node_at[tgt]] - ONE
        rows.append(row)
    for lab in nodes:
        row = [ZERO] * width
        for k, (src, tgt, _) in enumerate(edges):
            if tgt == lab:
                row[nn + k] = row[nn + k] + ONE
            if src == lab:
                row[nn + k] = row[nn + k] - ONE
        if lab in boundary:
            for p, plab in enumerate(ports):
                if plab == lab:
                    row[nn + ne + p] = row[nn + ne + p] - ONE
        rows.append(row)

    m, n = len(g.inputs), len(g.outputs)
    out_rows = []
    for vec in nullspace(rows, width):
        phi_in = [vec[node_at[p]] for p in g.inputs]
        cur_in = [-vec[nn + ne + k] for k in range(m)]
        phi_out = [vec[node_at[p]] for p in g.outputs]
        cur_out = [vec[nn + ne + m + k] for k in range(n)]
        out_rows.append(phi_in + cur_in + phi_out + cur_out)
    return LagrangianRelation(port_space(m, "x"), port_space(n, "y"), out_rows)


def equivalent(g1, g2):
    """True iff two circuits have exactly the same external behavior."""
    return blackbox(g1) == blackbox(g2)


# -- reporting ------------------------------------------------------------------


def behavior_to_json(g, rel):
    return {
        "inputs": list(g.inputs),
        "outputs": list(g.outputs),
        "generators": [[str(e) for e in row] for row in rel.sub.rows],
    }


def as_impedance(rel):
    """For a 1-in/1-out behavior that is the graph of Ohm's law, the scalar Z.

    The canonical matrix of such a behavior is [[1,0,1,0],[0,1,Z,1]]; any
    other shape (short circuits, open circuits, wider interfaces) raises
    NotAGraph.
    """
    if rel.source.num_ports != 1 or rel.target.num_ports != 1:
        raise NotAGraph("behavior is not on a 1-input/1-output interface")
    rows = rel.sub.rows
    if len(rows) != 2:
        raise NotAGraph("behavior is not the graph of a map")
    ok_first = rows[0] == (ONE, ZERO, ONE, ZERO)
    r = rows[1]
    if not ok_first or r[0] != ZERO or r[1] != ONE or r[3] != ONE:
        raise NotAGraph("behavior does not relate the ports through an impedance")
    if r[2].is_zero():
        # the ideal wire: potentials are not free, so this is no graph
        raise NotAGraph("behavior is a short circuit, not an impedance graph")
    return r[2]
