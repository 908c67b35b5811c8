"""Exact compositional circuit analysis over the rational-function field Q(s)."""

from .behavior import (
    as_impedance,
    blackbox,
    blackbox_fast,
    cospan_relation,
    equivalent,
    oracle_behavior,
    to_dirichlet_cospan,
    to_lagr_cospan,
)
from .circuits import (
    Circuit,
    LabelledGraph,
    circuit,
    compose_circuits,
    dagger_circuit,
    identity_circuit,
    merge_parallel_edges,
    tensor_circuits,
)
from .corel import (
    Corelation,
    compose_corelations,
    corel_from_cospan,
    dagger_corelation,
    identity_corelation,
    tensor_corelations,
)
from .dirichlet import (
    Covector,
    DirichletForm,
    compose_forms,
    eliminate_node,
    evaluate,
    extended_power_functional,
    gradient,
    markov_check_real,
    power_functional,
    pushforward_form,
    realizable_extension,
)
from .field import (
    ONE,
    ZERO,
    Poly,
    Rat,
    RatFunc,
    Witness,
    from_rat,
    impedance,
    is_positive_sampled,
    parse_ratfunc,
    rat_func,
    s,
)
from .lagrel import (
    LagrangianRelation,
    Subspace,
    SymplSpace,
    compose_relations,
    dagger_relation,
    graph_of_differential,
    identity_relation,
    is_lagrangian,
    pushforward_lagrangian,
    symplectify,
    symplectify_currents,
    symplectify_potentials,
    tensor_relations,
    twist,
)
from .netlist import parse_netlist, print_netlist
