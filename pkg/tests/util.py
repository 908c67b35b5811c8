"""Shared randomized generators for the property suites.

Deterministic seeds throughout: every suite builds its own ``random.Random``
so cases are reproducible and independent of execution order.
"""

from fractions import Fraction

from blackbox.circuits import circuit
from blackbox.corel import Corelation
from blackbox.dirichlet import DirichletForm
from blackbox.field import from_rat, impedance


def rand_rat(rng, lo=1, hi=4):
    """A random positive rational with small numerator and denominator."""
    return Fraction(rng.randint(lo, hi), rng.randint(1, 3))


def rand_impedance(rng):
    return impedance(rng.choice("RLC"), rand_rat(rng))


def rand_circuit(rng, max_nodes=6, max_edges=6, max_in=3, max_out=3,
                 n_in=None, n_out=None, prefix="n"):
    """A random circuit with structural R/L/C impedances.

    Ports are drawn with repetition and need not cover the nodes; self-loops
    and parallel edges are allowed.
    """
    n = rng.randint(1, max_nodes)
    labels = [f"{prefix}{k}" for k in range(n)]
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        edges.append((rng.choice(labels), rng.choice(labels), rand_impedance(rng)))
    n_in = rng.randint(0, max_in) if n_in is None else n_in
    n_out = rng.randint(0, max_out) if n_out is None else n_out
    inputs = [rng.choice(labels) for _ in range(n_in)]
    outputs = [rng.choice(labels) for _ in range(n_out)]
    return circuit(labels, edges, inputs, outputs)


def rand_composable_pair(rng, **kw):
    k = rng.randint(0, 3)
    g1 = rand_circuit(rng, n_out=k, prefix="a", **kw)
    g2 = rand_circuit(rng, n_in=k, prefix="b", **kw)
    return g1, g2


def rand_form(rng, labels, density=0.7, constant=False):
    """A random Dirichlet form with positive coefficients on random pairs."""
    labels = list(labels)
    coeffs = []
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            if rng.random() < density:
                if constant:
                    c = from_rat(rand_rat(rng))
                else:
                    c = rand_impedance(rng)
                coeffs.append(((labels[i], labels[j]), c))
    return DirichletForm(labels, coeffs)


def rand_corel(rng, m, n):
    """A random partition of m + n indices."""
    total = m + n
    if total == 0:
        return Corelation(0, 0, [])
    k = rng.randint(1, total)
    assignment = [rng.randrange(k) for _ in range(total)]
    blocks = {}
    for idx, b in enumerate(assignment):
        blocks.setdefault(b, []).append(idx)
    return Corelation(m, n, blocks.values())


def rand_cospan(rng, m, n, apex):
    """Random leg images for a cospan m -> apex <- n."""
    i_images = [rng.randrange(apex) for _ in range(m)]
    o_images = [rng.randrange(apex) for _ in range(n)]
    return i_images, o_images
