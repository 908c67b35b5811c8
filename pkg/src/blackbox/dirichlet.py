"""Dirichlet forms over Q(s): power functionals and exact node elimination.

A form on a finite node set S is Q(psi) = sum over stored pairs of
c_ij (psi_i - psi_j)^2, with one coefficient per unordered pair.  An edge of
impedance Z contributes 1/(2Z), so the formal gradient of the form is
exactly the boundary current, with no stray factor of two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BoundaryNotSubset,
    LabelCollision,
    MissingAssignment,
    NodeNotInSupport,
    NonConstantCoefficients,
)
from .field import ZERO, as_ratfunc, from_rat


def _pair(i, j):
    return (i, j) if i < j else (j, i)


class DirichletForm:
    """A quadratic form sum c_ij (psi_i - psi_j)^2 on an ordered support."""

    __slots__ = ("support", "coeffs")

    def __init__(self, support, coeffs=()):
        support = tuple(sorted(set(support)))
        sset = set(support)
        table = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for (i, j), c in items:
            if i == j:
                raise ValueError("no diagonal coefficients in a Dirichlet form")
            if i not in sset or j not in sset:
                raise ValueError(f"pair ({i}, {j}) outside support")
            c = as_ratfunc(c)
            key = _pair(i, j)
            c = table.get(key, ZERO) + c
            if c.is_zero():
                table.pop(key, None)
            else:
                table[key] = c
        self.support = support
        self.coeffs = table

    def coefficient(self, i, j):
        return self.coeffs.get(_pair(i, j), ZERO)

    def __eq__(self, other):
        return (
            isinstance(other, DirichletForm)
            and self.support == other.support
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.support, tuple(sorted(self.coeffs.items()))))

    def pretty(self, name="Q"):
        if not self.coeffs:
            return f"{name} = 0"
        terms = [
            f"({c})(psi_{i} - psi_{j})^2"
            for (i, j), c in sorted(self.coeffs.items())
        ]
        return f"{name} = " + " + ".join(terms)

    __str__ = pretty

    def __repr__(self):
        return f"<DirichletForm on {self.support}: {self.pretty()}>"

    def to_json(self):
        return [
            {"i": i, "j": j, "coeff": str(c)}
            for (i, j), c in sorted(self.coeffs.items())
        ]


@dataclass(frozen=True)
class Covector:
    """An element of the dual space, e.g. a boundary current."""

    support: tuple
    entries: dict

    def __getitem__(self, n):
        return self.entries[n]


def extended_power_functional(g):
    """The form on all nodes of a circuit: each edge adds 1/(2Z) to its pair."""
    coeffs = []
    for src, tgt, z in g.graph.edges:
        if src == tgt:
            continue
        coeffs.append((_pair(src, tgt), (2 * z).inv()))
    return DirichletForm(g.graph.nodes, coeffs)


def _require_assignment(form, psi):
    missing = [n for n in form.support if n not in psi]
    if missing:
        raise MissingAssignment(f"no potential assigned at {missing}")


def evaluate(form, psi):
    """The exact field value of the form at the potential psi."""
    _require_assignment(form, psi)
    total = ZERO
    for (i, j), c in form.coeffs.items():
        d = as_ratfunc(psi[i]) - as_ratfunc(psi[j])
        if d:
            total = total + c * d * d
    return total


def gradient(form, psi):
    """The formal differential at psi: entry n is sum_j 2 c_nj (psi_n - psi_j)."""
    _require_assignment(form, psi)
    entries = {n: ZERO for n in form.support}
    for (i, j), c in form.coeffs.items():
        d = as_ratfunc(psi[i]) - as_ratfunc(psi[j])
        if d:
            t = 2 * c * d
            entries[i] = entries[i] + t
            entries[j] = entries[j] - t
    return Covector(form.support, entries)


def _eliminate_with_step(form, n):
    """One-step minimization over n, plus the back-substitution recipe.

    Returns (form', step); step is (n, weights, denom) such that the
    realizable extension satisfies phi_n = sum_k weights[k] phi_k / denom,
    or (n, None, None) when n has no incident coefficient mass.
    """
    if n not in form.support:
        raise NodeNotInSupport(f"{n} not in support")
    incident = {}
    rest = []
    for (i, j), c in form.coeffs.items():
        if i == n:
            incident[j] = c
        elif j == n:
            incident[i] = c
        else:
            rest.append(((i, j), c))
    new_support = tuple(x for x in form.support if x != n)
    denom = ZERO
    for c in incident.values():
        denom = denom + c
    if denom.is_zero():
        # Over F+ this happens only when n is edgeless; drop it.  (With raw
        # impedances a cancellation is conceivable; the n-terms still go.)
        return DirichletForm(new_support, rest), (n, None, None)
    neighbors = sorted(incident)
    inv_d = denom.inv()
    for a in range(len(neighbors)):
        for b in range(a + 1, len(neighbors)):
            i, j = neighbors[a], neighbors[b]
            rest.append(((i, j), incident[i] * incident[j] * inv_d))
    return DirichletForm(new_support, rest), (n, incident, denom)


def eliminate_node(form, n):
    """The form on S minus {n} given by formal minimization over n.

    Closed form: c'_ij = c_ij + c_in c_jn / sum_k c_kn; a node with no
    incident coefficients is simply dropped.
    """
    return _eliminate_with_step(form, n)[0]


def _interior(form, boundary):
    bset = set(boundary)
    if not bset <= set(form.support):
        raise BoundaryNotSubset(f"{sorted(bset - set(form.support))} not in support")
    return [n for n in form.support if n not in bset]


def power_functional(form, boundary):
    """Minimize the form over everything outside ``boundary``.

    Nodes are eliminated one at a time in lexicographic order; the result
    is independent of the order.
    """
    out = form
    for n in _interior(form, boundary):
        out = eliminate_node(out, n)
    return out


def realizable_extension(form, boundary, psi):
    """Extend boundary data to the whole support so interior gradients vanish.

    Interior potentials are the weighted averages recorded during
    elimination, back-substituted in reverse; nodes with no incident mass
    get potential zero (the vanishing convention for components that do not
    touch the boundary).
    """
    _ = _interior(form, boundary)
    steps = []
    out = form
    for n in _interior(form, boundary):
        out, step = _eliminate_with_step(out, n)
        steps.append(step)
    phi = {n: as_ratfunc(psi[n]) for n in boundary}
    for n, weights, denom in reversed(steps):
        if weights is None:
            phi[n] = ZERO
            continue
        acc = ZERO
        for k, c in weights.items():
            acc = acc + c * phi[k]
        phi[n] = acc / denom
    return phi


def compose_forms(q, p, shared=None):
    """Semicategory composition: sum the forms, then minimize over T.

    ``q`` lives on S+T and ``p`` on T+U; by default T is inferred as the
    intersection of the supports.  S, T, U must be pairwise disjoint.
    """
    qset, pset = set(q.support), set(p.support)
    if shared is None:
        t = qset & pset
    else:
        t = set(shared)
        if not (t <= qset and t <= pset):
            raise LabelCollision("shared labels must appear in both supports")
    s_side = qset - t
    u_side = pset - t
    if s_side & u_side:
        raise LabelCollision(
            f"outer labels collide: {sorted(s_side & u_side)}"
        )
    total = DirichletForm(
        qset | pset,
        list(q.coeffs.items()) + list(p.coeffs.items()),
    )
    return power_functional(total, sorted(s_side | u_side))


def pushforward_form(f, form, codomain=None):
    """The form psi -> Q(psi o f) on the codomain of f.

    Coefficients accumulate on image pairs; pairs collapsed by f vanish.
    """
    for n in form.support:
        if n not in f:
            raise ValueError(f"pushforward map undefined at {n}")
    if codomain is None:
        codomain = {f[n] for n in form.support}
    coeffs = []
    for (i, j), c in form.coeffs.items():
        fi, fj = f[i], f[j]
        if fi != fj:
            coeffs.append((_pair(fi, fj), c))
    return DirichletForm(codomain, coeffs)


def sample_markov_property(qfun, labels, trials, rng):
    """Sample condition (iii) of the Dirichlet characterization over Q.

    ``qfun`` maps a dict of Fraction potentials to a Fraction.  Checks that
    the form vanishes on constants and that clipping at 1 never increases
    it, on ``trials`` random rational vectors.
    """
    labels = list(labels)
    ones = {n: Fraction(1) for n in labels}
    if qfun(ones) != 0:
        return False
    for _ in range(trials):
        const = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if qfun({n: const for n in labels}) != 0:
            return False
        psi = {
            n: Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for n in labels
        }
        clipped = {n: min(v, Fraction(1)) for n, v in psi.items()}
        if qfun(clipped) > qfun(psi):
            return False
    return True


def markov_check_real(form, trials, rng=None):
    """Sampled Markov-property check for a form with constant coefficients."""
    if rng is None:
        import random

        rng = random.Random(0)
    for c in form.coeffs.values():
        if not c.is_constant():
            raise NonConstantCoefficients(f"coefficient {c} is not degree 0")

    def qfun(psi):
        return evaluate(form, {n: from_rat(v) for n, v in psi.items()}).as_rat()

    return sample_markov_property(qfun, form.support, trials, rng)
