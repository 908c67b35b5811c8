"""Corelations: partitions of X+Y, the algebra of ideal-wire interconnection.

Ports are positional, so a corelation is stored over the integer index set
{0 .. |X|+|Y|-1}, with the first ``left_size`` indices belonging to X.
Blocks are canonical: each block sorted ascending, blocks sorted by their
smallest member.
"""

from __future__ import annotations

from .errors import SizeMismatch


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def blocks(self, indices=None):
        groups = {}
        for k in indices if indices is not None else range(len(self.parent)):
            groups.setdefault(self.find(k), []).append(k)
        return list(groups.values())


def _canonical(blocks):
    out = [tuple(sorted(b)) for b in blocks if b]
    out.sort(key=lambda b: b[0])
    return tuple(out)


class Corelation:
    """A partition of X+Y regarded as a morphism X -> Y."""

    __slots__ = ("left_size", "right_size", "blocks")

    def __init__(self, left_size, right_size, blocks):
        blocks = _canonical(blocks)
        total = left_size + right_size
        seen = [False] * total
        for b in blocks:
            for k in b:
                if not 0 <= k < total or seen[k]:
                    raise ValueError(f"blocks do not partition 0..{total - 1}")
                seen[k] = True
        if not all(seen):
            raise ValueError("blocks do not cover the index set")
        self.left_size = left_size
        self.right_size = right_size
        self.blocks = blocks

    def __eq__(self, other):
        return (
            isinstance(other, Corelation)
            and self.left_size == other.left_size
            and self.right_size == other.right_size
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.left_size, self.right_size, self.blocks))

    def _name(self, k):
        if k < self.left_size:
            return f"x{k}"
        return f"y{k - self.left_size}"

    def __str__(self):
        body = " ".join(
            "{" + " ".join(self._name(k) for k in b) + "}" for b in self.blocks
        )
        return f"corel {self.left_size} -> {self.right_size} : {body}"

    __repr__ = __str__


def corel_from_cospan(i_images, o_images):
    """The corelation of a cospan X -> N <- Y given by its leg images.

    Two ports are identified iff they map to the same element of the apex;
    apex elements outside the joint image are forgotten.
    """
    groups = {}
    for k, img in enumerate(list(i_images) + list(o_images)):
        groups.setdefault(img, []).append(k)
    return Corelation(len(i_images), len(o_images), groups.values())


def corel_from_function(images, codomain_size):
    """The corelation X -> Y of a function X -> Y with positional codomain.

    Every codomain element forms a block together with its preimage, so
    elements outside the image appear as singletons.
    """
    m = len(images)
    blocks = {y: [m + y] for y in range(codomain_size)}
    for k, y in enumerate(images):
        blocks[y].append(k)
    return Corelation(m, codomain_size, blocks.values())


def identity_corelation(n):
    return Corelation(n, n, [(k, n + k) for k in range(n)])


def compose_corelations(a, b):
    """Union-find over X+Y+Z seeded by both partitions, restricted to X+Z."""
    if a.right_size != b.left_size:
        raise SizeMismatch(
            f"cannot compose: {a.right_size} right ports vs {b.left_size} left ports"
        )
    nx, ny, nz = a.left_size, a.right_size, b.right_size
    uf = _UnionFind(nx + ny + nz)
    for block in a.blocks:
        for k in block[1:]:
            uf.union(block[0], k)
    for block in b.blocks:
        shifted = [k + nx for k in block]
        for k in shifted[1:]:
            uf.union(shifted[0], k)
    keep = list(range(nx)) + list(range(nx + ny, nx + ny + nz))
    blocks = uf.blocks(keep)
    relabel = lambda k: k if k < nx else k - ny
    return Corelation(nx, nz, [[relabel(k) for k in b] for b in blocks])


def tensor_corelations(a, b):
    """Index-shifted disjoint union of the two partitions."""
    nx, ny = a.left_size, a.right_size
    mx, my = b.left_size, b.right_size

    def shift_a(k):
        return k if k < nx else k + mx

    def shift_b(k):
        return k + nx if k < mx else k + nx + ny

    blocks = [[shift_a(k) for k in blk] for blk in a.blocks]
    blocks += [[shift_b(k) for k in blk] for blk in b.blocks]
    return Corelation(nx + mx, ny + my, blocks)


def dagger_corelation(a):
    """The same partition read as a morphism Y -> X."""
    nx, ny = a.left_size, a.right_size

    def swap(k):
        return k + ny if k < nx else k - nx

    return Corelation(ny, nx, [[swap(k) for k in blk] for blk in a.blocks])


def cup_corelation(n):
    """The corelation 0 -> X+X pairing the two copies of X."""
    return Corelation(0, 2 * n, [(k, n + k) for k in range(n)])


def cap_corelation(n):
    """The corelation X+X -> 0 pairing the two copies of X."""
    return Corelation(2 * n, 0, [(k, n + k) for k in range(n)])
