"""Seeds, mutation and exchange graphs for skew-symmetrizable seeds.

Indices are 0-based throughout the Python API: ``mutate_seed(s, 0)`` mutates
in the direction of ``x1``.  The CLI and text formats are 1-based.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, ResourceError, StructuralError
from .laurent import LaurentPolynomial, exact_div

__all__ = [
    "ExchangeMatrix",
    "Seed",
    "Permutation",
    "ExchangeGraph",
    "mutate_matrix",
    "mutate_seed",
    "mutate_word",
    "apply_permutation",
    "canonical_unlabeled_key",
    "enumerate_exchange_graph",
    "list_cluster_variables",
    "cluster_monomial",
    "negate_matrix_seed",
    "parse_seed_text",
    "read_seed_file",
    "format_seed_text",
]


def _symmetrizer(rows) -> Optional[tuple]:
    """Positive integer ``d`` with ``d_i b_ij = -d_j b_ji``, or None."""
    n = len(rows)
    d: list[Optional[Fraction]] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        component = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if rows[i][j] == 0 and rows[j][i] == 0:
                    continue
                if rows[i][j] == 0 or rows[j][i] == 0:
                    return None
                dj = -d[i] * rows[i][j] / rows[j][i]
                if dj <= 0:
                    return None
                if d[j] is None:
                    d[j] = dj
                    component.append(j)
                    queue.append(j)
                elif d[j] != dj:
                    return None
        scale = lcm(*(d[i].denominator for i in component))
        for i in component:
            d[i] *= scale
    return tuple(int(v) for v in d)


@dataclass(frozen=True)
class ExchangeMatrix:
    rows: tuple
    symmetrizer: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise StructuralError("exchange matrix must be square and nonempty")
        if any(rows[i][i] for i in range(n)):
            raise DomainError("exchange matrix must have a zero diagonal")
        d = _symmetrizer(rows)
        if d is None:
            raise DomainError("exchange matrix is not skew-symmetrizable")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "symmetrizer", d)

    @classmethod
    def from_arrows(cls, n: int, arrows: Sequence[tuple[int, int]]):
        """Skew-symmetric matrix of a quiver: arrow ``i -> j`` sets ``b_ij = 1``."""
        b = [[0] * n for _ in range(n)]
        for i, j in arrows:
            b[i][j] += 1
            b[j][i] -= 1
        return cls(b)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __neg__(self):
        return ExchangeMatrix(tuple(tuple(-v for v in row) for row in self.rows))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def mutate(self, k: int) -> "ExchangeMatrix":
        return mutate_matrix(self, k)


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation in direction ``k``.

    ``b'_ij = -b_ij`` on row and column ``k``; elsewhere
    ``b'_ij = b_ij + (b_ik |b_kj| + |b_ik| b_kj) / 2``.
    """
    n = B.n
    if not 0 <= k < n:
        raise StructuralError(f"direction {k} out of range for rank {n}")
    b = B.rows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j] + (b[i][k] * abs(b[k][j]) + abs(b[i][k]) * b[k][j]) // 2)
        out.append(tuple(row))
    return ExchangeMatrix(tuple(out))


@dataclass(frozen=True)
class Seed:
    matrix: ExchangeMatrix
    cluster: tuple

    def __post_init__(self):
        cluster = tuple(self.cluster)
        if len(cluster) != self.matrix.n:
            raise StructuralError("cluster length differs from matrix rank")
        if any(x.rank != self.matrix.n for x in cluster):
            raise StructuralError("cluster variables must live in rank-n variables")
        for x in cluster:
            if x.is_zero() or any(c <= 0 for c in x.terms.values()):
                raise DomainError(f"cluster variable {x} lacks positive coefficients")
        object.__setattr__(self, "cluster", cluster)

    @classmethod
    def initial(cls, matrix) -> "Seed":
        if not isinstance(matrix, ExchangeMatrix):
            matrix = ExchangeMatrix(matrix)
        n = matrix.n
        return cls(matrix, tuple(LaurentPolynomial.variable(i, n) for i in range(n)))

    @property
    def rank(self) -> int:
        return self.matrix.n

    def mutate(self, k: int) -> "Seed":
        return mutate_seed(self, k)

    def cluster_text(self, names=None) -> tuple:
        return tuple(x.normalize().to_text(names) for x in self.cluster)


def mutate_seed(s: Seed, k: int) -> Seed:
    """Replace ``x_k`` by ``(prod x_j^[b_jk]+ + prod x_j^[-b_jk]+) / x_k``."""
    n = s.rank
    if not 0 <= k < n:
        raise StructuralError(f"direction {k} out of range for rank {n}")
    b = s.matrix.rows
    plus = LaurentPolynomial.one(n)
    minus = LaurentPolynomial.one(n)
    for j in range(n):
        if b[j][k] > 0:
            plus = plus * s.cluster[j] ** b[j][k]
        elif b[j][k] < 0:
            minus = minus * s.cluster[j] ** (-b[j][k])
    new = exact_div(plus + minus, s.cluster[k])
    cluster = s.cluster[:k] + (new,) + s.cluster[k + 1:]
    return Seed(mutate_matrix(s.matrix, k), cluster)


def mutate_word(s: Seed, word: Sequence[int]) -> Seed:
    for k in word:
        s = mutate_seed(s, k)
    return s


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0..n-1}``; ``images[i]`` is the image of ``i``."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"{images} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(self * other)(i) == self(other(i))``."""
        if self.degree != other.degree:
            raise StructuralError("permutations of different degree")
        return Permutation(tuple(self.images[j] for j in other.images))

    def matrix(self) -> np.ndarray:
        """``P`` with ``P[i, j] = 1`` iff ``i == inverse(j)``."""
        n = self.degree
        P = np.zeros((n, n), dtype=np.int64)
        inv = self.inverse().images
        for j in range(n):
            P[inv[j], j] = 1
        return P


def apply_permutation(sigma: Permutation, s: Seed) -> Seed:
    """``x'_i = x_{sigma^-1(i)}`` and ``b'_ij = b_{sigma^-1(i) sigma^-1(j)}``."""
    if sigma.degree != s.rank:
        raise StructuralError("permutation degree differs from seed rank")
    inv = sigma.inverse().images
    b = s.matrix.rows
    rows = tuple(tuple(b[inv[i]][inv[j]] for j in range(s.rank)) for i in range(s.rank))
    return Seed(ExchangeMatrix(rows), tuple(s.cluster[inv[i]] for i in range(s.rank)))


def negate_matrix_seed(s: Seed) -> Seed:
    return Seed(-s.matrix, s.cluster)


def canonical_unlabeled_key(s: Seed) -> tuple:
    """Key shared exactly by the seeds in one permutation orbit.

    Minimum over all relabelings of (cluster texts, conjugated matrix).
    Cost is ``n!``, which is fine for rank up to about 6.
    """
    texts = [x.to_text() for x in s.cluster]
    b = s.matrix.rows
    n = s.rank
    best = None
    for order in itertools.permutations(range(n)):
        cand = (tuple(texts[i] for i in order),
                tuple(tuple(b[i][j] for j in order) for i in order))
        if best is None or cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class ExchangeGraph:
    """Unlabeled seeds as nodes, numbered in breadth-first discovery order.

    ``edges`` holds ``(u, v, k)`` with ``u < v``: mutating the representative
    of ``u`` in direction ``k`` gives a relabeling of ``v``.
    """

    seeds: tuple
    keys: tuple
    edges: tuple

    def __len__(self):
        return len(self.seeds)

    @property
    def rank(self):
        return self.seeds[0].rank

    def neighbors(self, u: int) -> set:
        out = set()
        for a, b, _ in self.edges:
            if a == u:
                out.add(b)
            elif b == u:
                out.add(a)
        return out

    def is_regular(self) -> bool:
        degree = {u: 0 for u in range(len(self))}
        for a, b, _ in self.edges:
            degree[a] += 1
            degree[b] += 1
        return all(d == self.rank for d in degree.values())

    def is_connected(self) -> bool:
        seen, stack = {0}, [0]
        while stack:
            u = stack.pop()
            for v in self.neighbors(u) - seen:
                seen.add(v)
                stack.append(v)
        return len(seen) == len(self)

    def to_dot(self, names=None) -> str:
        lines = ["graph exchange {"]
        for u, seed in enumerate(self.seeds):
            label = "; ".join(sorted(seed.cluster_text(names)))
            lines.append(f'  n{u} [label="{label}"];')
        for a, b, k in self.edges:
            lines.append(f'  n{a} -- n{b} [label="{k + 1}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_exchange_graph(initial: Seed, node_limit: int = 10_000) -> ExchangeGraph:
    """Breadth-first closure of ``initial`` under all mutations.

    Raises :class:`ResourceError` once more than ``node_limit`` unlabeled
    seeds are found (infinite type, or the limit is too small).
    """
    if node_limit < 1:
        raise DomainError("node_limit must be at least 1")
    seeds = [initial]
    keys = [canonical_unlabeled_key(initial)]
    index = {keys[0]: 0}
    edges = {}
    u = 0
    while u < len(seeds):
        for k in range(initial.rank):
            t = mutate_seed(seeds[u], k)
            key = canonical_unlabeled_key(t)
            v = index.get(key)
            if v is None:
                if len(seeds) >= node_limit:
                    raise ResourceError(f"exchange graph exceeds {node_limit} nodes")
                v = len(seeds)
                index[key] = v
                seeds.append(t)
                keys.append(key)
            if u != v:
                edges.setdefault((min(u, v), max(u, v)), k)
        u += 1
    edge_list = tuple((a, b, k) for (a, b), k in sorted(edges.items()))
    return ExchangeGraph(tuple(seeds), tuple(keys), edge_list)


def list_cluster_variables(g: ExchangeGraph) -> frozenset:
    return frozenset(x for s in g.seeds for x in s.cluster)


def cluster_monomial(s: Seed, exponents: Sequence[int]) -> LaurentPolynomial:
    if len(exponents) != s.rank:
        raise StructuralError("exponent vector length differs from seed rank")
    if any(m < 0 for m in exponents):
        raise DomainError("cluster monomial exponents must be nonnegative")
    out = LaurentPolynomial.one(s.rank)
    for x, m in zip(s.cluster, exponents):
        if m:
            out = out * x ** m
    return out


# -- seed files ------------------------------------------------------------
#
#   # comment
#   rank: 3
#   matrix:
#     0 1 0
#     -1 0 -1
#     0 1 0
#   names: a b c        (optional)


def parse_seed_text(text: str) -> tuple[Seed, Optional[tuple]]:
    rank = None
    names = None
    rows = []
    in_matrix = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if sep and key in ("rank", "matrix", "names"):
            in_matrix = key == "matrix"
            if key == "rank":
                rank = int(value)
            elif key == "names":
                names = tuple(value.split())
            elif value.strip():
                rows.append([int(v) for v in value.split()])
            continue
        if not in_matrix:
            raise DomainError(f"unexpected line in seed file: {raw!r}")
        rows.append([int(v) for v in line.split()])
    if rank is None:
        rank = len(rows)
    if len(rows) != rank:
        raise StructuralError(f"seed file declares rank {rank} but has {len(rows)} rows")
    if names is not None and len(names) != rank:
        raise StructuralError("number of names differs from rank")
    return Seed.initial(ExchangeMatrix(rows)), names


def read_seed_file(path) -> tuple[Seed, Optional[tuple]]:
    return parse_seed_text(Path(path).read_text())


def format_seed_text(matrix: ExchangeMatrix, names=None) -> str:
    lines = [f"rank: {matrix.n}", "matrix:"]
    lines += ["  " + " ".join(str(v) for v in row) for row in matrix.rows]
    if names:
        lines.append("names: " + " ".join(names))
    return "\n".join(lines) + "\n"
