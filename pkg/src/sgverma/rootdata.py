"""Root datum of sl_n, weights, parabolic characters and Chevalley elements.

Generators of sl_n are addressed by index pairs ``(i, j)`` (1-based):
``i != j`` is the matrix unit E_ij and ``(t, t)`` stands for the Cartan
element H_t = E_tt - E_{t+1,t+1}, 1 <= t <= n-1.  Weights live in the
basis of fundamental weights, so coordinate ``t`` of a weight is its value
on H_t.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .errors import InvalidInputError, NotInParabolicError

Gen = tuple[int, int]


def as_rational(x) -> Fraction | int:
    """Exact rational from int/Fraction/str; integral values come back as int."""
    if isinstance(x, bool):
        raise InvalidInputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        raise InvalidInputError("floating point values are not accepted; pass a Fraction or 'p/q'")
    try:
        q = Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"not a rational: {x!r}") from exc
    return q.numerator if q.denominator == 1 else q


def gen_name(g: Gen) -> str:
    i, j = g
    sep = "," if max(i, j) > 9 else ""
    if i == j:
        return f"H{i}"
    return f"E{i}{sep}{j}"


def root_order(n: int) -> list[Gen]:
    """Positive roots (i, j), i < j, sorted by height then lexicographically."""
    return sorted(((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)),
                  key=lambda r: (r[1] - r[0], r))


@dataclass(frozen=True)
class Weight:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * (n - 1))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def evaluate_coroot(self, t: int):
        """Value on H_t (1-based)."""
        return self.coords[t - 1]

    def _check(self, other: "Weight"):
        if not isinstance(other, Weight) or other.rank != self.rank:
            raise InvalidInputError("weights of different rank")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    def is_dominant_integral(self) -> bool:
        return self.is_integral() and all(c >= 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(format_rational(c) for c in self.coords) + ")"


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def root_weight(n: int, i: int, j: int) -> Weight:
    """The weight L_i - L_j (i != j) in fundamental coordinates."""
    if i == j:
        return Weight.zero(n)
    coords = []
    for t in range(1, n):
        coords.append((i == t) - (i == t + 1) - (j == t) + (j == t + 1))
    return Weight(tuple(coords))


def gen_weight(n: int, g: Gen) -> Weight:
    return root_weight(n, *g)


def fundamental_weight(n: int, i: int) -> Weight:
    return Weight(tuple(int(t == i) for t in range(1, n)))


@dataclass(frozen=True)
class RootDatum:
    n: int
    positive_roots: tuple
    simple_roots: tuple
    cartan_basis: tuple

    @property
    def negative_generators(self) -> list[Gen]:
        return [(j, i) for i, j in self.positive_roots]

    @property
    def positive_generators(self) -> list[Gen]:
        return list(self.positive_roots)

    @property
    def generator_order(self) -> tuple[Gen, ...]:
        """Global PBW order: lowering, then Cartan, then raising generators."""
        return tuple(self.negative_generators) + self.cartan_basis + self.positive_roots

    def simple_root_expansion(self, root: Gen) -> tuple[int, ...]:
        i, j = root
        return tuple(int(i <= t < j) for t in range(1, self.n))


@lru_cache(maxsize=None)
def build_root_datum(n: int) -> RootDatum:
    if not isinstance(n, int) or n < 2:
        raise InvalidInputError(f"sl_n needs n >= 2, got {n!r}")
    pos = tuple(root_order(n))
    simple = tuple(r for r in pos if r[1] == r[0] + 1)
    cartan = tuple((t, t) for t in range(1, n))
    return RootDatum(n, pos, simple, cartan)


def delta_weight(n: int) -> Weight:
    rd = build_root_datum(n)
    total = Weight.zero(n)
    for i, j in rd.positive_roots:
        total = total + root_weight(n, i, j)
    return total * Fraction(1, 2)


@dataclass(frozen=True)
class ParabolicCharacter:
    """Flag 1 <= n_1 < ... < n_k <= n-1 together with weights l_1..l_k.

    The parabolic p is the block upper triangular part of sl_n with block
    sizes d_i = n_i - n_{i-1}; the character sends x in p to
    sum_t c_t x_tt with c_t = sum of l_i over n_i >= t.
    """

    n: int
    flag: tuple
    ell: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidInputError(f"sl_n needs n >= 2, got {self.n!r}")
        flag = tuple(int(f) for f in self.flag)
        ell = tuple(as_rational(x) for x in self.ell)
        if len(flag) != len(ell):
            raise InvalidInputError("flag and weights must have equal length")
        if not flag:
            raise InvalidInputError("flag must be non-empty")
        if any(b <= a for a, b in zip(flag, flag[1:])):
            raise InvalidInputError(f"flag must be strictly increasing: {flag}")
        if flag[0] < 1 or flag[-1] > self.n - 1:
            raise InvalidInputError(f"flag entries must lie in [1, {self.n - 1}]")
        object.__setattr__(self, "flag", flag)
        object.__setattr__(self, "ell", ell)

    @classmethod
    def full_flag(cls, n: int, ell: Iterable) -> "ParabolicCharacter":
        return cls(n, tuple(range(1, n)), tuple(ell))

    @classmethod
    def from_weight(cls, weight: Weight) -> "ParabolicCharacter":
        """Full-flag (Borel) character whose restriction to h is ``weight``."""
        return cls.full_flag(weight.rank + 1, weight.coords)

    @property
    def k(self) -> int:
        return len(self.flag)

    @property
    def is_full_flag(self) -> bool:
        return self.k == self.n - 1

    @cached_property
    def block_sizes(self) -> tuple[int, ...]:
        ends = self.flag + (self.n,)
        return tuple(b - a for a, b in zip((0,) + self.flag, ends))

    @cached_property
    def _block_of(self) -> tuple[int, ...]:
        # index 0 unused so rows are 1-based
        out = [0]
        for row in range(1, self.n + 1):
            out.append(sum(1 for f in self.flag if f < row))
        return tuple(out)

    def block(self, row: int) -> int:
        return self._block_of[row]

    @cached_property
    def diag_coeffs(self) -> tuple:
        return tuple(sum((l for f, l in zip(self.flag, self.ell) if f >= t), 0)
                     for t in range(1, self.n + 1))

    @cached_property
    def lam(self) -> Weight:
        coords = [0] * (self.n - 1)
        for f, l in zip(self.flag, self.ell):
            coords[f - 1] = l
        return Weight(tuple(coords))

    def contains(self, g: Gen) -> bool:
        """Whether the generator g lies in p."""
        i, j = g
        return i == j or self.block(i) <= self.block(j)

    @cached_property
    def complement(self) -> tuple[Gen, ...]:
        return tuple(complement_roots(self))

    @property
    def m(self) -> int:
        return len(self.complement)

    @cached_property
    def generator_order(self) -> tuple[Gen, ...]:
        """PBW order with the complement generators first, then a basis of p."""
        rd = build_root_datum(self.n)
        comp = self.complement
        rest = [g for g in rd.negative_generators if g not in comp]
        return comp + tuple(rest) + rd.cartan_basis + rd.positive_roots

    @cached_property
    def parabolic_basis(self) -> tuple[Gen, ...]:
        return tuple(g for g in self.generator_order if self.contains(g))

    def rho_generator(self, g: Gen):
        """Character value on a generator of p."""
        if not self.contains(g):
            raise NotInParabolicError(f"{gen_name(g)} is not in p")
        i, j = g
        return self.lam.coords[i - 1] if i == j else 0

    @property
    def m_lambda_flag(self):
        """min over l_1..l_k (the reading used for proper parabolics)."""
        return min(self.ell)

    def __str__(self) -> str:
        return (f"sl_{self.n} flag={list(self.flag)} "
                f"weights=[{','.join(format_rational(l) for l in self.ell)}]")


def complement_roots(pc: ParabolicCharacter) -> list[Gen]:
    """Lowering generators E_ji (j > i) spanning the complement of p."""
    return [(j, i) for i, j in root_order(pc.n) if pc.block(j) > pc.block(i)]


def weight_of_monomial(P, pc: ParabolicCharacter) -> Weight:
    if len(P) != pc.m:
        raise InvalidInputError(f"exponent vector has length {len(P)}, expected {pc.m}")
    coords = [0] * (pc.n - 1)
    for p, g in zip(P, pc.complement):
        if p:
            w = gen_weight(pc.n, g).coords
            for t in range(pc.n - 1):
                coords[t] += p * w[t]
    return Weight(tuple(coords))


def m_alpha(lam: Weight, i: int) -> int:
    if not lam.is_integral():
        raise InvalidInputError(f"m_alpha needs an integral weight, got {lam}")
    if not 1 <= i <= lam.rank:
        raise InvalidInputError(f"simple root index {i} out of range")
    return lam.coords[i - 1] + 1


def m_of_lambda(lam: Weight) -> int:
    if not lam.is_integral():
        raise InvalidInputError(f"m(lambda) needs an integral weight, got {lam}")
    return min(lam.coords)


class ChevalleyElement:
    """Element of sl_n written in the basis {E_ij (i != j), H_t}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Gen, object] | None = None):
        if n < 2:
            raise InvalidInputError(f"sl_n needs n >= 2, got {n!r}")
        self.n = n
        clean = {}
        for (i, j), c in (terms or {}).items():
            if not (1 <= i <= n and 1 <= j <= n) or (i == j and i == n):
                raise InvalidInputError(f"no generator ({i}, {j}) in sl_{n}")
            c = as_rational(c)
            if c:
                clean[(i, j)] = c
        self.terms = clean

    @classmethod
    def gen(cls, n: int, g: Gen, coeff=1) -> "ChevalleyElement":
        return cls(n, {g: coeff})

    @classmethod
    def from_matrix(cls, mat) -> "ChevalleyElement":
        n = len(mat)
        if sum((Fraction(mat[t][t]) for t in range(n)), Fraction(0)) != 0:
            raise InvalidInputError("matrix is not trace-free")
        terms = {}
        for i in range(n):
            for j in range(n):
                if i != j and mat[i][j]:
                    terms[(i + 1, j + 1)] = mat[i][j]
        running = 0
        for t in range(n - 1):
            running += mat[t][t]
            if running:
                terms[(t + 1, t + 1)] = running
        return cls(n, terms)

    def to_matrix(self) -> list[list]:
        n = self.n
        mat = [[0] * n for _ in range(n)]
        for (i, j), c in self.terms.items():
            if i == j:
                mat[i - 1][i - 1] += c
                mat[i][i] -= c
            else:
                mat[i - 1][j - 1] += c
        return mat

    def diagonal(self) -> list:
        mat = self.to_matrix()
        return [mat[t][t] for t in range(self.n)]

    def _check(self, other):
        if not isinstance(other, ChevalleyElement) or other.n != self.n:
            raise InvalidInputError("Chevalley elements of different sl_n")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return ChevalleyElement(self.n, out)

    def __neg__(self):
        return ChevalleyElement(self.n, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return ChevalleyElement(self.n, {g: k * c for g, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ChevalleyElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)}*{gen_name(g)}" for g, c in sorted(self.terms.items()))


def bracket(x: ChevalleyElement, y: ChevalleyElement) -> ChevalleyElement:
    x._check(y)
    a, b = x.to_matrix(), y.to_matrix()
    n = x.n
    ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return ChevalleyElement.from_matrix([[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)])


@lru_cache(maxsize=None)
def generator_bracket(n: int, g: Gen, h: Gen) -> tuple[tuple[Gen, int], ...]:
    """[g, h] for two generators, as a tuple of (generator, integer coefficient)."""
    res = bracket(ChevalleyElement.gen(n, g), ChevalleyElement.gen(n, h))
    return tuple(sorted((k, int(c)) for k, c in res.terms.items()))


def in_parabolic(pc: ParabolicCharacter, x: ChevalleyElement) -> bool:
    return all(pc.contains(g) for g in x.terms)


def eval_character(pc: ParabolicCharacter, x: ChevalleyElement):
    if x.n != pc.n:
        raise InvalidInputError("element and character live in different sl_n")
    if not in_parabolic(pc, x):
        raise NotInParabolicError(f"{x!r} is not block upper triangular for flag {pc.flag}")
    return as_rational(sum((c * a for c, a in zip(pc.diag_coeffs, x.diagonal())), 0))
