"""Truncated bi-graded power series over exact Gaussian rationals.

A ``BiSeries`` stores a Hermitian-symmetric jet

    sum_{j,k} a_{jk} z^{m_j} conj(z)^{m_k},   |m_j| <= d, |m_k| <= d,

sparsely, keyed by ordinal pairs of the graded-lexicographic multi-index
order (degree-major, lexicographically ascending within each degree;
ordinal 0 is the constant term).  ``HolSeries`` is the purely holomorphic
analogue.  All coefficients are :class:`~kahlerimm.scalars.CScalar`.

Every operation documents its output truncation degree; results never
silently lose degree information.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Sequence, Tuple, TypeVar

from .scalars import CScalar, RationalLike, as_fraction, format_fraction

MultiIndex = Tuple[int, ...]


class ArityMismatchError(ValueError):
    """Two series of different arity were combined."""


class ConstantTermError(ValueError):
    """A transcendental operation needs a zero constant term."""


class OrdinalRangeError(IndexError):
    """Multi-index outside the truncation range of a graded order."""


class FixedPointDivergenceError(RuntimeError):
    """A graded fixed-point iteration failed to stabilize."""


# ---------------------------------------------------------------------------
# graded-lex enumeration (degree-major, lex ascending inside a degree)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _degree_block(n: int, deg: int) -> Tuple[MultiIndex, ...]:
    """All n-tuples of nonnegative ints with sum ``deg``, lex ascending."""
    if n == 1:
        return ((deg,),)
    out: List[MultiIndex] = []
    for first in range(deg + 1):
        for rest in _degree_block(n - 1, deg - first):
            out.append((first,) + rest)
    return tuple(out)


def _block_size(n: int, deg: int) -> int:
    return math.comb(deg + n - 1, n - 1)


def index_of_ordinal(n: int, ordinal: int) -> MultiIndex:
    """The multi-index at position ``ordinal`` of the graded-lex order."""
    if ordinal < 0:
        raise OrdinalRangeError("negative ordinal")
    deg = 0
    while True:
        size = _block_size(n, deg)
        if ordinal < size:
            return _degree_block(n, deg)[ordinal]
        ordinal -= size
        deg += 1


def ordinal_of_index(m: MultiIndex) -> int:
    """Position of ``m`` in the graded-lex order for its arity."""
    n = len(m)
    deg = sum(m)
    offset = sum(_block_size(n, e) for e in range(deg))
    # lexicographic rank of m among compositions of deg into n parts
    rank = 0
    remaining = deg
    for pos in range(n - 1):
        for smaller in range(m[pos]):
            rank += _block_size(n - pos - 1, remaining - smaller)
        remaining -= m[pos]
    return offset + rank


class GradedOrder:
    """Finite view of the graded-lex order: arity ``n``, max degree ``d``."""

    __slots__ = ("n", "d", "_basis")

    def __init__(self, n: int, d: int):
        if n < 1 or d < 0:
            raise ValueError("need arity >= 1, degree >= 0")
        self.n = n
        self.d = d
        self._basis: Tuple[MultiIndex, ...] | None = None

    @property
    def basis(self) -> Tuple[MultiIndex, ...]:
        if self._basis is None:
            out: List[MultiIndex] = []
            for deg in range(self.d + 1):
                out.extend(_degree_block(self.n, deg))
            self._basis = tuple(out)
        return self._basis

    @property
    def size(self) -> int:
        return sum(_block_size(self.n, e) for e in range(self.d + 1))

    def ordinal(self, m: MultiIndex) -> int:
        if len(m) != self.n:
            raise ArityMismatchError(f"index arity {len(m)} != {self.n}")
        if sum(m) > self.d:
            raise OrdinalRangeError(f"|{m}| exceeds truncation degree {self.d}")
        return ordinal_of_index(m)

    def index(self, ordinal: int) -> MultiIndex:
        if not 0 <= ordinal < self.size:
            raise OrdinalRangeError(f"ordinal {ordinal} out of range")
        return index_of_ordinal(self.n, ordinal)


@lru_cache(maxsize=None)
def _ordinal_degree(n: int, ordinal: int) -> int:
    return sum(index_of_ordinal(n, ordinal))


@lru_cache(maxsize=None)
def _ordinal_sum(n: int, j1: int, j2: int) -> int:
    m1 = index_of_ordinal(n, j1)
    m2 = index_of_ordinal(n, j2)
    return ordinal_of_index(tuple(a + b for a, b in zip(m1, m2)))


# ---------------------------------------------------------------------------
# BiSeries
# ---------------------------------------------------------------------------

Coeffs = Dict[Tuple[int, int], CScalar]


class BiSeries:
    """Truncated jet sum a_{jk} z^{m_j} conj(z)^{m_k}; immutable value."""

    __slots__ = ("n", "d", "coeffs")

    def __init__(self, n: int, d: int, coeffs: Coeffs | None = None):
        if n < 1 or d < 0:
            raise ValueError("need arity >= 1, degree >= 0")
        clean: Coeffs = {}
        for (j, k), c in (coeffs or {}).items():
            c = CScalar.of(c)
            if c.is_zero():
                continue
            if _ordinal_degree(n, j) > d or _ordinal_degree(n, k) > d:
                raise OrdinalRangeError(
                    f"coefficient at ordinals ({j},{k}) exceeds degree {d}"
                )
            clean[(j, k)] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("BiSeries is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n: int, d: int) -> "BiSeries":
        return cls(n, d, {})

    @classmethod
    def term(cls, n: int, d: int, m_hol: MultiIndex, m_anti: MultiIndex,
             coeff: "CScalar | RationalLike" = 1) -> "BiSeries":
        j = ordinal_of_index(tuple(m_hol))
        k = ordinal_of_index(tuple(m_anti))
        return cls(n, d, {(j, k): CScalar.of(coeff)})

    # -- access -------------------------------------------------------
    def get(self, j: int, k: int) -> CScalar:
        return self.coeffs.get((j, k), CScalar(0))

    def get_index(self, m_hol: MultiIndex, m_anti: MultiIndex) -> CScalar:
        return self.get(ordinal_of_index(tuple(m_hol)),
                        ordinal_of_index(tuple(m_anti)))

    def is_hermitian(self) -> bool:
        for (j, k), c in self.coeffs.items():
            if self.get(k, j) != c.conj():
                return False
        return True

    # -- ring operations ----------------------------------------------
    def _check(self, other: "BiSeries") -> None:
        if self.n != other.n:
            raise ArityMismatchError(f"arity {self.n} != {other.n}")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        d = min(self.d, other.d)
        out: Coeffs = {}
        for src in (self.coeffs, other.coeffs):
            for (j, k), c in src.items():
                if _ordinal_degree(self.n, j) > d or _ordinal_degree(self.n, k) > d:
                    continue
                out[(j, k)] = out.get((j, k), CScalar(0)) + c
        return BiSeries(self.n, d, out)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.n, self.d, {jk: -c for jk, c in self.coeffs.items()})

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def scale(self, factor: "CScalar | RationalLike") -> "BiSeries":
        f = CScalar.of(factor)
        return BiSeries(self.n, self.d,
                        {jk: c * f for jk, c in self.coeffs.items()})

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._check(other)
        n = self.n
        d = min(self.d, other.d)
        out: Coeffs = {}
        for (j1, k1), c1 in self.coeffs.items():
            dj1 = _ordinal_degree(n, j1)
            dk1 = _ordinal_degree(n, k1)
            if dj1 > d or dk1 > d:
                continue
            for (j2, k2), c2 in other.coeffs.items():
                if dj1 + _ordinal_degree(n, j2) > d:
                    continue
                if dk1 + _ordinal_degree(n, k2) > d:
                    continue
                jk = (_ordinal_sum(n, j1, j2), _ordinal_sum(n, k1, k2))
                out[jk] = out.get(jk, CScalar(0)) + c1 * c2
        return BiSeries(n, d, out)

    def truncate(self, d: int) -> "BiSeries":
        if d >= self.d:
            if d == self.d:
                return self
            raise ValueError("cannot extend truncation degree")
        n = self.n
        out = {jk: c for jk, c in self.coeffs.items()
               if _ordinal_degree(n, jk[0]) <= d and _ordinal_degree(n, jk[1]) <= d}
        return BiSeries(n, d, out)

    # -- comparisons --------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (self.n, self.d) == (other.n, other.d) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = len(self.coeffs)
        return f"BiSeries(n={self.n}, d={self.d}, {terms} terms)"

    # -- serialization ------------------------------------------------
    def dumps(self) -> str:
        """One line per coefficient: ``m_j ; m_k ; re ; im``, graded order."""
        n = self.n
        lines = []
        for (j, k) in sorted(self.coeffs, key=lambda jk: (jk[0], jk[1])):
            c = self.coeffs[(j, k)]
            mj = ",".join(map(str, index_of_ordinal(n, j)))
            mk = ",".join(map(str, index_of_ordinal(n, k)))
            lines.append(f"{mj} ; {mk} ; {format_fraction(c.re)} ; "
                         f"{format_fraction(c.im)}")
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def loads(cls, text: str, degree: int | None = None) -> "BiSeries":
        """Parse the text format; ``degree`` defaults to the max degree seen."""
        entries: List[Tuple[MultiIndex, MultiIndex, CScalar]] = []
        arity = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(";")]
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: expected 'm_j ; m_k ; re ; im'")
            try:
                mj = tuple(int(t) for t in parts[0].split(","))
                mk = tuple(int(t) for t in parts[1].split(","))
                c = CScalar(Fraction(parts[2]), Fraction(parts[3]))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"line {lineno}: {exc}") from exc
            if arity is None:
                arity = len(mj)
            if len(mj) != arity or len(mk) != arity:
                raise ValueError(f"line {lineno}: inconsistent arity")
            entries.append((mj, mk, c))
        if arity is None:
            raise ValueError("empty series file")
        maxdeg = max((max(sum(mj), sum(mk)) for mj, mk, _ in entries), default=0)
        d = maxdeg if degree is None else degree
        coeffs: Coeffs = {}
        for mj, mk, c in entries:
            if sum(mj) > d or sum(mk) > d:
                continue
            coeffs[(ordinal_of_index(mj), ordinal_of_index(mk))] = c
        return cls(arity, d, coeffs)


# ---------------------------------------------------------------------------
# transcendental operations (zero constant term required)
# ---------------------------------------------------------------------------

def _require_zero_constant(a: BiSeries, what: str) -> None:
    if not a.get(0, 0).is_zero():
        raise ConstantTermError(f"{what} needs a zero constant term")


def _compose_coefficients(a: BiSeries, coeff_at: Callable[[int], CScalar],
                          constant: CScalar) -> BiSeries:
    """sum_k c_k a^k with c_0 = ``constant``; a must have no constant term."""
    out = BiSeries(a.n, a.d, {(0, 0): constant})
    power = BiSeries(a.n, a.d, {(0, 0): CScalar(1)})
    for k in range(1, 2 * a.d + 1):
        power = power * a
        if not power.coeffs:
            break
        ck = coeff_at(k)
        if not ck.is_zero():
            out = out + power.scale(ck)
    return out


def exp_series(a: BiSeries) -> BiSeries:
    """exp(a) truncated at a's degree (constant term 1)."""
    _require_zero_constant(a, "exp_series")
    return _compose_coefficients(
        a, lambda k: CScalar(Fraction(1, math.factorial(k))), CScalar(1))


def log1p_series(a: BiSeries) -> BiSeries:
    """log(1+a) truncated at a's degree (zero constant term)."""
    _require_zero_constant(a, "log1p_series")
    return _compose_coefficients(
        a, lambda k: CScalar(Fraction((-1) ** (k + 1), k)), CScalar(0))


def pow1p_series(a: BiSeries, e: RationalLike) -> BiSeries:
    """(1+a)^e via the generalized binomial series, rational exponent."""
    _require_zero_constant(a, "pow1p_series")
    e = as_fraction(e)

    def binom(k: int) -> CScalar:
        num = Fraction(1)
        for i in range(k):
            num *= (e - i)
        return CScalar(num / math.factorial(k))

    return _compose_coefficients(a, binom, CScalar(1))


def det_series(matrix: Sequence[Sequence[BiSeries]]) -> BiSeries:
    """Exact determinant of a square matrix of BiSeries (Leibniz expansion)."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    if size == 0:
        raise ValueError("empty matrix")
    import itertools

    first = matrix[0][0]
    acc = BiSeries.zero(first.n, min(e.d for row in matrix for e in row))
    for perm in itertools.permutations(range(size)):
        sign = 1
        seen = list(perm)
        # permutation parity by counting inversions
        inv = sum(1 for i in range(size) for j in range(i + 1, size)
                  if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        prod = matrix[0][perm[0]]
        for row in range(1, size):
            prod = prod * matrix[row][perm[row]]
        acc = acc + (prod if sign == 1 else -prod)
    return acc


T = TypeVar("T")


def solve_graded_fixed_point(step: Callable[[T], T], seed: T,
                             max_steps: int) -> T:
    """Iterate ``x <- step(x)`` until it stabilizes (graded contraction).

    The caller asserts each application determines at least one more degree,
    so stabilization must occur within ``max_steps`` iterations; otherwise a
    :class:`FixedPointDivergenceError` is raised.
    """
    current = seed
    for _ in range(max_steps):
        nxt = step(current)
        if nxt == current:
            return current
        current = nxt
    if step(current) == current:
        return current
    raise FixedPointDivergenceError(
        f"no fixed point within {max_steps} iterations")


# ---------------------------------------------------------------------------
# HolSeries
# ---------------------------------------------------------------------------

class HolSeries:
    """Purely holomorphic truncated series sum c_j z^{m_j}."""

    __slots__ = ("n", "d", "coeffs")

    def __init__(self, n: int, d: int, coeffs: Dict[int, CScalar] | None = None):
        if n < 1 or d < 0:
            raise ValueError("need arity >= 1, degree >= 0")
        clean: Dict[int, CScalar] = {}
        for j, c in (coeffs or {}).items():
            c = CScalar.of(c)
            if c.is_zero():
                continue
            if _ordinal_degree(n, j) > d:
                raise OrdinalRangeError(f"ordinal {j} exceeds degree {d}")
            clean[j] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("HolSeries is immutable")

    @classmethod
    def monomial(cls, n: int, d: int, m: MultiIndex,
                 coeff: "CScalar | RationalLike" = 1) -> "HolSeries":
        return cls(n, d, {ordinal_of_index(tuple(m)): CScalar.of(coeff)})

    def get(self, j: int) -> CScalar:
        return self.coeffs.get(j, CScalar(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, HolSeries):
            return NotImplemented
        return (self.n, self.d) == (other.n, other.d) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"HolSeries(n={self.n}, d={self.d}, {len(self.coeffs)} terms)"

    def scale(self, factor: "CScalar | RationalLike") -> "HolSeries":
        f = CScalar.of(factor)
        return HolSeries(self.n, self.d, {j: c * f for j, c in self.coeffs.items()})

    def __add__(self, other: "HolSeries") -> "HolSeries":
        if self.n != other.n:
            raise ArityMismatchError(f"arity {self.n} != {other.n}")
        d = min(self.d, other.d)
        out: Dict[int, CScalar] = {}
        for src in (self.coeffs, other.coeffs):
            for j, c in src.items():
                if _ordinal_degree(self.n, j) > d:
                    continue
                out[j] = out.get(j, CScalar(0)) + c
        return HolSeries(self.n, d, out)

    def mul_monomial(self, m: MultiIndex,
                     coeff: "CScalar | RationalLike" = 1) -> "HolSeries":
        """Multiply by coeff * z^m, dropping terms beyond the degree."""
        f = CScalar.of(coeff)
        shift = ordinal_of_index(tuple(m))
        deg = sum(m)
        out: Dict[int, CScalar] = {}
        for j, c in self.coeffs.items():
            if _ordinal_degree(self.n, j) + deg > self.d:
                continue
            out[_ordinal_sum(self.n, j, shift)] = c * f
        return HolSeries(self.n, self.d, out)

    def lift_arity(self, extra: int) -> "HolSeries":
        """Reinterpret in ``n + extra`` variables (new vars appended, unused)."""
        if extra == 0:
            return self
        out: Dict[int, CScalar] = {}
        zeros = (0,) * extra
        for j, c in self.coeffs.items():
            m = index_of_ordinal(self.n, j) + zeros
            out[ordinal_of_index(m)] = c
        return HolSeries(self.n + extra, self.d, out)

    def mul_conj(self, other: "HolSeries") -> BiSeries:
        """self * conj(other) as a BiSeries (no truncation loss occurs)."""
        if self.n != other.n:
            raise ArityMismatchError(f"arity {self.n} != {other.n}")
        d = min(self.d, other.d)
        out: Coeffs = {}
        for j, cj in self.coeffs.items():
            if _ordinal_degree(self.n, j) > d:
                continue
            for k, ck in other.coeffs.items():
                if _ordinal_degree(self.n, k) > d:
                    continue
                out[(j, k)] = out.get((j, k), CScalar(0)) + cj * ck.conj()
        return BiSeries(self.n, d, out)

    def dumps(self) -> str:
        """One line per coefficient: ``m_j ; re ; im``, graded order."""
        lines = []
        for j in sorted(self.coeffs):
            c = self.coeffs[j]
            m = ",".join(map(str, index_of_ordinal(self.n, j)))
            lines.append(f"{m} ; {format_fraction(c.re)} ; {format_fraction(c.im)}")
        return "\n".join(lines) + ("\n" if lines else "")
