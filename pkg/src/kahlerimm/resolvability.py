"""Graded coefficient matrices and exact positive-semidefiniteness verdicts.

The central object is the Hermitian matrix (a_{jk}) of a diastasis over the
graded monomial basis (constant excluded).  ``psd_certify`` runs an exact
pivoted LDL* elimination over Gaussian rationals and returns either a
factorization (retained for building immersion maps) or a rational witness
vector w with w*Aw < 0 — a machine-checkable non-immersibility certificate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .diastasis import b_transform, normalize_to_diastasis
from .radial import RSeries
from .scalars import CScalar, RationalLike, as_fraction
from .series import BiSeries, GradedOrder, MultiIndex, _ordinal_degree


class NotADiastasisError(ValueError):
    """A nonzero pure row/column was found where a diastasis was required."""


# ---------------------------------------------------------------------------
# matrix construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HermMatrix:
    """Hermitian coefficient matrix over the graded basis (ordinals 1..M)."""

    dimension: int
    entries: Dict[Tuple[int, int], CScalar]
    basis: Tuple[MultiIndex, ...]
    circular_flag: bool

    def get(self, row: int, col: int) -> CScalar:
        return self.entries.get((row, col), CScalar(0))

    def quadratic_form(self, v: Sequence[CScalar]) -> Fraction:
        """v* A v, exact; the value is real for Hermitian A."""
        total = CScalar(0)
        for (r, c), a in self.entries.items():
            total = total + v[r].conj() * a * v[c]
        if total.im:
            raise ValueError("quadratic form of a non-Hermitian matrix")
        return total.re


def build_matrix(d: BiSeries, degree: int) -> HermMatrix:
    """Coefficient matrix of ``d`` over monomials of degree 1..``degree``."""
    if degree > d.d:
        raise ValueError(f"requested degree {degree} exceeds truncation {d.d}")
    n = d.n
    order = GradedOrder(n, degree)
    m = order.size - 1  # ordinal 0 (constant) excluded
    entries: Dict[Tuple[int, int], CScalar] = {}
    circular = True
    for (j, k), c in d.coeffs.items():
        dj = _ordinal_degree(n, j)
        dk = _ordinal_degree(n, k)
        if dj == 0 or dk == 0:
            raise NotADiastasisError(
                f"nonzero pure coefficient at ordinals ({j},{k}); "
                "normalize_to_diastasis first")
        if dj > degree or dk > degree:
            continue
        entries[(j - 1, k - 1)] = c
        if dj != dk:
            circular = False
    return HermMatrix(m, entries, order.basis[1:], circular)


# ---------------------------------------------------------------------------
# exact PSD certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Pivot:
    """One retained LDL* step: A accumulates pivot * column * column^*."""

    ordinal: int                 # position in the basis (0-based)
    value: Fraction              # positive pivot
    column: Dict[int, CScalar]   # unit-diagonal column of L (position -> coeff)


@dataclass(frozen=True)
class Psd:
    rank: int
    pivot_ordinals: Tuple[int, ...]
    pivots: Tuple[Pivot, ...]


@dataclass(frozen=True)
class NotPsd:
    witness: Tuple[CScalar, ...]  # over the full basis, first nonzero = 1
    value: Fraction               # w* A w < 0, exact


PsdVerdict = Union[Psd, NotPsd]


def _eliminate(mat: Dict[Tuple[int, int], CScalar],
               positions: List[int]) -> PsdVerdict:
    """Pivoted LDL* on the Hermitian dict ``mat`` over ``positions``.

    Pivot rule: largest positive diagonal entry, ties broken by lowest
    position.  When no positive diagonal remains: a negative diagonal gives
    a basis-vector witness; a zero diagonal with a nonzero off-diagonal
    gives a 2x2 principal-block witness; otherwise the remainder is zero
    and the matrix is PSD.
    """
    work = dict(mat)
    active = sorted(positions)
    pivots: List[Pivot] = []
    steps: List[Tuple[int, Fraction, Dict[int, CScalar]]] = []

    def entry(r: int, c: int) -> CScalar:
        return work.get((r, c), CScalar(0))

    while True:
        best = None
        for p in active:
            dv = entry(p, p)
            if dv.im:
                raise ValueError("non-Hermitian diagonal")
            if dv.re > 0 and (best is None or dv.re > entry(best, best).re):
                best = p
        if best is None:
            witness_small: Optional[Dict[int, CScalar]] = None
            for p in active:
                if entry(p, p).re < 0:
                    witness_small = {p: CScalar(1)}
                    break
            if witness_small is None:
                for p in active:
                    for q in active:
                        if q == p:
                            continue
                        a = entry(p, q)
                        if not a.is_zero() and entry(p, p).re == 0:
                            # block [[0, a], [conj(a), c]] with c >= 0:
                            # (t, 1) with t = -s a, s = (c+1)/|a|^2 gives
                            # value c - 2 s |a|^2 = -c - 2 < 0.
                            c = entry(q, q).re
                            s = (c + 2) / (2 * a.abs2())
                            witness_small = {p: CScalar(0) - a.conj() * s,
                                             q: CScalar(1)}
                            break
                    if witness_small is not None:
                        break
            if witness_small is None:
                return Psd(len(pivots),
                           tuple(pv.ordinal for pv in pivots),
                           tuple(pivots))
            # lift the reduced witness back through the eliminations
            y = dict(witness_small)
            for p, dval, row in reversed(steps):
                acc = CScalar(0)
                for q, coeff in y.items():
                    acc = acc + row.get(q, CScalar(0)) * coeff
                y[p] = CScalar(0) - acc / CScalar(dval)
            size = (max(positions) + 1) if positions else 0
            vec = [CScalar(0)] * size
            for p, coeff in y.items():
                vec[p] = coeff
            # canonical scale: first nonzero component becomes 1
            first = next(c for c in vec if not c.is_zero())
            vec = [c / first for c in vec]
            value = _qform(mat, vec)
            if value >= 0:  # pragma: no cover - internal soundness guard
                raise AssertionError("witness failed to certify")
            return NotPsd(tuple(vec), value)

        dval = entry(best, best).re
        col: Dict[int, CScalar] = {best: CScalar(1)}
        for q in active:
            if q == best:
                continue
            a = entry(q, best)
            if not a.is_zero():
                col[q] = a / CScalar(dval)
        steps.append((best, dval, {q: entry(best, q) for q in active}))
        pivots.append(Pivot(best, dval, col))
        active.remove(best)
        for q in active:
            cq = col.get(q)
            if cq is None:
                continue
            for r in active:
                cr = col.get(r)
                if cr is None:
                    continue
                delta = cq * cr.conj() * dval
                key = (q, r)
                cur = work.get(key, CScalar(0)) - delta
                if cur.is_zero():
                    work.pop(key, None)
                else:
                    work[key] = cur


def _qform(entries: Dict[Tuple[int, int], CScalar],
           v: Sequence[CScalar]) -> Fraction:
    total = CScalar(0)
    for (r, c), a in entries.items():
        if r < len(v) and c < len(v):
            total = total + v[r].conj() * a * v[c]
    return total.re


def psd_certify(matrix: HermMatrix) -> PsdVerdict:
    """Exact PSD certification with a retained factorization or a witness.

    With ``circular_flag`` the matrix splits into independent per-degree
    principal blocks, which are factored separately (same verdict as the
    monolithic elimination; pivot sets identical up to ordering by degree).
    """
    positions = list(range(matrix.dimension))
    if not matrix.circular_flag:
        return _eliminate(matrix.entries, positions)
    by_degree: Dict[int, List[int]] = {}
    for p in positions:
        by_degree.setdefault(sum(matrix.basis[p]), []).append(p)
    all_pivots: List[Pivot] = []
    for deg in sorted(by_degree):
        block_pos = by_degree[deg]
        block = {(r, c): v for (r, c), v in matrix.entries.items()
                 if r in block_pos and c in block_pos}
        verdict = _eliminate(block, block_pos)
        if isinstance(verdict, NotPsd):
            vec = list(verdict.witness)
            vec += [CScalar(0)] * (matrix.dimension - len(vec))
            return NotPsd(tuple(vec), verdict.value)
        all_pivots.extend(verdict.pivots)
    return Psd(len(all_pivots),
               tuple(p.ordinal for p in all_pivots),
               tuple(all_pivots))


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixWitness:
    basis: Tuple[MultiIndex, ...]
    components: Tuple[CScalar, ...]
    value: Fraction


@dataclass(frozen=True)
class HartogsWitness:
    j: int
    k: int
    coefficient: Fraction


@dataclass(frozen=True)
class ResolvableUpTo:
    degree: int
    rank: Optional[int] = None


@dataclass(frozen=True)
class CertifiedNotResolvable:
    degree: int
    witness: Union[MatrixWitness, HartogsWitness]


@dataclass(frozen=True)
class CertifiedResolvable:
    """Closed-form models only; rank None means infinite rank."""

    rank: Optional[int] = None


Verdict = Union[ResolvableUpTo, CertifiedNotResolvable, CertifiedResolvable]


def resolvability(d: BiSeries, b: RationalLike, degree: int) -> Verdict:
    """Calabi's criterion up to ``degree`` for the curvature-4b target.

    ``ResolvableUpTo`` is a necessary-condition pass only;
    ``CertifiedNotResolvable`` is final at every degree >= its own
    (principal submatrices of a PSD matrix are PSD).
    """
    d = normalize_to_diastasis(d)
    transformed = b_transform(d, b)
    matrix = build_matrix(transformed, degree)
    verdict = psd_certify(matrix)
    if isinstance(verdict, Psd):
        return ResolvableUpTo(degree, verdict.rank)
    return CertifiedNotResolvable(
        degree, MatrixWitness(matrix.basis, verdict.witness, verdict.value))


def _certify_with_factors(d: BiSeries, b: RationalLike, degree: int
                          ) -> Tuple[HermMatrix, PsdVerdict]:
    d = normalize_to_diastasis(d)
    transformed = b_transform(d, b)
    matrix = build_matrix(transformed, degree)
    return matrix, psd_certify(matrix)


# ---------------------------------------------------------------------------
# rotation-invariant Hartogs criterion
# ---------------------------------------------------------------------------

def hartogs_criterion(F: RSeries, c: RationalLike, jmax: int, kmax: int
                      ) -> Verdict:
    """Sign scan of the x^j coefficients of (F(x)/F(0))^(-(c+k)).

    This decides projective inducedness of the rotation-invariant Hartogs
    metric with profile F, up to (jmax, kmax).  The positive prefactor
    F(0)^(-(c+k)) is dropped — it cannot change any sign, and dropping it
    keeps all arithmetic rational.  First negative coefficient wins,
    scanning k = 0..kmax outer and j = 1..jmax inner.
    """
    if F.nvars != 1:
        raise ValueError("F must be univariate")
    f0 = F.constant_term()
    if f0 <= 0:
        raise ValueError("F(0) must be positive")
    if F.d < jmax:
        raise ValueError(f"F truncated below jmax={jmax}")
    c = as_fraction(c)
    one = RSeries.constant(1, F.d, 1)
    g = F.scale(Fraction(1) / f0) - one
    for k in range(kmax + 1):
        h = g.pow1p(-(c + k))
        for j in range(1, jmax + 1):
            coeff = h.ucoeff(j)
            if coeff < 0:
                return CertifiedNotResolvable(jmax, HartogsWitness(j, k, coeff))
    return ResolvableUpTo(jmax)


def hartogs_metric_check(F: RSeries, degree: int) -> bool:
    """Positivity of the radial metric density at the origin jet.

    Checks that -(x F'(x)/F(x))' has a strictly positive constant term.
    Only the origin jet of this open condition is formally decidable from
    a truncation; nothing beyond it is asserted.
    """
    if F.nvars != 1:
        raise ValueError("F must be univariate")
    f0 = F.constant_term()
    if f0 <= 0:
        raise ValueError("F(0) must be positive")
    F = F.truncate(min(F.d, degree))
    one = RSeries.constant(1, F.d, 1)
    inv_f = (F.scale(Fraction(1) / f0) - one).pow1p(-1).scale(Fraction(1) / f0)
    g = F.derivative().shift_up() * inv_f
    h = -g.derivative()
    return h.constant_term() > 0
