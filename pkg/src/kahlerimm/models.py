"""Catalog of concrete potentials and diastases as truncated series.

Everything here returns exact ``BiSeries`` jets: space forms, Hartogs-type
domains over a radial profile F, the classical bounded symmetric domains
via determinant kernels, Cartan-Hartogs and Fock-Bargmann-Hartogs domains,
the cigar metric, the implicit Taub-NUT potential and the tubular ODE
metric.  ``get_model`` dispatches by name for the CLI and config files.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .diastasis import normalize_to_diastasis
from .radial import RSeries
from .scalars import CScalar, RationalLike, as_fraction
from .series import BiSeries, GradedOrder, MultiIndex, det_series, \
    exp_series, log1p_series, ordinal_of_index, pow1p_series, \
    solve_graded_fixed_point


def _unit(n: int, which: int) -> MultiIndex:
    e = [0] * n
    e[which] = 1
    return tuple(e)


def _abs2_var(n: int, d: int, which: int) -> BiSeries:
    """|z_which|^2 as a BiSeries."""
    e = _unit(n, which)
    return BiSeries.term(n, d, e, e, 1)


def _rho(n: int, d: int, first: int = 0, last: int | None = None) -> BiSeries:
    """sum_{j=first}^{last-1} |z_j|^2."""
    if last is None:
        last = n
    acc = BiSeries.zero(n, d)
    for j in range(first, last):
        acc = acc + _abs2_var(n, d, j)
    return acc


# ---------------------------------------------------------------------------
# space forms
# ---------------------------------------------------------------------------

def space_form_diastasis(n: int, b: RationalLike, degree: int) -> BiSeries:
    """Flat: sum |z_j|^2; curved: (1/b) log(1 + b sum |z_j|^2)."""
    b = as_fraction(b)
    rho = _rho(n, degree)
    if not b:
        return rho
    return log1p_series(rho.scale(b)).scale(CScalar(1 / b))


# ---------------------------------------------------------------------------
# Hartogs-type domains over a radial profile F
# ---------------------------------------------------------------------------

def hartogs_diastasis(F: RSeries, n: int, degree: int) -> BiSeries:
    """-log(F(|z_0|^2) - sum_{j>=1}|z_j|^2), centered as a diastasis.

    F is a univariate series with F(0) > 0; the additive constant
    -log F(0) and any pure rows are removed by normalization.
    """
    if F.nvars != 1:
        raise ValueError("F must be univariate")
    f0 = F.constant_term()
    if f0 <= 0:
        raise ValueError("F(0) must be positive")
    x0 = _abs2_var(n, degree, 0)
    f_of_x0 = BiSeries.zero(n, degree)
    power = BiSeries(n, degree, {(0, 0): CScalar(1)})
    f_of_x0 = power.scale(CScalar(F.ucoeff(0)))
    for j in range(1, degree + 1):
        power = power * x0
        if not power.coeffs:
            break
        cj = F.ucoeff(j)
        if cj:
            f_of_x0 = f_of_x0 + power.scale(CScalar(cj))
    rho = _rho(n, degree, first=1)
    inner = (f_of_x0 - rho).scale(CScalar(1 / f0)) \
        - BiSeries(n, degree, {(0, 0): CScalar(1)})
    return normalize_to_diastasis(-log1p_series(inner))


# ---------------------------------------------------------------------------
# classical bounded symmetric domains
# ---------------------------------------------------------------------------

def _one_minus_zzstar(rows: int, cols: int,
                      var_of: Callable[[int, int], Tuple[Optional[int], int]],
                      n_vars: int, degree: int) -> List[List[BiSeries]]:
    """Matrix I - Z Z* where Z[i][j] = sign * z_{var_of(i,j)} (or 0)."""
    mat: List[List[BiSeries]] = []
    for i in range(rows):
        row: List[BiSeries] = []
        for k in range(rows):
            entry = BiSeries.zero(n_vars, degree)
            if i == k:
                entry = entry + BiSeries(n_vars, degree, {(0, 0): CScalar(1)})
            for j in range(cols):
                vi, si = var_of(i, j)
                vk, sk = var_of(k, j)
                if vi is None or vk is None:
                    continue
                coeff = CScalar(-si * sk)
                entry = entry + BiSeries.term(
                    n_vars, degree, _unit(n_vars, vi), _unit(n_vars, vk), coeff)
            row.append(entry)
        mat.append(row)
    return mat


def cartan_bergman_diastasis(kind: str, sizes: Sequence[int], degree: int
                             ) -> Tuple[BiSeries, int]:
    """Diastasis -genus * log(generic norm) of a classical domain.

    kind: "omega1" (sizes m, n), "omega2"/"omega3"/"omega4" (size n).
    Returns (series, genus) where genus is the determinant-kernel exponent:
    omega1: n+m, omega2: n+1, omega3: n-1, omega4: n.
    """
    kind = kind.lower()
    if kind == "omega1":
        m, n = sizes
        if m < 1 or n < 1:
            raise ValueError("omega1 needs positive sizes")
        n_vars = m * n
        genus = n + m

        def var_of(i: int, j: int) -> Tuple[Optional[int], int]:
            return i * n + j, 1

        mat = _one_minus_zzstar(m, n, var_of, n_vars, degree)
    elif kind == "omega2":
        (n,) = tuple(sizes)
        if n < 1:
            raise ValueError("omega2 needs a positive size")
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        lookup = {p: v for v, p in enumerate(pairs)}
        n_vars = len(pairs)
        genus = n + 1

        def var_of(i: int, j: int) -> Tuple[Optional[int], int]:
            return lookup[(min(i, j), max(i, j))], 1

        mat = _one_minus_zzstar(n, n, var_of, n_vars, degree)
    elif kind == "omega3":
        (n,) = tuple(sizes)
        if n < 2:
            raise ValueError("omega3 needs size >= 2")
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        lookup = {p: v for v, p in enumerate(pairs)}
        n_vars = len(pairs)
        genus = n - 1

        def var_of(i: int, j: int) -> Tuple[Optional[int], int]:
            if i == j:
                return None, 1
            if i < j:
                return lookup[(i, j)], 1
            return lookup[(j, i)], -1

        mat = _one_minus_zzstar(n, n, var_of, n_vars, degree)
    elif kind == "omega4":
        (n,) = tuple(sizes)
        if n < 1:
            raise ValueError("omega4 needs a positive size")
        if n == 2:
            raise ValueError("omega4 with n=2 is not irreducible; rejected")
        sigma = BiSeries.zero(n, degree)
        zero = (0,) * n
        for j in range(n):
            e = [0] * n
            e[j] = 2
            sigma = sigma + BiSeries.term(n, degree, tuple(e), zero, 1)
        sigma_bar = BiSeries(
            n, degree, {(k, j): c.conj() for (j, k), c in sigma.coeffs.items()})
        inner = sigma * sigma_bar - _rho(n, degree).scale(2)
        series = (-log1p_series(inner)).scale(n)
        return normalize_to_diastasis(series), n
    else:
        raise ValueError(f"unknown domain kind {kind!r}")
    det = det_series(mat)
    inner = det - BiSeries(det.n, det.d, {(0, 0): CScalar(1)})
    series = (-log1p_series(inner)).scale(genus)
    return normalize_to_diastasis(series), genus


def minus_log_norm(kind: str, sizes: Sequence[int], degree: int) -> BiSeries:
    """-log N for a classical domain (the diastasis divided by its genus)."""
    series, genus = cartan_bergman_diastasis(kind, sizes, degree)
    return series.scale(Fraction(1, genus))


# ---------------------------------------------------------------------------
# Cartan-Hartogs and Fock-Bargmann-Hartogs
# ---------------------------------------------------------------------------

def cartan_hartogs_diastasis(minus_log_n: BiSeries, mu: RationalLike,
                             degree: int) -> BiSeries:
    """-log(N^mu - |w|^2) over a base with generic norm N = exp(-base).

    ``minus_log_n`` is -log N in the base variables; the fiber variable w
    is appended as the last coordinate.
    """
    mu = as_fraction(mu)
    if mu <= 0:
        raise ValueError("mu must be positive")
    base = minus_log_n
    if base.d < degree:
        raise ValueError("base series truncated below the requested degree")
    n = base.n + 1
    lifted: Dict[Tuple[int, int], CScalar] = {}
    for (j, k), c in base.coeffs.items():
        mj = _lift_index(base.n, j)
        mk = _lift_index(base.n, k)
        if sum(mj) > degree or sum(mk) > degree:
            continue
        lifted[(ordinal_of_index(mj), ordinal_of_index(mk))] = c
    base_l = BiSeries(n, degree, lifted)
    n_mu = exp_series(base_l.scale(CScalar(-mu)))
    w2 = _abs2_var(n, degree, n - 1)
    inner = n_mu - BiSeries(n, degree, {(0, 0): CScalar(1)}) - w2
    return normalize_to_diastasis(-log1p_series(inner))


def _lift_index(n: int, ordinal: int) -> MultiIndex:
    from .series import index_of_ordinal
    return index_of_ordinal(n, ordinal) + (0,)


def fbh_diastasis(n: int, m: int, mu: RationalLike, nu: RationalLike,
                  degree: int) -> BiSeries:
    """nu mu ||z||^2 - log(e^{-mu ||z||^2} - ||w||^2), z in C^n, w in C^m."""
    mu = as_fraction(mu)
    nu = as_fraction(nu)
    if mu <= 0:
        raise ValueError("mu must be positive")
    if nu <= -1:
        raise ValueError("nu must exceed -1")
    total = n + m
    z2 = _rho(total, degree, 0, n)
    w2 = _rho(total, degree, n, total)
    inner = exp_series(z2.scale(CScalar(-mu))) \
        - BiSeries(total, degree, {(0, 0): CScalar(1)}) - w2
    phi = z2.scale(CScalar(nu * mu)) - log1p_series(inner)
    return normalize_to_diastasis(phi)


# ---------------------------------------------------------------------------
# cigar, Taub-NUT, tubular ODE metric
# ---------------------------------------------------------------------------

def cigar_diastasis(degree: int) -> BiSeries:
    """n=1 diagonal diastasis with entries (-1)^{j+1}/j^2 on |z|^{2j}."""
    coeffs = {(j, j): CScalar(Fraction((-1) ** (j + 1), j * j))
              for j in range(1, degree + 1)}
    return BiSeries(1, degree, coeffs)


def _diag_to_biseries(series: RSeries, degree: int) -> BiSeries:
    """Map a radial series in (x_1..x_n) = (|z_1|^2..) to a diagonal jet."""
    n = series.nvars
    coeffs: Dict[Tuple[int, int], CScalar] = {}
    for e, c in series.coeffs.items():
        if sum(e) == 0 or sum(e) > degree:
            continue
        j = ordinal_of_index(tuple(e))
        coeffs[(j, j)] = CScalar(c)
    return BiSeries(n, degree, coeffs)


def taubnut_potential(m: RationalLike, mode: str, degree: int) -> BiSeries:
    """Implicit Taub-NUT potential jet as a diagonal BiSeries.

    slice mode (second coordinate frozen at 0): invert x = t e^{2mt} for
    t(x) by a graded fixed point and return t + m t^2 in x = |z|^2.
    full mode: invert the coupled pair t = x1 e^{-2m(t-s)},
    s = x2 e^{-2m(s-t)} and return t + s + m(t^2 + s^2).
    """
    m = as_fraction(m)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if mode == "slice":
        x = RSeries.var(1, degree)

        def step(t: RSeries) -> RSeries:
            return x * t.scale(-2 * m).exp()

        t = solve_graded_fixed_point(step, RSeries.zero(1, degree), degree + 2)
        phi = t + (t * t).scale(m)
        return _diag_to_biseries(phi, degree)
    if mode == "full":
        x1 = RSeries.var(2, degree, 0)
        x2 = RSeries.var(2, degree, 1)

        def step2(ts: Tuple[RSeries, RSeries]) -> Tuple[RSeries, RSeries]:
            t, s = ts
            diff = t - s
            return (x1 * diff.scale(-2 * m).exp(),
                    x2 * diff.scale(2 * m).exp())

        seed = (RSeries.zero(2, degree), RSeries.zero(2, degree))
        t, s = solve_graded_fixed_point(step2, seed, degree + 2)
        phi = t + s + (t * t + s * s).scale(m)
        return _diag_to_biseries(phi, degree)
    raise ValueError(f"unknown mode {mode!r}; use 'slice' or 'full'")


def calabi_tube(n: int, degree: int) -> Tuple[RSeries, BiSeries]:
    """The tubular ODE metric: solve (y'/r)^{n-1} y'' = e^y, y(0)=0,
    y''(0)=1 as an even series in r, then assemble the diastasis jet.

    y is solved from the equivalent integral fixed point
        y'(r) = r * (n * int_0^1 s^{n-1} e^{y(rs)} ds)^{1/n},
    which determines one more degree per iteration.  The returned y is
    truncated at r-degree 2*degree (enough for the bidegree-(degree,degree)
    jet of the diastasis); d0 is the normalization of
    sum_k y^{(2k)}(0)/(2k)! * (sum_j (z_j + conj z_j)^2)^k.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rdeg = 2 * degree

    def step(y: RSeries) -> RSeries:
        e = y.exp()
        averaged = RSeries(1, rdeg, {
            (j,): c * Fraction(n, j + n) for (j,), c in e.coeffs.items()})
        body = averaged - RSeries.constant(1, rdeg, 1)
        root = body.pow1p(Fraction(1, n))
        return root.shift_up().integrate()

    y = solve_graded_fixed_point(step, RSeries.zero(1, rdeg), rdeg + 2)

    # (sum_j (z_j + conj z_j)^2) as a BiSeries, then sum_k c_{2k} P^k
    zero = (0,) * n
    p2 = BiSeries.zero(n, degree)
    for j in range(n):
        e2 = [0] * n
        e2[j] = 2
        p2 = p2 + BiSeries.term(n, degree, tuple(e2), zero, 1)
        p2 = p2 + BiSeries.term(n, degree, _unit(n, j), _unit(n, j), 2)
        p2 = p2 + BiSeries.term(n, degree, zero, tuple(e2), 1)
    acc = BiSeries.zero(n, degree)
    power = BiSeries(n, degree, {(0, 0): CScalar(1)})
    for k in range(1, degree + 1):
        power = power * p2
        if not power.coeffs:
            break
        ck = y.ucoeff(2 * k)
        if ck:
            acc = acc + power.scale(CScalar(ck))
    return y, normalize_to_diastasis(acc)


def calabi_tube_residual(n: int, y: RSeries) -> RSeries:
    """(y'/r)^{n-1} y'' - e^y; zero through y's degree minus 2."""
    yp = y.derivative()
    yp_over_r = RSeries(1, y.d, {(max(j - 1, 0),): c
                                 for (j,), c in yp.coeffs.items() if j >= 1})
    ypp = yp.derivative()
    if n == 1:
        lhs = ypp
    else:
        c0 = yp_over_r.constant_term()
        if c0 <= 0:
            raise ValueError("y'/r must start positive")
        body = yp_over_r.scale(Fraction(1) / c0) - RSeries.constant(1, y.d, 1)
        lhs = body.pow1p(n - 1).scale(c0 ** (n - 1)) * ypp
    return (lhs - y.exp()).truncate(max(y.d - 2, 0))


# ---------------------------------------------------------------------------
# fixed exercise potentials and profile functions
# ---------------------------------------------------------------------------

def phi_b_potential(degree: int) -> BiSeries:
    """The circular-domain exercise potential
    -3 log(1 - |z1|^2 - 2|z2|^2 - |z3|^2 + |z1|^2|z3|^2 + |z2|^4
           - z1 z3 conj(z2)^2 - z2^2 conj(z1) conj(z3))."""
    n = 3
    t = lambda mh, mk, c: BiSeries.term(n, degree, mh, mk, c)
    inner = (
        t((1, 0, 0), (1, 0, 0), -1)
        + t((0, 1, 0), (0, 1, 0), -2)
        + t((0, 0, 1), (0, 0, 1), -1)
        + t((1, 0, 1), (1, 0, 1), 1)
        + t((0, 2, 0), (0, 2, 0), 1)
        + t((1, 0, 1), (0, 2, 0), -1)
        + t((0, 2, 0), (1, 0, 1), -1)
    )
    return normalize_to_diastasis((-log1p_series(inner)).scale(3))


def profile_one_minus_x_pow(p: RationalLike, degree: int) -> RSeries:
    """F(x) = (1 - x)^p."""
    p = as_fraction(p)
    if p <= 0:
        raise ValueError("p must be positive")
    x = RSeries.var(1, degree)
    return (-x).pow1p(p)


def profile_inv_one_plus_x_pow(p: RationalLike, degree: int) -> RSeries:
    """F(x) = (x + 1)^(-p)."""
    p = as_fraction(p)
    if p <= 0:
        raise ValueError("p must be positive")
    x = RSeries.var(1, degree)
    return x.pow1p(-p)


def profile_alpha(alpha: RationalLike, degree: int) -> RSeries:
    """F(x) = alpha/(x + alpha) = (1 + x/alpha)^(-1)."""
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    x = RSeries.var(1, degree)
    return x.scale(Fraction(1) / alpha).pow1p(-1)


def profile_inv_sqrt(degree: int) -> RSeries:
    """F(x) = 1/sqrt(x + 1)."""
    return RSeries.var(1, degree).pow1p(Fraction(-1, 2))


def profile_springer(degree: int) -> RSeries:
    """F(x) = e^{-x}."""
    return (-RSeries.var(1, degree)).exp()


def profile_rhp_cubic(degree: int) -> RSeries:
    """F(x) = (x - 1)(x - 11/4)(x + 3/4), positive at 0."""
    x = RSeries.var(1, degree)
    one = RSeries.constant(1, degree, 1)
    f = (x - one) * (x - one.scale(Fraction(11, 4))) \
        * (x + one.scale(Fraction(3, 4)))
    return f


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModelSpec:
    name: str
    parameters: Mapping[str, RationalLike]
    degree: int


@dataclass(frozen=True)
class ModelEntry:
    build: Callable[..., BiSeries]
    schema: Mapping[str, str]
    doc: str


def _build_spaceform(degree: int, n: int = 1, b: RationalLike = 0,
                     scale: RationalLike = 1) -> BiSeries:
    return space_form_diastasis(int(n), b, degree).scale(
        CScalar(as_fraction(scale)))


def _build_hartogs(profile: Callable[..., RSeries], profile_params: Sequence[str]
                   ) -> Callable[..., BiSeries]:
    def build(degree: int, n: int = 2, scale: RationalLike = 1,
              **kwargs) -> BiSeries:
        args = [as_fraction(kwargs.get(p, 1)) for p in profile_params]
        F = profile(*args, degree)
        d = hartogs_diastasis(F, int(n), degree)
        return d.scale(CScalar(as_fraction(scale)))
    return build


MODELS: Dict[str, ModelEntry] = {
    "flat": ModelEntry(
        lambda degree, n=1, scale=1: _build_spaceform(degree, n, 0, scale),
        {"n": "arity", "scale": "rational > 0"},
        "flat diastasis sum |z_j|^2"),
    "cp": ModelEntry(
        lambda degree, n=1, scale=1: _build_spaceform(degree, n, 1, scale),
        {"n": "arity", "scale": "rational > 0"},
        "projective (Fubini-Study) diastasis log(1 + sum |z_j|^2)"),
    "ch": ModelEntry(
        lambda degree, n=1, scale=1: _build_spaceform(degree, n, -1, scale),
        {"n": "arity", "scale": "rational > 0"},
        "hyperbolic diastasis -log(1 - sum |z_j|^2)"),
    "spaceform": ModelEntry(
        _build_spaceform,
        {"n": "arity", "b": "curvature/4 rational", "scale": "rational > 0"},
        "space form of holomorphic sectional curvature 4b"),
    "springer": ModelEntry(
        _build_hartogs(lambda degree: profile_springer(degree), []),
        {"n": "arity", "scale": "rational > 0"},
        "Hartogs domain with profile F = e^{-x}"),
    "hartogs_one_minus_xp": ModelEntry(
        _build_hartogs(profile_one_minus_x_pow, ["p"]),
        {"n": "arity", "p": "rational > 0", "scale": "rational > 0"},
        "Hartogs domain with F = (1-x)^p"),
    "hartogs_inv_one_plus_xp": ModelEntry(
        _build_hartogs(profile_inv_one_plus_x_pow, ["p"]),
        {"n": "arity", "p": "rational > 0", "scale": "rational > 0"},
        "Hartogs domain with F = (x+1)^{-p}"),
    "hartogs_alpha": ModelEntry(
        _build_hartogs(profile_alpha, ["alpha"]),
        {"n": "arity", "alpha": "rational > 0", "scale": "rational > 0"},
        "Hartogs domain with F = alpha/(x+alpha)"),
    "hartogs_inv_sqrt": ModelEntry(
        _build_hartogs(lambda degree: profile_inv_sqrt(degree), []),
        {"n": "arity", "scale": "rational > 0"},
        "Hartogs domain with F = 1/sqrt(x+1)"),
    "rhp_cubic": ModelEntry(
        _build_hartogs(lambda degree: profile_rhp_cubic(degree), []),
        {"n": "arity", "scale": "rational > 0"},
        "Hartogs domain with the cubic profile (x-1)(x-11/4)(x+3/4)"),
    "phiB": ModelEntry(
        lambda degree, scale=1: phi_b_potential(degree).scale(
            CScalar(as_fraction(scale))),
        {"scale": "rational > 0"},
        "circular-domain exercise potential (3 variables)"),
    "cigar": ModelEntry(
        lambda degree, scale=1: cigar_diastasis(degree).scale(
            CScalar(as_fraction(scale))),
        {"scale": "rational > 0"},
        "cigar soliton diastasis, diagonal (-1)^{j+1}/j^2"),
    "taubnut_slice": ModelEntry(
        lambda degree, m=0, scale=1: taubnut_potential(m, "slice", degree)
        .scale(CScalar(as_fraction(scale))),
        {"m": "rational >= 0", "scale": "rational > 0"},
        "Taub-NUT potential restricted to the first coordinate"),
    "taubnut_full": ModelEntry(
        lambda degree, m=0, scale=1: taubnut_potential(m, "full", degree)
        .scale(CScalar(as_fraction(scale))),
        {"m": "rational >= 0", "scale": "rational > 0"},
        "full two-variable Taub-NUT potential"),
    "calabi_tube": ModelEntry(
        lambda degree, n=2, scale=1: calabi_tube(int(n), degree)[1].scale(
            CScalar(as_fraction(scale))),
        {"n": "arity", "scale": "rational > 0"},
        "tubular ODE metric diastasis"),
    "omega1": ModelEntry(
        lambda degree, m=1, n=1, scale=1: cartan_bergman_diastasis(
            "omega1", (int(m), int(n)), degree)[0].scale(
                CScalar(as_fraction(scale))),
        {"m": "rows", "n": "cols", "scale": "rational > 0"},
        "type-I domain Bergman diastasis (matrices m x n)"),
    "omega2": ModelEntry(
        lambda degree, n=2, scale=1: cartan_bergman_diastasis(
            "omega2", (int(n),), degree)[0].scale(CScalar(as_fraction(scale))),
        {"n": "size", "scale": "rational > 0"},
        "type-II (symmetric matrices) Bergman diastasis"),
    "omega3": ModelEntry(
        lambda degree, n=2, scale=1: cartan_bergman_diastasis(
            "omega3", (int(n),), degree)[0].scale(CScalar(as_fraction(scale))),
        {"n": "size", "scale": "rational > 0"},
        "type-III (antisymmetric matrices) Bergman diastasis"),
    "omega4": ModelEntry(
        lambda degree, n=3, scale=1: cartan_bergman_diastasis(
            "omega4", (int(n),), degree)[0].scale(CScalar(as_fraction(scale))),
        {"n": "size != 2", "scale": "rational > 0"},
        "type-IV (Lie ball) Bergman diastasis"),
    "cartan_hartogs": ModelEntry(
        lambda degree, base="omega1", m=1, n=1, mu=1, scale=1:
            cartan_hartogs_diastasis(
                minus_log_norm(str(base),
                               (int(m), int(n)) if str(base) == "omega1"
                               else (int(n),), degree),
                mu, degree).scale(CScalar(as_fraction(scale))),
        {"base": "omega1..omega4", "m": "rows (omega1)", "n": "size",
         "mu": "rational > 0", "scale": "rational > 0"},
        "Cartan-Hartogs diastasis -log(N^mu - |w|^2)"),
    "fbh": ModelEntry(
        lambda degree, n=1, m=1, mu=1, nu=0, scale=1: fbh_diastasis(
            int(n), int(m), mu, nu, degree).scale(CScalar(as_fraction(scale))),
        {"n": "z-arity", "m": "w-arity", "mu": "rational > 0",
         "nu": "rational > -1", "scale": "rational > 0"},
        "Fock-Bargmann-Hartogs diastasis"),
}

HARTOGS_PROFILES: Dict[str, Tuple[Callable[..., RSeries], Tuple[str, ...]]] = {
    "hartogs_one_minus_xp": (profile_one_minus_x_pow, ("p",)),
    "hartogs_inv_one_plus_xp": (profile_inv_one_plus_x_pow, ("p",)),
    "hartogs_alpha": (profile_alpha, ("alpha",)),
    "hartogs_inv_sqrt": (profile_inv_sqrt, ()),
    "rhp_cubic": (profile_rhp_cubic, ()),
    "springer": (profile_springer, ()),
}


def build_model(name: str, parameters: Mapping[str, RationalLike],
                degree: int) -> BiSeries:
    """Construct a catalog model by name with validated parameters."""
    if name not in MODELS:
        raise KeyError(f"unknown model {name!r}; see the 'models' listing")
    entry = MODELS[name]
    return entry.build(degree, **dict(parameters))


def get_model(spec: ModelSpec) -> BiSeries:
    return build_model(spec.name, spec.parameters, spec.degree)


def hartogs_profile(name: str, parameters: Mapping[str, RationalLike],
                    degree: int) -> RSeries:
    """The univariate profile F behind a Hartogs-family model."""
    if name not in HARTOGS_PROFILES:
        raise KeyError(f"model {name!r} has no radial profile")
    fn, param_names = HARTOGS_PROFILES[name]
    args = [as_fraction(parameters[p]) for p in param_names]
    return fn(*args, degree)
