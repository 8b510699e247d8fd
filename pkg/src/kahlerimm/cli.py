"""Command-line front end: JSON certificates for every decision path.

All mathematically load-bearing parameters are exact rationals given as
``p/q`` strings; floats appear only in clearly labeled report fields.
Exit codes: 0 = pass/resolvable-up-to, 1 = certified negative verdict,
2 = input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple

from . import bell as bellmod
from .diastasis import b_transform, normalize_to_diastasis
from .einstein import EinsteinResult, GaugeError, NotEinstein, einstein_estimate
from .immersion import ImmersionMap, NotResolvableError, factor_immersion, \
    verify_immersion
from .models import HARTOGS_PROFILES, MODELS, build_model, hartogs_profile
from .resolvability import CertifiedNotResolvable, HartogsWitness, \
    MatrixWitness, ResolvableUpTo, build_matrix, hartogs_criterion, \
    resolvability
from .scalars import CScalar, as_fraction, format_fraction
from .series import BiSeries, index_of_ordinal
from .symmetric import DomainInvariants, bergman_scaling_decision, \
    cartan_hartogs_failure, classical_invariants, wallach_membership

SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


def _emit(obj: Dict[str, Any]) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _parse_params(pairs: Optional[List[str]]) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for item in pairs or []:
        if "=" not in item:
            raise InputError(f"--param needs key=value, got {item!r}")
        key, value = item.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _load_source(args) -> Tuple[Dict[str, Any], BiSeries]:
    """Resolve --model/--spec/--series into (source descriptor, series)."""
    degree = args.degree
    chosen = [x for x in ("model", "spec", "series")
              if getattr(args, x, None) is not None]
    if len(chosen) != 1:
        raise InputError("exactly one of --model, --spec, --series required")
    if args.model is not None:
        params = _parse_params(getattr(args, "param", None))
        if getattr(args, "n", None) is not None:
            params["n"] = str(args.n)
        if getattr(args, "scale", None) is not None:
            params["scale"] = args.scale
        try:
            series = build_model(args.model, params, degree)
        except KeyError as exc:
            raise InputError(str(exc)) from exc
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad parameters for {args.model}: {exc}") from exc
        return {"kind": "model", "model": args.model,
                "parameters": dict(sorted(params.items()))}, series
    if args.spec is not None:
        try:
            with open(args.spec, "r", encoding="utf-8") as fh:
                spec = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read spec file: {exc}") from exc
        name = spec.get("name")
        params = {k: str(v) for k, v in spec.get("parameters", {}).items()}
        degree = int(spec.get("degree", degree))
        try:
            series = build_model(name, params, degree)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad model spec: {exc}") from exc
        return {"kind": "model", "model": name,
                "parameters": dict(sorted(params.items()))}, series
    try:
        with open(args.series, "r", encoding="utf-8") as fh:
            text = fh.read()
        series = BiSeries.loads(text, degree=None)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read series file: {exc}") from exc
    if series.d < degree:
        raise InputError(
            f"series file holds degree {series.d} < requested {degree}")
    return {"kind": "series", "series": series.dumps()}, series


# ---------------------------------------------------------------------------
# JSON renderings
# ---------------------------------------------------------------------------

def _witness_json(witness) -> Dict[str, Any]:
    if isinstance(witness, MatrixWitness):
        return {
            "type": "matrix",
            "basis": [list(m) for m in witness.basis],
            "components": [c.format() for c in witness.components],
            "value": format_fraction(witness.value),
        }
    if isinstance(witness, HartogsWitness):
        return {
            "type": "hartogs",
            "j": witness.j,
            "k": witness.k,
            "coefficient": format_fraction(witness.coefficient),
        }
    raise TypeError(f"unknown witness {witness!r}")


def _verdict_json(verdict) -> Dict[str, Any]:
    if isinstance(verdict, ResolvableUpTo):
        return {"verdict": "resolvable-up-to", "degree": verdict.degree,
                "rank": verdict.rank, "witness": None}
    if isinstance(verdict, CertifiedNotResolvable):
        return {"verdict": "certified-not-resolvable",
                "degree": verdict.degree,
                "rank": None, "witness": _witness_json(verdict.witness)}
    return {"verdict": "certified-resolvable", "degree": None,
            "rank": verdict.rank, "witness": None}


def _immersion_json(imm: ImmersionMap) -> Dict[str, Any]:
    comps = []
    for comp in imm.components:
        series = []
        for j in sorted(comp.series.coeffs):
            c = comp.series.coeffs[j]
            series.append({
                "m": list(index_of_ordinal(comp.series.n, j)),
                "re": format_fraction(c.re),
                "im": format_fraction(c.im),
            })
        comps.append({
            "sign": comp.sign,
            "radicand": format_fraction(comp.radicand),
            "series": series,
        })
    target: Dict[str, Any] = {"kind": imm.target.kind}
    if imm.target.b is not None:
        target["b"] = format_fraction(imm.target.b)
    return {"target": target, "degree": imm.degree, "arity": imm.arity,
            "components": comps}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_analyze(args) -> int:
    source, series = _load_source(args)
    b = as_fraction(args.b)
    doc: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind": "certificate",
        "source": source,
        "b": format_fraction(b),
        "degree": args.degree,
    }
    if args.jmax is not None or args.kmax is not None or args.c is not None:
        if args.model not in HARTOGS_PROFILES:
            raise InputError(
                "--c/--jmax/--kmax apply only to radial Hartogs profiles: "
                + ", ".join(sorted(HARTOGS_PROFILES)))
        if args.c is None:
            raise InputError("the profile criterion needs --c")
        jmax = args.jmax if args.jmax is not None else args.degree
        kmax = args.kmax if args.kmax is not None else args.degree
        params = _parse_params(args.param)
        F = hartogs_profile(args.model, params, max(jmax, 1))
        verdict = hartogs_criterion(F, as_fraction(args.c), jmax, kmax)
        doc["criterion"] = "hartogs"
        doc["c"] = format_fraction(as_fraction(args.c))
        doc["jmax"] = jmax
        doc["kmax"] = kmax
    else:
        verdict = resolvability(series, b, args.degree)
        doc["criterion"] = "matrix"
    doc.update(_verdict_json(verdict))
    _emit(doc)
    return 1 if isinstance(verdict, CertifiedNotResolvable) else 0


def _cmd_emit_immersion(args) -> int:
    source, series = _load_source(args)
    b = as_fraction(args.b)
    base = {
        "schema_version": SCHEMA_VERSION,
        "source": source,
        "b": format_fraction(b),
        "degree": args.degree,
    }
    try:
        imm = factor_immersion(series, b, args.degree)
    except NotResolvableError as exc:
        doc = dict(base)
        doc["kind"] = "certificate"
        doc["criterion"] = "matrix"
        doc.update(_verdict_json(
            CertifiedNotResolvable(args.degree, exc.witness)))
        _emit(doc)
        return 1
    check = verify_immersion(imm, series, b, args.degree)
    if not check.ok:  # pragma: no cover - internal soundness guard
        raise AssertionError(f"emitted map failed verification: {check}")
    doc = dict(base)
    doc["kind"] = "immersion"
    doc.update(_immersion_json(imm))
    doc["verified"] = True
    _emit(doc)
    return 0


def _cmd_wallach(args) -> int:
    if args.domain is not None:
        sizes = tuple(int(s) for s in args.sizes.split(",")) if args.sizes \
            else ()
        inv = classical_invariants(args.domain, *sizes)
    else:
        if args.r is None or args.a is None or args.gamma is None:
            raise InputError("need --domain or all of --r/--a/--gamma")
        inv = DomainInvariants(args.r, as_fraction(args.a), args.gamma,
                               args.dim)
    c = as_fraction(args.c)
    doc: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind": "wallach",
        "invariants": {"r": inv.rank, "a": format_fraction(inv.a),
                       "gamma": inv.genus, "dim": inv.dim},
        "c": format_fraction(c),
    }
    if args.mu is not None:
        mu = as_fraction(args.mu)
        failing = cartan_hartogs_failure(inv, mu, c)
        doc["mu"] = format_fraction(mu)
        doc["decision"] = failing is None
        doc["failing_m"] = failing
    else:
        membership = wallach_membership(inv, c * inv.genus)
        doc["decision"] = bergman_scaling_decision(inv, c)
        doc["membership"] = {"class": membership.kind, "k": membership.k}
    _emit(doc)
    return 0 if doc["decision"] else 1


def _cmd_cigar(args) -> int:
    c = as_fraction(args.c)
    scan = bellmod.cigar_scan(c, args.nmax)
    limit = bellmod.cigar_limit(c, args.terms)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "cigar",
        "c": format_fraction(c),
        "n_max": args.nmax,
        "first_negative_n": scan.first_negative_n,
        "y_value": None if scan.y_value is None
        else format_fraction(scan.y_value),
        "coefficient": None if scan.coefficient is None
        else format_fraction(scan.coefficient),
        "limit": {
            "partial_sum": format_fraction(limit.partial_sum),
            "pi2_over_6_enclosure": [format_fraction(limit.enclosure[0]),
                                     format_fraction(limit.enclosure[1])],
            "float_value": limit.float_value,
        },
    }
    _emit(doc)
    return 1 if scan.first_negative_n is not None else 0


def _cmd_bell(args) -> int:
    xs = [as_fraction(t) for t in args.x.split(",")] if args.x else []
    if args.k is not None:
        value = bellmod.bell_partial(args.n, args.k, xs)
        which = f"B({args.n},{args.k})"
    else:
        value = bellmod.bell_complete(args.n, xs)
        which = f"Y({args.n})"
    _emit({"schema_version": SCHEMA_VERSION, "kind": "bell",
           "polynomial": which, "value": format_fraction(value)})
    return 0


def _cmd_einstein(args) -> int:
    params = _parse_params(args.param)
    model = args.model
    if args.b is not None:
        if model in ("flat", "cp", "ch", "spaceform"):
            model = "spaceform"
            params["b"] = args.b
        else:
            raise InputError("--b selects a space-form curvature only")
    if args.n is not None:
        params["n"] = str(args.n)
    try:
        series = build_model(model, params, args.degree)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    doc: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind": "einstein",
        "model": model,
        "parameters": dict(sorted(params.items())),
        "degree": args.degree,
    }
    try:
        result = einstein_estimate(series, args.degree)
    except GaugeError as exc:
        raise InputError(str(exc)) from exc
    if isinstance(result, EinsteinResult):
        doc["lambda"] = format_fraction(result.lam)
        doc["flat"] = result.flat
        _emit(doc)
        return 0
    assert isinstance(result, NotEinstein)
    doc["not_einstein_at"] = {
        "m_j": list(result.location[0]),
        "m_k": list(result.location[1]),
        "got": result.got.format(),
        "want": result.want.format(),
    }
    _emit(doc)
    return 1


def _cmd_models(_args) -> int:
    listing = {}
    for name in sorted(MODELS):
        entry = MODELS[name]
        listing[name] = {"doc": entry.doc,
                         "parameters": dict(entry.schema)}
    _emit({"schema_version": SCHEMA_VERSION, "kind": "models",
           "models": listing})
    return 0


def _rebuild_from_source(source: Mapping[str, Any], degree: int) -> BiSeries:
    if source.get("kind") == "model":
        return build_model(source["model"], source.get("parameters", {}),
                           degree)
    if source.get("kind") == "series":
        return BiSeries.loads(source["series"], degree=None)
    raise InputError(f"unknown certificate source {source.get('kind')!r}")


def _cmd_check_certificate(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read certificate: {exc}") from exc
    kind = doc.get("kind")
    degree = int(doc["degree"])
    b = as_fraction(doc.get("b", "0"))
    if kind == "immersion":
        series = _rebuild_from_source(doc["source"], degree)
        imm = _immersion_from_json(doc)
        check = verify_immersion(imm, series, b, degree)
        _emit({"schema_version": SCHEMA_VERSION, "kind": "check",
               "file_kind": kind, "valid": check.ok})
        return 0 if check.ok else 1
    if kind == "certificate":
        if doc.get("verdict") != "certified-not-resolvable":
            _emit({"schema_version": SCHEMA_VERSION, "kind": "check",
                   "file_kind": kind, "valid": True,
                   "note": "nothing to re-validate for a positive verdict"})
            return 0
        witness = doc["witness"]
        if witness["type"] == "matrix":
            series = _rebuild_from_source(doc["source"], degree)
            transformed = b_transform(
                normalize_to_diastasis(series), b)
            matrix = build_matrix(transformed, degree)
            vec = [CScalar.parse(t) for t in witness["components"]]
            value = matrix.quadratic_form(vec)
            ok = (value < 0
                  and format_fraction(value) == witness["value"])
        elif witness["type"] == "hartogs":
            source = doc["source"]
            jmax = int(doc["jmax"])
            F = hartogs_profile(source["model"],
                                source.get("parameters", {}), max(jmax, 1))
            c = as_fraction(doc["c"])
            f0 = F.constant_term()
            from .radial import RSeries
            g = F.scale(Fraction(1) / f0) - RSeries.constant(1, F.d, 1)
            h = g.pow1p(-(c + int(witness["k"])))
            coeff = h.ucoeff(int(witness["j"]))
            ok = coeff < 0 and format_fraction(coeff) == witness["coefficient"]
        else:
            raise InputError(f"unknown witness type {witness['type']!r}")
        _emit({"schema_version": SCHEMA_VERSION, "kind": "check",
               "file_kind": kind, "valid": bool(ok)})
        return 0 if ok else 1
    raise InputError(f"unknown file kind {kind!r}")


def _immersion_from_json(doc: Mapping[str, Any]) -> ImmersionMap:
    from .immersion import Component, Target
    from .series import HolSeries, ordinal_of_index
    target = Target(doc["target"]["kind"],
                    as_fraction(doc["target"]["b"])
                    if "b" in doc["target"] else None)
    degree = int(doc["degree"])
    arity = int(doc["arity"])
    comps = []
    for comp in doc["components"]:
        coeffs = {}
        for term in comp["series"]:
            j = ordinal_of_index(tuple(term["m"]))
            coeffs[j] = CScalar(Fraction(term["re"]), Fraction(term["im"]))
        comps.append(Component(int(comp["sign"]),
                               as_fraction(comp["radicand"]),
                               HolSeries(arity, degree, coeffs)))
    return ImmersionMap(tuple(comps), target, degree, arity)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", help="catalog model name (see 'models')")
    p.add_argument("--spec", help="JSON model spec file")
    p.add_argument("--series", help="series text file (m_j ; m_k ; re ; im)")
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="model parameter (repeatable)")
    p.add_argument("--n", type=int, help="arity shortcut")
    p.add_argument("--scale", help="rational metric scale c")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kahlerimm",
        description="Exact truncated-series decisions for local Kahler "
                    "immersions into complex space forms")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="resolvability verdict + certificate")
    _add_source_args(p)
    p.add_argument("--b", default="0", help="target curvature parameter p/q")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--c", help="profile-criterion exponent (Hartogs models)")
    p.add_argument("--jmax", type=int, help="Hartogs criterion j bound")
    p.add_argument("--kmax", type=int, help="Hartogs criterion k bound")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("emit-immersion", help="explicit verified map")
    _add_source_args(p)
    p.add_argument("--b", default="0")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_emit_immersion)

    p = sub.add_parser("wallach", help="scaled-Bergman / Cartan-Hartogs "
                                       "projective-inducedness decision")
    p.add_argument("--r", type=int, help="domain rank")
    p.add_argument("--a", help="domain invariant a (rational)")
    p.add_argument("--gamma", type=int, help="genus")
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--domain", help="named domain kind omega1..omega4")
    p.add_argument("--sizes", help="comma-separated sizes for --domain")
    p.add_argument("--c", required=True, help="metric scale (rational)")
    p.add_argument("--mu", help="Cartan-Hartogs exponent (rational)")
    p.set_defaults(func=_cmd_wallach)

    p = sub.add_parser("cigar", help="cigar obstruction scan")
    p.add_argument("--c", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--terms", type=int, default=12)
    p.set_defaults(func=_cmd_cigar)

    p = sub.add_parser("bell", help="Bell polynomial values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--x", help="comma-separated rational arguments")
    p.set_defaults(func=_cmd_bell)

    p = sub.add_parser("einstein", help="Einstein-constant estimate")
    p.add_argument("--model", default="spaceform")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--n", type=int)
    p.add_argument("--b", help="space-form curvature parameter")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_einstein)

    p = sub.add_parser("models", help="list the model catalog")
    p.set_defaults(func=_cmd_models)

    p = sub.add_parser("check-certificate",
                       help="re-validate an emitted certificate/immersion")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check_certificate)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(json.dumps({"error": f"{type(exc).__name__}: {exc}"}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
