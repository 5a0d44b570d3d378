"""Command-line front end: ``aql <command> --quiver PATH ...``.

Reports are canonical JSON on standard output. Exit codes: 0 success,
1 validation or parse error, 2 budget or cutoff exceeded, 3 internal failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from . import frenkel_kac as fk
from .cache import ReportCache, TaskDescriptor, canonical_json, sha256
from .catalog import NAMED
from .errors import (
    BudgetExceeded,
    CutoffExceeded,
    ParseError,
    UnknownCommand,
    ValidationError,
)
from .hall import RepTemplate, ad_power, hall_euler_characteristic, simple_characteristic, type_representative, types_at
from .kac import kac_polynomial
from .preprojective import DoubleRep, doubled, expected_lift_dim, is_nilpotent, is_pi_rep
from .preprojective import is_rho_fixed, lift_space, moment_map, nilpotent_lifts, radical_chain
from .quiver import Quiver, build_quiver, cartan_matrix, euler_form, pairing, symmetrized_form, tits_form
from .reps import DEFAULT_REP_BUDGET, FFRep, class_table, is_indecomposable
from .roots import INFINITE, affine_data, classify_root, coxeter_matrix, coxeter_orbit
from .roots import defect, enumerate_positive_roots, reflection_product_matrix, tube_skeleton
from .stability import canonical_weight, is_generic, regular_weight, stability_status

EXIT_OK, EXIT_VALIDATION, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3


# ---------------------------------------------------------------------------
# input parsing

def load_quiver_spec(path) -> Quiver:
    """Read ``{"vertices": [...], "arrows": [{"id", "src", "dst"}, ...]}``."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise ParseError(f"{path}: expected an object with a 'vertices' list")
    arrows = data.get("arrows", [])
    if not isinstance(arrows, list):
        raise ParseError(f"{path}: 'arrows' must be a list")
    for v in data["vertices"]:
        if not isinstance(v, str):
            raise ParseError(f"{path}: vertex ids are strings, got {v!r}")
    triples = []
    for a in arrows:
        if not isinstance(a, dict) or not all(isinstance(a.get(k), str) for k in ("id", "src", "dst")):
            raise ParseError(f"{path}: arrows need string 'id', 'src' and 'dst', got {a!r}")
        triples.append((a["id"], a["src"], a["dst"]))
    return build_quiver(data["vertices"], triples)


def resolve_quiver(spec: str) -> Quiver:
    """A path to a quiver file, or one of the built-in names."""
    if os.path.exists(spec):
        return load_quiver_spec(spec)
    if spec in NAMED:
        q = NAMED[spec]()
        # re-key to string ids so reports look the same as for files
        return build_quiver(
            [str(v) for v in q.vertices], [(str(a.id), str(a.src), str(a.dst)) for a in q.arrows]
        )
    raise ParseError(f"no quiver file or built-in quiver named {spec!r}")


def parse_csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from exc


def vertex_lookup(q: Quiver, name: str):
    for v in q.vertices:
        if str(v) == name:
            return v
    raise ValidationError(f"unknown vertex {name!r}")


def parse_fk_key(q: Quiver, text: str):
    """``e:1,0`` for a real root vector, ``a:M:VERTEX`` for alpha_vertex(M)."""
    kind, _, rest = text.partition(":")
    if kind == "e":
        v = parse_csv_ints(rest)
        q.check(v)
        return fk.RealKey(v)
    if kind == "a":
        m, _, vertex = rest.partition(":")
        return fk.ImagKey(int(m), q.index[vertex_lookup(q, vertex)])
    raise ParseError(f"cannot parse basis key {text!r}")


def _rep_from_json(q: Quiver, obj: dict, p: int) -> FFRep:
    try:
        return FFRep.from_dict(q, tuple(obj["dim"]), p, obj.get("maps", {}))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad representation record {obj!r}") from exc


def _template_from_json(q: Quiver, obj: dict) -> RepTemplate:
    try:
        return RepTemplate.make(q, obj["dim"], obj.get("maps", {}))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad representation record {obj!r}") from exc


def _read_json(path: str):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


# ---------------------------------------------------------------------------
# commands; each returns a JSON-ready dict

def _dim(q: Quiver, args, default=None):
    dims = args.dim or []
    if not dims:
        if default is None:
            raise ValidationError("--dim is required")
        return default
    v = parse_csv_ints(dims[0])
    q.check(v)
    if any(x < 0 for x in v):
        raise ValidationError("dimension vectors are non-negative")
    return v


def _primes(args, default=(2, 3)) -> tuple[int, ...]:
    return parse_csv_ints(args.primes) if args.primes else default


def _root_json(r) -> dict:
    return {
        "vector": list(r.vector),
        "real": r.is_real,
        "imaginary": r.is_imaginary,
        "regular": r.is_regular,
        "level": r.level,
        "multiplicity": r.multiplicity,
    }


def cmd_forms(q: Quiver, args) -> dict:
    dims = [parse_csv_ints(d) for d in (args.dim or [])]
    out = {"euler_matrix": q.euler_matrix, "cartan_matrix": cartan_matrix(q)}
    if dims:
        a = dims[0]
        b = dims[1] if len(dims) > 1 else a
        q.check(a, b)
        out.update(
            alpha=list(a),
            beta=list(b),
            euler=euler_form(q, a, b),
            euler_reversed=euler_form(q, b, a),
            symmetrized=symmetrized_form(q, a, b),
            tits_alpha=tits_form(q, a),
            tits_beta=tits_form(q, b),
        )
    return out


def cmd_affine_info(q: Quiver, args) -> dict:
    d = affine_data(q)
    return {
        "type": d.affine_type,
        "delta": list(d.delta),
        "extending_vertices": [str(v) for v in d.extending_vertices],
        "n": d.n,
        "acyclic": d.acyclic,
    }


def cmd_roots(q: Quiver, args) -> dict:
    bound = _dim(q, args, affine_data(q).delta)
    roots = enumerate_positive_roots(q, bound)
    return {"bound": list(bound), "count": len(roots), "roots": [_root_json(r) for r in roots]}


def cmd_coxeter(q: Quiver, args) -> dict:
    cox = coxeter_matrix(q)
    out = {"matrix": cox.matrix, "reflection_product": reflection_product_matrix(q)}
    if args.dim:
        a = _dim(q, args)
        orbit = coxeter_orbit(q, a)
        out["alpha"] = list(a)
        out["defect"] = defect(q, a)
        out["orbit"] = INFINITE if orbit == INFINITE else [list(e) for e in orbit.elements]
        r = classify_root(q, a)
        out["root"] = None if r is None else _root_json(r)
    return out


def cmd_tubes(q: Quiver, args) -> dict:
    periods = tube_skeleton(q)
    n = affine_data(q).n
    return {"periods": periods, "n": n, "identity_holds": sum(p - 1 for p in periods) == n - 1}


def _fk_config(args) -> fk.FKConfig:
    return fk.FKConfig(
        cocycle=args.cocycle,
        pairing_variant=args.variant,
        level_cutoff=args.cutoff,
        mixed_sign=args.mixed_sign,
    )


def cmd_fk_verify(q: Quiver, args) -> dict:
    alg = fk.FKAlgebra(q, _fk_config(args))
    report = fk.verify_jacobi(alg)
    grades = sorted({alg.grade(k) for k in alg.basis})
    report["graded_dimensions"] = [
        {"grade": list(g), "expected": fk.graded_dimension(q, g), "basis": len(alg.keys_at(g))} for g in grades
    ]
    report["antisymmetry_failures"] = [list(x) for x in fk.verify_antisymmetry(alg)]
    report["serre"] = fk.verify_serre(alg)
    twist = fk.twist_isomorphism_check(q, args.cutoff, alg.cfg)
    twist["failures"] = [list(x) for x in twist["failures"]]
    report["twist"] = twist
    report["config"] = alg.cfg.to_json()
    return report


def cmd_fk_bracket(q: Quiver, args) -> dict:
    if not args.x or not args.y:
        raise ValidationError("--x and --y are required")
    alg = fk.FKAlgebra(q, _fk_config(args))
    x, y = parse_fk_key(q, args.x), parse_fk_key(q, args.y)
    res = alg.bracket(x, y)
    terms = sorted(res.items(), key=lambda kv: fk._sort_key(kv[0]))
    return {
        "x": fk.key_label(x, q),
        "y": fk.key_label(y, q),
        "result": [{"key": fk.key_label(k, q), "coefficient": v} for k, v in terms],
        "config": alg.cfg.to_json(),
    }


def cmd_kac(q: Quiver, args) -> dict:
    a = _dim(q, args)
    poly = kac_polynomial(q, a, _primes(args), budget=args.budget, jobs=args.jobs)
    out = poly.to_json()
    out["dim"] = list(a)
    return out


def cmd_hall(q: Quiver, args) -> dict:
    if not args.reps:
        raise ValidationError("--reps FILE with X, Y and Z records is required")
    data = _read_json(args.reps)
    X, Y, Z = (_template_from_json(q, data[k]) for k in ("X", "Y", "Z"))
    res = hall_euler_characteristic(X, Y, Z, _primes(args, (2, 3, 5)), args.budget)
    return res.to_json()


def _type_json(t) -> dict:
    dim, end, hom_in, hom_out = t
    return {"dim": list(dim), "end": end, "hom_from_simples": list(hom_in), "hom_to_simples": list(hom_out)}


def cmd_hall_chi(q: Quiver, args) -> dict:
    """(ad [S_i])^k [S_j] as a function on types, with k = 1 - c_ij by default."""
    if not args.vertices:
        raise ValidationError("--vertices I,J is required")
    names = [x.strip() for x in args.vertices.split(",")]
    if len(names) != 2:
        raise ValidationError("--vertices takes exactly two vertex ids")
    vi, vj = (vertex_lookup(q, n) for n in names)
    primes = _primes(args, (2, 3, 5))
    k = args.power
    if k is None:
        k = 1 - symmetrized_form(q, q.simple(vi), q.simple(vj))
    f = ad_power(simple_characteristic(q, vi, primes[0]), simple_characteristic(q, vj, primes[0]), k, primes, args.budget)
    dim = tuple(b + k * a for a, b in zip(q.simple(vi), q.simple(vj)))
    table = []
    for t in types_at(q, dim, primes[0], args.budget):
        rep = type_representative(q, dim, primes[0], t, args.budget)
        table.append({"type": _type_json(t), "value": f(t), "example": rep.to_json(), "indecomposable": is_indecomposable(rep)})
    table.sort(key=lambda e: canonical_json(e["type"]))
    return {"i": str(vi), "j": str(vj), "power": k, "dim": list(dim), "primes": list(primes), "values": table, "vanishes": f.is_zero()}


def _theta(q: Quiver, args, dim):
    if args.theta:
        t = parse_csv_ints(args.theta)
        q.check(t)
        return t
    if args.kind == "canonical":
        return canonical_weight(q, dim).theta
    return regular_weight(q).theta


def cmd_stability(q: Quiver, args) -> dict:
    a = _dim(q, args)
    theta = _theta(q, args, a)
    per_prime = {}
    for p in _primes(args):
        table = class_table(q, a, p, args.budget)
        classes = []
        tally = {"stable": 0, "semistable": 0, "unstable": 0}
        for k in range(len(table)):
            X = table.representative(k)
            verdict = stability_status(X, theta, args.budget)
            tally[verdict.status] += 1
            classes.append({"rep": X.to_json(), "orbit_size": table.sizes[k], **verdict.to_json()})
        per_prime[str(p)] = {"classes": classes, "counts": tally}
    return {"dim": list(a), "theta": list(theta), "primes": per_prime}


def cmd_generic(q: Quiver, args) -> dict:
    a = _dim(q, args)
    theta = _theta(q, args, a)
    return {"dim": list(a), "theta": list(theta), "generic": is_generic(q, theta, a)}


def cmd_pp_moment(q: Quiver, args) -> dict:
    if not args.reps:
        raise ValidationError("--reps FILE with a double-quiver representation is required")
    data = _read_json(args.reps)
    p = int(data.get("p", 2))
    rep = _rep_from_json(doubled(q).quiver, data, p)
    x = DoubleRep(q, rep)
    lam = parse_csv_ints(args.theta) if args.theta else None
    return {
        "p": p,
        "dim": list(x.dim),
        "moment_map": [m for m in moment_map(x)],
        "lambda": list(lam) if lam else None,
        "is_pi_rep": is_pi_rep(x, lam),
        "nilpotent": is_nilpotent(x),
        "radical_chain": [list(c) for c in radical_chain(x)],
        "rho_fixed": is_rho_fixed(x),
    }


def cmd_pp_lifts(q: Quiver, args) -> dict:
    a = _dim(q, args)
    theta = regular_weight(q).theta
    per_prime = {}
    for p in _primes(args):
        rows = []
        for k, X in enumerate(class_table(q, a, p, args.budget).representatives()):
            space = lift_space(X)
            row = {"rep": X.to_json(), "lift_space_dim": space.dim, "expected": expected_lift_dim(X)}
            if p**space.dim <= args.budget:
                row["nilpotent_lifts"] = nilpotent_lifts(X, args.budget).count
            if pairing(theta, a) == 0 and any(a):
                row["regular_stability"] = stability_status(X, theta, args.budget).status
            rows.append(row)
        per_prime[str(p)] = rows
    return {"dim": list(a), "primes": per_prime}


COMMANDS = {
    "forms": cmd_forms,
    "affine-info": cmd_affine_info,
    "roots": cmd_roots,
    "coxeter": cmd_coxeter,
    "tubes": cmd_tubes,
    "fk-verify": cmd_fk_verify,
    "fk-bracket": cmd_fk_bracket,
    "kac": cmd_kac,
    "hall": cmd_hall,
    "hall-chi": cmd_hall_chi,
    "stability": cmd_stability,
    "generic": cmd_generic,
    "pp-moment": cmd_pp_moment,
    "pp-lifts": cmd_pp_lifts,
}


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        if "invalid choice" in message:
            raise UnknownCommand(message)
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aql", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--quiver", required=True, help="quiver JSON file or a built-in name")
        sp.add_argument("--dim", action="append", help="dimension vector as CSV (repeat for two)")
        sp.add_argument("--primes", help="CSV list of primes")
        sp.add_argument("--cutoff", type=int, default=2)
        sp.add_argument("--variant", choices=[fk.SYMMETRIZED, fk.LITERAL], default=fk.SYMMETRIZED)
        sp.add_argument("--cocycle", choices=[fk.EPS, fk.EPS_STAR], default=fk.EPS)
        sp.add_argument("--mixed-sign", choices=[fk.SIGN_GRADE, fk.SIGN_CLASS], default=fk.SIGN_GRADE)
        sp.add_argument("--theta", help="weight (or lambda for pp-moment) as CSV")
        sp.add_argument("--kind", choices=["regular", "canonical"], default="regular")
        sp.add_argument("--budget", type=int, default=DEFAULT_REP_BUDGET)
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--cache-dir", default=os.environ.get("AQL_CACHE_DIR"))
        sp.add_argument("--reps", help="JSON file with representation records")
        sp.add_argument("--vertices", help="two vertex ids, CSV")
        sp.add_argument("--power", type=int)
        sp.add_argument("--x")
        sp.add_argument("--y")
    return parser


# parameters that change results; --jobs and --cache-dir do not
_TASK_PARAMS = ("dim", "primes", "cutoff", "variant", "cocycle", "mixed_sign", "theta", "kind", "budget", "vertices", "power", "x", "y")


def task_descriptor(args, q: Quiver) -> TaskDescriptor:
    params = {k: getattr(args, k) for k in _TASK_PARAMS}
    if args.reps:
        params["reps_digest"] = sha256(canonical_json(_read_json(args.reps)))
    return TaskDescriptor(args.command, q.digest_payload(), params)


def execute_task(args) -> dict:
    if args.command not in COMMANDS:
        raise UnknownCommand(args.command)
    q = resolve_quiver(args.quiver)
    task = task_descriptor(args, q)

    def compute() -> dict:
        body = COMMANDS[args.command](q, args)
        return json.loads(
            canonical_json(
                {
                    "task": args.command,
                    "quiver_digest": sha256(canonical_json(q.digest_payload())),
                    "version": __version__,
                    "result": body,
                }
            )
        )

    if args.cache_dir:
        payload, _ = ReportCache(args.cache_dir).fetch_or_compute(task, compute)
        return payload
    return compute()


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        report = execute_task(args)
    except (BudgetExceeded, CutoffExceeded) as exc:
        print(canonical_json({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, FileNotFoundError) as exc:
        print(canonical_json({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # noqa: BLE001 - the exit-code contract covers everything else
        print(canonical_json({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(canonical_json(report, indent=2) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
