"""Command-line interface.

Exit codes: 0 success, 1 verification or constraint failure, 2 usage error.
Complex values are written ``a+bi`` (``i`` and ``j`` both accepted, a bare
``i`` means 1j) or in polar form ``r@theta`` with theta in radians.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import gates as gates_mod
from .archive import format_manifest, format_report, read_matrix, write_manifest, write_matrix
from .clifford import VARIANTS, CliffordCoeffs, case1_eigenvalues, clifford_tetra, constraint_residual, solve_constraints
from .errors import CommutantError, ConstraintError, ConvergenceError, DimensionError, FormatError, SingularMatrixError
from .hietarinta import ALIASES, ROWS, UnitaryFamilyPoint, catalog, family_eigenvalues, unitary_family
from .simplex import BUILTIN_RELATIONS, check_relation, tetra_vertex
from .unitary import certify, spectrum, spectrum_distance

RELATION_ALIASES = {
    "vertex-tetra": "tetra-vertex", "tetra": "tetra-vertex", "edge-tetra": "tetra-edge",
    "anti-tetra-vertex": "anti-tetra", "anti-4simplex": "anti4", "ybe": "ybe-braided",
}
VERIFY_RELATIONS = ("tetra-vertex", "tetra-edge", "anti-tetra", "ybe-braided", "ybe-vertex",
                    "4simplex", "anti4", "5simplex")
SOLVE_TARGETS = ("clifford-case1",)


class UsageError(Exception):
    pass


def parse_complex(text):
    """``"1.5-2i"``, ``"i"``, ``"-j"``, ``"3"`` or polar ``"2@0.5"``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex value")
    if "@" in s:
        r, theta = s.split("@", 1)
        return complex(float(r) * np.exp(1j * float(theta)))
    return complex(s.replace("i", "j"))


def parse_params(text):
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"parameter {item!r} is not key=value")
        try:
            out[key.strip()] = parse_complex(value)
        except ValueError as exc:
            raise UsageError(f"bad value for {key.strip()!r}: {value!r}") from exc
    return out


def _real(params, name):
    v = params[name]
    if abs(v.imag) > 0:
        raise UsageError(f"{name} must be real")
    return v.real


def _emit(text, out=None):
    (out or sys.stdout).write(text)


def _fmt_eigs(ev):
    return " ".join(f"{z.real:.12g}{z.imag:+.12g}i" for z in ev)


# -- verbs ---------------------------------------------------------------

def cmd_catalog(args):
    recs = catalog()
    if args.kind == "unitary":
        recs = [r for r in recs if r.kind == "unitary"]
    _emit(format_manifest(recs))
    return 0


def cmd_export(args):
    recs = catalog()
    if args.kind == "unitary":
        recs = [r for r in recs if r.kind == "unitary"]
    if args.out:
        write_manifest(recs, args.out)
        _emit(f"wrote {len(recs)} records to {args.out}\n")
    else:
        _emit(format_manifest(recs))
    return 0


def _resolve_family(name):
    key = name.strip().lower()
    placement = None
    for pl in ("ym", "my"):
        if key.endswith("-" + pl):
            key, placement = key[:-3], pl.upper()
    key = ALIASES.get(key, key)
    if key.startswith("row"):
        try:
            row = int(key[3:])
        except ValueError:
            row = None
        if row == 1 or row in ROWS:
            return row, placement
    raise UsageError(f"unknown family {name!r}")


def _build_row1(params, variant, tol):
    names = ("alpha0", "alpha1", "alpha2", "alpha3")
    missing = [n for n in names if n not in params]
    if missing:
        raise UsageError(f"row1 needs parameters {missing}")
    c = CliffordCoeffs(tuple(params[n] for n in names), variant)
    res = constraint_residual(c)
    labels = ("bilinear1=0", "bilinear2=0", "bilinear3=0", "sum|alpha|^2=1")
    for lab, r in zip(labels, res):
        if r > tol:
            raise ConstraintError(lab, float(r))
    return clifford_tetra(c), case1_eigenvalues(c), dict(zip(labels, map(float, res)))


def cmd_build(args):
    row, placement = _resolve_family(args.family)
    params = parse_params(args.params)
    placement = placement or args.placement
    tol = args.tol
    try:
        if row == 1:
            variant = placement if placement in VARIANTS else "BBB_AAB"
            T, ev, cert = _build_row1(params, variant, 1e-12)
            fid = "row1"
        else:
            if placement not in ("YM", "MY"):
                raise UsageError("placement must be YM or MY for rows 2-7")
            qs = [params.pop(n, None) for n in ("q1", "q2", "q3", "q4")]
            if any(q is not None for q in qs):
                Q = np.array([1 if q is None and n in (0, 3) else (q or 0) for n, q in enumerate(qs)],
                             dtype=complex).reshape(2, 2)
            else:
                Q = np.eye(2, dtype=complex)
            kappa = params.pop("kappa", 1.0)
            for n in ("thetap", "thetaq"):
                if n in params:
                    params[n] = _real(params, n)
            pt = UnitaryFamilyPoint(row, placement, 1 if args.branch == "+" else -1, params, Q, kappa)
            T, cert = unitary_family(pt)
            ev = family_eigenvalues(pt)
            fid = pt.family_id
    except ConstraintError as exc:
        _emit(f"error: {exc}\n", sys.stderr)
        return 1
    except (SingularMatrixError, CommutantError) as exc:
        _emit(f"error: {exc}\n", sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    rep = certify(T, tol)
    tv = tetra_vertex(T)
    eig_gap = spectrum_distance(spectrum(T), ev)
    ok = rep.is_unitary and tv <= tol and eig_gap <= tol
    items = {"family": fid, "unitarity_residual": rep.residual_RRdag,
             "eigen_moduli_max_dev": rep.eigen_moduli_max_dev,
             "tetra_vertex": tv, "eigenvalue_formula_gap": eig_gap,
             "eigenvalues": _fmt_eigs(spectrum(T)),
             "formula_eigenvalues": _fmt_eigs(np.sort_complex(ev))}
    items.update({f"constraint {k}": float(v) for k, v in cert.items()})
    items["status"] = "ok" if ok else "FAIL"
    _emit(format_report(items))
    if args.out:
        write_matrix(T, args.out)
    return 0 if ok else 1


def cmd_verify(args):
    name = RELATION_ALIASES.get(args.relation, args.relation)
    if name not in VERIFY_RELATIONS:
        raise UsageError(f"unknown relation {args.relation!r}; choose from {', '.join(VERIFY_RELATIONS)}")
    rel = BUILTIN_RELATIONS[name]
    try:
        R = read_matrix(args.input)
    except (OSError, FormatError) as exc:
        _emit(f"error: {exc}\n", sys.stderr)
        return 1
    mode = args.mode or ("matrix-free" if name == "5simplex" else "dense")
    if name == "5simplex" and mode != "matrix-free":
        raise UsageError("5simplex supports matrix-free mode only")
    tol = args.tol if args.tol is not None else (1e-8 if mode == "matrix-free" else 1e-10)
    slot = rel.slot_ids()[0]
    try:
        res = check_relation(rel, {slot: R}, mode=mode, probes=args.probes, seed=args.seed)
    except DimensionError as exc:
        _emit(f"error: {exc}\n", sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    items = {"relation": name, "mode": mode, "residual": float(res), "tolerance": float(tol)}
    if mode == "matrix-free":
        items["probes"] = args.probes
        items["seed"] = args.seed
    items["status"] = "ok" if res <= tol else "FAIL"
    _emit(format_report(items))
    return 0 if res <= tol else 1


def cmd_gate(args):
    params = parse_params(args.params)
    sites = tuple(int(s) for s in args.sites.split(","))
    fn = gates_mod.GATES[args.name]
    need = gates_mod.GATE_PARAMS.get(args.name, ())
    extra = set(params) - set(need)
    if extra:
        raise UsageError(f"gate {args.name} takes no parameters {sorted(extra)}")
    defaults = {"phi": np.pi / 2, "psi": -np.pi / 2, "lambda": 0.0}
    vals = [_real(params, n) if n in params else defaults[n] for n in need]
    try:
        recipe = fn(*vals, sites=sites)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = gates_mod.verify(recipe, args.tol)
    items = report.items()
    items["labels"] = " ".join(recipe.labels)
    text = format_report(items)
    _emit(text)
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        write_matrix(gates_mod.compose(recipe), out / "composed.smat")
        write_matrix(recipe.target, out / "target.smat")
        for n, f in enumerate(recipe.factors):
            write_matrix(f.op, out / f"factor{n}.smat")
        (out / "report.txt").write_text(text)
    return 0 if report.passed else 1


def cmd_solve(args):
    try:
        c, info = solve_constraints(seed=args.seed, max_iter=args.max_iter, tol=args.tol,
                                    variant=args.variant, full_output=True)
    except ConvergenceError as exc:
        _emit(f"error: {exc}\n", sys.stderr)
        return 1
    res = constraint_residual(c)
    items = {f"alpha{n}": f"{a.real:.17g}{a.imag:+.17g}i" for n, a in enumerate(c.alpha)}
    items.update({f"constraint{n + 1}": float(r) for n, r in enumerate(res)})
    items["evaluations"] = info["nfev"]
    items["status"] = "ok"
    _emit(format_report(items))
    return 0


# -- parser ----------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="tetrasimplex",
        description="Build and verify tetrahedron and higher-simplex operators.",
        epilog="Complex values: a+bi (bare i allowed) or polar r@theta (radians).")
    sub = p.add_subparsers(dest="verb", required=True)

    cat = sub.add_parser("catalog", help="list catalog records")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    lst = cat_sub.add_parser("list")
    lst.add_argument("--kind", choices=("unitary", "all"), default="all")
    lst.set_defaults(func=cmd_catalog)

    b = sub.add_parser("build", help="construct and certify a unitary family point")
    b.add_argument("--family", required=True, help="row1..row7, optionally -YM/-MY, or an alias")
    b.add_argument("--params", default="", help="k=v,... e.g. p=i,q=-1,r=1,q1=1,q4=2@0.3")
    b.add_argument("--placement", default="YM", choices=("YM", "MY") + VARIANTS)
    b.add_argument("--branch", default="+", choices=("+", "-"))
    b.add_argument("--tol", type=float, default=1e-10)
    b.add_argument("--out", help="write the matrix in SIMPLEXMAT format")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check a stored matrix against a relation")
    v.add_argument("--relation", required=True, help=", ".join(VERIFY_RELATIONS))
    v.add_argument("--input", required=True)
    v.add_argument("--mode", choices=("dense", "matrix-free"))
    v.add_argument("--probes", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gate", help="synthesize a gate from tetrahedron factors")
    g.add_argument("name", choices=tuple(gates_mod.GATES))
    g.add_argument("--params", default="", help="phi=..,psi=.. or lambda=..")
    g.add_argument("--sites", default="1,2,3")
    g.add_argument("--tol", type=float, default=1e-10)
    g.add_argument("--emit", help="directory for SIMPLEXMAT files and the report")
    g.set_defaults(func=cmd_gate)

    s = sub.add_parser("solve", help="numerically solve coefficient constraints")
    s.add_argument("target", choices=SOLVE_TARGETS)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--max-iter", type=int, default=200)
    s.add_argument("--variant", choices=VARIANTS, default="BBB_AAB")
    s.set_defaults(func=cmd_solve)

    e = sub.add_parser("export", help="write the catalog manifest")
    e.add_argument("--kind", choices=("unitary", "all"), default="all")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        _emit(f"{parser.prog}: error: {exc}\n", sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
