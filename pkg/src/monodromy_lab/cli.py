"""Batch driver.

Subcommands compute individual pipeline stages or run the full verification:

    monodromy-lab qcoh                 ring tables and the operators mu, R, U
    monodromy-lab period               quantum period coefficients
    monodromy-lab phitop --order N     matrix coefficients of the z=0 calibration
    monodromy-lab solutions --check-identities
    monodromy-lab stokes               S', P, S and extraction residuals
    monodromy-lab connection           C', C and extraction residuals
    monodromy-lab gamma                Gamma class, Chern characters, C_Gamma
    monodromy-lab euler-matrix         Euler pairings of the twisted collection
    monodromy-lab verify               full pipeline + braid search + constraints

Reports are single JSON documents (complex numbers as [re, im] pairs,
matrices row-major, rationals as {"num", "den"}); --pretty adds an aligned
text rendering of the matrices on stderr-free stdout.  Exit status: 0 when
all residuals are within tolerance, 1 on a tolerance failure (the failing
check is named in "failed_checks"), 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from monodromy_lab import braid, ktheory, reference, report as report_mod
from monodromy_lab.engine import get_engine
from monodromy_lab.monodromy import (
    connection_matrix,
    eval_Ytop,
    phi_top,
    stokes_matrix,
    verify_constraints,
)
from monodromy_lab.pipeline import (
    DEFAULT_TOLERANCES,
    RunConfig,
    config_dict,
    connection_points,
    run_verify,
    stokes_points,
)
from monodromy_lab.ring import operator_matrices, ring_tables
from monodromy_lab.solutions import (
    PHI1,
    PHI2,
    UCComplex,
    contour_eval,
    eval_series,
    identity_residuals,
    phi_series,
    quantum_period,
)


class ConfigError(ValueError):
    pass


def _parse_ucpoint(text):
    try:
        mod_s, arg_s = text.split(",")
        return UCComplex.polar(float(mod_s), float(arg_s))
    except Exception as exc:
        raise ConfigError(f"bad point spec {text!r}, expected MOD,ARG") from exc


def _parse_tols(pairs):
    out = {}
    for p in pairs or ():
        try:
            name, val = p.split("=")
            out[name] = float(val)
        except Exception as exc:
            raise ConfigError(f"bad tolerance {p!r}, expected NAME=VALUE") from exc
        if out[name] <= 0:
            raise ConfigError(f"tolerance {name} must be positive")
    return out


def build_parser():
    ap = argparse.ArgumentParser(prog="monodromy-lab", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("command", choices=[
        "qcoh", "period", "phitop", "solutions", "stokes", "connection",
        "gamma", "euler-matrix", "verify",
    ])
    ap.add_argument("--order", type=int, default=40,
                    help="series truncation order (default 40)")
    ap.add_argument("--z0-stokes", default=None, metavar="MOD,ARG",
                    help="base point for the Stokes extraction (default 2,pi/4)")
    ap.add_argument("--z0-connection", default=None, metavar="MOD,ARG",
                    help="base point for the connection extraction (default 0.1,pi/4)")
    ap.add_argument("--tol", action="append", metavar="NAME=VALUE",
                    help="override a named tolerance")
    ap.add_argument("--engine", choices=["double", "mp"], default=None,
                    help="scalar backend (default: mp for stokes/connection/verify, double otherwise)")
    ap.add_argument("--dps", type=int, default=40, help="mp engine digits (default 40)")
    ap.add_argument("--check-identities", action="store_true",
                    help="solutions: evaluate Euler/rotation identity residuals")
    ap.add_argument("--pretty", action="store_true",
                    help="append aligned matrix text to the JSON document")
    ap.add_argument("--output", default=None, help="write the JSON report to a file")
    return ap


def _engine_for(args, heavy):
    name = args.engine or ("mp" if heavy else "double")
    return get_engine(name, dps=args.dps), name


def _config_from(args):
    cfg = RunConfig(truncation_order=args.order)
    if args.z0_stokes:
        cfg.z0_stokes = _parse_ucpoint(args.z0_stokes)
    if args.z0_connection:
        cfg.z0_connection = _parse_ucpoint(args.z0_connection)
    cfg.tolerances.update(_parse_tols(args.tol))
    if args.engine:
        cfg.engine_name = args.engine
    cfg.dps = args.dps
    if cfg.truncation_order < 10:
        raise ConfigError("truncation order must be >= 10")
    return cfg


def cmd_qcoh(args):
    tables = ring_tables()
    mu, R, U = operator_matrices(q=Fraction(1))
    quantum = {}
    for (a, b), row in sorted(tables.quantum_table.items()):
        quantum[f"{a},{b}"] = {str(c): list(poly) for c, poly in sorted(row.items())}
    return {
        "command": "qcoh",
        "eta": [list(r) for r in tables.eta],
        "quantum_table": quantum,
        "mu": [list(r) for r in mu],
        "R": [[int(x) for x in r] for r in R],
        "U": [[int(x) for x in r] for r in U],
    }


def cmd_period(args):
    series = quantum_period(max(args.order, 6))
    return {
        "command": "period",
        "coefficients": [blk[0] for blk in series.blocks],
    }


def cmd_phitop(args):
    series = phi_top(args.order)
    return {
        "command": "phitop",
        "order": args.order,
        "coefficients": [
            [[x for x in row] for row in mat] for mat in series.coeffs
        ],
    }


def cmd_solutions(args):
    engine, name = _engine_for(args, heavy=False)
    pts = [
        UCComplex.polar(1.3, math.pi / 6),
        UCComplex.polar(0.8, math.pi),
        UCComplex.polar(1.1, 1.4 * math.pi),
        UCComplex.polar(0.9, -0.7 * math.pi),
        UCComplex.polar(1.6, 1.55 * math.pi),
    ]
    out = {"command": "solutions", "engine": name, "points": [], }
    if args.check_identities:
        for z in pts:
            e_res, r_res = identity_residuals(z, order=args.order, engine=engine)
            out["points"].append({
                "z": [float(z.modulus), z.arg],
                "euler_residual": float(e_res),
                "rotation_residual": float(r_res),
            })
    # contour cross-checks inside the validity sectors
    checks = []
    for kind, mod, arg in [(PHI1, 1.0, 0.0), (PHI1, 2.0, math.pi / 4), (PHI2, 0.7, -math.pi / 3)]:
        z = UCComplex.polar(mod, arg)
        series_val = eval_series(phi_series(kind, args.order, engine), z, engine=engine)
        contour_val = contour_eval(kind, z, engine)
        checks.append({
            "kind": kind.value,
            "z": [mod, arg],
            "series": complex(series_val),
            "contour": complex(contour_val),
            "deviation": float(abs(complex(series_val) - complex(contour_val))),
        })
    out["contour_checks"] = checks
    return out


def cmd_stokes(args):
    cfg = _config_from(args)
    engine, name = _engine_for(args, heavy=True)
    sd = stokes_matrix(engine, z0s=stokes_points(cfg), order=cfg.truncation_order,
                       snap_tol=cfg.tolerances["stokes_snap"])
    return {
        "command": "stokes",
        "engine": name,
        "z0s": [[float(z.modulus), z.arg] for z in sd.z0s],
        "S_prime": [list(r) for r in sd.s_prime],
        "P": [list(r) for r in sd.P],
        "S": [list(r) for r in sd.S],
        "residuals": {k: float(v) for k, v in sd.residuals.items()},
    }, sd


def cmd_connection(args):
    cfg = _config_from(args)
    engine, name = _engine_for(args, heavy=True)
    sd = stokes_matrix(engine, z0s=stokes_points(cfg), order=cfg.truncation_order)
    cd = connection_matrix(engine, z0s=connection_points(cfg), order=cfg.truncation_order,
                           P=sd.P)
    C_num = report_mod.complex_matrix(cd.C)
    C_ref = reference.numeric(reference.C_REF, dps=40)
    dev = max(abs(C_num[i][j] - C_ref[i][j]) for i in range(4) for j in range(4))
    residuals = {k: float(v) for k, v in cd.residuals.items()}
    residuals["c_vs_closed_form"] = dev
    constraints = verify_constraints(sd.S, cd.C, engine)
    residuals.update({k: float(v) for k, v in constraints.items()})
    return {
        "command": "connection",
        "engine": name,
        "z0s": [[float(z.modulus), z.arg] for z in cd.z0s],
        "C_prime": report_mod.complex_matrix(cd.c_prime),
        "C": C_num,
        "residuals": residuals,
    }


def cmd_gamma(args):
    gm = ktheory.gamma_class(-1)
    cg = ktheory.c_gamma_matrix()
    cg_num = ktheory.numeric_matrix(cg, dps=40)
    cg_ref = reference.numeric(reference.C_GAMMA_REF, dps=40)
    dev = max(abs(cg_num[i][j] - cg_ref[i][j]) for i in range(4) for j in range(4))
    chs = {}
    for name in ("O", "O1", "SIGMA21", "O2", "WEDGE2", "E1", "E2", "E3", "E4"):
        obj = ktheory.k_object(name)
        chs[name] = {
            "plain": [x for x in obj.ch_plain.coeffs],
            "graded": [str(c) for c in obj.ch_graded().coeffs],
        }
    return {
        "command": "gamma",
        "gamma_minus": [str(c) for c in gm.coeffs],
        "chern_characters": chs,
        "C_gamma": cg_num,
        "residuals": {"c_gamma_vs_closed_form": dev},
    }


def cmd_euler(args):
    em = ktheory.euler_matrix()
    return {
        "command": "euler-matrix",
        "euler_matrix": [list(r) for r in em],
        "diagonal": [em[k][k] for k in range(4)],
    }


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        failed = []
        tol = dict(DEFAULT_TOLERANCES)
        tol.update(_parse_tols(args.tol))
        if args.command == "qcoh":
            doc = cmd_qcoh(args)
        elif args.command == "period":
            doc = cmd_period(args)
        elif args.command == "phitop":
            doc = cmd_phitop(args)
        elif args.command == "solutions":
            doc = cmd_solutions(args)
        elif args.command == "stokes":
            doc, _ = cmd_stokes(args)
        elif args.command == "connection":
            doc = cmd_connection(args)
        elif args.command == "gamma":
            doc = cmd_gamma(args)
        elif args.command == "euler-matrix":
            doc = cmd_euler(args)
        else:
            cfg = _config_from(args)
            if args.engine is None:
                cfg.engine_name = "mp"
            doc = run_verify(cfg)
            failed = doc["failed_checks"]
        if "residuals" in doc and args.command != "verify":
            failed = sorted(name for name, v in doc["residuals"].items()
                            if name in tol and v > tol[name])
            doc["failed_checks"] = failed
            doc["status"] = "ok" if not failed else "fail"
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        # snap/constancy/tail failures: a named numerical check failed
        print(f"failed check: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2

    text = report_mod.dumps(doc)
    if args.pretty:
        blocks = [text]
        for key in ("S_prime", "S", "C_prime", "C", "euler_matrix", "C_gamma"):
            if key in doc:
                blocks.append(report_mod.pretty_matrix(doc[key], name=key))
        text = "\n".join(blocks)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)

    if failed:
        print("failed checks: " + ", ".join(str(f) for f in failed), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
