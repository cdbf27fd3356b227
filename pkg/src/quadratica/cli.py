"""Command-line entry point: every module as a subcommand.

Exit codes: 0 success, 1 domain error (with a machine-readable envelope on
stderr under --format json), 2 usage error. Exact values are rendered
exactly in JSON ({num, den} rationals, {a, b, m} field elements); floats
appear only in explicitly numeric fields, formatted to --precision
significant digits. CSV output uses '.' decimals and comma delimiters, and
samplers emit strictly increasing x columns.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import congruence, errata, fibgroup, geometry, goldbach, metallic, perfect, pnum, verify
from .errors import DomainError
from .qfield import QuadElem, parse_quad, qf_arith, qf_conj_norm, qf_coords, qf_make, qf_sqrt_solution, rat_to_dict
from .solver import (
    Quadratic,
    disc_derivative_identity,
    four_family,
    ode_classify,
    shift_roots,
    solve,
    vertex,
)

__all__ = ["main", "OutputConfig"]


@dataclass(frozen=True)
class OutputConfig:
    """Rendering knobs shared by every subcommand."""

    format: str = "text"
    precision: int = 12

    def __post_init__(self):
        if self.format not in ("text", "json", "csv"):
            raise ValueError("format must be text, json, or csv")
        if not 1 <= self.precision <= 30:
            raise ValueError("precision must be in [1, 30]")

    def fnum(self, x: float) -> str:
        return f"{x:.{self.precision}g}"


@dataclass
class Output:
    """What a handler produced: text lines, a JSON payload, optional CSV rows."""

    lines: list[str]
    data: dict
    rows: Optional[list[list]] = None


def _quad_json(z: QuadElem) -> dict:
    return z.to_dict()


def _poly_json(q: Quadratic) -> dict:
    return q.to_dict()


def _rootpair_json(pair) -> dict:
    return {
        "kind": pair.kind.value,
        "r1": _quad_json(pair.r1),
        "r2": _quad_json(pair.r2),
    }


# ---------------------------------------------------------------- handlers


def _cmd_solve(args, cfg: OutputConfig) -> Output:
    q = Quadratic(Fraction(args.a), Fraction(args.b), Fraction(args.c))
    pair = solve(q)
    v = vertex(q)
    lines = [
        f"equation: {q} = 0",
        f"kind: {pair.kind.value}",
        f"x1: {pair.r1}",
        f"x2: {pair.r2}",
        f"vertex: ({v.h}, {v.k})",
        f"discriminant: {q.discriminant}",
    ]
    data = {
        "equation": _poly_json(q),
        "roots": _rootpair_json(pair),
        "vertex": {"h": rat_to_dict(v.h), "k": rat_to_dict(v.k)},
        "discriminant": rat_to_dict(q.discriminant),
    }
    return Output(lines, data)


def _cmd_solve_extras(args, cfg: OutputConfig) -> Output:
    if args.action == "family":
        members = four_family(Fraction(args.a), Fraction(args.b))
        lines = []
        data = {}
        for member in members:
            lines.append(f"({member.label}) {member.quadratic} = 0  ->  {member.roots.r1}, {member.roots.r2}")
            data[member.label] = {
                "equation": _poly_json(member.quadratic),
                "roots": _rootpair_json(member.roots),
            }
        return Output(lines, data)
    q = Quadratic(Fraction(args.a), Fraction(args.b), Fraction(args.c))
    if args.action == "shift":
        shifted = shift_roots(q, Fraction(args.k))
        return Output(
            [f"shifted by {args.k}: {shifted} = 0"],
            {"shifted": _poly_json(shifted), "k": rat_to_dict(Fraction(args.k))},
        )
    if args.action == "derivative":
        report = disc_derivative_identity(q)
        lines = [
            f"x1: {report.x1}",
            f"x2: {report.x2}",
            f"sqrt(disc) = f'(x1): {report.sqrt_disc}",
            f"identity holds: {report.check}",
        ]
        return Output(
            lines,
            {
                "x1": _quad_json(report.x1),
                "x2": _quad_json(report.x2),
                "sqrt_disc": _quad_json(report.sqrt_disc),
                "check": report.check,
            },
        )
    if args.action == "ode":
        mode = ode_classify(Fraction(args.a), Fraction(args.b), Fraction(args.c))
        return Output(
            [f"kind: {mode.kind.value}", f"r1: {mode.r1}", f"r2: {mode.r2}"],
            {"kind": mode.kind.value, "r1": _quad_json(mode.r1), "r2": _quad_json(mode.r2)},
        )
    raise ValueError(f"unknown action {args.action}")  # pragma: no cover


def _cmd_qfield(args, cfg: OutputConfig) -> Output:
    if args.qf_action == "make":
        z = qf_make(Fraction(args.a), Fraction(args.b), args.m)
        return Output([str(z)], {"element": _quad_json(z)})
    if args.qf_action == "op":
        z, w = parse_quad(args.z), parse_quad(args.w)
        result = qf_arith(args.operation, z, w)
        return Output([str(result)], {"result": _quad_json(result)})
    if args.qf_action == "conj":
        z = parse_quad(args.z)
        zbar, norm = qf_conj_norm(z)
        return Output(
            [f"conjugate: {zbar}", f"norm: {norm}"],
            {"conjugate": _quad_json(zbar), "norm": rat_to_dict(norm)},
        )
    if args.qf_action == "coords":
        a, b = qf_coords(parse_quad(args.z))
        return Output([f"({a}, {b})"], {"a": rat_to_dict(a), "b": rat_to_dict(b)})
    if args.qf_action == "sqrt":
        plus, minus = qf_sqrt_solution(args.m)
        return Output(
            [f"+root: {plus}", f"-root: {minus}"],
            {"plus": _quad_json(plus), "minus": _quad_json(minus)},
        )
    raise ValueError(f"unknown action {args.qf_action}")  # pragma: no cover


def _cmd_fib(args, cfg: OutputConfig) -> Output:
    if args.fib_action == "value":
        return Output([str(fibgroup.fib(args.n))], {"n": args.n, "value": fibgroup.fib(args.n)})
    if args.fib_action == "reduce":
        pair = fibgroup.power_reduce(fibgroup.Case(args.case), args.n)
        root = "x"
        return Output(
            [f"{root}^{args.n} = {pair.coeff}*{root} + {pair.const}"],
            {"case": args.case, "n": args.n, "coeff": pair.coeff, "const": pair.const},
        )
    if args.fib_action == "sum":
        total = fibgroup.partial_power_sum(fibgroup.Case(args.case), args.n)
        return Output(
            [f"sum_{{k=1}}^{args.n} x^k = {total}"],
            {"case": args.case, "n": args.n, "sum": _quad_json(total)},
        )
    if args.fib_action == "group":
        group = fibgroup.unit_group(fibgroup.Case(args.case))
        table = fibgroup.multiplication_table(group)
        labels = [str(z) for z in group.elements]
        width = max(len(s) for s in labels)
        lines = [f"case {args.case}: order {group.order}", "elements: " + ", ".join(labels)]
        for i, row in enumerate(table):
            lines.append(
                f"{labels[i]:>{width}} | " + "  ".join(f"{labels[j]:>{width}}" for j in row)
            )
        data = {
            "case": args.case,
            "order": group.order,
            "elements": [_quad_json(z) for z in group.elements],
            "table": table,
        }
        rows = [[""] + labels] + [
            [labels[i]] + [labels[j] for j in row] for i, row in enumerate(table)
        ]
        return Output(lines, data, rows)
    raise ValueError(f"unknown action {args.fib_action}")  # pragma: no cover


def _cmd_metallic(args, cfg: OutputConfig) -> Output:
    if args.metal_action == "table":
        entries = [metallic.metallic(p, 1) for p in range(1, args.max_p + 1)]
        lines = []
        rows = [["p", "q", "equation", "sigma", "name"]]
        data = []
        for entry in entries:
            name = f" ({entry.name})" if entry.name else ""
            lines.append(f"sigma_{entry.p},{entry.q} = {entry.sigma}{name}   [{entry.equation} = 0]")
            rows.append([entry.p, entry.q, str(entry.equation), str(entry.sigma), entry.name or ""])
            data.append(
                {
                    "p": entry.p,
                    "q": entry.q,
                    "equation": _poly_json(entry.equation),
                    "sigma": _quad_json(entry.sigma),
                    "name": entry.name,
                }
            )
        return Output(lines, {"table": data}, rows)
    if args.metal_action == "classify":
        cls = metallic.radicand_classify(args.m)
        lines = [f"family: {cls.family.value}"]
        data = {"family": cls.family.value, "n": cls.n}
        if cls.equation is not None:
            lines.append(f"n: {cls.n}")
            lines.append(f"equation: {cls.equation} = 0")
            data["equation"] = _poly_json(cls.equation)
        return Output(lines, data)
    if args.metal_action == "creation":
        value = metallic.creation_equation(args.m)
        return Output(
            [f"PHI^2 + conj(PHI)^2 = {value}"],
            {"m": args.m, "value": rat_to_dict(value)},
        )
    if args.metal_action == "ledger":
        ledger_rows = metallic.phi_ledger(args.n)
        lines = []
        rows = [["n", "coeff", "const", "power_sum", "diff_coeff", "errata"]]
        data = []
        for row in ledger_rows:
            flag = f"   [errata: {row.errata_id}]" if row.errata_id else ""
            lines.append(
                f"phi^{row.n} = {row.coeff}*phi + {row.const}; "
                f"sum = {row.power_sum}, diff = {row.diff_coeff}*sqrt(5){flag}"
            )
            rows.append([row.n, row.coeff, row.const, row.power_sum, row.diff_coeff, row.errata_id or ""])
            data.append(
                {
                    "n": row.n,
                    "coeff": row.coeff,
                    "const": row.const,
                    "power_sum": row.power_sum,
                    "diff_coeff": row.diff_coeff,
                    "errata_id": row.errata_id,
                }
            )
        return Output(lines, {"ledger": data}, rows)
    if args.metal_action == "trig":
        report = metallic.golden_trig()
        lines = [
            f"cos(pi/5) = phi/2: {report.cos_pi_5_matches_half_phi}",
            f"2cos(2pi/5) = (-1+sqrt(5))/2: {report.two_cos_2pi_5_matches}",
            f"quintuple identity max error: {cfg.fnum(report.quintuple_identity_max_err)}",
            f"normalization exact: {report.normalization_exact}",
            f"generalized normalization exact: {report.generalized_normalization_exact}",
            f"feasible radicands: {list(report.feasible_radicands)}",
            f"first infeasible m: {report.infeasible_example}",
        ]
        data = {
            "cos_pi_5": report.cos_pi_5_matches_half_phi,
            "two_cos_2pi_5": report.two_cos_2pi_5_matches,
            "quintuple_max_err": report.quintuple_identity_max_err,
            "normalization_exact": report.normalization_exact,
            "generalized_normalization_exact": report.generalized_normalization_exact,
            "feasible_radicands": list(report.feasible_radicands),
            "infeasible_example": report.infeasible_example,
            "ok": report.ok,
        }
        return Output(lines, data)
    raise ValueError(f"unknown action {args.metal_action}")  # pragma: no cover


def _cmd_cong(args, cfg: OutputConfig) -> Output:
    if args.cong_action == "legendre":
        value = congruence.legendre(args.r, args.p)
        return Output([str(value)], {"r": args.r, "p": args.p, "legendre": value})
    if args.cong_action == "sqrt":
        sol = congruence.sqrt_mod(args.r, args.p)
        return Output(
            [f"kind: {sol.kind.value}", f"roots: {list(sol.roots)}"],
            {"kind": sol.kind.value, "roots": list(sol.roots)},
        )
    if args.cong_action == "solve":
        sol = congruence.solve_quad_mod(args.a, args.b, args.c, args.p)
        return Output(
            [f"kind: {sol.kind.value}", f"roots: {list(sol.roots)}"],
            {"kind": sol.kind.value, "roots": list(sol.roots)},
        )
    if args.cong_action == "twosquares":
        a, b = congruence.two_squares(args.p)
        return Output(
            [f"{args.p} = {a}^2 + {b}^2"],
            {"p": args.p, "a": a, "b": b},
        )
    raise ValueError(f"unknown action {args.cong_action}")  # pragma: no cover


def _cmd_perfect(args, cfg: OutputConfig) -> Output:
    if args.perfect_action == "table":
        records = [perfect.perfect_from_exponent(p) for p in range(2, args.max_exp + 1)]
        lines = []
        rows = [["p", "mersenne", "x1", "x2", "P", "perfect"]]
        data = []
        for rec in records:
            lines.append(
                f"p={rec.exponent}: x1={rec.x1}, x2={rec.x2}, P={rec.value}"
                f"{' (perfect)' if rec.is_perfect else ''}"
            )
            rows.append([rec.exponent, rec.mersenne, rec.x1, str(rec.x2), rec.value, rec.is_perfect])
            data.append(
                {
                    "exponent": rec.exponent,
                    "mersenne": rec.mersenne,
                    "x1": rec.x1,
                    "x2": rat_to_dict(rec.x2),
                    "value": rec.value,
                    "perfect": rec.is_perfect,
                }
            )
        return Output(lines, {"table": data}, rows)
    if args.perfect_action == "preimage":
        result = perfect.preimage(args.value)
        if result is None:
            return Output(
                [f"{args.value} is not on the parabola at an integer"],
                {"value": args.value, "x1": None, "x2": None},
            )
        x1, x2 = result
        return Output(
            [f"x1 = {x1}", f"x2 = {x2}"],
            {"value": args.value, "x1": x1, "x2": rat_to_dict(x2)},
        )
    if args.perfect_action == "areas":
        report = perfect.chord_geometry(Fraction(args.a), Fraction(args.b))
        lines = [
            f"secant: y = {report.slope}x + {report.intercept}",
            f"trapezoid area: {report.trapezoid_area}",
            f"integral: {report.parabola_integral}",
            f"chord-parabola area: {report.chord_area}",
            f"axis area: {report.axis_area}",
        ]
        data = {
            "slope": rat_to_dict(report.slope),
            "intercept": rat_to_dict(report.intercept),
            "trapezoid_area": rat_to_dict(report.trapezoid_area),
            "parabola_integral": rat_to_dict(report.parabola_integral),
            "chord_area": rat_to_dict(report.chord_area),
            "axis_area": rat_to_dict(report.axis_area),
        }
        return Output(lines, data)
    if args.perfect_action == "plot":
        start = Fraction(args.start)
        stop = Fraction(args.stop)
        step = Fraction(args.step)
        if step <= 0 or stop < start:
            raise ValueError("need step > 0 and stop >= start")
        rows = [["x", "fx"]]
        x = start
        while x <= stop:
            rows.append([cfg.fnum(float(x)), cfg.fnum(float(perfect.parabola(x)))])
            x += step
        lines = [f"{r[0]},{r[1]}" for r in rows]
        return Output(lines, {"rows": rows[1:]}, rows)
    raise ValueError(f"unknown action {args.perfect_action}")  # pragma: no cover


def _cmd_goldbach(args, cfg: OutputConfig) -> Output:
    if args.gb_action == "witness":
        if args.all:
            found = goldbach.witnesses(args.n)
            lines = [f"{w.N} = {w.p} + {w.q}  (I = {w.I})" for w in found]
            data = {
                "N": args.n,
                "witnesses": [
                    {"I": w.I, "p": w.p, "q": w.q, "uses_even_prime": w.uses_even_prime}
                    for w in found
                ],
            }
            rows = [["N", "I", "p", "q"]] + [[w.N, w.I, w.p, w.q] for w in found]
            return Output(lines, data, rows)
        w = goldbach.find_witness(args.n)
        note = "  [even prime pair]" if w.uses_even_prime else ""
        return Output(
            [f"{w.N} = {w.p} + {w.q}  (M = {w.M}, I = {w.I}){note}"],
            {
                "N": w.N,
                "M": w.M,
                "I": w.I,
                "p": w.p,
                "q": w.q,
                "uses_even_prime": w.uses_even_prime,
            },
        )
    if args.gb_action == "verify":
        summary = goldbach.verify_range(args.to, workers=args.workers, csv_path=args.report)
        lines = [
            f"verified {summary.count} even numbers in [{summary.start}, {summary.stop}]",
            f"max minimal-I: {summary.max_i} at N = {summary.n_at_max_i}",
            f"elapsed: {summary.elapsed:.2f}s",
        ]
        if summary.csv_path:
            lines.append(f"report: {summary.csv_path}")
        data = {
            "start": summary.start,
            "stop": summary.stop,
            "count": summary.count,
            "max_I": summary.max_i,
            "N_at_max_I": summary.n_at_max_i,
            "elapsed_seconds": summary.elapsed,
            "report": summary.csv_path,
        }
        return Output(lines, data)
    if args.gb_action == "areas":
        report = goldbach.witness_areas(args.p, args.q)
        parab = goldbach.witness_parabola(args.p, args.q)
        lines = [
            f"parabola: {parab.quadratic} with vertex ({parab.vertex_x}, {parab.vertex_y})",
            f"I = {report.I}",
            f"A_s (axis-parabola) = {report.parabola_area}",
            f"A_r (rectangle) = {report.rectangle_area}",
            f"A_t (triangle) = {report.triangle_area}",
            f"leading segment [0, q] = {report.leading_segment}",
        ]
        data = {
            "p": report.p,
            "q": report.q,
            "I": report.I,
            "parabola": _poly_json(parab.quadratic),
            "vertex": {"x": rat_to_dict(parab.vertex_x), "y": rat_to_dict(parab.vertex_y)},
            "A_s": rat_to_dict(report.parabola_area),
            "A_r": rat_to_dict(report.rectangle_area),
            "A_t": rat_to_dict(report.triangle_area),
            "leading_segment": rat_to_dict(report.leading_segment),
        }
        return Output(lines, data)
    if args.gb_action == "hypotenuse":
        h, kind = goldbach.hypotenuse_number(args.n, args.i, args.l)
        return Output(
            [f"H = {h} ({kind.value})"],
            {"n": args.n, "I": args.i, "l": args.l, "H": h, "class": kind.value},
        )
    raise ValueError(f"unknown action {args.gb_action}")  # pragma: no cover


def _cmd_pnum(args, cfg: OutputConfig) -> Output:
    if args.pnum_action == "associate":
        pn = pnum.associate(args.n)
        return Output(
            [f"{args.n} -> {pn} (value {pnum.pnum_value(pn)})"],
            {"n": args.n, "digit": pn.digit, "reps": pn.reps, "value": pnum.pnum_value(pn)},
        )
    if args.pnum_action == "root":
        value = pnum.digital_root(args.n)
        return Output([str(value)], {"n": args.n, "digital_root": value})
    if args.pnum_action == "parabola":
        pn = pnum.PNumber(args.p, args.t)
        plus, minus = pnum.pnum_parabola(pn)
        return Output(
            [f"{plus} = 0", f"mirror: {minus} = 0"],
            {"pnumber": str(pn), "parabola": _poly_json(plus), "mirror": _poly_json(minus)},
        )
    raise ValueError(f"unknown action {args.pnum_action}")  # pragma: no cover


_SOLID_ALIASES = {
    "tetra": geometry.PlatonicSolid.TETRAHEDRON,
    "octa": geometry.PlatonicSolid.OCTAHEDRON,
    "icosa": geometry.PlatonicSolid.ICOSAHEDRON,
    "hexa": geometry.PlatonicSolid.HEXAHEDRON,
    "cube": geometry.PlatonicSolid.HEXAHEDRON,
    "dodeca": geometry.PlatonicSolid.DODECAHEDRON,
}


def _cmd_geom(args, cfg: OutputConfig) -> Output:
    if args.geom_action == "platonic":
        solid = _SOLID_ALIASES[args.solid]
        row = geometry.platonic(solid, Fraction(args.edge))
        lines = [
            f"{solid.value} with edge {row.edge}:",
            f"face area: {row.face_area} = {cfg.fnum(float(row.face_area))}",
            f"total area: {row.total_area} = {cfg.fnum(float(row.total_area))}",
            f"apothem: {row.apothem} = {cfg.fnum(float(row.apothem))}",
            f"volume: {row.volume} = {cfg.fnum(float(row.volume))}",
            "V = A*apothem/3: exact",
        ]

        def radical_json(r):
            return {"scale": rat_to_dict(r.scale), "inner": _quad_json(r.inner), "float": float(r)}

        data = {
            "solid": solid.value,
            "edge": rat_to_dict(row.edge),
            "face_area": radical_json(row.face_area),
            "total_area": radical_json(row.total_area),
            "apothem": radical_json(row.apothem),
            "volume": radical_json(row.volume),
        }
        return Output(lines, data)
    if args.geom_action == "goldencut":
        a, b = geometry.golden_cut(Fraction(args.length))
        lines = [f"a = {a} = {cfg.fnum(float(a))}", f"b = {b} = {cfg.fnum(float(b))}"]
        return Output(lines, {"a": _quad_json(a), "b": _quad_json(b)})
    if args.geom_action == "trajectory":
        traj = geometry.trajectory(args.v0, args.beta, args.g)
        lines = [
            f"y = {cfg.fnum(traj.a)}x^2 + {cfg.fnum(traj.b)}x",
            f"apex: ({cfg.fnum(traj.apex_x)}, {cfg.fnum(traj.apex_y)})",
            f"range: {cfg.fnum(traj.range_x)}",
        ]
        rows = [["x", "y"]]
        for k in range(args.samples + 1):
            x = traj.range_x * k / args.samples
            y = traj.a * x * x + traj.b * x
            rows.append([cfg.fnum(x), cfg.fnum(y)])
        data = {
            "a": traj.a,
            "b": traj.b,
            "c": traj.c,
            "apex": [traj.apex_x, traj.apex_y],
            "range": traj.range_x,
        }
        return Output(lines, data, rows)
    raise ValueError(f"unknown action {args.geom_action}")  # pragma: no cover


def _cmd_errata(args, cfg: OutputConfig) -> Output:
    lines = [f"errata ledger v{errata.ERRATA_VERSION}: {len(errata.ERRATA)} entries", ""]
    rows = [["id", "kind", "section", "displayed", "derived", "oracle"]]
    for entry in errata.ERRATA:
        lines.append(f"[{entry.id}] ({entry.kind}) {entry.section}")
        lines.append(f"  displayed: {entry.displayed}")
        lines.append(f"  derived:   {entry.derived}")
        lines.append(f"  oracle:    {entry.oracle}")
        lines.append("")
        rows.append([entry.id, entry.kind, entry.section, entry.displayed, entry.derived, entry.oracle])
    data = {
        "version": errata.ERRATA_VERSION,
        "entries": [entry.to_dict() for entry in errata.ERRATA],
    }
    return Output(lines, data, rows)


def _cmd_verify(args, cfg: OutputConfig) -> Output:
    results = verify.run_all(args.scale, goldbach_workers=args.workers)
    lines = []
    per_module: dict[str, list[bool]] = {}
    for result in results:
        mark = "PASS" if result.ok else "FAIL"
        lines.append(f"{mark}  {result.module}.{result.name}  ({result.detail})")
        per_module.setdefault(result.module, []).append(result.ok)
    lines.append("")
    for module, oks in sorted(per_module.items()):
        lines.append(f"{module}: {sum(oks)}/{len(oks)} ok")
    failed = [r for r in results if not r.ok]
    lines.append(f"total: {len(results) - len(failed)}/{len(results)} checks passed")
    data = {
        "scale": args.scale,
        "results": [
            {"module": r.module, "name": r.name, "ok": r.ok, "detail": r.detail} for r in results
        ],
        "ok": not failed,
    }
    output = Output(lines, data)
    output.failed = bool(failed)
    return output


# ---------------------------------------------------------------- wiring

_HANDLERS = {
    "solve": _cmd_solve,
    "quad": _cmd_solve_extras,
    "qfield": _cmd_qfield,
    "fib": _cmd_fib,
    "metallic": _cmd_metallic,
    "cong": _cmd_cong,
    "perfect": _cmd_perfect,
    "goldbach": _cmd_goldbach,
    "pnum": _cmd_pnum,
    "geom": _cmd_geom,
    "errata": _cmd_errata,
    "verify": _cmd_verify,
}


def _shared_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default=None, help="output format")
    parser.add_argument("--json", action="store_true", help="shorthand for --format json")
    parser.add_argument("--csv", action="store_true", help="shorthand for --format csv")
    parser.add_argument("--precision", type=int, default=12, metavar="N", help="float digits (1..30)")
    parser.add_argument("--out", metavar="FILE", default=None, help="write output to FILE instead of stdout")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that accepts -1/2 and -0.5 as positional values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.?\d+$")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="quadratica",
        description="Exact quadratic-equation toolkit: fields, solvers, congruences, "
        "perfect-number and Goldbach parabolas.",
    )
    _shared_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    def subparser(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _shared_flags(p)
        return p

    p = subparser("solve", "solve a*x^2 + b*x + c = 0 exactly")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")

    p = subparser("quad", "root shifting, derivative identity, damping, four-family")
    quad_sub = p.add_subparsers(dest="action", required=True)
    ps = quad_sub.add_parser("shift")
    _shared_flags(ps)
    for name in ("a", "b", "c", "k"):
        ps.add_argument(name)
    ps = quad_sub.add_parser("derivative")
    _shared_flags(ps)
    for name in ("a", "b", "c"):
        ps.add_argument(name)
    ps = quad_sub.add_parser("ode")
    _shared_flags(ps)
    for name in ("a", "b", "c"):
        ps.add_argument(name)
    ps = quad_sub.add_parser("family")
    _shared_flags(ps)
    ps.add_argument("a", help="p > 0")
    ps.add_argument("b", help="q > 0")

    p = subparser("qfield", "exact arithmetic in Q(sqrt(m))")
    qf_sub = p.add_subparsers(dest="qf_action", required=True)
    ps = qf_sub.add_parser("make")
    _shared_flags(ps)
    ps.add_argument("a")
    ps.add_argument("b")
    ps.add_argument("m", type=int)
    ps = qf_sub.add_parser("op")
    _shared_flags(ps)
    ps.add_argument("operation", choices=("add", "sub", "mul", "div"))
    ps.add_argument("z")
    ps.add_argument("w")
    ps = qf_sub.add_parser("conj")
    _shared_flags(ps)
    ps.add_argument("z")
    ps = qf_sub.add_parser("coords")
    _shared_flags(ps)
    ps.add_argument("z")
    ps = qf_sub.add_parser("sqrt")
    _shared_flags(ps)
    ps.add_argument("m", type=int)

    p = subparser("fib", "Fibonacci power reduction, sums, unit groups")
    fib_sub = p.add_subparsers(dest="fib_action", required=True)
    ps = fib_sub.add_parser("value")
    _shared_flags(ps)
    ps.add_argument("n", type=int)
    ps = fib_sub.add_parser("reduce")
    _shared_flags(ps)
    ps.add_argument("--case", choices=("I", "II"), required=True)
    ps.add_argument("--n", type=int, required=True)
    ps = fib_sub.add_parser("sum")
    _shared_flags(ps)
    ps.add_argument("--case", choices=("I", "II", "III", "IV"), required=True)
    ps.add_argument("--n", type=int, required=True)
    ps = fib_sub.add_parser("group")
    _shared_flags(ps)
    ps.add_argument("--case", choices=("III", "IV"), required=True)

    p = subparser("metallic", "metallic means, radicand families, phi ledger")
    metal_sub = p.add_subparsers(dest="metal_action", required=True)
    ps = metal_sub.add_parser("table")
    _shared_flags(ps)
    ps.add_argument("--max-p", dest="max_p", type=int, default=4)
    ps = metal_sub.add_parser("classify")
    _shared_flags(ps)
    ps.add_argument("m", type=int)
    ps = metal_sub.add_parser("creation")
    _shared_flags(ps)
    ps.add_argument("m", type=int)
    ps = metal_sub.add_parser("ledger")
    _shared_flags(ps)
    ps.add_argument("--n", type=int, default=20)
    ps = metal_sub.add_parser("trig")
    _shared_flags(ps)

    p = subparser("cong", "quadratic congruences mod an odd prime")
    cong_sub = p.add_subparsers(dest="cong_action", required=True)
    ps = cong_sub.add_parser("legendre")
    _shared_flags(ps)
    ps.add_argument("r", type=int)
    ps.add_argument("p", type=int)
    ps = cong_sub.add_parser("sqrt")
    _shared_flags(ps)
    ps.add_argument("r", type=int)
    ps.add_argument("p", type=int)
    ps = cong_sub.add_parser("solve")
    _shared_flags(ps)
    for name in ("a", "b", "c", "p"):
        ps.add_argument(name, type=int)
    ps = cong_sub.add_parser("twosquares")
    _shared_flags(ps)
    ps.add_argument("p", type=int)

    p = subparser("perfect", "perfect-number parabola: tables, preimages, areas, sampling")
    perf_sub = p.add_subparsers(dest="perfect_action", required=True)
    ps = perf_sub.add_parser("table")
    _shared_flags(ps)
    ps.add_argument("--max-exp", dest="max_exp", type=int, default=13)
    ps = perf_sub.add_parser("preimage")
    _shared_flags(ps)
    ps.add_argument("value", type=int)
    ps = perf_sub.add_parser("areas")
    _shared_flags(ps)
    ps.add_argument("a")
    ps.add_argument("b")
    ps = perf_sub.add_parser("plot")
    _shared_flags(ps)
    ps.add_argument("--from", dest="start", default="-2")
    ps.add_argument("--to", dest="stop", default="1")
    ps.add_argument("--step", default="1/100")

    p = subparser("goldbach", "witness search, range verification, witness parabolas")
    gb_sub = p.add_subparsers(dest="gb_action", required=True)
    ps = gb_sub.add_parser("witness")
    _shared_flags(ps)
    ps.add_argument("n", type=int)
    ps.add_argument("--all", action="store_true", help="list every witness, not just minimal I")
    ps = gb_sub.add_parser("verify")
    _shared_flags(ps)
    ps.add_argument("--to", type=int, default=1_000_000)
    ps.add_argument("--report", metavar="CSV", default=None)
    ps.add_argument("--workers", type=int, default=None)
    ps = gb_sub.add_parser("areas")
    _shared_flags(ps)
    ps.add_argument("p", type=int)
    ps.add_argument("q", type=int)
    ps = gb_sub.add_parser("hypotenuse")
    _shared_flags(ps)
    ps.add_argument("n", type=int)
    ps.add_argument("i", type=int)
    ps.add_argument("l", type=int, nargs="?", default=1)

    p = subparser("pnum", "repdigit p-numbers")
    pn_sub = p.add_subparsers(dest="pnum_action", required=True)
    ps = pn_sub.add_parser("associate")
    _shared_flags(ps)
    ps.add_argument("n", type=int)
    ps = pn_sub.add_parser("root")
    _shared_flags(ps)
    ps.add_argument("n", type=int)
    ps = pn_sub.add_parser("parabola")
    _shared_flags(ps)
    ps.add_argument("p", type=int)
    ps.add_argument("t", type=int)

    p = subparser("geom", "golden cut, Platonic solids, trajectories")
    geom_sub = p.add_subparsers(dest="geom_action", required=True)
    ps = geom_sub.add_parser("platonic")
    _shared_flags(ps)
    ps.add_argument("solid", choices=sorted(_SOLID_ALIASES))
    ps.add_argument("--edge", default="1")
    ps = geom_sub.add_parser("goldencut")
    _shared_flags(ps)
    ps.add_argument("length")
    ps = geom_sub.add_parser("trajectory")
    _shared_flags(ps)
    ps.add_argument("v0", type=float)
    ps.add_argument("beta", type=float)
    ps.add_argument("g", type=float, nargs="?", default=9.8)
    ps.add_argument("--samples", type=int, default=20)

    subparser("errata", "the ledger of source-text discrepancies")

    p = subparser("verify", "run the cross-module invariant suites")
    p.add_argument("--scale", choices=verify.SCALES, default="quick")
    p.add_argument("--workers", type=int, default=None)

    return parser


def _resolve_config(args) -> OutputConfig:
    fmt = args.format
    if fmt is None:
        fmt = "json" if getattr(args, "json", False) else ("csv" if getattr(args, "csv", False) else "text")
    return OutputConfig(format=fmt, precision=args.precision)


def _render(output: Output, cfg: OutputConfig, out_path: Optional[str]) -> None:
    if cfg.format == "json":
        text = json.dumps(output.data, indent=2)
    elif cfg.format == "csv":
        if output.rows is None:
            raise ValueError("this command has no CSV form")
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerows(output.rows)
        text = buffer.getvalue().rstrip("\n")
    else:
        text = "\n".join(output.lines)
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
    except ValueError as exc:
        parser.error(str(exc))
    handler = _HANDLERS[args.command]
    try:
        output = handler(args, cfg)
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        if cfg.format == "json":
            envelope = {"error": {"type": type(exc).__name__, "message": str(exc)}}
            print(json.dumps(envelope), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        _render(output, cfg, args.out)
    except ValueError as exc:
        parser.error(str(exc))
    return 1 if getattr(output, "failed", False) else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
