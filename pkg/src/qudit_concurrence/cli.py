"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (bad or unnormalized input,
unknown names), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import entropy as ent
from .concurrence import concurrence_vector_mixed, concurrence_vector_pure
from .errors import ConcurrenceError
from .fileio import load_state
from .ladder import build_ladder_set, verify_commutators
from .roots import positive_roots
from .states import (
    BASES,
    DensityMatrix,
    PureState,
    catalog,
    catalog_state,
    make_density,
    werner,
)
from .subspace import edge_grid, edge_scan, enclosed_volume, sign_criterion, surface

FORMATS = ("text", "csv", "json")


def fmt(x: float) -> str:
    return f"{x:.12g}"


def fmt_complex(z: complex) -> str:
    z = complex(z)
    if abs(z.imag) < 1e-15:
        return fmt(z.real + 0.0)
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt(z.real + 0.0)}{sign}{fmt(abs(z.imag))}j"


def fmt_sci(x: float) -> str:
    """``0.0e0`` style scientific notation."""
    mant, exp = f"{x:.1e}".split("e")
    return f"{mant}e{int(exp)}"


class Output:
    """Collects a table plus free-form text lines and renders one format."""

    def __init__(self, header=None):
        self.header = header
        self.rows: list[list] = []
        self.lines: list[str] = []
        self.data: dict = {}

    def render(self, kind: str) -> str:
        if kind == "json":
            doc = dict(self.data)
            if self.header:
                doc["rows"] = [dict(zip(self.header, r)) for r in self.rows]
            return json.dumps(doc, indent=1, default=_jsonable) + "\n"
        if kind == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            if self.header:
                w.writerow(self.header)
                w.writerows([[_cell(c) for c in r] for r in self.rows])
            else:
                for k, v in self.data.items():
                    w.writerow([k, _cell(v)])
            return buf.getvalue()
        out = list(self.lines)
        if self.header and self.rows:
            table = [self.header] + [[_cell(c) for c in r] for r in self.rows]
            widths = [max(len(str(r[i])) for r in table) for i in range(len(self.header))]
            for r in table:
                out.append("  ".join(str(c).rjust(wd) for c, wd in zip(r, widths)))
        return "\n".join(out) + "\n"


def _cell(v):
    if isinstance(v, (float, np.floating)):
        return fmt(float(v))
    if isinstance(v, (complex, np.complexfloating)):
        return fmt_complex(v)
    return v


def _jsonable(v):
    if isinstance(v, np.generic):
        return v.item()
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    raise TypeError(type(v).__name__)


# --------------------------------------------------------------------------
# input helpers

def _load_input(args):
    if getattr(args, "state", None):
        return catalog_state(args.state)
    if getattr(args, "file", None):
        return load_state(args.file, normalize=args.normalize)
    raise ConcurrenceError("give --state NAME or --file PATH")


def _require_pure(obj) -> PureState:
    if not isinstance(obj, PureState):
        raise ConcurrenceError("this command needs a pure state, got a density matrix")
    return obj


def _vector_rows(cv):
    rows = []
    for k, (label, c) in enumerate(zip(cv.labels, cv.components)):
        c = complex(c)
        rows.append([k + 1, label, c.real + 0.0, c.imag + 0.0])
    return rows


# --------------------------------------------------------------------------
# commands

def cmd_catalog(args) -> Output:
    out = Output(["name", "dims", "norm_sq", "description"])
    for e in catalog():
        if args.family and not e.name.startswith(args.family + "."):
            continue
        cv = concurrence_vector_pure(e.state)
        out.rows.append([e.name, f"{e.state.dim_a}x{e.state.dim_b}", cv.norm_sq, e.description])
    out.data["bases"] = {k: list(v) for k, v in BASES.items()}
    return out


def cmd_concurrence(args) -> Output:
    obj = _load_input(args)
    if isinstance(obj, DensityMatrix):
        cv = concurrence_vector_mixed(obj)
    else:
        cv = concurrence_vector_pure(obj)
    out = Output(["slot", "roots", "re", "im"])
    out.rows = _vector_rows(cv)
    comps = ", ".join(fmt_complex(c) for c in cv.components)
    out.lines += [f"components: ({comps})", f"norm^2: {fmt(cv.norm_sq)}"]
    out.data.update(norm_sq=cv.norm_sq, norm=cv.norm, mixed=cv.mixed)
    return out


def cmd_entropy(args) -> Output:
    ps = _require_pure(_load_input(args))
    r = ent.entropy_report(ps)
    cv = concurrence_vector_pure(ps)
    out = Output()
    out.data = {
        "von_neumann": r.von_neumann,
        "linear": r.linear,
        "det_rhoB": r.det_rhoB,
        "schmidt_squares": list(r.schmidt_squares),
        "norm_sq": cv.norm_sq,
    }
    if ps.dim_a == 2 and cv.norm <= 1 + 1e-12:
        out.data["von_neumann_from_norm"] = ent.entropy_from_norm_qubit(min(cv.norm, 1.0))
    elif ps.dim_a == 3 and ps.dim_b == 3:
        out.data["von_neumann_from_norm"] = ent.entropy_from_norm_qutrit(cv.norm, r.det_rhoB)
    out.lines = [
        f"{k}: " + (", ".join(fmt(x) for x in v) if isinstance(v, list) else fmt(v))
        for k, v in out.data.items()
    ]
    return out


def cmd_secular(args) -> Output:
    ps = _require_pure(_load_input(args))
    res = ent.check_secular(ps)
    out = Output()
    out.data = {"max_residual": res}
    out.lines = [f"max residual {fmt_sci(res)}"]
    return out


def cmd_mixed(args) -> Output:
    if args.werner is not None:
        rho = werner(args.werner)
    else:
        obj = _load_input(args)
        rho = obj if isinstance(obj, DensityMatrix) else make_density(obj)
    cv = concurrence_vector_mixed(rho)
    out = Output(["slot", "roots", "re", "im"])
    out.rows = _vector_rows(cv)
    out.lines = [
        "components: (" + ", ".join(fmt(c) for c in cv.components.real) + ")",
        f"norm: {fmt(cv.norm)}",
        f"norm^2: {fmt(cv.norm_sq)}",
    ]
    out.data.update(norm=cv.norm, norm_sq=cv.norm_sq)
    return out


def cmd_surface(args) -> Output:
    s = surface(args.basis, args.n_theta, args.n_phi)
    out = Output(["theta", "phi", "radius"])
    out.rows = [[x.theta, x.phi, x.radius] for x in s.samples()]
    return out


def cmd_volume(args) -> Output:
    v = enclosed_volume(args.basis, args.grid, args.grid)
    coarse = max(args.grid // 2, 2)
    dv = v - enclosed_volume(args.basis, coarse, coarse)
    verdict = sign_criterion(args.basis)
    out = Output()
    out.data = {
        "basis": args.basis,
        "grid": args.grid,
        "volume": v,
        "unit_sphere_ratio": v / (4 * np.pi / 3),
        "convergence_delta": dv,
        "sign_criterion": verdict.verdict.value,
    }
    out.lines = [
        f"volume: {fmt(v)}  ({args.grid}x{args.grid} grid)",
        f"ratio to 4pi/3: {fmt(v / (4 * np.pi / 3))}",
        f"grid-convergence delta vs {coarse}x{coarse}: {fmt(dv)}",
        f"sign criterion: {verdict.verdict.value} ({verdict.reason})",
    ]
    return out


def cmd_edge_scan(args) -> Output:
    out = Output(["p", "q", "norm"])
    if args.raw_grid:
        vals = np.linspace(-args.extent, args.extent, args.raw_grid)
        grid = edge_grid(vals, vals)
        out.rows = [[p, q, grid[i, j]] for i, p in enumerate(vals) for j, q in enumerate(vals)]
        return out
    scan = edge_scan(args.points)
    out.rows = [list(r) for r in scan.points]
    out.data["zeros"] = [dict(zip(("p", "q", "norm"), z)) for z in scan.zeros]
    out.lines = [
        f"zero at p={fmt(p)} q={fmt(q)} |C|={fmt_sci(n)} (p/q={fmt(p / q)})"
        for p, q, n in scan.zeros
    ]
    if args.format == "text":
        out.rows = []
    return out


def cmd_entropy_bounds(args) -> Output:
    norms = np.linspace(0.0, ent.MAX_QUTRIT_NORM, args.points)
    env = ent.entropy_envelope(norms, args.grid)
    out = Output(["norm", "infimum", "supremum"])
    out.rows = [list(r) for r in env]
    return out


def cmd_verify_algebra(args) -> Output:
    rep = verify_commutators(build_ladder_set(args.dim))
    out = Output()
    out.data = {
        "dim": args.dim,
        "positive_roots": len(positive_roots(args.dim)),
        "max_residual": rep.max_residual,
        "violations": rep.violations,
    }
    out.lines = [f"max residual {fmt_sci(rep.max_residual)}"]
    out.lines += [f"violation: {v}" for v in rep.violations]
    return out


# --------------------------------------------------------------------------

def _grid_size(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("grid sizes must be >= 2")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qudit-concurrence",
        description="Concurrence vectors of bipartite qudit states.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")

    source = argparse.ArgumentParser(add_help=False)
    g = source.add_mutually_exclusive_group()
    g.add_argument("--state", help="catalog state name, e.g. su3.phi1")
    g.add_argument("--file", help="JSON state or density-matrix file")
    source.add_argument("--normalize", action="store_true",
                        help="rescale file input to unit norm / unit trace")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list named states")
    p.add_argument("--family", help="restrict to a family prefix (su3, so3, bell)")
    p.set_defaults(func=cmd_catalog)

    for name, func, text in (
        ("concurrence", cmd_concurrence, "concurrence vector and its squared norm"),
        ("entropy", cmd_entropy, "von Neumann and linear entropy"),
        ("secular-check", cmd_secular, "residual of the secular equation"),
    ):
        p = sub.add_parser(name, parents=[common, source], help=text)
        p.set_defaults(func=func)

    p = sub.add_parser("mixed", parents=[common, source], help="mixed-state concurrence vector")
    p.add_argument("--werner", type=float, help="use the two-qubit Werner state with this p")
    p.set_defaults(func=cmd_mixed)

    p = sub.add_parser("surface", parents=[common], help="concurrence surface samples")
    p.add_argument("--basis", required=True, choices=sorted(BASES))
    p.add_argument("--n-theta", type=_grid_size, default=91)
    p.add_argument("--n-phi", type=_grid_size, default=180)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("volume", parents=[common], help="volume enclosed by a concurrence surface")
    p.add_argument("--basis", required=True, choices=sorted(BASES))
    p.add_argument("--grid", type=_grid_size, default=400)
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("edge-scan", parents=[common], help="entanglement edge of the SU(3) hexad family")
    p.add_argument("--points", type=_grid_size, default=720)
    p.add_argument("--raw-grid", type=_grid_size, help="scan a raw (p, q) grid of this size instead")
    p.add_argument("--extent", type=float, default=1.0, help="raw grid covers [-extent, extent]^2")
    p.set_defaults(func=cmd_edge_scan)

    p = sub.add_parser("entropy-bounds", parents=[common], help="entropy envelope versus |C| (two qutrits)")
    p.add_argument("--points", type=_grid_size, default=50)
    p.add_argument("--grid", type=_grid_size, default=201)
    p.set_defaults(func=cmd_entropy_bounds)

    p = sub.add_parser("verify-algebra", parents=[common], help="check the commutation relations")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_verify_algebra)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args).render(args.format)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (ConcurrenceError, KeyError, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
