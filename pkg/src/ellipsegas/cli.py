"""Command-line front end: density grids, kernel evaluation, convergence
studies, orthogonality audits, Monte Carlo sampling.

All output is deterministic: identical flags (and seed) produce byte-identical
files.  Floats are rendered with repr(), the shortest round-trip decimal.
Exit codes: 0 ok, 2 usage/validation, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .correlations import DensityGrid, GridSpec, density_grid
from .errors import DomainError
from .geometry import EllipseGeometry, GasFamily, PolyKind
from .kernels_finite import (FiniteKernel, kernel_elliptic_ginibre, kernel_truncated,
                             kernel_truncated_limit)
from .kernels_limit import (LimitKernelSpec, LimitKind, bulk_strong, bulk_weak,
                            edge_weak, make_kernel)
from .quadrature import QuadratureSpec
from .sampler import ChainSettings, PRNG_ALGORITHM, density_chi_square, run_chain

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

_FAMILIES = {
    "gegenbauer": PolyKind.GEGENBAUER,
    "jacobi-plus": PolyKind.JACOBI_PLUS,
    "jacobi-minus": PolyKind.JACOBI_MINUS,
    "chebyshev-t": PolyKind.CHEBYSHEV_T,
    "chebyshev-u": PolyKind.CHEBYSHEV_U,
    "chebyshev-v": PolyKind.CHEBYSHEV_V,
}


def _threads_cap() -> int:
    """ELLIPSE_GAS_THREADS caps worker parallelism; evaluation here is
    sequential and deterministic, so any valid cap is honored trivially."""
    raw = os.environ.get("ELLIPSE_GAS_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"ELLIPSE_GAS_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise DomainError("ELLIPSE_GAS_THREADS must be >= 1")
    return n


def _gas(args) -> GasFamily:
    kind = _FAMILIES[args.family]
    a = 0.0 if kind in (PolyKind.CHEBYSHEV_T, PolyKind.CHEBYSHEV_U,
                        PolyKind.CHEBYSHEV_V) else args.a
    return GasFamily(kind, a)


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _grid_csv(grid: DensityGrid) -> str:
    lines = ["x,y,rho"]
    xs = [float(x) for x in grid.spec.xs]
    ys = [float(y) for y in grid.spec.ys]
    for ix in range(grid.spec.nx):
        for iy in range(grid.spec.ny):
            lines.append(f"{xs[ix]!r},{ys[iy]!r},{float(grid.values[ix, iy])!r}")
    return "\n".join(lines) + "\n"


def _grid_json(grid: DensityGrid, rescale: str) -> str:
    payload = {
        "x_range": list(grid.spec.x_range),
        "y_range": list(grid.spec.y_range),
        "nx": grid.spec.nx,
        "ny": grid.spec.ny,
        "rescale": rescale,
        "values": [float(v) for v in grid.values.ravel(order="C")],
    }
    return json.dumps(payload) + "\n"


def cmd_density(args) -> int:
    gas = _gas(args)
    kernel = FiniteKernel(gas, EllipseGeometry(args.tau), args.N)
    grid = GridSpec((args.xmin, args.xmax), (args.ymin, args.ymax), args.nx, args.ny)
    dg = density_grid(kernel, grid, rescale=args.rescale)
    text = _grid_csv(dg) if args.format == "csv" else _grid_json(dg, args.rescale)
    _write_text(args.output, text)
    return EXIT_OK


def _parse_pairs(raw: str):
    pairs = []
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [float(p) for p in chunk.split(",")]
        if len(parts) == 2:
            z = complex(parts[0], parts[1])
            pairs.append((z, z))
        elif len(parts) == 4:
            pairs.append((complex(parts[0], parts[1]), complex(parts[2], parts[3])))
        else:
            raise DomainError(f"pair {chunk!r} must have 2 or 4 comma-separated reals")
    if not pairs:
        raise DomainError("no evaluation points given")
    return pairs


def _kernel_from_args(args):
    kind = args.kind
    if kind in ("finite", "truncated", "elliptic-ginibre") and args.N is None:
        raise DomainError(f"--N is required for --kind {kind}")
    if kind in ("finite", "elliptic-ginibre") and args.tau is None:
        raise DomainError(f"--tau is required for --kind {kind}")
    if kind == "finite":
        gas = _gas(args)
        return FiniteKernel(gas, EllipseGeometry(args.tau), args.N)
    if kind == "truncated":
        return lambda z1, z2: kernel_truncated(args.a, args.N, z1, z2)
    if kind == "truncated-limit":
        return lambda z1, z2: kernel_truncated_limit(args.a, z1, z2)
    if kind == "elliptic-ginibre":
        return lambda z1, z2: kernel_elliptic_ginibre(args.tau, args.N, z1, z2)
    spec = LimitKernelSpec(LimitKind(kind), a=args.a, s=args.s, tau=args.tau)
    return make_kernel(spec)


def cmd_kernel(args) -> int:
    kernel = _kernel_from_args(args)
    pairs = _parse_pairs(args.points)
    rows = []
    for z1, z2 in pairs:
        val = complex(kernel(z1, z2))
        rows.append({"z1": [z1.real, z1.imag], "z2": [z2.real, z2.imag],
                     "re": val.real, "im": val.imag})
    _write_text(args.output, json.dumps({"kind": args.kind, "values": rows}) + "\n")
    return EXIT_OK


_BULK_POINTS = [0j, 0.3 + 0.2j, -0.5 + 0.4j, 1.0 - 0.3j, 0.7 + 0.45j]
_EDGE_POINTS = [1.0 + 0j, 0.5 + 0.3j, 2.0 - 0.5j, 0.3 + 0j, 1.5 + 1.0j]


def cmd_converge(args) -> int:
    gas = _gas(args)
    rows = []
    if args.study == "strong":
        schedule = [int(x) for x in args.schedule.split(",")]
        for s in schedule:
            sup = 0.0
            for z in _BULK_POINTS:
                zt = z / 4.0  # keep |Im| <= 1/4, inside both strips
                kw = s ** 2 * bulk_weak(args.a, float(s), s * zt, s * zt)
                ks = bulk_strong(args.a, zt, zt)
                sup = max(sup, abs(kw - ks))
            rows.append({"s": s, "sup_discrepancy": sup})
        xkey = "s"
    else:
        schedule = [int(x) for x in args.schedule.split(",")]
        for N in schedule:
            geo = EllipseGeometry(1.0 / (1.0 + args.s ** 2 / (2.0 * N ** 2)))
            kern = FiniteKernel(gas, geo, N)
            sup = 0.0
            if args.study == "bulk-weak":
                for z in _BULK_POINTS:
                    kf = kern.eval(z / N, z / N) / N ** 2
                    kl = bulk_weak(args.a, args.s, z, z)
                    sup = max(sup, abs(kf - kl))
            else:
                for Z in _EDGE_POINTS:
                    zz = 1.0 - Z / (2.0 * N ** 2)
                    kf = kern.eval(zz, zz) / (4.0 * N ** 4)
                    kl = edge_weak(args.a, args.s, Z, Z)
                    sup = max(sup, abs(kf - kl))
            rows.append({"N": N, "sup_discrepancy": sup})
        xkey = "N"
    xs = np.log([r[xkey] for r in rows])
    ys = np.log([max(r["sup_discrepancy"], 1e-300) for r in rows])
    slope = float(np.polyfit(xs, ys, 1)[0])
    payload = {"study": args.study, "rows": rows, "fitted_decay_exponent": slope}
    _write_text(args.output, json.dumps(payload) + "\n")
    return EXIT_OK


def cmd_orthocheck(args) -> int:
    from .quadrature import rule_for_gas
    from .polynomials import log_squared_norms, monic_scaled_sequence
    from .geometry import weight_values

    gas = _gas(args)
    geo = EllipseGeometry(args.tau)
    spec = QuadratureSpec(args.radial_nodes, args.angular_nodes, 64)
    z, w = rule_for_gas(gas, geo, spec)
    mant, logs = monic_scaled_sequence(gas.family, args.max_degree, z)
    lh = log_squared_norms(gas, geo, args.max_degree)
    vals = mant * np.exp(logs - lh[:, None] / 2.0)
    gram = (vals * (w * weight_values(gas, geo, z))) @ np.conj(vals.T)
    off = float(np.max(np.abs(gram - np.diag(np.diag(gram)))))
    dia = float(np.max(np.abs(np.diag(gram) - 1.0)))
    payload = {
        "family": args.family, "a": gas.a, "tau": args.tau,
        "max_degree": args.max_degree,
        "max_offdiagonal": off, "max_diagonal_error": dia,
    }
    _write_text(args.output, json.dumps(payload) + "\n")
    return EXIT_OK


def cmd_sample(args) -> int:
    gas = _gas(args)
    geo = EllipseGeometry(args.tau)
    settings = ChainSettings(steps=args.steps, burn_in=args.burn_in, thin=args.thin,
                             proposal_sigma=args.sigma, seed=args.seed)
    samples, acceptance = run_chain(gas, geo, args.N, settings)
    lines = []
    for conf in samples:
        lines.append(json.dumps({"points": [[z.real, z.imag] for z in conf]}))
    grid = GridSpec((-geo.semi_x, geo.semi_x), (-geo.semi_y, geo.semi_y), 12, 12)
    kernel = FiniteKernel(gas, geo, args.N)
    chi2, dof = density_chi_square(samples, kernel, grid)
    summary = {"algorithm": PRNG_ALGORITHM, "seed": args.seed,
               "acceptance_rate": acceptance, "chi_square": chi2, "dof": dof,
               "sigma_units": (chi2 - dof) / math.sqrt(2 * dof) if dof else None,
               "configurations": len(samples)}
    lines.append(json.dumps({"summary": summary}))
    _write_text(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ellipsegas",
                                description="Coulomb-gas kernels on a hard-wall ellipse")
    sub = p.add_subparsers(dest="command", required=True)

    def add_family(q, tau_required=True):
        q.add_argument("--family", choices=sorted(_FAMILIES), default="gegenbauer")
        q.add_argument("--a", type=float, default=0.0)
        q.add_argument("--tau", type=float, required=tau_required)

    d = sub.add_parser("density", help="one-point density on a grid")
    add_family(d)
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--nx", type=int, default=64)
    d.add_argument("--ny", type=int, default=64)
    d.add_argument("--xmin", type=float, default=-1.2)
    d.add_argument("--xmax", type=float, default=1.2)
    d.add_argument("--ymin", type=float, default=-1.2)
    d.add_argument("--ymax", type=float, default=1.2)
    d.add_argument("--rescale", choices=["none", "fig1", "fig2", "fig3"], default="none")
    d.add_argument("--format", choices=["csv", "json"], default="csv")
    d.add_argument("--output", default="-")
    d.set_defaults(func=cmd_density)

    k = sub.add_parser("kernel", help="evaluate a finite or limiting kernel")
    kinds = (["finite", "truncated", "truncated-limit", "elliptic-ginibre"]
             + [kk.value for kk in LimitKind])
    k.add_argument("--kind", choices=kinds, required=True)
    k.add_argument("--family", choices=sorted(_FAMILIES), default="gegenbauer")
    k.add_argument("--a", type=float, default=0.0)
    k.add_argument("--s", type=float, default=None)
    k.add_argument("--tau", type=float, default=None)
    k.add_argument("--N", type=int, default=None)
    k.add_argument("--points", required=True,
                   help="semicolon-separated 're,im' (diagonal) or 're,im,re,im' pairs")
    k.add_argument("--output", default="-")
    k.set_defaults(func=cmd_kernel)

    c = sub.add_parser("converge", help="finite-N to limit convergence study")
    c.add_argument("--study", choices=["bulk-weak", "edge-weak", "strong"], required=True)
    c.add_argument("--family", choices=sorted(_FAMILIES), default="gegenbauer")
    c.add_argument("--a", type=float, default=1.0)
    c.add_argument("--s", type=float, default=1.0)
    c.add_argument("--schedule", default="100,200,400",
                   help="comma-separated N (or s) values")
    c.add_argument("--output", default="-")
    c.set_defaults(func=cmd_converge)

    o = sub.add_parser("orthocheck", help="quadrature audit of orthonormality")
    add_family(o)
    o.add_argument("--max-degree", type=int, default=8)
    o.add_argument("--radial-nodes", type=int, default=96)
    o.add_argument("--angular-nodes", type=int, default=128)
    o.add_argument("--output", default="-")
    o.set_defaults(func=cmd_orthocheck)

    m = sub.add_parser("sample", help="Metropolis chain for the Gibbs measure")
    add_family(m)
    m.add_argument("--N", type=int, required=True)
    m.add_argument("--steps", type=int, default=100_000)
    m.add_argument("--burn-in", type=int, default=10_000)
    m.add_argument("--thin", type=int, default=100)
    m.add_argument("--sigma", type=float, default=None)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--output", default="-")
    m.set_defaults(func=cmd_sample)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads_cap()
        if getattr(args, "N", None) is not None and args.N < 1:
            raise DomainError("N must be >= 1")
        return args.func(args)
    except ValueError as exc:   # DomainError and malformed numeric flags
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
