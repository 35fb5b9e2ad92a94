"""Command-line interface: a thin client over the compute service.

Every subcommand builds one JSON request, posts it to the service (an
in-process instance by default, or a remote one via --server), and writes
the returned file bundle verbatim.  All numerics happen behind the service
boundary; this module only parses flags and moves bytes.

Exit codes: 0 success, 2 usage error (bad flags, malformed request),
3 domain error (physically invalid values, e.g. the parity rule).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any

import httpx

from . import __version__

USAGE_EXIT = 2
DOMAIN_EXIT = 3


class ServiceClient:
    """POSTs to a remote base URL, or to the in-process app when none is given."""

    def __init__(self, server: str | None):
        if server:
            self._client: httpx.Client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                # starlette warns about its own httpx-backed TestClient; the
                # in-process transport is exactly what a thin client wants
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict[str, Any]) -> httpx.Response:
        return self._client.post(path, json=payload)

    def close(self) -> None:
        self._client.close()


def _write_bundle(files: list[dict[str, str]], out_dir: str) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for entry in files:
        name = os.path.basename(entry["name"])
        path = os.path.join(out_dir, name)
        with open(path, "wb") as fh:
            fh.write(entry["text"].encode("utf-8"))
        written.append(path)
    return written


def _print_detail(payload: Any, stream) -> None:
    if isinstance(payload, dict):
        detail = payload.get("detail", payload)
    else:
        detail = payload
    if isinstance(detail, list):  # pydantic validation report
        for item in detail:
            loc = ".".join(str(p) for p in item.get("loc", [])[1:])
            print(f"invalid request field {loc}: {item.get('msg', '')}", file=stream)
    else:
        print(f"error: {detail}", file=stream)


def _run_command(args: argparse.Namespace, path: str, payload: dict[str, Any]) -> int:
    client = ServiceClient(args.server)
    try:
        try:
            response = client.post(path, payload)
        except httpx.HTTPError as exc:
            print(f"error: cannot reach service: {exc}", file=sys.stderr)
            return USAGE_EXIT
        if response.status_code == 400:
            _print_detail(response.json(), sys.stderr)
            return DOMAIN_EXIT
        if response.status_code != 200:
            _print_detail(response.json(), sys.stderr)
            return USAGE_EXIT
        body = response.json()
        for path_written in _write_bundle(body["files"], args.out_dir):
            print(f"wrote {path_written}")
        for entry in body["files"]:  # text artifacts double as stdout output
            if entry["media_type"] == "text/plain":
                print(entry["text"], end="")
        _print_summary(args.command, body["manifest"])
        return 0
    finally:
        client.close()


def _print_summary(command: str, manifest: dict[str, Any]) -> None:
    notes = manifest.get("notes", {})
    if command == "density":
        print(f"trapezoid integral = {notes.get('trapezoid_integral')}")
        print(f"interior zeros = {notes.get('interior_zeros')}")
    elif command == "dirac-compare":
        print(f"sup |D_s - D_d| = {notes.get('sup_difference')}")
        print(
            "mean radius: schrodinger "
            f"{notes.get('mean_radius_schrodinger')}, dirac {notes.get('mean_radius_dirac')}"
        )
    elif command == "sweep":
        for frame in notes.get("frames", []):
            print(f"kappa={frame['kappa']:.6g}  sup_diff={frame['sup_difference']:.6g}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="landau",
        description="Electron states in a uniform magnetic field: tables, densities, spectra, relativistic comparisons.",
    )
    parser.add_argument("--version", action="version", version=f"landau {__version__}")
    parser.add_argument(
        "--server",
        default=os.environ.get("LANDAU_SERVER"),
        help="base URL of a running service; default: run the computation in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out-dir", default=".", help="directory for output files")

    p_table = sub.add_parser("table", help="closed-form eigenfunction catalog")
    p_table.add_argument("--max-n", type=int, default=5)
    add_common(p_table)

    p_density = sub.add_parser("density", help="radial density profile of one state")
    p_density.add_argument("n", type=int)
    p_density.add_argument("m_l", type=int)
    p_density.add_argument("--points", type=int, default=1024)
    p_density.add_argument("--rho-max", type=float, default=8.0)
    p_density.add_argument("--format", choices=("csv", "svg", "ascii"), default="csv")
    p_density.add_argument("--two-d", action="store_true", help="also emit a 2D density map")
    p_density.add_argument("--two-d-points", type=int, default=96)
    p_density.add_argument("--workers", type=int, default=1)
    add_common(p_density)

    p_spectrum = sub.add_parser("spectrum", help="energy levels and Landau degeneracies")
    p_spectrum.add_argument("--n-max", type=int, default=4)
    p_spectrum.add_argument("--r-max", type=int, default=None)
    p_spectrum.add_argument("--spin", choices=("up", "down", "both"), default="both")
    add_common(p_spectrum)

    def add_field_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--zeta", type=float, default=0.0, help="axial momentum p_z/(m0 c)")
        p.add_argument("--points", type=int, default=1024)
        p.add_argument("--rho-max", type=float, default=8.0)
        p.add_argument("--workers", type=int, default=1)

    p_cmp = sub.add_parser("dirac-compare", help="nonrelativistic vs relativistic density")
    p_cmp.add_argument("n", type=int)
    p_cmp.add_argument("m_l", type=int)
    p_cmp.add_argument("--spin", choices=("up", "down"), default="up")
    field = p_cmp.add_mutually_exclusive_group(required=True)
    field.add_argument("--kappa", type=float, help="dimensionless field strength hbar*omega/(m0 c^2)")
    field.add_argument("--B-tesla", type=float, dest="b_tesla", help="field strength in tesla")
    add_field_flags(p_cmp)
    add_common(p_cmp)

    p_sweep = sub.add_parser("sweep", help="density comparison across field strengths")
    p_sweep.add_argument("n", type=int)
    p_sweep.add_argument("m_l", type=int)
    p_sweep.add_argument("--spin", choices=("up", "down"), default="up")
    p_sweep.add_argument("--kappa-min", type=float, required=True)
    p_sweep.add_argument("--kappa-max", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, default=8)
    add_field_flags(p_sweep)
    p_sweep.set_defaults(points=512)
    add_common(p_sweep)

    p_serve = sub.add_parser("serve", help="run the compute service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    if args.command == "table":
        return _run_command(args, "/v1/table", {"max_n": args.max_n})
    if args.command == "density":
        return _run_command(
            args,
            "/v1/density",
            {
                "n": args.n,
                "m_l": args.m_l,
                "points": args.points,
                "rho_max": args.rho_max,
                "format": args.format,
                "two_d": args.two_d,
                "two_d_points": args.two_d_points,
                "workers": args.workers,
            },
        )
    if args.command == "spectrum":
        return _run_command(
            args,
            "/v1/spectrum",
            {"n_max": args.n_max, "r_max": args.r_max, "spin": args.spin},
        )
    if args.command == "dirac-compare":
        return _run_command(
            args,
            "/v1/dirac/compare",
            {
                "n": args.n,
                "m_l": args.m_l,
                "spin": args.spin,
                "kappa": args.kappa,
                "B_tesla": args.b_tesla,
                "zeta": args.zeta,
                "points": args.points,
                "rho_max": args.rho_max,
                "workers": args.workers,
            },
        )
    if args.command == "sweep":
        return _run_command(
            args,
            "/v1/dirac/sweep",
            {
                "n": args.n,
                "m_l": args.m_l,
                "spin": args.spin,
                "kappa_min": args.kappa_min,
                "kappa_max": args.kappa_max,
                "steps": args.steps,
                "zeta": args.zeta,
                "points": args.points,
                "rho_max": args.rho_max,
                "workers": args.workers,
            },
        )
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
