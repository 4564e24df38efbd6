"""Command-line surface: every capability as a scriptable command.

Commands emit JSON (default) or CSV on stdout, write to a file with
--output, and send diagnostics to stderr.  Exit codes: 0 all checks pass,
1 a verification failed, 2 invalid input.  Identical invocations
(including --seed) produce byte-identical output.  All floats are emitted
with 15 significant digits.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .analysis import (
    aligned_tetrahedron_residual,
    concurrence,
    concurrence_curve,
    reduction_vector,
    rotation_symmetry_residual,
    sjm_concurrence_closed_form,
    sjm_reduction_closed_form,
    zero_sum_residual,
)
from .bases import (
    SjmParams,
    component_state,
    ejm_aligned,
    original_ejm_basis,
    sjm_basis,
    sjm_overlap_closed_form,
    sjm_state_closed_form,
)
from .circuit import build_sjm_circuit, circuit_to_dict, verify_discrimination
from .linalg import inner
from .multiqubit import (
    aux_state,
    gram_residual,
    multi_reduction_closed_form,
    multi_reduction_vector,
    multi_sjm_basis,
    pairwise_overlap_product,
)
from .network import (
    TRILOCAL_BOUND,
    closed_form_probability,
    joint_distribution,
    nonlocality_scan,
)

DEFAULT_THETA = math.pi / 2
DEFAULT_PHI = math.pi / 4


def _fmt(x: float) -> float:
    """Round a float to 15 significant digits for JSON emission."""
    return float(f"{x:.15g}")


def _fmt_s(x: float) -> str:
    return f"{x:.15g}"


@dataclass(frozen=True)
class RunConfig:
    command: str
    theta: float
    phi: float
    n: int
    grid_steps: int
    output_format: str
    output_path: str | None
    seed: int | None
    mode: str | None = None

    @property
    def params(self) -> SjmParams:
        return SjmParams(self.theta, self.phi)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sjm",
        description="Parameterized symmetric joint measurement: bases, "
        "verification, discrimination circuit, and triangle-network statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--theta", type=float, help="theta in radians, [0, pi/2]")
        p.add_argument(
            "--theta-frac",
            metavar="FRAC",
            help="theta as a rational multiple of pi, e.g. 1/2 for pi/2",
        )
        p.add_argument("--phi", type=float, help="phi in radians, [-pi, pi]")
        p.add_argument(
            "--phi-frac", metavar="FRAC", help="phi as a rational multiple of pi"
        )
        p.add_argument("--n", type=int, default=2, help="number of qubits (even)")
        p.add_argument(
            "--grid-steps", type=int, default=64, help="grid resolution for sweeps"
        )
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", metavar="PATH", help="write output to a file")
        p.add_argument("--seed", type=int, help="seed for sampled checks")
        return p

    add_command("basis", "emit the basis amplitude table")
    add_command("verify", "run every invariant check and report residuals")
    add_command("circuit", "emit the discrimination circuit and its state mapping")
    network = add_command("network", "triangle-network outcome statistics")
    network.add_argument("mode", choices=["table", "scan"])
    add_command("curve", "emit concurrence-versus-theta data for the state families")
    add_command("multiqubit", "emit multiqubit Gram check and reduction vectors")
    return parser


def _angle(value: float | None, frac: str | None, flag: str, default: float) -> float:
    if value is not None and frac is not None:
        raise ValueError(f"give either --{flag} or --{flag}-frac, not both")
    if frac is not None:
        try:
            return float(Fraction(frac)) * math.pi
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse --{flag}-frac {frac!r}: {exc}") from exc
    if value is not None:
        return float(value)
    return default


def config_from_args(args: argparse.Namespace) -> RunConfig:
    theta = _angle(args.theta, args.theta_frac, "theta", DEFAULT_THETA)
    phi = _angle(args.phi, args.phi_frac, "phi", DEFAULT_PHI)
    if args.grid_steps < 1:
        raise ValueError(f"grid-steps must be >= 1, got {args.grid_steps}")
    cfg = RunConfig(
        command=args.command,
        theta=theta,
        phi=phi,
        n=args.n,
        grid_steps=args.grid_steps,
        output_format=args.format,
        output_path=args.output,
        seed=args.seed,
        mode=getattr(args, "mode", None),
    )
    cfg.params  # validate ranges before any computation
    return cfg


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _amplitude_rows(states, indices) -> list[dict]:
    return [
        {
            "index": list(ks),
            "amplitudes": [[_fmt(a.real), _fmt(a.imag)] for a in state],
        }
        for ks, state in zip(indices, states)
    ]


def cmd_basis(cfg: RunConfig) -> tuple[int, str]:
    if cfg.n == 2:
        states = sjm_basis(cfg.params).states
        indices = [(k,) for k in range(4)]
    else:
        basis = multi_sjm_basis(cfg.n, cfg.params)
        states = basis.states
        indices = basis.index_tuples()
    if cfg.output_format == "json":
        doc = {
            "command": "basis",
            "n": cfg.n,
            "theta": _fmt(cfg.theta),
            "phi": _fmt(cfg.phi),
            "states": _amplitude_rows(states, indices),
        }
        return 0, json.dumps(doc, indent=2) + "\n"
    header = ["index"] + [
        name for i in range(len(states[0])) for name in (f"amp{i}_re", f"amp{i}_im")
    ]
    rows = [
        ["".join(map(str, ks))]
        + [part for a in state for part in (_fmt_s(a.real), _fmt_s(a.imag))]
        for ks, state in zip(indices, states)
    ]
    return 0, _csv_text(header, rows)


def _two_qubit_invariants(params: SjmParams) -> list[tuple[str, float, float]]:
    basis = sjm_basis(params)
    gram = basis.gram()
    construction = max(
        float(np.abs(basis.states[k] - sjm_state_closed_form(k, params)).max())
        for k in range(4)
    )
    overlap_cf = max(
        abs(gram[j, k] - sjm_overlap_closed_form(j, k, params))
        for j in range(4)
        for k in range(4)
    )
    component_overlap = max(
        abs(
            inner(component_state(k, 0, params), component_state(k, 1, params))
            - 1.0 / math.sqrt(2.0)
        )
        for k in range(4)
    )
    conc = max(
        abs(concurrence(s) - sjm_concurrence_closed_form(params.theta))
        for s in basis.states
    )
    reduction = max(
        float(
            np.abs(
                reduction_vector(s, q) - sjm_reduction_closed_form(k, params, q)
            ).max()
        )
        for k, s in enumerate(basis.states)
        for q in (0, 1)
    )
    aligned = ejm_aligned()
    ejm = original_ejm_basis()
    aligned_states = sjm_basis(aligned).states
    ejm_relation = max(
        abs(inner(ejm.states[j], aligned_states[(j + 1) % 4])) for j in range(4)
    )
    return [
        ("orthonormality_residual", basis.orthonormality_residual(), 1e-10),
        ("completeness_residual", basis.completeness_residual(), 1e-10),
        ("construction_closed_form_residual", construction, 1e-12),
        ("overlap_closed_form_residual", float(overlap_cf), 1e-12),
        ("component_overlap_residual", float(component_overlap), 1e-12),
        ("concurrence_residual", float(conc), 1e-10),
        ("reduction_closed_form_residual", reduction, 1e-10),
        ("rotational_symmetry_residual", rotation_symmetry_residual(basis), 1e-10),
        ("zero_sum_residual", zero_sum_residual(basis), 1e-10),
        ("aligned_ejm_orthogonality_residual", float(ejm_relation), 1e-10),
        ("aligned_tetrahedron_residual", aligned_tetrahedron_residual(), 1e-10),
    ]


def _multiqubit_invariants(
    cfg: RunConfig,
) -> tuple[list[tuple[str, float, float]], int | None]:
    params = cfg.params
    two = sjm_basis(params)
    multi_two = multi_sjm_basis(2, params)
    match = max(
        float(np.abs(a - b).max()) for a, b in zip(two.states, multi_two.states)
    )
    aux_orth = max(
        abs(inner(aux_state(which, +1, params.phi), aux_state(which, -1, params.phi)))
        for which in (0, 1)
    )
    overlap_product = max(
        abs(pairwise_overlap_product(j, k, params) - (1.0 if j == k else 0.0))
        for j in range(4)
        for k in range(4)
    )
    basis = multi_sjm_basis(cfg.n, params) if cfg.n != 2 else multi_two
    seed_used: int | None = None
    if basis.n >= 8:
        seed_used = cfg.seed if cfg.seed is not None else 0
        check = gram_residual(basis, rng=np.random.default_rng(seed_used))
    else:
        check = gram_residual(basis)
    reduction = 0.0
    for ks in basis.index_tuples():
        for position in range(basis.n):
            numeric = multi_reduction_vector(basis, ks, position)
            closed = multi_reduction_closed_form(
                ks[position // 2], params, basis.n, position
            )
            reduction = max(reduction, float(np.abs(numeric - closed).max()))
    rows = [
        ("multi_two_qubit_match_residual", match, 1e-12),
        ("aux_orthogonality_residual", float(aux_orth), 1e-12),
        ("overlap_product_residual", float(overlap_product), 1e-12),
        ("multi_gram_residual", check.residual, 1e-10),
        ("multi_reduction_residual", reduction, 1e-10),
    ]
    return rows, seed_used


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    rows = _two_qubit_invariants(cfg.params)
    multi_rows, seed_used = _multiqubit_invariants(cfg)
    rows += multi_rows
    report = [
        {
            "name": name,
            "residual": _fmt(residual),
            "tolerance": tolerance,
            "pass": residual <= tolerance,
        }
        for name, residual, tolerance in rows
    ]
    all_pass = all(entry["pass"] for entry in report)
    if cfg.output_format == "json":
        doc = {
            "command": "verify",
            "theta": _fmt(cfg.theta),
            "phi": _fmt(cfg.phi),
            "n": cfg.n,
            "seed": seed_used,
            "invariants": report,
            "all_pass": all_pass,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = _csv_text(
            ["name", "residual", "tolerance", "pass"],
            [
                [e["name"], _fmt_s(e["residual"]), _fmt_s(e["tolerance"]), str(e["pass"]).lower()]
                for e in report
            ],
        )
    return (0 if all_pass else 1), text


def cmd_circuit(cfg: RunConfig) -> tuple[int, str]:
    circuit = build_sjm_circuit(cfg.params)
    report = verify_discrimination(circuit, sjm_basis(cfg.params))
    mappings = [
        {
            "state": m.state_index,
            "target": m.target_index,
            "target_bits": m.target_bits,
            "magnitude": _fmt(m.magnitude),
            "phase": _fmt(m.phase),
        }
        for m in report.mappings
    ]
    if cfg.output_format == "json":
        doc = {
            "command": "circuit",
            "theta": _fmt(cfg.theta),
            "phi": _fmt(cfg.phi),
            "circuit": circuit_to_dict(circuit),
            "mappings": mappings,
            "targets_distinct": report.targets_distinct,
            "max_magnitude_error": _fmt(report.max_magnitude_error),
            "reference_sign_residual": _fmt(report.reference_sign_residual),
            "pass": report.passed,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = _csv_text(
            ["state", "target", "target_bits", "magnitude", "phase"],
            [
                [str(m["state"]), str(m["target"]), m["target_bits"], _fmt_s(m["magnitude"]), _fmt_s(m["phase"])]
                for m in mappings
            ],
        )
    return (0 if report.passed else 1), text


def cmd_network(cfg: RunConfig) -> tuple[int, str]:
    if cfg.mode == "table":
        dist = joint_distribution(cfg.params)
        residual = max(
            abs(dist.prob(a, b, c) - closed_form_probability(a, b, c, cfg.theta))
            for a in range(4)
            for b in range(4)
            for c in range(4)
        )
        ok = residual <= 1e-10
        if cfg.output_format == "json":
            doc = {
                "command": "network-table",
                "theta": _fmt(cfg.theta),
                "phi": _fmt(cfg.phi),
                "outcomes": [
                    {"a": a, "b": b, "c": c, "probability": _fmt(dist.prob(a, b, c))}
                    for a in range(4)
                    for b in range(4)
                    for c in range(4)
                ],
                "total": _fmt(dist.total()),
                "closed_form_residual": _fmt(residual),
                "pass": ok,
            }
            text = json.dumps(doc, indent=2) + "\n"
        else:
            text = _csv_text(
                ["a", "b", "c", "probability"],
                [
                    [str(a), str(b), str(c), _fmt_s(dist.prob(a, b, c))]
                    for a in range(4)
                    for b in range(4)
                    for c in range(4)
                ],
            )
        return (0 if ok else 1), text
    thetas = np.linspace(0.0, math.pi / 2, cfg.grid_steps)
    reports = nonlocality_scan(thetas, cfg.phi)
    if cfg.output_format == "json":
        doc = {
            "command": "network-scan",
            "phi": _fmt(cfg.phi),
            "grid_steps": cfg.grid_steps,
            "bound": _fmt(TRILOCAL_BOUND),
            "points": [
                {
                    "theta": _fmt(r.theta),
                    "p_same": _fmt(r.p_same),
                    "violates": r.violates,
                }
                for r in reports
            ],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = _csv_text(
            ["theta", "p_same", "bound", "violates"],
            [
                [_fmt_s(r.theta), _fmt_s(r.p_same), _fmt_s(r.bound), str(r.violates).lower()]
                for r in reports
            ],
        )
    return 0, text


def cmd_curve(cfg: RunConfig) -> tuple[int, str]:
    thetas = np.linspace(0.0, math.pi / 2, cfg.grid_steps + 1)
    sjm_rows = concurrence_curve("sjm", thetas)
    ejm_rows = concurrence_curve("ejm-family", thetas)
    points = [
        (theta, c_sjm, c_ejm, 0.5)
        for (theta, c_sjm), (_, c_ejm) in zip(sjm_rows, ejm_rows)
    ]
    if cfg.output_format == "json":
        doc = {
            "command": "curve",
            "grid_steps": cfg.grid_steps,
            "points": [
                {
                    "theta": _fmt(t),
                    "c_sjm": _fmt(cs),
                    "c_ejm_family": _fmt(ce),
                    "c_original_ejm": _fmt(co),
                }
                for t, cs, ce, co in points
            ],
        }
        return 0, json.dumps(doc, indent=2) + "\n"
    return 0, _csv_text(
        ["theta", "c_sjm", "c_ejm_family", "c_original_ejm"],
        [[_fmt_s(t), _fmt_s(cs), _fmt_s(ce), _fmt_s(co)] for t, cs, ce, co in points],
    )


def cmd_multiqubit(cfg: RunConfig) -> tuple[int, str]:
    basis = multi_sjm_basis(cfg.n, cfg.params)
    seed_used: int | None = None
    if basis.n >= 8:
        seed_used = cfg.seed if cfg.seed is not None else 0
        check = gram_residual(basis, rng=np.random.default_rng(seed_used))
    else:
        check = gram_residual(basis)
    ok = check.residual <= 1e-10
    reductions = [
        (ks, position, multi_reduction_vector(basis, ks, position))
        for ks in basis.index_tuples()
        for position in range(basis.n)
    ]
    if cfg.output_format == "json":
        doc = {
            "command": "multiqubit",
            "n": cfg.n,
            "theta": _fmt(cfg.theta),
            "phi": _fmt(cfg.phi),
            "gram": {
                "residual": _fmt(check.residual),
                "exhaustive": check.exhaustive,
                "pairs_sampled": check.pairs_sampled,
                "seed": seed_used,
            },
            "reductions": [
                {
                    "index": list(ks),
                    "position": position,
                    "x": _fmt(v[0]),
                    "y": _fmt(v[1]),
                    "z": _fmt(v[2]),
                }
                for ks, position, v in reductions
            ],
            "pass": ok,
        }
        return (0 if ok else 1), json.dumps(doc, indent=2) + "\n"
    text = _csv_text(
        ["index", "position", "x", "y", "z"],
        [
            ["".join(map(str, ks)), str(position), _fmt_s(v[0]), _fmt_s(v[1]), _fmt_s(v[2])]
            for ks, position, v in reductions
        ],
    )
    return (0 if ok else 1), text


_DISPATCH = {
    "basis": cmd_basis,
    "verify": cmd_verify,
    "circuit": cmd_circuit,
    "network": cmd_network,
    "curve": cmd_curve,
    "multiqubit": cmd_multiqubit,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        code, text = _DISPATCH[cfg.command](cfg)
    except ValueError as exc:
        parser.error(str(exc))
    if cfg.output_path is not None:
        with open(cfg.output_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
