"""Command-line interface.

Subcommands:

    coherence       evaluate coherence measures at a state
    evolve          push a state through n channel iterations
    decay-curve     decay rates over a p grid, written as CSV
    frozen-surface  frozen-coherence point cloud, written as CSV or PLY
    verify          deterministic self-check of all dual-route computations

Exit codes: 0 success, 1 invalid input or usage, 2 internal numerical error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from typing import Callable, Sequence

import numpy as np

from .channels import (
    ChannelKind,
    CoefficientMapMode,
    apply_n,
    coefficient_map,
    kraus_set,
    single_parameter_kraus_set,
)
from .coherence import Measure, closed_measure, matrix_measure
from .decay import DecayQuery, Engine, decay_rate
from .errors import (
    CoherenceLabError,
    ParameterRangeError,
    ValidationError,
)
from .sampling import Lcg, random_physical_state, sample_states
from .scan import DecayCurve, SurfacePointCloud, decay_curve, frozen_surface
from .states import BellCoefficients, from_density_matrix, is_physical, to_density_matrix

P_CLAMP = 1e-12

VERIFY_MEASURE_TOL = 1e-9
VERIFY_MAP_TOL = 1e-9
VERIFY_RESIDUAL_TOL = 1e-10
VERIFY_ENGINE_TOL = 1e-8


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D401 - argparse hook
        raise _UsageError(message)


def _parse_state(text: str) -> BellCoefficients:
    c = BellCoefficients.from_text(text)
    if not is_physical(c):
        raise ValidationError(
            f"state {text!r} lies outside the physical tetrahedron with vertices "
            "(1,-1,1), (-1,1,1), (1,1,-1), (-1,-1,-1)"
        )
    return c


def _clamped_probability(name: str, value: float) -> float:
    if not np.isfinite(value) or value < 0.0 or value > 1.0:
        raise ParameterRangeError(f"{name} must lie in [0, 1], got {value!r}")
    if value == 0.0:
        print(f"warning: {name}=0 clamped to {P_CLAMP:g}", file=sys.stderr)
        return P_CLAMP
    if value == 1.0:
        print(f"warning: {name}=1 clamped to 1-{P_CLAMP:g}", file=sys.stderr)
        return 1.0 - P_CLAMP
    return value


def _parse_n_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"could not parse iteration list from {text!r}") from exc
    if not values or any(n < 1 for n in values):
        raise ValidationError(f"iteration list must contain positive integers, got {text!r}")
    return values


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".coherence-lab-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        _atomic_write(path, text)


def _curve_csv(curve: DecayCurve) -> str:
    header = "p," + ",".join(f"n={n}" for n in curve.n_list)
    lines = [header]
    for p, row in zip(curve.p_values, curve.rates):
        lines.append(",".join(f"{v:.9g}" for v in (p, *row)))
    return "\n".join(lines) + "\n"


def _metadata_comment(cloud: SurfacePointCloud) -> str:
    pairs = ", ".join(f"{key}={value:.9g}" if isinstance(value, float) else f"{key}={value}"
                      for key, value in cloud.metadata().items())
    return pairs


def _cloud_csv(cloud: SurfacePointCloud) -> str:
    lines = [f"# {_metadata_comment(cloud)}", "c1,c2,c3"]
    for c1, c2, c3 in cloud.points:
        lines.append(f"{c1:.9g},{c2:.9g},{c3:.9g}")
    return "\n".join(lines) + "\n"


def _cloud_ply(cloud: SurfacePointCloud) -> str:
    lines = [
        "ply",
        "format ascii 1.0",
        f"comment {_metadata_comment(cloud)}",
        f"element vertex {len(cloud.points)}",
        "property float x",
        "property float y",
        "property float z",
        "end_header",
    ]
    for c1, c2, c3 in cloud.points:
        lines.append(f"{c1:.9g} {c2:.9g} {c3:.9g}")
    return "\n".join(lines) + "\n"


def _print_measure_triple(value_of: Callable[[Measure], float]) -> None:
    for measure in Measure:
        print(f"{measure.value} = {value_of(measure):.12g}")


def _cmd_coherence(args: argparse.Namespace) -> int:
    state = _parse_state(args.state)
    if args.measure is not None:
        print(f"{closed_measure(Measure(args.measure), state):.12g}")
    else:
        _print_measure_triple(lambda m: closed_measure(m, state))
    return 0


def _cmd_evolve(args: argparse.Namespace) -> int:
    state = _parse_state(args.state)
    kind = ChannelKind(args.channel)
    mode = CoefficientMapMode(args.coeff_map)
    p = _clamped_probability("p", args.p)
    if args.method == "closed-form":
        if args.gamma is not None:
            raise ValidationError("--gamma requires --method kraus (two-parameter gad)")
        evolved = coefficient_map(kind, p, args.n, state, mode)
        print(f"state: {evolved.c1:.12g},{evolved.c2:.12g},{evolved.c3:.12g}")
        print("residual: 0")
        _print_measure_triple(lambda m: closed_measure(m, evolved))
        return 0
    if args.gamma is not None:
        gamma = _clamped_probability("gamma", args.gamma)
        kset = kraus_set(kind, p, gamma)
    else:
        kset = single_parameter_kraus_set(kind, p)
    rho = apply_n(to_density_matrix(state), kset, args.n)
    evolved, residual = from_density_matrix(rho)
    print(f"state: {evolved.c1:.12g},{evolved.c2:.12g},{evolved.c3:.12g}")
    print(f"residual: {residual:.3e}")
    _print_measure_triple(lambda m: matrix_measure(m, rho))
    return 0


def _cmd_decay_curve(args: argparse.Namespace) -> int:
    curve = decay_curve(
        ChannelKind(args.channel),
        Measure(args.measure),
        _parse_state(args.state),
        _parse_n_list(args.n_list),
        p_count=args.grid,
        mode=CoefficientMapMode(args.coeff_map),
    )
    _emit(args.out, _curve_csv(curve))
    if args.out is not None:
        print(f"wrote {args.out}: {len(curve.p_values)} p values x {len(curve.n_list)} n values")
    return 0


def _cmd_frozen_surface(args: argparse.Namespace) -> int:
    cloud = frozen_surface(
        ChannelKind(args.channel),
        Measure(args.measure),
        _clamped_probability("p", args.p),
        args.n,
        grid_res=args.grid,
        tol=args.tol,
        min_coherence=args.min_coherence,
        mode=CoefficientMapMode(args.coeff_map),
    )
    render = _cloud_ply if args.format == "ply" else _cloud_csv
    _emit(args.out, render(cloud))
    if args.out is not None:
        print(f"wrote {args.out}: points={len(cloud.points)} components={cloud.components}")
    return 0


def _verify_measures(seed: int, trials: int) -> tuple[bool, list[str]]:
    worst = {measure: 0.0 for measure in Measure}
    for state in sample_states(seed, trials):
        rho = to_density_matrix(state)
        for measure in Measure:
            dev = abs(closed_measure(measure, state) - matrix_measure(measure, rho))
            worst[measure] = max(worst[measure], dev)
    ok = all(dev <= VERIFY_MEASURE_TOL for dev in worst.values())
    lines = [
        f"  closed vs matrix [{measure.value}]: max dev {worst[measure]:.3e} "
        f"(tol {VERIFY_MEASURE_TOL:.0e})"
        for measure in Measure
    ]
    return ok, lines


def _verify_coefficient_maps(seed: int) -> tuple[bool, list[str]]:
    rng = Lcg(seed + 1)
    worst_map = 0.0
    worst_residual = 0.0
    worst_paper_gap = 0.0
    for kind in ChannelKind:
        for p in (0.1, 0.3, 0.5, 0.7, 0.9):
            for n in (1, 2, 5, 9):
                for _ in range(3):
                    state = random_physical_state(rng)
                    mapped = coefficient_map(kind, p, n, state)
                    kset = single_parameter_kraus_set(kind, p)
                    extracted, residual = from_density_matrix(
                        apply_n(to_density_matrix(state), kset, n)
                    )
                    dev = max(abs(a - b) for a, b in zip(mapped, extracted))
                    worst_map = max(worst_map, dev)
                    worst_residual = max(worst_residual, residual)
                    if kind is ChannelKind.DEPOLARIZING:
                        paper = coefficient_map(kind, p, n, state, CoefficientMapMode.PAPER)
                        gap = max(abs(a - b) for a, b in zip(paper, extracted))
                        worst_paper_gap = max(worst_paper_gap, gap)
    ok = worst_map <= VERIFY_MAP_TOL and worst_residual <= VERIFY_RESIDUAL_TOL
    lines = [
        f"  coefficient map vs Kraus route: max dev {worst_map:.3e} (tol {VERIFY_MAP_TOL:.0e})",
        f"  Bell-diagonal extraction residual: max {worst_residual:.3e} "
        f"(tol {VERIFY_RESIDUAL_TOL:.0e})",
        f"  info: dep paper-mode gap vs Kraus route: {worst_paper_gap:.3e} "
        "(single- vs squared-contraction; not scored)",
    ]
    return ok, lines


def _verify_engines(seed: int, trials: int) -> tuple[bool, list[str]]:
    rng = Lcg(seed + 2)
    kinds = list(ChannelKind)
    measures = list(Measure)
    worst = 0.0
    for index in range(trials):
        # l1 floor keeps the ratio denominator well conditioned
        state = random_physical_state(rng, min_l1=1e-2)
        kind = kinds[index % len(kinds)]
        measure = measures[index % len(measures)]
        p = rng.next_in(0.05, 0.95)
        n = 1 + (index % 12)
        closed = decay_rate(DecayQuery(state, measure, kind, p, n))
        oracle = decay_rate(
            DecayQuery(state, measure, kind, p, n, engine=Engine.MATRIX_ORACLE)
        )
        worst = max(worst, abs(closed - oracle))
    ok = worst <= VERIFY_ENGINE_TOL
    lines = [
        f"  closed-form vs matrix-oracle decay rate: max dev {worst:.3e} "
        f"(tol {VERIFY_ENGINE_TOL:.0e}, states drawn with l1 >= 1e-2)"
    ]
    return ok, lines


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise ParameterRangeError(f"--trials must be positive, got {args.trials}")
    suites = (
        ("coherence measures", lambda: _verify_measures(args.seed, args.trials)),
        ("coefficient maps", lambda: _verify_coefficient_maps(args.seed)),
        ("decay engines", lambda: _verify_engines(args.seed, args.trials)),
    )
    all_ok = True
    print(f"verify: seed={args.seed} trials={args.trials}")
    for name, run in suites:
        ok, lines = run()
        all_ok = all_ok and ok
        print(f"suite {name}: {'PASS' if ok else 'FAIL'}")
        for line in lines:
            print(line)
    print(f"verify: {'PASS' if all_ok else 'FAIL'}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coherence-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    channel_kwargs = dict(choices=[k.value for k in ChannelKind], required=True)
    measure_choices = [m.value for m in Measure]
    map_kwargs = dict(
        choices=[m.value for m in CoefficientMapMode],
        default=CoefficientMapMode.DERIVED.value,
        help="dep contraction convention (default: derived)",
    )

    p_coh = sub.add_parser("coherence", help="coherence measures at a state")
    p_coh.add_argument("state", help="coefficients 'c1,c2,c3'")
    p_coh.add_argument("--measure", choices=measure_choices, default=None,
                       help="one measure (default: print all three)")
    p_coh.set_defaults(func=_cmd_coherence)

    p_evo = sub.add_parser("evolve", help="apply n channel iterations to a state")
    p_evo.add_argument("--channel", **channel_kwargs)
    p_evo.add_argument("--p", type=float, required=True)
    p_evo.add_argument("--gamma", type=float, default=None,
                       help="gad damping (kraus method only; p becomes the mixing weight)")
    p_evo.add_argument("--n", type=int, required=True)
    p_evo.add_argument("--state", required=True)
    p_evo.add_argument("--method", choices=["closed-form", "kraus"], default="closed-form")
    p_evo.add_argument("--coeff-map", **map_kwargs)
    p_evo.set_defaults(func=_cmd_evolve)

    p_cur = sub.add_parser("decay-curve", help="decay rates over a p grid (CSV)")
    p_cur.add_argument("--channel", **channel_kwargs)
    p_cur.add_argument("--measure", choices=measure_choices, required=True)
    p_cur.add_argument("--state", required=True)
    p_cur.add_argument("--n-list", required=True, help="comma-separated iteration counts")
    p_cur.add_argument("--grid", type=int, default=99,
                       help="number of interior p values k/(grid+1) (default: 99)")
    p_cur.add_argument("--coeff-map", **map_kwargs)
    p_cur.add_argument("--out", default=None, help="output path (default: stdout)")
    p_cur.set_defaults(func=_cmd_decay_curve)

    p_sur = sub.add_parser("frozen-surface", help="frozen-coherence point cloud (CSV or PLY)")
    p_sur.add_argument("--channel", **channel_kwargs)
    p_sur.add_argument("--measure", choices=measure_choices, required=True)
    p_sur.add_argument("--p", type=float, required=True)
    p_sur.add_argument("--n", type=int, required=True)
    p_sur.add_argument("--grid", type=int, default=101, help="lattice points per axis (odd)")
    p_sur.add_argument("--tol", type=float, default=1e-3, help="freezing tolerance on |R-1|")
    p_sur.add_argument("--min-coherence", type=float, default=1e-4,
                       help="initial-coherence floor")
    p_sur.add_argument("--coeff-map", **map_kwargs)
    p_sur.add_argument("--format", choices=["csv", "ply"], default="csv")
    p_sur.add_argument("--out", default=None, help="output path (default: stdout)")
    p_sur.set_defaults(func=_cmd_frozen_surface)

    p_ver = sub.add_parser("verify", help="deterministic dual-route self-check")
    p_ver.add_argument("--seed", type=int, default=42)
    p_ver.add_argument("--trials", type=int, default=1000)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CoherenceLabError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
