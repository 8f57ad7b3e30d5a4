"""Command-line front end.

Four subcommands: ``solve`` reports one level of one system, ``phi``
reports the quantum-number weight and its ingredients, ``table1``
prints the embedded baryon comparison table, and ``scan`` sweeps one
parameter axis and emits CSV.

Exit codes: 0 on success, 2 for configuration or usage problems, 3
when the requested numbers do not exist (no bound state, no stationary
point, weight undefined, and so on).
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from pathlib import Path

from .dos import compute_phi
from .errors import EtkitError, NoBoundState, UnboundRegime
from .et_core import energy
from .model import Bound, QuantumNumbers, SystemSpec, nu_lambda, q_phi
from .systems import (
    BaryonParams,
    ConfinedParams,
    GaussianParams,
    PowerLaw1Params,
    PowerLaw2Params,
    baryon_system,
    bsq_ratio_coeffs,
    confined_system,
    gaussian_system,
    gaussian_y,
    powerlaw1_system,
    powerlaw2_system,
    table1,
)


class ConfigError(Exception):
    """Bad key=value input, from a file or from flags."""


_CONFIG_KEYS = (
    "system",
    "N",
    "D",
    "m",
    "a",
    "b",
    "V0",
    "R",
    "omega",
    "g",
    "k",
    "alpha_s",
    "nu",
    "lambda",
    "n_sum",
    "l_sum",
    "phi",
    "q",
    "ground_shift",
)

_SYSTEM_KEYS = {
    "powerlaw2": {"m", "a", "b"},
    "powerlaw1": {"a", "b"},
    "gaussian": {"m", "V0", "R"},
    "confined": {"m", "omega", "g", "ground_shift"},
    "baryon": {"k", "g", "alpha_s"},
}

_SHARED_KEYS = {"system", "N", "D", "nu", "lambda", "n_sum", "l_sum", "phi", "q"}

# canonical comparison columns: plain weight, recomputed weight, and the
# two fitted constants quoted alongside the embedded table
_TABLE_MODES = (("2", 2.0), ("dos", "dos"), ("1.35", 1.35), ("1.23", 1.23))


def _read_config(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config: {exc}") from exc
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not sep or not key:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in entries:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        if not value:
            raise ConfigError(f"{path}:{lineno}: empty value for key {key!r}")
        entries[key] = value
    return entries


def _collect_settings(args: argparse.Namespace) -> dict[str, str]:
    settings = _read_config(args.config) if args.config else {}
    for key in _CONFIG_KEYS:
        attr = "lam" if key == "lambda" else key
        value = getattr(args, attr, None)
        if value is not None:
            settings[key] = value
    return settings


def _to_float(key: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"{key} must be a number, got {text!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"{key} must be finite, got {text!r}")
    return value


def _to_int(key: str, text: str) -> int:
    value = _to_float(key, text)
    if value != int(value):
        raise ConfigError(f"{key} must be an integer, got {text!r}")
    return int(value)


def _to_bool(key: str, text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "1", "on"):
        return True
    if lowered in ("false", "no", "0", "off"):
        return False
    raise ConfigError(f"{key} must be true or false, got {text!r}")


def _need(settings: dict[str, str], key: str, system: str) -> str:
    value = settings.get(key)
    if value is None:
        raise ConfigError(f"system {system!r} needs parameter {key!r}")
    return value


def _build_system(settings: dict[str, str]):
    """Returns (name, params, spec, N, D, extras)."""
    name = settings.get("system")
    if name is None:
        raise ConfigError("no system chosen; set system=<name>")
    if name not in _SYSTEM_KEYS:
        known = ", ".join(sorted(_SYSTEM_KEYS))
        raise ConfigError(f"unknown system {name!r}; choose one of {known}")
    for key in settings:
        if key not in _SHARED_KEYS and key not in _SYSTEM_KEYS[name]:
            raise ConfigError(f"parameter {key!r} does not apply to system {name!r}")

    n_body = _to_int("N", _need(settings, "N", name))
    dim = _to_int("D", settings.get("D", "3"))
    if n_body < 2:
        raise ConfigError(f"N must be at least 2, got {n_body}")
    if dim < 2:
        raise ConfigError(f"D must be at least 2, got {dim}")

    extras: dict[str, object] = {}
    if name == "powerlaw2":
        params = PowerLaw2Params(
            m=_to_float("m", _need(settings, "m", name)),
            a=_to_float("a", _need(settings, "a", name)),
            b=_to_float("b", _need(settings, "b", name)),
        )
        spec = powerlaw2_system(params, n_body, dim)
    elif name == "powerlaw1":
        params = PowerLaw1Params(
            a=_to_float("a", _need(settings, "a", name)),
            b=_to_float("b", _need(settings, "b", name)),
        )
        spec = powerlaw1_system(params, n_body, dim)
    elif name == "gaussian":
        params = GaussianParams(
            m=_to_float("m", _need(settings, "m", name)),
            V0=_to_float("V0", _need(settings, "V0", name)),
            R=_to_float("R", _need(settings, "R", name)),
        )
        spec = gaussian_system(params, n_body, dim)
    elif name == "confined":
        params = ConfinedParams(
            m=_to_float("m", _need(settings, "m", name)),
            omega=_to_float("omega", _need(settings, "omega", name)),
            g=_to_float("g", _need(settings, "g", name)),
        )
        spec = confined_system(params, n_body, dim)
        if "ground_shift" in settings:
            extras["ground_shift"] = _to_bool("ground_shift", settings["ground_shift"])
    else:
        tension = _to_float("k", _need(settings, "k", name))
        if "g" in settings and "alpha_s" in settings:
            raise ConfigError("give either g or alpha_s for the baryon system, not both")
        if "g" in settings:
            params = BaryonParams(tension_k=tension, g=_to_float("g", settings["g"]))
        elif "alpha_s" in settings:
            params = BaryonParams.from_alpha_s(
                tension_k=tension, alpha_s=_to_float("alpha_s", settings["alpha_s"])
            )
        else:
            raise ConfigError("the baryon system needs g or alpha_s")
        spec = baryon_system(params, n_body, dim)
    return name, params, spec, n_body, dim, extras


def _quantum_input(settings: dict[str, str], spec: SystemSpec):
    """Returns ("q", q) or ("nl", (nu, lam)) from exactly one input form."""
    has_q = "q" in settings
    has_nl = "nu" in settings or "lambda" in settings
    has_sums = "n_sum" in settings or "l_sum" in settings
    if has_q + has_nl + has_sums != 1:
        raise ConfigError(
            "give exactly one of: q, (nu and lambda), or (n_sum and l_sum)"
        )
    if has_q:
        q = _to_float("q", settings["q"])
        if q <= 0.0:
            raise ConfigError(f"q must be positive, got {q}")
        return "q", q
    if has_nl:
        if "nu" not in settings or "lambda" not in settings:
            raise ConfigError("nu and lambda must be given together")
        nu = _to_float("nu", settings["nu"])
        lam = _to_float("lambda", settings["lambda"])
        if nu <= 0.0:
            raise ConfigError(f"nu must be positive, got {nu}")
        if lam < 0.0:
            raise ConfigError(f"lambda must be non-negative, got {lam}")
        return "nl", (nu, lam)
    if "n_sum" not in settings or "l_sum" not in settings:
        raise ConfigError("n_sum and l_sum must be given together")
    n_sum = _to_int("n_sum", settings["n_sum"])
    l_sum = _to_int("l_sum", settings["l_sum"])
    if n_sum < 0 or l_sum < 0:
        raise ConfigError("n_sum and l_sum must be non-negative")
    qn = QuantumNumbers.from_sums(n_sum, l_sum)
    return "nl", nu_lambda(qn, spec)


def _stage_guard(name: str, params, n_body: int, q: float) -> None:
    # map "no stationary point" onto its physical cause before solving
    if name == "gaussian":
        y = gaussian_y(params, n_body, q)
        if y < -math.exp(-1.0):
            raise NoBoundState(
                f"gaussian system does not bind at q={q:.6g}: scaled number "
                f"{y:.6g} lies below -1/e"
            )
    elif name == "baryon":
        cn = n_body * (n_body - 1.0) / 2.0
        if n_body * q - cn**1.5 * params.g <= 0.0:
            raise UnboundRegime(
                f"baryon stationary point does not exist at q={q:.6g}: the "
                f"pair attraction outweighs the confinement"
            )


def _phi_setting(settings: dict[str, str]):
    text = settings.get("phi", "2")
    if text == "dos":
        return "dos"
    value = _to_float("phi", text)
    if value <= 0.0:
        raise ConfigError(f"phi must be positive, got {value}")
    return value


def _solve_report(settings: dict[str, str]) -> list[str]:
    name, params, spec, n_body, dim, extras = _build_system(settings)
    mode = _phi_setting(settings)
    form, data = _quantum_input(settings, spec)

    if mode != 2.0 and form == "q":
        raise ConfigError(
            "phi weighting needs nu/lambda or n_sum/l_sum input, not q"
        )

    if form == "q":
        q_used = float(data)
        phi_used = 2.0
        _stage_guard(name, params, n_body, q_used)
        sol = energy(spec, q_used)
        bound = sol.bound
    else:
        nu, lam = data
        if mode == "dos":
            _stage_guard(name, params, n_body, float(lam))
            pres = compute_phi(spec, float(lam))
            phi_used = pres.phi
        else:
            phi_used = float(mode)
        q_used = float(q_phi(nu, lam, phi_used))
        _stage_guard(name, params, n_body, q_used)
        sol = energy(spec, q_used)
        bound = sol.bound if phi_used == 2.0 else Bound.NONE

    e_out = sol.E
    if extras.get("ground_shift"):
        e_out += 1.5 * params.omega

    return [
        f"system = {name}",
        f"N = {n_body}",
        f"D = {dim}",
        f"phi = {phi_used:.12g}",
        f"Q = {q_used:.12g}",
        f"E = {e_out:.12g}",
        f"r0 = {sol.r0:.12g}",
        f"p0 = {sol.p0:.12g}",
        f"bound = {bound.name.lower()}",
    ]


def _phi_report(settings: dict[str, str]) -> list[str]:
    settings = {k: v for k, v in settings.items() if k != "phi"}
    name, params, spec, n_body, dim, _ = _build_system(settings)
    form, data = _quantum_input(settings, spec)
    if form == "q":
        raise ConfigError("the weight needs nu/lambda or n_sum/l_sum input, not q")
    nu, lam = data
    _stage_guard(name, params, n_body, float(lam))
    pres = compute_phi(spec, float(lam))
    return [
        f"system = {name}",
        f"N = {n_body}",
        f"D = {dim}",
        f"nu = {float(nu):.12g}",
        f"lambda = {float(lam):.12g}",
        f"phi = {pres.phi:.12g}",
        f"a_sq = {pres.a_sq:.12g}",
        f"b_n = {pres.b_n:.12g}",
        f"b_d = {pres.b_d:.12g}",
        f"r0_at_lambda = {pres.r0_at_lam:.12g}",
    ]


def _table_modes(mode_text: str):
    if mode_text == "all":
        return list(_TABLE_MODES)
    if mode_text == "dos":
        return [("dos", "dos")]
    value = _to_float("phi", mode_text)
    if value <= 0.0:
        raise ConfigError(f"phi must be positive, got {value}")
    return [(mode_text, value)]


def _table_csv(results) -> str:
    lines = ["mode,n_sum,l_sum,exact,energy,phi_used"]
    for mode_id, result in results:
        for row in result.rows:
            lines.append(
                f"{mode_id},{row.n_sum},{row.l_sum},{row.exact:.3f},"
                f"{row.E:.12g},{row.phi:.12g}"
            )
    return "\n".join(lines) + "\n"


def _table_pretty(results) -> str:
    labels = [f"phi={mode_id}" for mode_id, _ in results]
    head = f"{'n_sum':>5}{'l_sum':>7}{'exact':>9}" + "".join(
        f"{label:>10}" for label in labels
    )
    lines = [head]
    first = results[0][1]
    for idx, row in enumerate(first.rows):
        cells = "".join(f"{res.rows[idx].E:>10.3f}" for _, res in results)
        lines.append(f"{row.n_sum:>5d}{row.l_sum:>7d}{row.exact:>9.3f}" + cells)
    for label, field in (
        ("mean rel err (%)", "delta"),
        ("  l_sum=0 rows (%)", "delta_l0"),
        ("  l_sum>0 rows (%)", "delta_rest"),
    ):
        cells = "".join(
            f"{100.0 * getattr(res, field):>10.1f}" for _, res in results
        )
        lines.append(f"{label:<21}" + cells)
    return "\n".join(lines) + "\n"


def _run_table1(args: argparse.Namespace) -> int:
    modes = _table_modes(args.phi)
    results = [(mode_id, table1(phi_mode=mode)) for mode_id, mode in modes]
    if args.csv:
        Path(args.csv).write_text(_table_csv(results))
    else:
        sys.stdout.write(_table_pretty(results))
    return 0


def _parse_grid(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be START:STOP:COUNT, got {text!r}")
    start = _to_float("grid start", parts[0])
    stop = _to_float("grid stop", parts[1])
    try:
        count = int(parts[2])
    except ValueError:
        raise ConfigError(f"grid count must be an integer, got {parts[2]!r}") from None
    if count < 1:
        raise ConfigError(f"grid count must be at least 1, got {count}")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def _scan_rows(args: argparse.Namespace, settings: dict[str, str]):
    axis = args.axis
    grid = _parse_grid(args.grid)
    base = dict(settings)
    base.pop("phi", None)

    with_ratio = False
    if axis == "b":
        if base.get("system") not in ("powerlaw2", "powerlaw1"):
            raise ConfigError("axis b applies to the power-law systems only")
        with_ratio = base.get("system") == "powerlaw2" and all(x > 0.0 for x in grid)
    if axis == "N":
        if "n_sum" not in base or "l_sum" not in base:
            raise ConfigError("axis N needs n_sum and l_sum so the collective "
                              "numbers can follow the particle count")
        for key in ("nu", "lambda", "q"):
            if key in base:
                raise ConfigError(f"axis N cannot be combined with {key!r}")
    if axis == "lambda":
        if "nu" not in base:
            raise ConfigError("axis lambda needs nu")
        for key in ("lambda", "n_sum", "l_sum", "q"):
            if key in base:
                raise ConfigError(f"axis lambda cannot be combined with {key!r}")

    header = [axis, "E_phi2", "E_dos", "phi_dos"]
    if with_ratio:
        header += ["c1", "c2", "delta"]

    rows = []
    for x in grid:
        point = dict(base)
        if axis == "N":
            if abs(x - round(x)) > 1e-9 or round(x) < 2:
                raise ConfigError(f"axis N needs whole numbers >= 2, got {x:g}")
            point["N"] = str(int(round(x)))
            axis_cell = str(int(round(x)))
        elif axis == "b":
            point["b"] = repr(x)
            axis_cell = f"{x:.12g}"
        else:
            axis_cell = f"{x:.12g}"

        name, params, spec, n_body, _, extras = _build_system(point)
        if axis == "lambda":
            nu = _to_float("nu", point["nu"])
            if nu <= 0.0:
                raise ConfigError(f"nu must be positive, got {nu}")
            lam = x
            if lam < 0.0:
                raise ConfigError(f"grid lambda must be non-negative, got {lam:g}")
        else:
            form, data = _quantum_input(point, spec)
            if form == "q":
                raise ConfigError("scan needs nu/lambda or n_sum/l_sum input, not q")
            nu, lam = data

        shift = 1.5 * params.omega if extras.get("ground_shift") else 0.0

        q_plain = float(q_phi(nu, lam, 2.0))
        _stage_guard(name, params, n_body, q_plain)
        e_plain = energy(spec, q_plain).E + shift

        _stage_guard(name, params, n_body, float(lam))
        pres = compute_phi(spec, float(lam))
        q_imp = float(q_phi(nu, lam, pres.phi))
        _stage_guard(name, params, n_body, q_imp)
        e_imp = energy(spec, q_imp).E + shift

        cells = [axis_cell, f"{e_plain:.12g}", f"{e_imp:.12g}", f"{pres.phi:.12g}"]
        if with_ratio:
            c1, c2, delta = bsq_ratio_coeffs(x)
            cells += [f"{c1:.12g}", f"{c2:.12g}", f"{delta:.12g}"]
        rows.append(cells)
    return header, rows


def _run_scan(args: argparse.Namespace) -> int:
    settings = _collect_settings(args)
    header, rows = _scan_rows(args, settings)
    text = "\n".join([",".join(header)] + [",".join(row) for row in rows]) + "\n"
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="key=value parameter file")
    parser.add_argument("--system", help="one of " + ", ".join(sorted(_SYSTEM_KEYS)))
    parser.add_argument("--N", help="number of particles")
    parser.add_argument("--D", help="space dimension (default 3)")
    parser.add_argument("--m", help="particle mass")
    parser.add_argument("--a", help="interaction strength")
    parser.add_argument("--b", help="power-law exponent")
    parser.add_argument("--V0", help="gaussian well depth")
    parser.add_argument("--R", help="gaussian well range")
    parser.add_argument("--omega", help="oscillator frequency")
    parser.add_argument("--g", help="pair Coulomb strength")
    parser.add_argument("--k", help="linear confinement tension")
    parser.add_argument("--alpha-s", dest="alpha_s", help="strong coupling, g = 2 alpha_s / 3")
    parser.add_argument("--nu", help="collective radial number")
    parser.add_argument("--lambda", dest="lam", help="collective orbital number")
    parser.add_argument("--n-sum", dest="n_sum", help="sum of radial quantum numbers")
    parser.add_argument("--l-sum", dest="l_sum", help="sum of orbital quantum numbers")
    parser.add_argument("--phi", help="weight: a positive number, or 'dos' to derive it")
    parser.add_argument("--q", help="collective number used directly with phi=2")
    parser.add_argument("--ground-shift", dest="ground_shift",
                        help="true/false: add the 3 omega / 2 offset (confined only)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="etkit",
        description="Eigenvalue estimates for N-body Hamiltonians with "
                    "identical particles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="energy of one level of one system")
    _add_param_flags(p_solve)

    p_phi = sub.add_parser("phi", help="quantum-number weight and its ingredients")
    _add_param_flags(p_phi)

    p_table = sub.add_parser("table1", help="embedded baryon comparison table")
    p_table.add_argument("--phi", default="all",
                         help="'all', 'dos', or a positive number (default all)")
    p_table.add_argument("--csv", metavar="PATH", help="write CSV instead of a table")

    p_scan = sub.add_parser("scan", help="sweep one axis, emit CSV")
    _add_param_flags(p_scan)
    p_scan.add_argument("--axis", required=True, choices=("N", "b", "lambda"),
                        help="swept parameter")
    p_scan.add_argument("--grid", required=True, metavar="START:STOP:COUNT",
                        help="evenly spaced sweep values")
    p_scan.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            for line in _solve_report(_collect_settings(args)):
                print(line)
            return 0
        if args.command == "phi":
            for line in _phi_report(_collect_settings(args)):
                print(line)
            return 0
        if args.command == "table1":
            return _run_table1(args)
        return _run_scan(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except EtkitError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
