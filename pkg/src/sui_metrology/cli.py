"""Command-line front end.

Exit codes: 0 success, 2 configuration error, 3 numerical-validity error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields
from typing import Optional, Sequence

import numpy as np

from . import oracle
from .gaussian import PhysicalityError
from .schemes import (
    ConfigError,
    SchemeConfig,
    load_catalogue,
    run_scheme,
)
from .spectrum import SpectrumOptions, synthesize

RESULT_SCHEMA_VERSION = 1
NO_SIGNAL = "no-signal"
EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4

CONFIG_KEYS = [f.name for f in fields(SchemeConfig)]
SWEEPABLE = [
    "g1_power_gain", "g2_power_gain", "pump_phase_2_rad", "i_ps_photons", "delta_rad", "epsilon",
    "eta_transmission", "eta_det_s", "eta_det_i", "eta_det", "eta_mismatch", "k_i",
]


@dataclass
class RunSpec:
    config: SchemeConfig
    command: str = "run"
    out: Optional[str] = None
    fmt: str = "csv"
    seed: int = oracle.DEFAULT_SEED
    sweep_axis: Optional[str] = None
    sweep_values: list = field(default_factory=list)
    spectrum: Optional[SpectrumOptions] = None

    def to_mapping(self) -> dict:
        return {
            "command": self.command,
            "format": self.fmt,
            "seed": self.seed,
            "config": self.config.to_mapping(),
            "sweep_axis": self.sweep_axis,
            "sweep_values": list(self.sweep_values),
            "spectrum": None if self.spectrum is None else vars(self.spectrum).copy(),
        }

    @classmethod
    def from_mapping(cls, data: dict) -> "RunSpec":
        spec = data.get("spectrum")
        return cls(
            config=SchemeConfig.from_mapping(data["config"]),
            command=data["command"],
            fmt=data["format"],
            seed=int(data["seed"]),
            sweep_axis=data.get("sweep_axis"),
            sweep_values=[float(v) for v in data.get("sweep_values") or []],
            spectrum=None if spec is None else SpectrumOptions(**spec),
        )


# ---------------------------------------------------------------------------
# value formatting


def fmt_number(value) -> str:
    """Locale-free text for one CSV cell; floats keep 12 significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return NO_SIGNAL if value < 0 else "inf"
        return format(float(value), ".12g")
    return str(value)


def _json_safe(value):
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (np.floating, np.integer)):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return fmt_number(value)
    return value


def result_record(result) -> dict:
    rec = result.to_record()
    present = bool(np.any(result.signals))
    rec["signal_present"] = present
    if not present:
        for port in result.ports:
            for suffix in ("snr_db", "improvement_db", "improvement_lossy_db"):
                rec[f"{port}_{suffix}"] = NO_SIGNAL
        rec["improvement_db"] = NO_SIGNAL
    port = rec["closed_form_port"]
    rec["closed_form_port_improvement"] = result.improvement(port) if present else None
    return rec


def tap_record(result) -> dict:
    tr = result.transfer
    rec = {"kind": result.config.kind}
    for key in ("g1_power_gain", "g2_power_gain", "eta_transmission", "eta_mismatch", "eta_det_s", "eta_det_i"):
        rec[key] = getattr(result.config, key)
    rec.update(tr.as_dict())
    for key in ("snr_in", "snr_s", "snr_i"):
        rec[f"{key}_db"] = 10 * math.log10(tr.as_dict()[key])
    return rec


def write_table(rows: list, spec: RunSpec, stream) -> None:
    if spec.fmt == "json":
        doc = {"schema_version": RESULT_SCHEMA_VERSION, "run": spec.to_mapping(), "results": rows}
        json.dump(_json_safe(doc), stream, indent=2, sort_keys=False)
        stream.write("\n")
        return
    header = ["schema_version", "command", "seed"]
    extra = [k for k in rows[0] if k not in header] if rows else []
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header + extra)
    for row in rows:
        writer.writerow([RESULT_SCHEMA_VERSION, spec.command, spec.seed] + [fmt_number(row.get(k)) for k in extra])


def _parse_cell(text: str):
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    if text == NO_SIGNAL:
        return -math.inf
    try:
        return float(text)
    except ValueError:
        return text


def read_results(path: str) -> list:
    """Re-read a ``run``/``sweep`` output file as ``(RunSpec, record)`` pairs."""
    with open(path, newline="") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        if doc.get("schema_version") != RESULT_SCHEMA_VERSION:
            raise ValueError(f"unsupported result schema {doc.get('schema_version')!r}")
        base = RunSpec.from_mapping(doc["run"])
        pairs = []
        for rec in doc["results"]:
            cfg = {k: rec[k] for k in CONFIG_KEYS if k in rec}
            config = SchemeConfig.from_mapping(cfg) if "kind" in cfg and len(cfg) > 1 else base.config
            pairs.append((RunSpec(config, base.command, None, base.fmt, base.seed, base.sweep_axis,
                                  base.sweep_values, base.spectrum), rec))
        return pairs
    pairs = []
    for row in csv.DictReader(io.StringIO(text)):
        if int(row["schema_version"]) != RESULT_SCHEMA_VERSION:
            raise ValueError(f"unsupported result schema {row['schema_version']!r}")
        cfg = {k: row[k] for k in CONFIG_KEYS if k in row}
        if cfg.get("pump_phase_2_rad") == "":
            cfg["pump_phase_2_rad"] = None
        rec = {k: _parse_cell(v) for k, v in row.items() if k not in ("schema_version", "command", "seed")}
        spec = RunSpec(SchemeConfig.from_mapping(cfg), row["command"], None, "csv", int(row["seed"]))
        pairs.append((spec, rec))
    return pairs


# ---------------------------------------------------------------------------
# commands


def build_config(args) -> SchemeConfig:
    data = {}
    if args.preset:
        presets = load_catalogue()
        if args.preset not in presets:
            raise ConfigError("preset", f"unknown preset {args.preset!r}; known: {sorted(presets)}")
        data.update(presets[args.preset]["config"])
    if args.config:
        with open(args.config) as fh:
            loaded = json.load(fh)
        if not isinstance(loaded, dict):
            raise ConfigError("config", "config file must hold a flat JSON object")
        data.update(loaded)
    for item in args.set or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(key or "set", "override must look like key=value")
        key = key.strip()
        if key == "delta_rad":
            data.pop("target_classical_snr_db", None)
        if key == "target_classical_snr_db":
            data.pop("delta_rad", None)
        data[key] = value.strip()
    if not data:
        raise ConfigError("config", "give --preset, --config or --set kind=...")
    return SchemeConfig.from_mapping(data)


def sweep_values(args) -> list:
    if args.values:
        try:
            values = [float(v) for v in args.values.split(",") if v.strip()]
        except ValueError:
            raise ConfigError("values", f"cannot parse {args.values!r}") from None
    elif None not in (args.start, args.stop, args.step):
        if not all(math.isfinite(v) for v in (args.start, args.stop, args.step)):
            raise ConfigError("step", "sweep range must be finite")
        if args.step <= 0 or args.stop < args.start:
            raise ConfigError("step", "sweep range is empty")
        n = int(math.floor((args.stop - args.start) / args.step + 1e-9)) + 1
        values = [args.start + i * args.step for i in range(n)]
    else:
        raise ConfigError("values", "give --values or --start/--stop/--step")
    if not values:
        raise ConfigError("values", "sweep range is empty")
    if not all(math.isfinite(v) for v in values):
        raise ConfigError("values", "sweep values must be finite")
    return values


def _with_axis(config: SchemeConfig, axis: str, value: float) -> SchemeConfig:
    data = config.to_mapping()
    if axis == "eta_det":
        data["eta_det_s"] = data["eta_det_i"] = value
    else:
        data[axis] = value
    return SchemeConfig.from_mapping(data)


def cmd_run(args, out) -> int:
    config = build_config(args)
    spec = RunSpec(config, "run", args.out, args.format, args.seed)
    write_table([result_record(run_scheme(config))], spec, out)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    config = build_config(args)
    if args.axis not in SWEEPABLE:
        raise ConfigError("axis", f"unknown or non-numeric field {args.axis!r}; sweepable: {SWEEPABLE}")
    values = sweep_values(args)
    configs = [_with_axis(config, args.axis, v) for v in values]
    # map keeps point order whatever the completion order
    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        results = list(pool.map(run_scheme, configs))
    rows = []
    for value, result in zip(values, results):
        rec = {"sweep_axis": args.axis, "sweep_value": value}
        rec.update(result_record(result))
        rows.append(rec)
    spec = RunSpec(config, "sweep", args.out, args.format, args.seed, args.axis, values)
    write_table(rows, spec, out)
    return EXIT_OK


def cmd_tap(args, out) -> int:
    config = build_config(args)
    if config.kind != "dual_beam_sui":
        raise ConfigError("kind", "tap needs a dual_beam_sui configuration")
    result = run_scheme(config)
    if result.transfer is None:
        raise ConfigError("delta_rad", "tap needs a non-zero phase modulation")
    spec = RunSpec(config, "tap", args.out, args.format, args.seed)
    write_table([tap_record(result)], spec, out)
    return EXIT_OK


def cmd_spectrum(args, out) -> int:
    config = build_config(args)
    try:
        options = SpectrumOptions(
            modulation_frequency_hz=args.modulation_frequency_hz,
            center_frequency_hz=args.center_frequency_hz if args.center_frequency_hz is not None
            else args.modulation_frequency_hz,
            span_hz=args.span_hz,
            rbw_hz=args.rbw_hz,
            normalization_port=args.normalize,
        )
    except ValueError as exc:
        raise ConfigError("spectrum", str(exc)) from None
    result = run_scheme(config)
    try:
        columns = synthesize(result, options)
    except ValueError as exc:
        raise ConfigError("normalize", str(exc)) from None
    spec = RunSpec(config, "spectrum", args.out, args.format, args.seed, spectrum=options)
    names = list(columns)
    rows = [{name: columns[name][i] for name in names} for i in range(len(columns["frequency_hz"]))]
    if args.format == "json":
        write_table(rows, spec, out)
        return EXIT_OK
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(names)
    for row in rows:
        writer.writerow([fmt_number(row[name]) for name in names])
    return EXIT_OK


def cmd_presets(args, out) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name", "kind", "description"])
    for name, entry in sorted(load_catalogue().items()):
        writer.writerow([name, entry["config"]["kind"], entry.get("description", "")])
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    results = oracle.agreement_suite(args.pipelines, args.samples, args.seed)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["pipeline", "max_mean_z", "max_cov_z", "ok"])
    for i, res in enumerate(results):
        writer.writerow([i, fmt_number(res.max_mean_z), fmt_number(res.max_cov_z), fmt_number(res.ok)])
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} pipelines inside {args.n_se:g} standard errors", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_NUMERIC


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat JSON key/value configuration file")
    p.add_argument("--preset", help="preset name from the catalogue (see `presets list`)")
    p.add_argument("--set", action="append", metavar="KEY=VALUE", help="override one config key (repeatable)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--seed", type=_u64, default=oracle.DEFAULT_SEED)


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sui-metrology", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="evaluate one scheme")
    _add_common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("sweep", help="evaluate a scheme over one parameter axis")
    _add_common(p)
    p.add_argument("--axis", required=True)
    p.add_argument("--values", help="comma-separated list of axis values")
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--step", type=float)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("tap", help="transfer coefficients of the dual-beam interferometer")
    _add_common(p)
    p.set_defaults(func=cmd_tap)

    p = sub.add_parser("spectrum", help="synthetic HD1/HD2/JM power spectra")
    _add_common(p)
    p.add_argument("--modulation-frequency-hz", type=float, default=1.56e6)
    p.add_argument("--center-frequency-hz", type=float, default=None)
    p.add_argument("--span-hz", type=float, default=1.0e6)
    p.add_argument("--rbw-hz", type=float, default=1.0e4)
    p.add_argument("--normalize", default="hd1", help="port whose shot noise is 0 dB")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("presets", help="preset catalogue")
    psub = p.add_subparsers(dest="action", required=True)
    pl = psub.add_parser("list")
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_presets)

    p = sub.add_parser("oracle", help="Monte Carlo cross-check of the moment engine")
    osub = p.add_subparsers(dest="action", required=True)
    oc = osub.add_parser("check")
    oc.add_argument("--pipelines", type=int, default=50)
    oc.add_argument("--samples", type=int, default=10**6)
    oc.add_argument("--seed", type=_u64, default=oracle.DEFAULT_SEED)
    oc.add_argument("--n-se", type=float, default=5.0)
    oc.add_argument("--out")
    oc.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PhysicalityError as exc:
        print(f"numerical validity error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except json.JSONDecodeError as exc:
        print(f"config error: config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical validity error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    out_path = getattr(args, "out", None)
    try:
        if out_path:
            with open(out_path, "w", newline="") as fh:
                fh.write(buf.getvalue())
        else:
            sys.stdout.write(buf.getvalue())
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
