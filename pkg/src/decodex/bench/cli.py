"""Command-line interface.

Subcommands: sweep, bulk-study, parallel-study, iter-study, vectors.
Exit codes: 0 on success, 1 on configuration errors, 2 when any sweep cell
reports a failure state.  DECODEX_SEED overrides the configured seed.
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys

from ..backends import LatencyModel, inline_default, lookaside_default, model_from_mapping, unified_default
from ..ldpc import ConfigurationError
from ..phy import dump_golden_vectors, generate_cell_vectors
from .emit import emit
from .studies import run_bulk_study, run_iteration_study, run_parallel_study
from .sweep import SweepConfig, run_sweep

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_CELL_FAILURE = 2

_BASE_MODELS = {
    "lookaside": lookaside_default,
    "inline": inline_default,
    "inline-unified": unified_default,
}


def _parse_list(text: str, cast):
    return tuple(cast(tok.strip()) for tok in text.split(",") if tok.strip())


def load_sweep_config(path: str | None) -> SweepConfig:
    """Build a SweepConfig from a flat key-value config file.

    Sections: [sweep] for the grid, [model.<backend>] for LatencyModel
    overrides (durations in microseconds, transfer_per_byte in us/byte).
    """
    kwargs = {}
    models = {}
    if path:
        parser = configparser.ConfigParser()
        if not parser.read(path):
            raise ConfigurationError(f"cannot read config file {path}")
        if parser.has_section("sweep"):
            s = parser["sweep"]
            if "backends" in s:
                kwargs["backends"] = _parse_list(s["backends"], str)
            if "mcs" in s:
                kwargs["mcs_set"] = _parse_list(s["mcs"], int)
            if "snr_db" in s:
                kwargs["snr_grid_db"] = _parse_list(s["snr_db"], float)
            if "prb" in s:
                kwargs["prb_set"] = _parse_list(s["prb"], int)
            for key in ("n_tb", "seed", "max_iterations", "workers"):
                if key in s:
                    kwargs[key] = int(s[key])
        for section in parser.sections():
            if section.startswith("model."):
                backend = section.split(".", 1)[1]
                base = _BASE_MODELS.get(backend)
                if base is None:
                    raise ConfigurationError(f"unknown model section [{section}]")
                models[backend] = model_from_mapping(base(), dict(parser[section]))
    if "DECODEX_SEED" in os.environ:
        kwargs["seed"] = int(os.environ["DECODEX_SEED"])
    kwargs["models"] = models
    return SweepConfig(**kwargs)


def _cmd_sweep(args) -> int:
    config = load_sweep_config(args.config)
    records = run_sweep(config)
    emit(records, args.format, args.out)
    failures = [r for r in records if r.failure]
    for r in failures:
        print(
            f"cell failure: backend={r.backend} mcs={r.mcs} snr={r.snr_db} "
            f"prb={r.prb}: {r.failure}",
            file=sys.stderr,
        )
    print(f"wrote {len(records)} records to {args.out}")
    return EXIT_CELL_FAILURE if failures else EXIT_OK


def _write_table(rows, fields, out):
    lines = [",".join(fields)]
    for row in rows:
        lines.append(",".join(f"{getattr(row, f):.6g}" if isinstance(getattr(row, f), float)
                              else str(getattr(row, f)) for f in fields))
    text = "\n".join(lines) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as f:
            f.write(text)


def _cmd_bulk_study(args) -> int:
    n_ops = list(_parse_list(args.n_ops, int))
    rows = run_bulk_study(n_ops)
    _write_table(rows, ("n_ops", "sequential_tput", "bulk_tput", "ratio"), args.out)
    return EXIT_OK


def _cmd_parallel_study(args) -> int:
    n_ue = list(_parse_list(args.ue, int))
    rows = run_parallel_study(n_ue, args.prb, mcs=args.mcs)
    _write_table(
        rows,
        (
            "n_ue",
            "sequential_kernel_us",
            "parallel_kernel_us",
            "sequential_total_us",
            "parallel_total_us",
            "sequential_utilization",
            "parallel_utilization",
        ),
        args.out,
    )
    return EXIT_OK


def _cmd_iter_study(args) -> int:
    rows = run_iteration_study(
        k_list=list(_parse_list(args.k, int)),
        rate_list=list(_parse_list(args.rates, float)),
        iter_list=list(_parse_list(args.iters, int)),
    )
    _write_table(rows, ("k", "rate", "iterations", "mean_us"), args.out)
    return EXIT_OK


def _cmd_vectors(args) -> int:
    seed = int(os.environ.get("DECODEX_SEED", args.seed))
    vectors = generate_cell_vectors(args.mcs, args.prb, args.snr, args.n_tb, seed)
    text = dump_golden_vectors(vectors, args.snr, seed)
    with open(args.dump, "w") as f:
        f.write(text)
    print(f"wrote {sum(len(v.descriptors) for v in vectors)} code blocks to {args.dump}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="decodex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="run a backend x MCS x SNR x PRB sweep")
    p.add_argument("--config", help="config file ([sweep] and [model.*] sections)")
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bulk-study", help="sequential vs bulk queue throughput")
    p.add_argument("--n-ops", default="1,10,100,1000")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_bulk_study)

    p = sub.add_parser("parallel-study", help="sequential vs parallel launches")
    p.add_argument("--ue", default="1,2,5,10")
    p.add_argument("--prb", type=int, default=200)
    p.add_argument("--mcs", type=int, default=9)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_parallel_study)

    p = sub.add_parser("iter-study", help="forced-iteration CPU decode timing")
    p.add_argument("--k", default="1936,4224,8440")
    p.add_argument("--rates", default="0.33,0.88")
    p.add_argument("--iters", default="2,4,8")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_iter_study)

    p = sub.add_parser("vectors", help="dump golden test vectors")
    p.add_argument("--dump", required=True, help="output path")
    p.add_argument("--mcs", type=int, default=4)
    p.add_argument("--prb", type=int, default=20)
    p.add_argument("--snr", type=float, default=8.0)
    p.add_argument("--n-tb", type=int, default=4)
    p.add_argument("--seed", type=int, default=12345)
    p.set_defaults(func=_cmd_vectors)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
