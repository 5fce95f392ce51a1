"""Command-line harness.

Subcommands: params | encode | decode | simulate | kk-simulate | radius-table.
Exit codes: 0 ok, 1 usage or invalid parameters, 2 decoding failure
(single-shot decode), 3 internal defect.

Simulation output is CSV and byte-identical for identical flags; the
radius-table report writes the decoding-radius curves as CSV and renders a
matching figure next to it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import codec, decoder
from .channel import ChannelConfig, transmit
from .gf import InternalDefect
from .subspace import Subspace

_MSG_STREAM_TAG = 0x6D7367  # distinguishes message draws from channel draws

TRIAL_HEADER = ["seed", "rho", "t", "d", "omega", "list_size", "contains_sent", "status"]


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the contract here reserves 2 for
    decoding failures, so usage errors exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_code_flags(p, with_L=True):
    p.add_argument("--q", type=int, required=True, help="prime base field size")
    p.add_argument("--m", type=int, required=True, help="extension degree per block")
    p.add_argument("--n", type=int, required=True, help="code dimension")
    p.add_argument("--k", type=int, required=True, help="message length")
    if with_L:
        p.add_argument("--L", type=int, required=True, help="list size")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subspacecode")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="derive code parameters and radius bounds")
    _add_code_flags(p)
    p.add_argument("--out", help="write JSON report here instead of stdout")

    p = sub.add_parser("encode", help="encode a message file into a subspace")
    _add_code_flags(p)
    p.add_argument("--message", required=True, help="file with one GF(q) digit per line")
    p.add_argument("--out", help="write the subspace JSON here instead of stdout")

    p = sub.add_parser("decode", help="list-decode a received subspace file")
    _add_code_flags(p)
    p.add_argument("--in", dest="infile", required=True, help="subspace JSON file")
    p.add_argument("--post-filter", action="store_true",
                   help="drop list entries whose codeword meets the received space "
                        "in fewer dimensions than the best candidate")
    p.add_argument("--out", help="write the decode record here instead of stdout")

    p = sub.add_parser("simulate", help="seeded Monte-Carlo channel trials")
    _add_code_flags(p)
    p.add_argument("--rho", type=int, required=True, help="erasure dimensions")
    p.add_argument("--t", type=int, required=True, help="error dimensions")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--post-filter", action="store_true")
    p.add_argument("--out", help="write the trial CSV here instead of stdout")

    p = sub.add_parser("kk-simulate", help="baseline unique-decoder trials")
    _add_code_flags(p, with_L=False)
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the trial CSV here instead of stdout")

    p = sub.add_parser("radius-table", help="decoding radius vs packet rate table")
    p.add_argument("--L-max", dest="L_max", type=int, required=True)
    p.add_argument("--step", default="1/20",
                   help="packet-rate grid step, exact fraction or decimal (default 1/20)")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.add_argument("--plot", help="explicit path for the rendered figure")
    p.add_argument("--no-plot", action="store_true",
                   help="skip figure rendering even when --out is given")
    return parser


def _emit(text: str, out_path: str | None):
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------

def cmd_params(args) -> int:
    params = codec.derive_params(args.q, args.m, args.n, args.k, args.L)
    radius = codec.list_radius(params)
    grid = []
    for rho in range(params.n + 1):
        t_max = math.floor(radius - params.L * rho)
        if t_max >= 0:
            grid.append({"rho": rho, "t_max": t_max})
    fld = params.field
    report = {
        "q": params.q,
        "m": params.m,
        "n": params.n,
        "k": params.k,
        "L": params.L,
        "modulus": list(fld.modulus),
        "gamma_coords": list(fld.coords(params.gamma)),
        "alphas_coords": [list(fld.coords(a)) for a in params.alphas],
        "ambient_dim": params.ambient_dim,
        "packet_rate": str(codec.packet_rate(params)),
        "symbol_rate": str(codec.symbol_rate(params)),
        "list_radius": str(radius),
        "kk_radius": params.n - params.k + 1,
        "admissible": grid,
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def _read_message(path: str, q: int) -> list[int]:
    digits = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        d = int(line)
        if not 0 <= d < q:
            raise ValueError(f"message digit {d} is not in GF({q})")
        digits.append(d)
    return digits


def cmd_encode(args) -> int:
    params = codec.derive_params(args.q, args.m, args.n, args.k, args.L)
    msg = _read_message(args.message, args.q)
    space = codec.encode(params, msg)
    _emit(json.dumps(space.to_dict(), indent=2) + "\n", args.out)
    return 0


def cmd_decode(args) -> int:
    params = codec.derive_params(args.q, args.m, args.n, args.k, args.L)
    space = Subspace.from_dict(json.loads(Path(args.infile).read_text()))
    if space.q != params.q or space.ambient_dim != params.ambient_dim:
        raise ValueError(
            f"subspace file is over GF({space.q}) ambient {space.ambient_dim}, "
            f"expected GF({params.q}) ambient {params.ambient_dim}"
        )
    result = decoder.decode(params, space, post_filter=args.post_filter)
    record = {
        "d": result.d,
        "omega": result.omega,
        "list": [list(m) for m in result.messages],
        "status": result.status,
        "elapsed_micros": result.elapsed_micros,
    }
    _emit(json.dumps(record, indent=2) + "\n", args.out)
    return 0 if result.ok else 2


def _message_rng(trial_seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64((trial_seed, _MSG_STREAM_TAG)))


def cmd_simulate(args) -> int:
    if args.seed < 0 or args.trials < 0:
        raise ValueError("--seed and --trials must be non-negative")
    params = codec.derive_params(args.q, args.m, args.n, args.k, args.L)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRIAL_HEADER)
    successes = 0
    for idx in range(args.trials):
        trial_seed = args.seed ^ idx
        msg = tuple(int(x) for x in _message_rng(trial_seed).integers(0, args.q, size=args.k))
        sent = codec.encode(params, msg)
        received = transmit(sent, ChannelConfig(args.rho, args.t, trial_seed))
        result = decoder.decode(params, received, post_filter=args.post_filter)
        contains = result.ok and msg in result.messages
        successes += contains
        writer.writerow([
            trial_seed, args.rho, args.t, result.d,
            "" if result.omega is None else result.omega,
            len(result.messages),
            "true" if contains else "false",
            result.status,
        ])
    rate = successes / args.trials if args.trials else 0.0
    buf.write(f"# summary trials={args.trials} successes={successes} "
              f"success_rate={rate:.6f}\n")
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_kk_simulate(args) -> int:
    if args.seed < 0 or args.trials < 0:
        raise ValueError("--seed and --trials must be non-negative")
    params = codec.derive_kk_params(args.q, args.m, args.n, args.k)
    order = params.field.order
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRIAL_HEADER)
    successes = 0
    for idx in range(args.trials):
        trial_seed = args.seed ^ idx
        msg = tuple(int(x) for x in _message_rng(trial_seed).integers(0, order, size=args.k))
        sent = codec.kk_encode(params, msg)
        received = transmit(sent, ChannelConfig(args.rho, args.t, trial_seed))
        result = decoder.kk_decode(params, received)
        contains = result.ok and result.message == msg
        successes += contains
        writer.writerow([
            trial_seed, args.rho, args.t, result.d,
            "" if result.omega is None else result.omega,
            1 if result.ok else 0,
            "true" if contains else "false",
            result.status,
        ])
    rate = successes / args.trials if args.trials else 0.0
    buf.write(f"# summary trials={args.trials} successes={successes} "
              f"success_rate={rate:.6f}\n")
    _emit(buf.getvalue(), args.out)
    return 0


def radius_rows(L_max: int, step: Fraction):
    """(R*, tau_1..tau_L) over the grid step, 2*step, ..., 1, with
    tau_L = max(0, L - L(L+1)/2 * R*) in exact rationals."""
    rows = []
    i = 1
    while i * step <= 1:
        rstar = i * step
        taus = [max(Fraction(0), L - Fraction(L * (L + 1), 2) * rstar)
                for L in range(1, L_max + 1)]
        rows.append((rstar, taus))
        i += 1
    return rows


def cmd_radius_table(args) -> int:
    if args.L_max < 1:
        raise ValueError("--L-max must be >= 1")
    step = Fraction(args.step)
    if not 0 < step <= 1:
        raise ValueError("--step must be in (0, 1]")
    rows = radius_rows(args.L_max, step)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rstar"] + [f"tau_{L}" for L in range(1, args.L_max + 1)])
    for rstar, taus in rows:
        writer.writerow([str(rstar)] + [str(t) for t in taus])
    _emit(buf.getvalue(), args.out)
    fig_path = args.plot
    if fig_path is None and args.out and not args.no_plot:
        fig_path = str(Path(args.out).with_suffix(".png"))
    if fig_path:
        _render_radius_figure(rows, args.L_max, fig_path)
    return 0


def _render_radius_figure(rows, L_max: int, path: str):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [float(r) for r, _ in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, [float(taus[0]) for _, taus in rows], "k--", label="unique decoding (L=1)")
    for L in range(2, L_max + 1):
        ax.plot(xs, [float(taus[L - 1]) for _, taus in rows], label=f"list size {L}")
    ax.set_xlabel("packet rate R*")
    ax.set_ylabel("normalized decoding radius")
    ax.set_xlim(0, 1)
    ax.set_ylim(bottom=0)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


_COMMANDS = {
    "params": cmd_params,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "simulate": cmd_simulate,
    "kk-simulate": cmd_kk_simulate,
    "radius-table": cmd_radius_table,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InternalDefect as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
