"""Command-line surface: classify | measure | generate | simulate | verify.

Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.
All randomized commands take an explicit seed and are fully reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .balance import classify
from .core import SignedGraph
from .dynamics import (
    ELTConfig,
    elt_simulate,
    linear_adjacency_simulate,
    predict_stationary,
    simulate_walk_until_stationary,
)
from .errors import BipartiteUnsupportedError, SignedNetError, VerificationFailure
from .generate import (
    LatticeParams,
    SSBMParams,
    random_signed_tree,
    ring_lattice,
    sign_plan_from_json,
    ssbm,
)
from .io import (
    activation_sets_to_json,
    classification_to_json,
    dump_json,
    frustration_to_json,
    load_graph,
    measures_to_json,
    write_edge_list,
    write_trajectory_csv,
)
from .spectral import balance_measures
from .verify import SUITES, run_suite

USAGE_EXIT, DATA_EXIT, VERIFY_EXIT = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="signednet", description=__doc__)
    parser.add_argument("--version", action="version", version=f"signednet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="balance verdict, certificates and measures")
    p_classify.add_argument("--input", required=True, help="edge-list file")
    p_classify.add_argument("--output", help="write JSON here instead of stdout")
    p_classify.add_argument("--frustration", choices=["balanced", "antibalanced"],
                            help="also report the edges disturbing this structure "
                                 "(exact up to 25 edges, eigenvector heuristic beyond)")

    p_measure = sub.add_parser("measure", help="d_b, d_a and spectral radii")
    p_measure.add_argument("--input", required=True)
    p_measure.add_argument("--output")

    p_generate = sub.add_parser("generate", help="write a synthetic network as an edge list")
    p_generate.add_argument("kind", choices=["ssbm", "lattice", "tree"])
    p_generate.add_argument("--config", required=True, help="parameter JSON file")
    p_generate.add_argument("--output", required=True)
    p_generate.add_argument("--seed", type=int, help="overrides the seed in the config")

    p_simulate = sub.add_parser("simulate", help="run a dynamics model, write trajectory CSV")
    p_simulate.add_argument("model", choices=["linear", "rw", "elt"])
    p_simulate.add_argument("--input", required=True)
    p_simulate.add_argument("--config", required=True, help="simulation JSON file")
    p_simulate.add_argument("--output", required=True, help="trajectory CSV path")
    p_simulate.add_argument("--seed", type=int, default=0, help="seed for random initial states")
    p_simulate.add_argument("--format", choices=["csv", "json"], default="csv",
                            help="trajectory file format")

    p_verify = sub.add_parser("verify", help="run acceptance suites")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--output", help="write the report here as well")
    return parser


# ---------------------------------------------------------------------------
# initial-state mini-language
# ---------------------------------------------------------------------------

def initial_state(spec: str, G: SignedGraph, l0: float, seed: int) -> np.ndarray:
    """Resolve an initial-state spec.

    ``uniform``: every node at l0.  ``node:<id>=<v>,...``: explicit sparse
    assignment.  ``bipartition``: +/- l0 following the balance certificate
    (antibalance certificate when only that exists).  ``neighbourhood:<id>``:
    ELT lattice seeding of a closed neighbourhood, signs following the edge
    signs.  ``random``: seeded standard normals normalized to unit l1 norm.
    """
    if spec == "uniform":
        return np.full(G.n, l0)
    if spec == "random":
        rng = np.random.default_rng(seed)
        x = rng.standard_normal(G.n)
        return x / np.abs(x).sum()
    if spec == "bipartition":
        c = classify(G)
        part = c.balanced_partition if c.balanced_partition is not None else c.antibalanced_partition
        if part is None:
            raise SignedNetError("graph is strictly unbalanced: no certificate bipartition to seed from")
        return part.s.astype(float) * l0
    head, _, rest = spec.partition(":")
    if head == "node" and rest:
        x = np.zeros(G.n)
        for item in rest.split(","):
            node, _, value = item.partition("=")
            x[int(node)] = float(value) if value else l0
        return x
    if head == "neighbourhood" and rest:
        center = int(rest)
        x = np.zeros(G.n)
        x[center] = l0
        W = G.weight_matrix
        for j in np.flatnonzero(W[center]):
            x[j] = l0 * np.sign(W[center, j])
        return x
    raise SignedNetError(f"unknown initial-state spec {spec!r}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _emit(doc, output) -> None:
    if output:
        dump_json(doc, output)
    else:
        print(dump_json(doc))


def _cmd_classify(args) -> int:
    G = load_graph(args.input)
    doc = classification_to_json(classify(G), balance_measures(G))
    if G.labels:
        doc["labels"] = list(G.labels)
    if args.frustration:
        from .balance import EXACT_FRUSTRATION_EDGE_CAP, frustration

        mode = "exact" if G.num_edges <= EXACT_FRUSTRATION_EDGE_CAP else "heuristic"
        doc["frustration"] = frustration_to_json(frustration(G, args.frustration, mode=mode))
    _emit(doc, args.output)
    return 0


def _cmd_measure(args) -> int:
    G = load_graph(args.input)
    doc = measures_to_json(balance_measures(G), classify(G).verdict)
    _emit(doc, args.output)
    return 0


def _cmd_generate(args) -> int:
    config = json.loads(Path(args.config).read_text())
    if args.seed is not None:
        config["seed"] = args.seed
    if args.kind == "ssbm":
        G = ssbm(SSBMParams(**config))
        header = f"ssbm {json.dumps(config, sort_keys=True)}"
    elif args.kind == "lattice":
        plan = sign_plan_from_json(config.pop("sign_plan"))
        G = ring_lattice(LatticeParams(sign_plan=plan, **config))
        header = f"lattice {json.dumps(config, sort_keys=True)}"
    else:
        G = random_signed_tree(**config)
        header = f"tree {json.dumps(config, sort_keys=True)}"
    write_edge_list(G, args.output, header=header)
    return 0


def _cmd_simulate(args) -> int:
    G = load_graph(args.input)
    config = json.loads(Path(args.config).read_text())
    horizon = int(config.get("horizon", 50))
    l0 = float(config.get("l0", 1.0))
    x0 = initial_state(config.get("init", "uniform"), G, l0, args.seed)

    summary: dict = {"model": args.model, "horizon": horizon}
    if args.model == "linear":
        traj = linear_adjacency_simulate(G, x0, horizon)
    elif args.model == "rw":
        traj = simulate_walk_until_stationary(G, x0, max_steps=horizon)
        summary["realized_final_state"] = [float(v) for v in traj.final]
        summary["steps_run"] = traj.horizon
        try:
            pred = predict_stationary(G, x0)
            summary["stationary_prediction"] = {
                "kind": pred.kind.value,
                "vectors": [[float(v) for v in vec] for vec in pred.vectors],
            }
        except BipartiteUnsupportedError as exc:
            summary["stationary_prediction"] = {"kind": "unsupported", "reason": str(exc)}
    else:
        cfg = ELTConfig(
            theta_l=float(config.get("theta_l", 1.0)),
            alpha=float(config.get("alpha", 1.0)),
            l0=l0,
            horizon=horizon,
            general_thresholds=config.get("general_thresholds"),
        )
        traj, acts = elt_simulate(G, x0, cfg)
        summary["activation_sets"] = activation_sets_to_json(acts)

    if args.format == "json":
        doc = {"states": [[float(v) for v in row] for row in traj.states], **summary}
        dump_json(doc, args.output)
    else:
        write_trajectory_csv(traj.states, args.output)
    print(dump_json(summary))
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, report=print if args.format == "text" else None)
    doc = [
        {"criterion": r.criterion, "passed": r.passed, "detail": r.detail, "seconds": round(r.seconds, 3)}
        for r in results
    ]
    if args.format == "json":
        print(dump_json(doc))
    if args.output:
        dump_json(doc, args.output)
    if not all(r.passed for r in results):
        return VERIFY_EXIT
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "classify": _cmd_classify,
        "measure": _cmd_measure,
        "generate": _cmd_generate,
        "simulate": _cmd_simulate,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return VERIFY_EXIT
    except (SignedNetError, OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT


if __name__ == "__main__":
    sys.exit(main())
