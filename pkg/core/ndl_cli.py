#!/usr/bin/env python3
"""
Network Dictionary Toolkit - command line interface
Generate, corrupt, learn, reconstruct and denoise networks from the shell
"""

import argparse
import math
import os
import re
import sys
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core import __version__
from core.classes.config_loader import get_config
from core.classes.denoise_pipeline import DenoisePipeline, evaluation_report
from core.classes.dictionary_learner import DictionaryLearner
from core.classes.motif_chain import MotifChain
from core.classes.ndl_errors import NdlError, ParameterError, ParseError, UsageError
from core.classes.network import Network
from core.classes.network_dictionary import Dictionary, dominance_scores, score_label
from core.classes.network_reconstructor import NetworkReconstructor, threshold
from core.classes.run_specs import (
    McmcMode, ModelSpec, NdlParams, NdrParams, NoiseKind, NoiseSpec, SamplerConfig)
from core.functions.graph_utils import (
    FALSE_EDGE, TRUE_EDGE, corrupt, generate, load_edge_list, save_edge_list, structural_stats)
from core.functions.reconstruction_metrics import bound_report, jaccard_metrics, mesoscale_error
from core.functions.sampling_utils import target_distribution, target_for, total_variation
from core.functions.utils import (
    STREAM_DIAGNOSTIC, STREAM_RANDOM_DICT, atomic_write, ensure_directory_exists,
    log_error, log_info, log_warning, make_rng, resolve_seed, set_verbose)

PROG = "ndl"
SCORES_SUFFIX = ".scores"


class NdlArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting"""

    def error(self, message):
        match = re.search(r"(--[A-Za-z][\w-]*)", message)
        raise UsageError(message, match.group(1) if match else None)


def _float_count(value: str) -> int:
    """Counts such as 1e6"""
    try:
        count = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not a number") from None
    if not count.is_integer() or count < 1:
        raise argparse.ArgumentTypeError(f"'{value}' is not a positive whole number")
    return int(count)


def _auto_or_int(value: str) -> Optional[int]:
    if value == "auto":
        return None
    return _float_count(value)


def _noise_kind(value: str) -> NoiseKind:
    try:
        return NoiseKind.parse(value)
    except ParameterError as e:
        raise argparse.ArgumentTypeError(e.message) from None


def _int_list(value: str) -> List[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{value}' is not a comma-separated list of integers") from None


def _write_table(frame, path: Optional[str]) -> None:
    """TSV to a file (atomically) or to stdout"""
    if path is None:
        frame.to_csv(sys.stdout, sep="\t", index=False)
        return
    with atomic_write(path) as handle:
        frame.to_csv(handle, sep="\t", index=False)


def _metric_table(metrics: Dict[str, object]):
    import pandas as pd
    return pd.DataFrame({"metric": list(metrics), "value": list(metrics.values())})


# ---------------------------------------------------------------------------
# generate / corrupt
# ---------------------------------------------------------------------------

def cmd_generate(args) -> int:
    if args.model == "er":
        spec = ModelSpec.er(args.n, args.p)
    elif args.model == "ws":
        spec = ModelSpec.ws(args.n, args.k, args.p)
    elif args.model == "ba":
        spec = ModelSpec.ba(args.n, args.n0)
    else:
        if not args.sizes:
            raise UsageError("sbm needs block sizes", "--sizes")
        spec = ModelSpec.sbm_uniform(args.sizes, args.p_in, args.p_out)
    G = generate(spec, args.seed)
    save_edge_list(G, args.output)
    print(f"✅ Generated {args.model} network: {G.n} nodes, {G.num_edges} edges -> {args.output}")
    return 0


def write_changed(G: Network, changed: Sequence[Tuple[int, int]], labels: Dict, path: str) -> None:
    import pandas as pd
    frame = pd.DataFrame({
        "u": [G.label(u) for u, _ in changed],
        "v": [G.label(v) for _, v in changed],
        "label": [labels[pair] for pair in changed],
    }, columns=["u", "v", "label"])
    _write_table(frame, path)


def read_changed(G: Network, path: str) -> Dict[Tuple[int, int], str]:
    """Ground-truth labels keyed by node-index pair (u < v)"""
    import pandas as pd
    frame = pd.read_csv(path, sep="\t", dtype=str, keep_default_na=False)
    if list(frame.columns) != ["u", "v", "label"]:
        raise ParseError(f"expected columns u, v, label; got {', '.join(frame.columns)}", 1, path)
    index = {label: i for i, label in enumerate(G.labels)}
    labels: Dict[Tuple[int, int], str] = {}
    for row_number, row in enumerate(frame.itertuples(index=False), start=2):
        if row.u not in index or row.v not in index:
            raise ParseError(f"unknown node in pair ({row.u}, {row.v})", row_number, path)
        if row.label not in (TRUE_EDGE, FALSE_EDGE):
            raise ParseError(f"label must be {TRUE_EDGE} or {FALSE_EDGE}, got '{row.label}'", row_number, path)
        u, v = index[row.u], index[row.v]
        labels[(min(u, v), max(u, v))] = row.label
    return labels


def cmd_corrupt(args) -> int:
    G = load_edge_list(args.graph)
    spec = NoiseSpec(args.noise, args.fraction, args.ws_n0, args.ws_k, args.ws_p)
    corrupted, changed, labels = corrupt(G, spec, args.seed)
    changed_path = args.changed or os.path.join(os.path.dirname(os.path.abspath(args.output)), "changed.tsv")
    save_edge_list(corrupted, args.output)
    write_changed(corrupted, changed, labels, changed_path)
    print(f"✅ Applied {spec.kind.value} noise: {len(changed)} pairs changed -> {args.output}, {changed_path}")
    return 0


# ---------------------------------------------------------------------------
# learn / motifs
# ---------------------------------------------------------------------------

def _ndl_params(args) -> NdlParams:
    return NdlParams(
        k=args.k, r=args.r, T=args.T, N=args.N, lam=args.lam,
        mcmc_mode=McmcMode.parse(args.mcmc), seed=args.seed,
        **get_config().learning_settings(),
    ).validate()


def write_scores(scores: np.ndarray, path: str) -> None:
    import pandas as pd
    _write_table(pd.DataFrame({"motif": np.arange(len(scores)), "score": scores}), path)


def read_scores(path: str, r: int) -> Optional[np.ndarray]:
    """Dominance scores stored next to a dictionary, if present"""
    import pandas as pd
    if not os.path.exists(path):
        return None
    frame = pd.read_csv(path, sep="\t")
    if len(frame) != r:
        log_warning(f"{path} lists {len(frame)} scores for {r} motifs; ignoring it")
        return None
    return frame.sort_values("motif")["score"].to_numpy(dtype=float)


def cmd_learn(args) -> int:
    G = load_edge_list(args.graph)
    learner = DictionaryLearner(G, _ndl_params(args))
    dictionary, state, _ = learner.learn()
    dictionary.save(args.output)
    scores, order = dominance_scores(state)
    write_scores(scores, args.output + SCORES_SUFFIX)
    if args.trace:
        learner.write_trace(args.trace)
    top = ", ".join(f"{scores[j]:.3f}" for j in order[:5])
    print(f"✅ Learned {dictionary.r} latent motifs (k={dictionary.k}) -> {args.output}")
    print(f"   Top dominance scores: {top}")
    return 0


def write_pgm(motif: np.ndarray, path: str, comment: str = "") -> None:
    """Plain PGM, entries scaled so the largest becomes 255"""
    peak = float(motif.max())
    pixels = np.zeros(motif.shape, dtype=int) if peak <= 0 else np.rint(motif * 255.0 / peak).astype(int)
    with atomic_write(path) as handle:
        handle.write("P2\n")
        if comment:
            handle.write(f"# {comment}\n")
        handle.write(f"{motif.shape[1]} {motif.shape[0]}\n255\n")
        for row in pixels:
            handle.write(" ".join(str(int(p)) for p in row) + "\n")


def motif_order(dictionary: Dictionary, scores: Optional[np.ndarray]) -> Tuple[np.ndarray, np.ndarray]:
    if scores is None:
        scores = np.full(dictionary.r, np.nan)
        return scores, np.arange(dictionary.r)
    return scores, np.argsort(-scores, kind="stable")


def save_motif_figure(dictionary: Dictionary, scores: np.ndarray, order: np.ndarray, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    columns = int(math.ceil(math.sqrt(dictionary.r)))
    rows = int(math.ceil(dictionary.r / columns))
    fig, axes = plt.subplots(rows, columns, figsize=(1.6 * columns, 1.6 * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for rank, j in enumerate(order):
        ax = axes.flat[rank]
        ax.imshow(dictionary.motif(j), cmap="gray_r", vmin=0.0, interpolation="nearest")
        ax.set_title(score_label(scores[j]), fontsize=7)
    fig.tight_layout()
    try:
        with atomic_write(path, "wb") as handle:
            fig.savefig(handle, format="png", dpi=150)
    finally:
        plt.close(fig)


def cmd_motifs(args) -> int:
    dictionary = Dictionary.load(args.dict)
    scores = read_scores(args.dict + SCORES_SUFFIX, dictionary.r)
    if scores is None:
        log_warning(f"No dominance scores for {args.dict}; motifs keep file order")
    scores, order = motif_order(dictionary, scores)
    ensure_directory_exists(args.output)
    for rank, j in enumerate(order, start=1):
        label = score_label(scores[j])
        write_pgm(dictionary.motif(j), os.path.join(args.output, f"motif_{rank}_{label}.pgm"),
                  f"motif {j} dominance {label}")
    if args.figure:
        save_motif_figure(dictionary, scores, order, args.figure)
    print(f"✅ Exported {dictionary.r} motifs -> {args.output}")
    return 0


# ---------------------------------------------------------------------------
# reconstruct / denoise
# ---------------------------------------------------------------------------

def _ndr_params(args, k: int, T: Optional[int], lam: float) -> NdrParams:
    return NdrParams(
        k=k, T=T, lam=lam, theta=args.theta, xi=args.xi, denoising=args.denoising,
        inj_hom=args.injective, mcmc_mode=McmcMode.parse(args.mcmc), seed=args.seed,
        literal_offchain=args.literal_offchain, chains=args.chains, threads=args.threads,
        **get_config().solver_settings(),
    ).validate()


def cmd_reconstruct(args) -> int:
    G = load_edge_list(args.graph)
    if args.random_dict:
        if args.k is None:
            raise UsageError("--random-dict needs a motif size", "--k")
        dictionary = Dictionary.random(args.k, args.random_dict, make_rng(args.seed, STREAM_RANDOM_DICT))
    elif args.dict:
        dictionary = Dictionary.load(args.dict)
    else:
        raise UsageError("one of --dict or --random-dict is required", "--dict")
    params = _ndr_params(args, dictionary.k, args.T, args.lam)

    reconstructed, _ = NetworkReconstructor(G, dictionary, params).reconstruct()
    save_edge_list(reconstructed, args.output)
    binary = threshold(reconstructed, params.theta)
    if args.binary_output:
        save_edge_list(binary, args.binary_output)
    metrics = jaccard_metrics(G, binary)
    print(f"✅ Reconstructed {G.n} nodes -> {args.output}")
    print(f"   Jaccard index at theta={params.theta}: {metrics['jaccard_index']:.4f}")

    if args.report:
        cfg = get_config()
        samples = int(cfg.get("bound.mesoscale_samples", 10000))
        report: Dict[str, object] = dict(metrics)
        if params.denoising or not G.is_binary():
            log_warning("Error bound skipped: it needs a binary network and denoising off")
            report["mesoscale_error"] = mesoscale_error(G, dictionary, params, samples)[0]
        else:
            bound = bound_report(G, dictionary, params,
                                 cfg.get("bound.oracle_max_homomorphisms", 200000),
                                 samples, reconstructed)
            report.update({
                "mesoscale_error": bound["error_bound"] * 2 * (params.k - 1),
                "bound_method": bound["method"],
                "bound_lhs": bound["jaccard_distance"],
                "bound_rhs": bound["error_bound"],
                "bound_holds": bound["holds"],
                "lower_bound_accuracy": bound["lower_bound_accuracy"],
            })
        _write_table(_metric_table(report), args.report)
    return 0


def _infer_noise(labels: Dict) -> NoiseKind:
    kinds = set(labels.values())
    if kinds == {TRUE_EDGE}:
        return NoiseKind.SUBTRACTIVE_ER
    if kinds == {FALSE_EDGE}:
        return NoiseKind.ADDITIVE_ER
    raise UsageError("labels mix true_edge and false_edge; state the noise type", "--noise")


def cmd_denoise(args) -> int:
    G = load_edge_list(args.graph)
    labels = read_changed(G, args.labels)
    kind = args.noise or _infer_noise(labels)
    ndl_params = _ndl_params(args)
    recon_T = args.recon_T
    if recon_T is None:
        recon_T = NdrParams(T=None).iterations_for(G.n)
    ndr_params = _ndr_params(args, args.k, recon_T, args.recon_lam)

    pipeline = DenoisePipeline(G, labels, kind, ndl_params, ndr_params,
                               all_nonedges=args.all_nonedges, random_motifs=args.random_motifs)
    results = [pipeline.run()]
    if args.chain_distance:
        results.append(pipeline.chain_distance())
    results.extend(pipeline.baselines(args.baselines))

    report = evaluation_report(results, args.seed, args.train_frac, args.val_frac)
    _write_table(report, args.report)
    if args.scores:
        import pandas as pd
        frames = [scored.to_frame(G.labels).assign(method=scored.method) for scored in results]
        _write_table(pd.concat(frames, ignore_index=True), args.scores)
    for row in report.itertuples(index=False):
        print(f"   {row.method}: AUC {row.auc:.4f}, accuracy {row.accuracy:.4f}")
    print(f"✅ Denoising report -> {args.report or 'stdout'}")
    return 0


# ---------------------------------------------------------------------------
# mcmc-diag / eval / version
# ---------------------------------------------------------------------------

def cmd_mcmc_diag(args) -> int:
    import pandas as pd
    G = load_edge_list(args.graph)
    mode = McmcMode.parse(args.mode)
    config = SamplerConfig(mode, args.injective, get_config().get("sampling.max_rejections", 10000))
    chain = MotifChain(G, args.k, config, make_rng(args.seed, STREAM_DIAGNOSTIC))
    occupation = chain.occupation(args.steps)
    row = {"mode": mode.value, "k": args.k, "injective": args.injective, "steps": args.steps,
           "rejections": chain.total_rejections, "distinct_states": len(occupation)}
    if args.oracle:
        limit = get_config().get("enumeration.max_homomorphisms", 10_000_000)
        target = target_for(mode, args.injective)
        row["target"] = target
        row["tv_distance"] = total_variation(occupation, target_distribution(G, args.k, target, limit))
    _write_table(pd.DataFrame([row]), args.output)
    return 0


def cmd_eval(args) -> int:
    import pandas as pd
    first = load_edge_list(args.first)
    second = load_edge_list(args.second, labels=first.labels)
    metrics: Dict[str, object] = dict(jaccard_metrics(first, second))
    stats_a, stats_b = structural_stats(first), structural_stats(second)
    metrics["mean_clustering_a"] = stats_a["mean_clustering"]
    metrics["mean_clustering_b"] = stats_b["mean_clustering"]
    _write_table(_metric_table(metrics), args.output)

    if args.histograms:
        degrees = sorted(set(stats_a["degree_histogram"]) | set(stats_b["degree_histogram"]))
        histogram = pd.DataFrame({
            "degree": degrees,
            "count_a": [stats_a["degree_histogram"].get(d, 0) for d in degrees],
            "count_b": [stats_b["degree_histogram"].get(d, 0) for d in degrees],
        })
        _write_table(histogram, args.histograms)
    return 0


def cmd_version(args) -> int:
    print(f"{PROG} {__version__}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_learning_flags(parser, cfg) -> None:
    parser.add_argument("--k", type=int, default=cfg.get("learning.k", 21), help="Motif size (k-path nodes)")
    parser.add_argument("--r", type=int, default=cfg.get("learning.r", 25), help="Number of latent motifs")
    parser.add_argument("--T", type=int, default=cfg.get("learning.T", 100), help="Learning iterations")
    parser.add_argument("--N", type=int, default=cfg.get("learning.N", 100), help="Patches per iteration")
    parser.add_argument("--lambda", dest="lam", type=float, default=cfg.get("learning.lambda", 1.0),
                        help="L1 penalty for learning")
    parser.add_argument("--mcmc", default=cfg.get("sampling.mcmc", "pivotapprox"),
                        help="Chain: pivot, pivotapprox or glauber")


def _add_reconstruction_flags(parser, cfg) -> None:
    parser.add_argument("--theta", type=float, default=cfg.get("reconstruction.theta", 0.4),
                        help="Edge threshold")
    parser.add_argument("--xi", type=float, default=cfg.get("reconstruction.xi", 1.0),
                        help="Chain-edge thinning in [0, 1]")
    parser.add_argument("--denoising", action="store_true", help="Ignore on-chain entries")
    parser.add_argument("--injective", action="store_true", help="Sample k-paths only")
    parser.add_argument("--literal-offchain", action="store_true",
                        help="Mask only the upper chain diagonal")
    parser.add_argument("--chains", type=int, default=cfg.get("reconstruction.chains", 1),
                        help="Independent chains to merge")


def build_parser() -> NdlArgumentParser:
    cfg = get_config()
    common = NdlArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Random seed (falls back to NDL_SEED)")
    common.add_argument("--threads", type=int, default=1, help="Worker threads for chain ensembles")
    common.add_argument("--verbose", action="store_true", help="Echo log lines to stderr")

    parser = NdlArgumentParser(prog=PROG, description="Network Dictionary Toolkit")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("generate", parents=[common], help="Sample a random network")
    p.add_argument("--model", required=True, choices=["er", "ws", "ba", "sbm"])
    p.add_argument("--n", type=int, default=0, help="Number of nodes (er, ws, ba)")
    p.add_argument("--p", type=float, default=0.0, help="Edge or rewiring probability")
    p.add_argument("--k", type=int, default=0, help="Ring degree (ws)")
    p.add_argument("--n0", type=int, default=0, help="Seed size (ba)")
    p.add_argument("--sizes", type=_int_list, default=None, help="Block sizes, e.g. 50,50,50 (sbm)")
    p.add_argument("--p-in", type=float, default=0.5, help="Within-block probability (sbm)")
    p.add_argument("--p-out", type=float, default=0.05, help="Between-block probability (sbm)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("corrupt", parents=[common], help="Apply -ER, +ER or +WS noise")
    p.add_argument("--graph", required=True)
    p.add_argument("--noise", required=True, type=_noise_kind,
                   help="-er, +er or +ws (write --noise=-er, or use subtractive-er)")
    p.add_argument("--fraction", type=float, default=0.5)
    p.add_argument("--ws-n0", type=int, default=100)
    p.add_argument("--ws-k", type=int, default=20)
    p.add_argument("--ws-p", type=float, default=0.3)
    p.add_argument("--changed", default=None, help="Ground-truth TSV (default: changed.tsv beside output)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=cmd_corrupt)

    p = sub.add_parser("learn", parents=[common], help="Learn a network dictionary")
    p.add_argument("--graph", required=True)
    _add_learning_flags(p, cfg)
    p.add_argument("--trace", default=None, help="Per-iteration diagnostics TSV")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=cmd_learn)

    p = sub.add_parser("motifs", parents=[common], help="Export latent motifs as images")
    p.add_argument("--dict", required=True)
    p.add_argument("--figure", default=None, help="PNG grid of all motifs")
    p.add_argument("-o", "--output", required=True, help="Output directory")
    p.set_defaults(handler=cmd_motifs)

    p = sub.add_parser("reconstruct", parents=[common], help="Reconstruct a network from a dictionary")
    p.add_argument("--graph", required=True)
    p.add_argument("--dict", default=None)
    p.add_argument("--random-dict", type=int, default=None, metavar="R", help="Use R random motifs")
    p.add_argument("--k", type=int, default=None, help="Motif size for --random-dict")
    p.add_argument("--T", type=_auto_or_int, default=None, help="Iterations or 'auto' (n ln n)")
    p.add_argument("--lambda", dest="lam", type=float, default=cfg.get("reconstruction.lambda", 0.0))
    p.add_argument("--mcmc", default=cfg.get("sampling.mcmc", "pivotapprox"))
    _add_reconstruction_flags(p, cfg)
    p.add_argument("--binary-output", default=None, help="Thresholded network")
    p.add_argument("--report", default=None, help="Metrics TSV")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=cmd_reconstruct)

    p = sub.add_parser("denoise", parents=[common], help="Score corrupted pairs and baselines")
    p.add_argument("--graph", required=True)
    p.add_argument("--labels", required=True, help="changed.tsv written by corrupt")
    p.add_argument("--noise", type=_noise_kind, default=None, help="Noise type (inferred from labels)")
    _add_learning_flags(p, cfg)
    _add_reconstruction_flags(p, cfg)
    p.add_argument("--recon-T", dest="recon_T", type=_auto_or_int,
                   default=cfg.get("denoising.recon_T", 200000),
                   help="Reconstruction steps or 'auto' (n ln n)")
    p.add_argument("--recon-lambda", dest="recon_lam", type=float,
                   default=cfg.get("reconstruction.lambda", 0.0))
    p.add_argument("--random-motifs", action="store_true", help="Skip learning; use random motifs")
    p.add_argument("--all-nonedges", action="store_true",
                   help="Subtractive noise: score every non-edge, not only those within k hops")
    p.add_argument("--chain-distance", action="store_true", help="Also report the ChainDistance score")
    p.add_argument("--baselines", type=lambda s: [m for m in s.split(",") if m],
                   default=list(cfg.get("denoising.baselines", [])))
    p.add_argument("--train-frac", type=float, default=cfg.get("denoising.train_fraction", 0.25))
    p.add_argument("--val-frac", type=float, default=cfg.get("denoising.val_fraction", 0.25))
    p.add_argument("--scores", default=None, help="Per-pair scores TSV")
    p.add_argument("--report", default=None)
    p.set_defaults(handler=cmd_denoise)

    p = sub.add_parser("mcmc-diag", parents=[common], help="Chain occupation vs exact target")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", default=cfg.get("sampling.mcmc", "pivotapprox"))
    p.add_argument("--steps", type=_float_count, default=100000)
    p.add_argument("--injective", action="store_true")
    p.add_argument("--oracle", action="store_true", help="Compare with the enumerated target")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=cmd_mcmc_diag)

    p = sub.add_parser("eval", parents=[common], help="Compare two networks")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--histograms", default=None, help="Degree histogram TSV")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("version", help="Print the version")
    p.set_defaults(handler=cmd_version)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit code"""
    cfg = get_config()
    os.environ.setdefault("NDL_LOG_DIR", str(cfg.get("logging.directory", "logs")))
    os.environ.setdefault("NDL_LOG_LEVEL", str(cfg.get("logging.level", "INFO")))
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required (try --help)")
        set_verbose(getattr(args, "verbose", False))
        if hasattr(args, "seed"):
            args.seed = resolve_seed(args.seed)
            if args.threads < 1:
                raise UsageError("must be at least 1", "--threads")
        log_info(f"{PROG} {args.command} started")
        return args.handler(args)
    except NdlError as e:
        log_error(f"{type(e).__name__}: {e.message}")
        print(f"❌ {e.message}", file=sys.stderr)
        return e.exit_code
    except (FileNotFoundError, PermissionError, IsADirectoryError) as e:
        log_error(f"I/O error: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return 1
    except Exception as e:
        log_error(f"Internal error: {type(e).__name__}: {e}")
        print(f"❌ Internal error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
