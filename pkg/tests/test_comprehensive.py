#!/usr/bin/env python3
"""
Comprehensive Test Suite for the Network Dictionary Toolkit
Configuration, module imports and end-to-end command line workflows
"""

import importlib
import os
import shutil
import tempfile

import numpy as np
import pandas as pd

from conftest import cycle
from core import __version__
from core.classes.config_loader import BUILTIN_DEFAULTS, ConfigLoader, deep_merge, get_config
from core.classes.network_dictionary import Dictionary
from core.functions.graph_utils import load_edge_list, save_edge_list
from core.ndl_cli import build_parser, main, read_changed, write_changed


class TestEnvironment:
    """Isolated working directory with cleanup"""

    __test__ = False

    def __init__(self):
        self.temp_dir = tempfile.mkdtemp(prefix="ndl_test_")
        self.original_cwd = os.getcwd()

    def path(self, *parts: str) -> str:
        return os.path.join(self.temp_dir, *parts)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        os.chdir(self.original_cwd)
        shutil.rmtree(self.temp_dir, ignore_errors=True)


def _metrics(path: str) -> dict:
    frame = pd.read_csv(path, sep="\t")
    return dict(zip(frame["metric"], frame["value"]))


class TestCoreSetup:

    def test_core_imports(self):
        modules = [
            'core.functions.utils',
            'core.functions.graph_utils',
            'core.functions.sampling_utils',
            'core.functions.patch_utils',
            'core.functions.factorization',
            'core.functions.baselines',
            'core.functions.classification_metrics',
            'core.functions.reconstruction_metrics',
            'core.classes.config_loader',
            'core.classes.network',
            'core.classes.motif_chain',
            'core.classes.dictionary_learner',
            'core.classes.network_reconstructor',
            'core.classes.denoise_pipeline',
            'core.ndl_cli',
        ]
        for module in modules:
            importlib.import_module(module)

    def test_config_defaults(self):
        config = get_config()
        assert config.get("learning.k") == 21
        assert config.get("reconstruction.theta") == 0.4
        assert config.get("sampling.mcmc") == "pivotapprox"
        assert config.get("learning.missing", "fallback") == "fallback"
        assert "AdamicAdar" in config.get_section("denoising")["baselines"]

    def test_config_is_shared(self):
        assert ConfigLoader() is ConfigLoader()

    def test_reload_keeps_values(self):
        config = get_config()
        config.reload()
        assert config.get("bound.mesoscale_samples") == 10000

    def test_deep_merge(self):
        merged = deep_merge({"a": {"b": 1, "c": 2}}, {"a": {"c": 3}})
        assert merged == {"a": {"b": 1, "c": 3}}

    def test_solver_settings(self):
        settings = get_config().learning_settings()
        assert settings["max_rejections"] == 10000
        assert settings["code_tolerance"] == 1e-8
        assert settings["dictionary_sweeps"] == 5
        assert "dictionary_sweeps" not in get_config().solver_settings()

    def test_builtin_defaults_match_file(self):
        config = get_config()
        for section, values in BUILTIN_DEFAULTS.items():
            for key, value in values.items():
                assert config.get(f"{section}.{key}") == value


class TestCommandLine:

    def test_version(self, capsys):
        assert main(["version"]) == 0
        assert capsys.readouterr().out.strip() == f"ndl {__version__}"

    def test_missing_required_flag(self, capsys):
        assert main(["learn", "-o", "W.dict"]) == 1
        assert "--graph" in capsys.readouterr().err

    def test_missing_command(self):
        assert main([]) == 1

    def test_bad_threads(self):
        assert main(["eval", "a", "b", "--threads", "0"]) == 1

    def test_missing_file(self):
        with TestEnvironment() as env:
            assert main(["eval", env.path("nope.edges"), env.path("nope.edges")]) == 1

    def test_parse_error_exit_code(self):
        with TestEnvironment() as env:
            bad = env.path("bad.edges")
            with open(bad, "w") as f:
                f.write("a b c d\n")
            assert main(["eval", bad, bad]) == 1

    def test_eval_identical_networks(self):
        with TestEnvironment() as env:
            graph = env.path("g.edges")
            save_edge_list(cycle(8), graph)
            report = env.path("eval.tsv")
            histograms = env.path("hist.tsv")
            assert main(["eval", graph, graph, "-o", report, "--histograms", histograms]) == 0
            metrics = _metrics(report)
            assert float(metrics["jaccard_index"]) == 1.0
            assert float(metrics["jaccard_distance"]) == 0.0
            hist = pd.read_csv(histograms, sep="\t")
            assert list(hist.columns) == ["degree", "count_a", "count_b"]
            assert hist["count_a"].tolist() == [8]

    def test_changed_file_round_trip(self):
        with TestEnvironment() as env:
            G = cycle(5)
            target = env.path("changed.tsv")
            write_changed(G, [(0, 2)], {(0, 2): "true_edge"}, target)
            assert read_changed(G, target) == {(0, 2): "true_edge"}

    def test_changed_file_with_bad_label(self):
        with TestEnvironment() as env:
            target = env.path("changed.tsv")
            with open(target, "w") as f:
                f.write("u\tv\tlabel\n0\t2\tmaybe\n")
            graph = env.path("g.edges")
            save_edge_list(cycle(5), graph)
            code = main(["denoise", "--graph", graph, "--labels", target, "--k", "3"])
            assert code == 1

    def test_mcmc_diagnostics(self):
        with TestEnvironment() as env:
            graph = env.path("g.edges")
            save_edge_list(cycle(6), graph)
            out = env.path("diag.tsv")
            assert main(["mcmc-diag", "--graph", graph, "--k", "3", "--steps", "2e3",
                         "--oracle", "--seed", "1", "-o", out]) == 0
            row = pd.read_csv(out, sep="\t").iloc[0]
            assert row["steps"] == 2000
            assert row["target"] == "pi_hat"
            assert 0.0 <= row["tv_distance"] < 0.2

    def test_full_workflow(self):
        with TestEnvironment() as env:
            graph = env.path("sbm.edges")
            noisy = env.path("noisy.edges")
            changed = env.path("changed.tsv")
            dictionary = env.path("W.dict")
            common = ["--seed", "7"]

            assert main(["generate", "--model", "sbm", "--sizes", "15,15", "--p-in", "0.5",
                         "--p-out", "0.05", "-o", graph] + common) == 0
            assert main(["corrupt", "--graph", graph, "--noise=-er", "--fraction", "0.2",
                         "--changed", changed, "-o", noisy] + common) == 0
            assert os.path.exists(changed)

            assert main(["learn", "--graph", noisy, "--k", "4", "--r", "4", "--T", "5",
                         "--N", "10", "--trace", env.path("trace.tsv"), "-o", dictionary] + common) == 0
            learned = Dictionary.load(dictionary)
            assert learned.k == 4 and learned.r == 4
            assert os.path.exists(dictionary + ".scores")

            motifs_dir = env.path("motifs")
            assert main(["motifs", "--dict", dictionary, "-o", motifs_dir]) == 0
            images = sorted(os.listdir(motifs_dir))
            assert len(images) == 4
            assert all(name.startswith("motif_") and name.endswith(".pgm") for name in images)
            with open(os.path.join(motifs_dir, images[0])) as f:
                assert f.readline().strip() == "P2"

            recon = env.path("recon.edges")
            binary = env.path("recon_binary.edges")
            report = env.path("recon.tsv")
            assert main(["reconstruct", "--graph", noisy, "--dict", dictionary, "--T", "300",
                         "--binary-output", binary, "--report", report, "-o", recon] + common) == 0
            reconstructed = load_edge_list(recon, labels=load_edge_list(noisy).labels)
            assert reconstructed.n == 30
            assert np.all(reconstructed.adjacency.data > 0)
            metrics = _metrics(report)
            assert 0.0 <= float(metrics["jaccard_index"]) <= 1.0
            assert "bound_holds" in metrics

            scores = env.path("scores.tsv")
            denoise_report = env.path("denoise.tsv")
            assert main(["denoise", "--graph", noisy, "--labels", changed, "--k", "4", "--r", "4",
                         "--T", "5", "--N", "10", "--recon-T", "300", "--chain-distance",
                         "--scores", scores, "--report", denoise_report] + common) == 0
            frame = pd.read_csv(denoise_report, sep="\t")
            assert frame["method"].tolist()[:2] == ["NDR", "ChainDistance"]
            assert set(pd.read_csv(scores, sep="\t")["label"]) <= {"positive", "negative"}

            assert main(["eval", graph, binary, "-o", env.path("eval.tsv")]) == 0

    def test_random_dictionary_needs_k(self):
        with TestEnvironment() as env:
            graph = env.path("g.edges")
            save_edge_list(cycle(6), graph)
            assert main(["reconstruct", "--graph", graph, "--random-dict", "2",
                         "-o", env.path("r.edges")]) == 1
            assert main(["reconstruct", "--graph", graph, "--random-dict", "2", "--k", "3",
                         "--T", "50", "-o", env.path("r.edges")]) == 0

    def test_denoising_report_keeps_mesoscale_error(self):
        with TestEnvironment() as env:
            graph = env.path("g.edges")
            save_edge_list(cycle(8), graph)
            report = env.path("report.tsv")
            assert main(["reconstruct", "--graph", graph, "--random-dict", "2", "--k", "3",
                         "--T", "100", "--denoising", "--report", report, "--seed", "3",
                         "-o", env.path("r.edges")]) == 0
            metrics = _metrics(report)
            assert "jaccard_index" in metrics
            assert "mesoscale_error" in metrics
            assert float(metrics["mesoscale_error"]) >= 0.0
            assert "bound_holds" not in metrics

    def test_denoise_uses_recon_preset(self):
        parser = build_parser()
        args = parser.parse_args(["denoise", "--graph", "g.edges", "--labels", "c.tsv"])
        assert args.recon_T == get_config().get("denoising.recon_T") == 200000
        args = parser.parse_args(["denoise", "--graph", "g.edges", "--labels", "c.tsv",
                                  "--recon-T", "auto"])
        assert args.recon_T is None

    def test_motif_figure(self):
        with TestEnvironment() as env:
            dictionary = env.path("W.dict")
            Dictionary.random(3, 3, np.random.default_rng(0)).save(dictionary)
            figure = env.path("plots", "motifs.png")
            assert main(["motifs", "--dict", dictionary, "-o", env.path("motifs"),
                         "--figure", figure]) == 0
            with open(figure, "rb") as f:
                assert f.read(8) == b"\x89PNG\r\n\x1a\n"
            assert [name for name in os.listdir(env.path("plots")) if name.startswith(".tmp_")] == []
