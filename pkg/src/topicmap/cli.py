"""Command-line interface: train vectors, evaluate analogies, build maps,
suggest dimensionality, detect communities, and serve the explorer.

Precedence for every option: flag > config-file value > built-in default.
The config file is JSON keyed by flag names with underscores
(e.g. {"vector_size": 100, "no_stopwords": true}).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import corpus as corpus_mod
from .clusters import detect_communities
from .embedding import (
    TrainParams,
    evaluate_analogies,
    load_model,
    save_model,
    suggest_vector_size,
    train,
)
from .errors import InvalidParamsError, TopicMapError
from .mapbuilder import MapParams, build_map, load_map, save_map
from .server import create_server

DEFAULTS = {
    "vector_size": 250,
    "context": 12,
    "epochs": 5,
    "negatives": 5,
    "min_count": 5,
    "seed": 1,
    "workers": 1,
    "terms": 500,
    "percentile": 0.985,
    "base_percentile": 0.95,
    "cap": 12,
    "port": 8787,
    "max_iters": 100,
    "membership_threshold": 0.3,
}

_CONFIG_KEYS = frozenset(DEFAULTS) | frozenset(
    {
        "input",
        "counts_input",
        "stopwords",
        "no_stopwords",
        "no_communities",
        "model_out",
        "model",
        "out",
    }
)


def _load_config(path: str) -> dict:
    cfg = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(cfg, dict):
        raise InvalidParamsError("config file must hold a JSON object")
    unknown = sorted(set(cfg) - _CONFIG_KEYS)
    if unknown:
        raise InvalidParamsError(f"unknown config keys: {', '.join(unknown)}")
    return cfg


class _Options:
    """Merged view over parsed flags, config values, and defaults."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.cfg = _load_config(args.config) if getattr(args, "config", None) else {}

    def get(self, key: str, default=None):
        value = getattr(self.args, key, None)
        if value is None:
            value = self.cfg.get(key, DEFAULTS.get(key, default))
        return value

    def flag(self, key: str) -> bool:
        return bool(getattr(self.args, key, False) or self.cfg.get(key, False))

    def require(self, key: str, flag_name: str):
        value = self.get(key)
        if value is None:
            raise InvalidParamsError(f"{flag_name} is required")
        return value


def _train_params(opts: _Options) -> TrainParams:
    return TrainParams(
        vector_size=int(opts.get("vector_size")),
        context_size=int(opts.get("context")),
        epochs=int(opts.get("epochs")),
        negatives=int(opts.get("negatives")),
        min_count=int(opts.get("min_count")),
        seed=int(opts.get("seed")),
        workers=int(opts.get("workers")),
    )


def _map_params(opts: _Options) -> MapParams:
    return MapParams(
        n_terms=int(opts.get("terms")),
        percentile=float(opts.get("percentile")),
        cap=int(opts.get("cap")),
        base_percentile=float(opts.get("base_percentile")),
    )


def _stopwords(opts: _Options) -> frozenset[str]:
    if opts.flag("no_stopwords"):
        return frozenset()
    path = opts.get("stopwords")
    if path:
        return corpus_mod.load_stopwords(path)
    return corpus_mod.DEFAULT_STOPWORDS


def cmd_train(args: argparse.Namespace) -> int:
    opts = _Options(args)
    params = _train_params(opts)
    model_out = opts.require("model_out", "--model-out")
    documents = corpus_mod.load_corpus(opts.require("input", "--input"))
    documents = corpus_mod.detect_phrases(documents)
    started = time.perf_counter()
    model = train(documents, params)
    elapsed = time.perf_counter() - started
    save_model(model, model_out)
    print(f"vocab size: {len(model.terms)}")
    print(f"token count: {model.total_tokens}")
    print(f"training time: {elapsed:.1f} s")
    print(f"model written to {model_out}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    opts = _Options(args)
    model = load_model(opts.require("model", "--model"))
    report = evaluate_analogies(model, Path(args.questions))
    print(report.format_report())
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    opts = _Options(args)
    train_params = _train_params(opts)
    map_params = _map_params(opts)
    out = opts.require("out", "--out")
    stopwords = _stopwords(opts)
    documents = corpus_mod.load_corpus(opts.require("input", "--input"))
    counts_path = opts.get("counts_input")
    count_documents = (
        corpus_mod.load_corpus(counts_path) if counts_path else None
    )
    model_path = opts.get("model")
    model = load_model(model_path) if model_path else None
    topic_map = build_map(
        documents,
        count_documents=count_documents,
        train_params=train_params,
        map_params=map_params,
        model=model,
        stopwords=stopwords,
        communities=not opts.flag("no_communities"),
        community_max_iters=int(opts.get("max_iters")),
        membership_threshold=float(opts.get("membership_threshold")),
    )
    save_map(topic_map, out)
    primary = sum(1 for link in topic_map.graph.links.values() if link.primary)
    community_count = (
        len(set(topic_map.communities.values()))
        if topic_map.communities
        else 0
    )
    print(
        f"map: {topic_map.meta.terms} terms, "
        f"{topic_map.graph.link_count()} links ({primary} primary), "
        f"{community_count} communities"
    )
    print(f"map written to {out}")
    return 0


def cmd_suggest_v(args: argparse.Namespace) -> int:
    print(suggest_vector_size(args.ref_v, args.ref_vocab, args.vocab))
    return 0


def cmd_communities(args: argparse.Namespace) -> int:
    opts = _Options(args)
    topic_map = load_map(args.map)
    assignment = detect_communities(
        topic_map.primary_subgraph(),
        seed=int(opts.get("seed")),
        max_iters=int(opts.get("max_iters")),
        membership_threshold=float(opts.get("membership_threshold")),
    )
    topic_map.communities = assignment.primary
    out = opts.get("out") or args.map
    save_map(topic_map, out)
    print(
        f"{assignment.community_count()} communities over "
        f"{topic_map.meta.terms} terms"
    )
    print(f"map written to {out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    opts = _Options(args)
    port = int(opts.get("port"))
    model_path = opts.get("model")
    server = create_server(
        port=port, map_path=args.map, model_path=model_path
    )
    host, bound_port = server.server_address[:2]
    print(f"serving {args.map} on http://{host}:{bound_port}/")
    if model_path:
        print(f"model: {model_path}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def _add_config(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file (flags override it)")


def _add_train_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--vector-size", type=int, dest="vector_size",
                        help="embedding dimensionality (default 250)")
    parser.add_argument("--context", type=int,
                        help="max context window radius (default 12)")
    parser.add_argument("--epochs", type=int, help="training passes (default 5)")
    parser.add_argument("--negatives", type=int,
                        help="negative samples per pair (default 5)")
    parser.add_argument("--min-count", type=int, dest="min_count",
                        help="discard terms rarer than this (default 5)")
    parser.add_argument("--seed", type=int, help="random seed (default 1)")
    parser.add_argument("--workers", type=int,
                        help="training threads (default 1; >1 is not reproducible)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topicmap",
        description="Train word vectors, build topic maps, and serve them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a skip-gram model on a corpus")
    p.add_argument("--input", help="corpus file (one document per line) or directory of .txt files")
    _add_train_flags(p)
    p.add_argument("--model-out", dest="model_out", help="where to write the model file")
    _add_config(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="score a model on analogy questions")
    p.add_argument("questions", help="analogy question file")
    p.add_argument("--model", help="model file to evaluate")
    _add_config(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("build", help="build a topic map from a corpus")
    p.add_argument("--input", help="training corpus file or directory")
    p.add_argument("--counts-input", dest="counts_input",
                   help="foreground corpus for term frequencies (default: the training corpus)")
    p.add_argument("--stopwords", help="stopword file, one term per line")
    p.add_argument("--no-stopwords", dest="no_stopwords", action="store_true",
                   help="disable stopword filtering")
    _add_train_flags(p)
    p.add_argument("--model", help="reuse a trained model file instead of training")
    p.add_argument("--terms", type=int, help="terms in the map (default 500)")
    p.add_argument("--percentile", type=float,
                   help="similarity percentile threshold (default 0.985)")
    p.add_argument("--base-percentile", dest="base_percentile", type=float,
                   help="relaxed export percentile (default 0.95)")
    p.add_argument("--cap", type=int, help="max links per term (default 12)")
    p.add_argument("--no-communities", dest="no_communities",
                   action="store_true", help="skip community detection")
    p.add_argument("--max-iters", dest="max_iters", type=int,
                   help="label propagation sweep budget (default 100)")
    p.add_argument("--membership-threshold", dest="membership_threshold",
                   type=float, help="secondary membership cutoff (default 0.3)")
    p.add_argument("--out", help="where to write the map JSON")
    _add_config(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser(
        "suggest-v",
        help="scale a reference dimensionality to a new vocabulary size",
    )
    p.add_argument("ref_v", type=int, help="reference dimensionality")
    p.add_argument("ref_vocab", type=int, help="reference vocabulary size")
    p.add_argument("vocab", type=int, help="target vocabulary size")
    p.set_defaults(func=cmd_suggest_v)

    p = sub.add_parser("communities", help="(re)detect communities on a built map")
    p.add_argument("map", help="map JSON file")
    p.add_argument("--seed", type=int, help="random seed (default 1)")
    p.add_argument("--max-iters", dest="max_iters", type=int,
                   help="label propagation sweep budget (default 100)")
    p.add_argument("--membership-threshold", dest="membership_threshold",
                   type=float, help="secondary membership cutoff (default 0.3)")
    p.add_argument("--out", help="output map file (default: rewrite in place)")
    _add_config(p)
    p.set_defaults(func=cmd_communities)

    p = sub.add_parser("serve", help="serve a map (and optionally a model) over HTTP")
    p.add_argument("map", help="map JSON file")
    p.add_argument("--model", help="model file enabling /api/neighbors and /api/compound")
    p.add_argument("--port", type=int, help="listen port (default 8787)")
    _add_config(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TopicMapError as e:
        print(f"error: {e.code}: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
