"""Batch command-line interface; one subcommand per pipeline step.

Environment defaults: IGW_ROOT (registry root), IGW_ADAPTER_URL (encode
endpoint), IGW_PORT (serve). Explicit flags always win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import abdico, coref, evaluation, graph as graphmod, semantic
from .interchange import (
    InterchangeError, canonical_json, load_corpus, validate,
)
from .registry import CorpusRegistry, DuplicateCorpusError
from .stoplist import STOPLIST_VERSION, STOPWORDS, stoplist_hash


def _write_jsonl(path: str, rows) -> None:
    out = sys.stdout if path == "-" else open(path, "w", encoding="utf-8")
    try:
        for row in rows:
            out.write(canonical_json(row) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _read_jsonl(path: str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def cmd_ingest(args) -> int:
    registry = CorpusRegistry(args.root)
    corpus = load_corpus(args.src)
    try:
        entry = registry.ingest(args.name, corpus, overwrite=args.overwrite)
    except DuplicateCorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(canonical_json(entry.to_obj()))
    return 0


def cmd_validate(args) -> int:
    try:
        corpus = load_corpus(args.src)
    except InterchangeError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    violations = validate(corpus)
    for v in violations:
        print(str(v))
    print(f"{len(violations)} violation(s) in {len(corpus.statements)} statements, "
          f"{len(corpus.docs)} docs")
    return 1 if violations else 0


def cmd_resolve(args) -> int:
    corpus = load_corpus(args.src)
    documents = coref.resolve(corpus, strategy=args.strategy)
    _write_jsonl(args.out, coref.resolved_to_objs(documents))
    if args.apply_surface:
        from .interchange import save_corpus
        save_corpus(coref.apply_chains(corpus, strategy=args.strategy),
                    args.apply_surface)
    return 0


def cmd_parse(args) -> int:
    corpus = load_corpus(args.src)
    try:
        records, unparsed = abdico.parse_corpus(
            corpus.statements, keep_unparsed=args.keep_unparsed is not None)
    except abdico.NoAimError as exc:
        print(f"error: {exc} (use --keep-unparsed to collect instead)",
              file=sys.stderr)
        return 1
    _write_jsonl(args.out, (abdico.record_to_obj(r) for r in records))
    if args.keep_unparsed is not None:
        _write_jsonl(args.keep_unparsed, unparsed)
    return 0


def cmd_compare(args) -> int:
    corpus_a = load_corpus(args.corpus_a)
    corpus_b = load_corpus(args.corpus_b)
    pairs = semantic.compare_corpora(corpus_a, corpus_b)
    rows = semantic.pairs_to_objs(pairs)
    if args.top is not None:
        rows = rows[: args.top]
    _write_jsonl(args.out, rows)
    return 0


def cmd_search(args) -> int:
    corpus = load_corpus(args.corpus)
    vector = json.loads(Path(args.query_vector_file).read_text(encoding="utf-8"))
    hits = semantic.search([float(x) for x in vector], corpus, args.k, args.mode)
    _write_jsonl(args.out, (
        {"doc_id": h.doc_id, "score": h.score, "rank": i, "relevance": args.mode}
        for i, h in enumerate(hits, start=1)))
    return 0


def cmd_cluster(args) -> int:
    rows = _read_jsonl(args.items)
    items = [(str(r["id"]), str(r.get("text", "")), [float(x) for x in r["vector"]])
             for r in rows]
    result = semantic.cluster_components(items, min_cluster_size=args.min_size)
    result.clusters = semantic.label_clusters(result)
    _write_jsonl(args.out, semantic.clusters_to_objs(result))
    return 0


def cmd_network(args) -> int:
    records = [abdico.record_from_obj(o) for o in _read_jsonl(args.records)]
    clustering = semantic.clustering_from_objs(_read_jsonl(args.clusters))
    g = graphmod.build_graph(
        records,
        graphmod.role_assignment(clustering, graphmod.ATTRIBUTE_SUFFIX),
        graphmod.role_assignment(clustering, graphmod.OBJECT_SUFFIX),
        graphmod.cluster_labels(clustering),
    )
    fmt = graphmod.FORMAT_DOT if args.format == "dot" else graphmod.FORMAT_JSON
    text = graphmod.export_graph(g, fmt)
    if args.out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n",
                                  encoding="utf-8")
    return 0


def cmd_eval(args) -> int:
    records = [abdico.record_from_obj(o) for o in _read_jsonl(args.records)]
    gold = [evaluation.gold_from_obj(o) for o in _read_jsonl(args.gold)]
    report = evaluation.evaluate(records, gold, dataset=args.dataset,
                                 averaging=args.averaging)
    obj = evaluation.report_to_obj(report)
    text = canonical_json(obj) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def cmd_stopwords(args) -> int:
    if args.hash_only:
        print(stoplist_hash())
    else:
        print(canonical_json({
            "version": STOPLIST_VERSION,
            "hash": stoplist_hash(),
            "words": sorted(STOPWORDS),
        }))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.root, adapter_url=args.adapter_url)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="igw", description="institutional grammar workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    env_root = os.environ.get("IGW_ROOT", "igw_corpora")
    env_adapter = os.environ.get("IGW_ADAPTER_URL") or None
    env_port = int(os.environ.get("IGW_PORT", "8040"))

    p = sub.add_parser("ingest", help="validate and register a corpus directory")
    p.add_argument("--root", default=env_root)
    p.add_argument("--name", required=True)
    p.add_argument("--src", required=True, help="corpus directory to ingest")
    p.add_argument("--overwrite", action="store_true")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("validate", help="report invariant violations in a corpus")
    p.add_argument("--src", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("resolve", help="substitute coreferent pronouns")
    p.add_argument("--src", required=True)
    p.add_argument("--out", default="resolved.jsonl")
    p.add_argument("--strategy", choices=[coref.REPRESENTATIVE_FIRST,
                                          coref.REPRESENTATIVE_LONGEST],
                   default=coref.REPRESENTATIVE_FIRST)
    p.add_argument("--apply-surface", metavar="DIR",
                   help="also write a corpus with substitutions spliced into "
                        "the annotations")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("parse", help="extract constituent records")
    p.add_argument("--src", required=True)
    p.add_argument("--out", default="records.jsonl")
    p.add_argument("--keep-unparsed", nargs="?", const="unparsed.jsonl",
                   default=None, metavar="FILE",
                   help="collect frame-less statements instead of failing")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("compare", help="rank all cross-corpus policy pairs")
    p.add_argument("--corpus-a", required=True)
    p.add_argument("--corpus-b", required=True)
    p.add_argument("--top", type=int, default=None)
    p.add_argument("--out", default="pairs.jsonl")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("search", help="rank docs against a query vector")
    p.add_argument("--corpus", required=True)
    p.add_argument("--query-vector-file", required=True)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--mode", choices=[semantic.MODE_COSINE, semantic.MODE_DOT],
                   default=semantic.MODE_COSINE)
    p.add_argument("--out", default="results.jsonl")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("cluster", help="cluster items from an id/text/vector file")
    p.add_argument("--items", required=True,
                   help="jsonl with id, text, vector per line")
    p.add_argument("--min-size", type=int, default=10)
    p.add_argument("--out", default="clusters.jsonl")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("network", help="build the actor-object graph")
    p.add_argument("--records", required=True)
    p.add_argument("--clusters", required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_network)

    p = sub.add_parser("eval", help="score records against gold annotations")
    p.add_argument("--records", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--dataset", default="dataset")
    p.add_argument("--averaging", choices=[evaluation.MICRO, evaluation.MACRO],
                   default=evaluation.MICRO)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("stopwords", help="print the shipped stopword list")
    p.add_argument("--hash-only", action="store_true")
    p.set_defaults(func=cmd_stopwords)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--root", default=env_root)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=env_port)
    p.add_argument("--adapter-url", default=env_adapter)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InterchangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
