"""Adapter command line: annotate a docs file, encode one text, serve HTTP."""

from __future__ import annotations

import argparse
import os
import sys

from .config import AdapterConfig, resolve
from .encode import MODES
from .pipeline import annotate_corpus, read_docs_file
from .stoplist import STOPLIST_VERSION, stoplist_hash
from .writer import canonical_json


def _config(args) -> AdapterConfig:
    if args.builtin:
        return AdapterConfig.builtin()
    return AdapterConfig.from_env()


def cmd_annotate(args) -> int:
    docs = read_docs_file(args.infile)
    out = annotate_corpus(docs, args.out, name=args.name, config=_config(args))
    print(f"wrote corpus to {out}")
    return 0


def cmd_encode(args) -> int:
    backends = resolve(_config(args))
    encoder = backends.encoder(args.mode)
    vector = encoder.encode(args.text)
    print(canonical_json({"vector": vector, "dim": encoder.dim,
                          "model_tag": encoder.tag}))
    return 0


def cmd_stopwords(args) -> int:
    print(canonical_json({"version": STOPLIST_VERSION, "hash": stoplist_hash()}))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(_config(args))
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="igw-adapter")
    parser.add_argument("--builtin", action="store_true",
                        help="use the deterministic offline backends")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("annotate", help="docs.jsonl -> corpus directory")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--name", default="annotated")
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("encode", help="encode one text to stdout")
    p.add_argument("--text", required=True)
    p.add_argument("--mode", choices=list(MODES), default="symmetric")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("stopwords", help="print stopword list version and hash")
    p.set_defaults(func=cmd_stopwords)

    p = sub.add_parser("serve", help="run the encode endpoint")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int,
                   default=int(os.environ.get("IGW_ADAPTER_PORT", "8041")))
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
