from __future__ import annotations

import json

from igw.cli import main
from igw.interchange import canonical_json, load_corpus
from igw.stoplist import stoplist_hash

from conftest import SAMPLE_CORPUS_DIR


def read_jsonl(path):
    return [json.loads(line) for line in path.read_text().splitlines() if line]


def test_validate_ok(capsys):
    assert main(["validate", "--src", str(SAMPLE_CORPUS_DIR)]) == 0
    assert "0 violation(s)" in capsys.readouterr().out


def test_validate_reports_violations(tmp_path, capsys):
    # bypass save-time validation by corrupting a written statement line
    from igw.interchange import save_corpus
    save_corpus(load_corpus(SAMPLE_CORPUS_DIR), tmp_path / "c")
    stmts = (tmp_path / "c" / "statements.jsonl").read_text().splitlines()
    rec = json.loads(stmts[0])
    rec["tokens"][1]["head"] = 99
    stmts[0] = canonical_json(rec)
    (tmp_path / "c" / "statements.jsonl").write_text("\n".join(stmts) + "\n")
    assert main(["validate", "--src", str(tmp_path / "c")]) == 1
    err = capsys.readouterr().err
    assert "invalid" in err and "s01" in err


def test_parse_writes_records(tmp_path):
    out = tmp_path / "records.jsonl"
    assert main(["parse", "--src", str(SAMPLE_CORPUS_DIR), "--out", str(out)]) == 0
    rows = read_jsonl(out)
    assert len(rows) == 25
    assert rows[0]["statement_id"] == "s01"


def test_compare_ranks_pairs(tmp_path):
    out = tmp_path / "pairs.jsonl"
    assert main(["compare", "--corpus-a", str(SAMPLE_CORPUS_DIR),
                 "--corpus-b", str(SAMPLE_CORPUS_DIR),
                 "--top", "3", "--out", str(out)]) == 0
    rows = read_jsonl(out)
    assert len(rows) == 3
    assert rows[0]["score"] == 1.0
    assert [r["rank"] for r in rows] == [1, 2, 3]


def test_search_with_vector_file(tmp_path):
    qfile = tmp_path / "q.json"
    qfile.write_text("[1, 0, 0, 0, 0, 0, 0, 0]")
    out = tmp_path / "hits.jsonl"
    assert main(["search", "--corpus", str(SAMPLE_CORPUS_DIR),
                 "--query-vector-file", str(qfile), "--k", "2",
                 "--out", str(out)]) == 0
    rows = read_jsonl(out)
    assert rows[0]["doc_id"] == "d01" and rows[0]["score"] == 1.0


def test_cluster_network_eval_pipeline(tmp_path):
    records_path = tmp_path / "records.jsonl"
    main(["parse", "--src", str(SAMPLE_CORPUS_DIR), "--out", str(records_path)])

    items_path = tmp_path / "items.jsonl"
    with items_path.open("w") as fh:
        for row in read_jsonl(records_path):
            sid = row["statement_id"]
            if row["attribute"]:
                fh.write(canonical_json(
                    {"id": sid + "#A", "text": row["attribute"]["text"],
                     "vector": [1.0, 0.0]}) + "\n")
            if row["object"]:
                fh.write(canonical_json(
                    {"id": sid + "#B", "text": row["object"]["text"],
                     "vector": [0.0, 1.0]}) + "\n")

    clusters_path = tmp_path / "clusters.jsonl"
    assert main(["cluster", "--items", str(items_path), "--min-size", "10",
                 "--out", str(clusters_path)]) == 0
    rows = read_jsonl(clusters_path)
    assert rows[-1]["id"] == -1
    assert len(rows) == 3  # two clusters + noise row

    graph_path = tmp_path / "graph.dot"
    assert main(["network", "--records", str(records_path),
                 "--clusters", str(clusters_path),
                 "--format", "dot", "--out", str(graph_path)]) == 0
    dot = graph_path.read_text()
    assert dot.startswith("digraph") and "->" in dot

    gold_path = tmp_path / "gold.jsonl"
    gold_path.write_text(canonical_json({
        "statement_id": "s01", "coded": True,
        "constituents": {"A": {"tokens": ["members"], "implicit": False}},
    }) + "\n")
    report_path = tmp_path / "eval.json"
    assert main(["eval", "--records", str(records_path),
                 "--gold", str(gold_path), "--dataset", "cli",
                 "--out", str(report_path)]) == 0
    report = json.loads(report_path.read_text())
    assert report["scores"]["A"]["f1"] == 1.0
    assert report["stopword_list_hash"] == stoplist_hash()


def test_resolve_writes_rows(tmp_path):
    out = tmp_path / "resolved.jsonl"
    rewritten = tmp_path / "rewritten"
    assert main(["resolve", "--src", str(SAMPLE_CORPUS_DIR),
                 "--out", str(out), "--apply-surface", str(rewritten)]) == 0
    rows = read_jsonl(out)
    by_id = {r["statement_id"]: r for r in rows}
    assert by_id["s11"]["text"].startswith("The committee must publish")
    assert by_id["s11"]["substitutions"][0]["replacement"] == "The committee"
    surfaced = load_corpus(rewritten)
    assert surfaced.statement_by_id("s11").text() == \
        "The committee must publish decisions promptly ."


def test_ingest_and_overwrite(tmp_path, capsys):
    root = tmp_path / "root"
    assert main(["ingest", "--root", str(root), "--name", "sample",
                 "--src", str(SAMPLE_CORPUS_DIR)]) == 0
    assert main(["ingest", "--root", str(root), "--name", "sample",
                 "--src", str(SAMPLE_CORPUS_DIR)]) == 1
    assert main(["ingest", "--root", str(root), "--name", "sample",
                 "--src", str(SAMPLE_CORPUS_DIR), "--overwrite"]) == 0


def test_stopwords_hash(capsys):
    assert main(["stopwords", "--hash-only"]) == 0
    assert capsys.readouterr().out.strip() == stoplist_hash()


def test_keep_unparsed_flag(tmp_path):
    # corpus with a frame-less statement
    corpus = load_corpus(SAMPLE_CORPUS_DIR)
    from igw.interchange import AnnotatedStatement, Token, save_corpus
    frag = AnnotatedStatement("frag", [
        Token(0, "Definitions", "definition", "noun", -1, "root")], [])
    corpus.statements.append(frag)
    src = tmp_path / "c"
    save_corpus(corpus, src)

    out = tmp_path / "records.jsonl"
    assert main(["parse", "--src", str(src), "--out", str(out)]) == 1

    unparsed = tmp_path / "unparsed.jsonl"
    assert main(["parse", "--src", str(src), "--out", str(out),
                 "--keep-unparsed", str(unparsed)]) == 0
    assert len(read_jsonl(out)) == 25
    assert read_jsonl(unparsed) == [{"statement_id": "frag", "reason": "no_aim"}]
