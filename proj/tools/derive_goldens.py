#!/usr/bin/env python3
"""Brute-force oracle for the derived fixture counts.

Independent of the C++ code: enumerates every attribute subset, keeps the
closed ones, and computes covers pairwise. Writes fixtures/golden/derived.json.
"""
import itertools
import json
import re
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def read_cxt(path):
    lines = [l.rstrip("\n") for l in path.read_text().splitlines()]
    assert lines[0] == "B"
    i = 1 if lines[1] == "" else 2
    n, m = int(lines[i + 1]), int(lines[i + 2])
    i += 4
    objs = lines[i:i + n]
    attrs = lines[i + n:i + n + m]
    rows = lines[i + n + m:i + n + m + n]
    return {g: frozenset(a for a, c in zip(attrs, r) if c == "X") for g, r in zip(objs, rows)}, attrs


def read_corpus(path):
    stops = {w for w in (ROOT / "data" / "stopwords.txt").read_text().split() if not w.startswith("#")}
    rows = {}
    for doc in ET.parse(path).getroot():
        title = (doc.findtext("titre") or doc.findtext("title")).lower()
        words = re.sub(r"[^\w\s-]", "", title).replace("-", " ").split()
        rows[doc.get("nom")] = frozenset(w for w in words if w not in stops)
    return rows, sorted(set().union(*rows.values()))


def concepts(rows, attrs):
    out = set()
    for r in range(len(attrs) + 1):
        for s in itertools.combinations(attrs, r):
            s = frozenset(s)
            ext = frozenset(g for g, row in rows.items() if s <= row)
            intent = frozenset(attrs) if not ext else frozenset.intersection(*(rows[g] for g in ext))
            if intent == s:
                out.add((ext, intent))
    return out


def covers(cs):
    return [(c, d) for c in cs for d in cs
            if c[0] < d[0] and not any(c[0] < e[0] < d[0] for e in cs)]


def summary(rows, attrs):
    cs = concepts(rows, attrs)
    return {"concepts": len(cs), "edges": len(covers(cs))}


def main():
    t1, a1 = read_cxt(ROOT / "fixtures" / "table1.cxt")
    t2, a2 = read_corpus(ROOT / "fixtures" / "table2.xml")
    with_query = dict(t2, Query=frozenset({"detection", "segmentation"}))
    q = concepts(with_query, a2)
    qc = next(c for c in q if "Query" in c[0] and c[1] == with_query["Query"])
    golden = {
        "table1": summary(t1, a1),
        "table2": summary(t2, a2),
        "table2_query_detection_segmentation": {
            **summary(with_query, a2),
            "query_extent": sorted(qc[0]),
            "query_intent": sorted(qc[1]),
        },
    }
    out = ROOT / "fixtures" / "golden" / "derived.json"
    out.write_text(json.dumps(golden, indent=2, sort_keys=True) + "\n")
    json.dump(golden, sys.stdout, indent=2, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
