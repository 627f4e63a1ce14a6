"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or under pytest; the
lines are also collected into the pytest terminal summary.
"""
import random
import time
from dataclasses import replace

import pytest

from graceful.atlas import base_complete_bipartite, base_cycle, base_grid, base_path
from graceful.cli import main
from graceful.constructions import SPOKE
from graceful.corpus import run_corpus
from graceful.graph import CENTER, LabeledGraph, Side, VertexAddress, cycle_graph, induced_edge_labels, new_graph
from graceful.io import labeled_graph, parse, read_document, serialize, verify_document
from graceful.labelers import (
    calibrated_cycle_variant,
    label_cycle_of,
    label_one_point_union,
    label_open_star,
    label_path_union,
    label_star_of,
)
from graceful.oracle import SearchBudget, Status, cross_check_enumeration, find_graceful
from graceful.verify import DUPLICATE_EDGE_LABEL, Verdict, complement_labeling, verify_alpha, verify_graceful

RESULTS: list[str] = []
_T0 = time.perf_counter()


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def atlas():
    yield from (base_path(n) for n in range(2, 51))
    yield from (base_cycle(4 * k) for k in range(1, 13))
    yield from (base_complete_bipartite(m, n) for m in range(1, 11) for n in range(1, 11))
    # the 1x1 grid is a lone vertex and is excluded by base_grid's own precondition
    yield from (base_grid(m, n) for m in range(1, 5) for n in range(1, 5) if m * n >= 2)


def capped_atlas(q0_max=30):
    return [b for b in atlas() if b.q0 <= q0_max]


_CORPUS = None


def corpus_docs():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = [r.document for r in run_corpus()]
    return _CORPUS


def edge_ok(report_, q):
    return report_.certificate.ok and report_.labeled.q == q


# 1

def test_atlas_soundness():
    t = time.perf_counter()
    bases = list(atlas())
    bad = [b.name for b in bases if not verify_alpha(b).ok]
    dt = time.perf_counter() - t
    report(1, not bad and dt < 5, f"{len(bases)} atlas bases alpha-verified in {dt:.2f}s, failures={bad}")


# 2

def test_path_union():
    t = time.perf_counter()
    bad, count = [], 0
    for b in capped_atlas():
        for n in range(1, 11):
            count += 1
            if not edge_ok(label_path_union(b, n), n * (b.q0 + 1) - 1):
                bad.append((b.name, n))
    fig = label_path_union(base_path(14), 5)
    fig_ok = fig.certificate.ok and fig.labeled.q == 69 and fig.labeled.graph.p == 70
    dt = time.perf_counter() - t
    report(2, not bad and fig_ok and dt < 10,
           f"{count} path unions graceful, P(5*P14) q={fig.labeled.q}, {dt:.2f}s, failures={bad[:5]}")


# 3

def test_open_star():
    bad, count = [], 0
    for b in capped_atlas():
        for t in range(1, 11):
            count += 1
            if not edge_ok(label_open_star(b, t), t * (b.q0 + 1)):
                bad.append((b.name, t))
    report(3, not bad, f"{count} open stars graceful, failures={bad[:5]}")


# 4

def test_one_point_union():
    bad, count = [], 0
    for b in capped_atlas():
        for t in range(1, 6):
            for n in range(1, 6):
                count += 1
                if not edge_ok(label_one_point_union(b, t, n), t * n * (b.q0 + 1)):
                    bad.append((b.name, t, n))
    # on P2 the spoke to u_{s,1,1} collides; the repaired spoke does not
    r = label_one_point_union(base_path(2), 2, 1)
    g = r.labeled.graph
    literal = [e for e in g.edges if CENTER not in e]
    literal += [(CENTER, VertexAddress(s, 1, Side.U, 1)) for s in (1, 2)]
    lit = LabeledGraph(new_graph(g.vertices, literal), r.labeled.labels)
    lit_labels = sorted(induced_edge_labels(lit))
    lit_fails = DUPLICATE_EDGE_LABEL in {v.kind for v in verify_graceful(lit).violations}
    ok = not bad and r.certificate.ok and lit_labels == [1, 1, 3, 3] and lit_fails
    report(4, ok, f"{count} one-point unions graceful; P2 t=2 n=1 literal spoke gives "
                  f"{lit_labels} (FAIL), repaired spoke GRACEFUL; failures={bad[:5]}")


# 5

def test_cycle_of():
    var = calibrated_cycle_variant()
    bad, count = [], 0
    for b in capped_atlas():
        for t in (2, 4, 6, 8):
            count += 1
            if not edge_ok(label_cycle_of(b, t), t * (b.q0 + 1)):
                bad.append((b.name, t))
    report(5, not bad, f"calibrated variant [{var}]; {count} cycles of graphs graceful, failures={bad[:5]}")


# 6

def test_star_of():
    bad, count = [], 0
    for b in atlas():
        if b.p0 > 12 or b.p0 < 2:
            continue
        count += 1
        r = label_star_of(b)
        q = (b.p0 + 1) * b.q0 + b.p0
        f = r.labeled.labels
        spokes = {frozenset((c.a, c.b)) for c in r.compound.connectors if c.role == SPOKE}
        rest = {abs(f[x] - f[y]) for x, y in r.labeled.graph.edges if frozenset((x, y)) not in spokes}
        want = set(range(1, q + 1)) - {k * (b.q0 + 1) for k in range(1, b.p0 + 1)}
        if not (edge_ok(r, q) and rest == want and len(spokes) == b.p0):
            bad.append(b.name)
    report(6, not bad, f"{count} stars of graphs graceful with exact non-spoke label set, failures={bad}")


# 7

def test_oracle_ground_truth():
    budget = SearchBudget(max_nodes=1_000_000, time_limit=60.0)
    want = {4: Status.FOUND, 5: Status.EXHAUSTED_NONE, 6: Status.EXHAUSTED_NONE, 7: Status.FOUND,
            8: Status.FOUND, 11: Status.FOUND, 12: Status.FOUND}
    got = {n: find_graceful(cycle_graph(n), budget) for n in want}
    cycles_ok = all(got[n].status is want[n] and got[n].nodes_expanded <= 1_000_000 for n in want)
    small = [labeled_graph(d).graph for d in corpus_docs() if d.q <= 8]
    disagree = [g for g in small
                if cross_check_enumeration(g).status is not find_graceful(g, budget).status]
    nodes = ", ".join(f"C{n}:{got[n].status.value}/{got[n].nodes_expanded}" for n in want)
    report(7, cycles_ok and small and not disagree,
           f"{nodes}; enumeration agrees on {len(small) - len(disagree)}/{len(small)} corpus graphs with q<=8")


# 8

def test_verifier_properties():
    rng = random.Random(20261016)
    docs = corpus_docs()
    bad_complement = 0
    for d in docs:
        lg = labeled_graph(d)
        g, q = lg.graph, lg.q
        samples = [lg] + [LabeledGraph(g, dict(zip(g.vertices, rng.sample(range(q + 1), g.p))), q)
                          for _ in range(1000)]
        for s in samples:
            c = complement_labeling(s)
            if complement_labeling(c) != s or verify_graceful(c).ok != verify_graceful(s).ok:
                bad_complement += 1
        if not verify_graceful(complement_labeling(lg)).ok:
            bad_complement += 1
    survivors, tried = [], 0
    for d in docs:
        for k, (v, x) in enumerate(d.vertices):
            for y in range(d.q + 2):
                if y == x:
                    continue
                tried += 1
                vs = d.vertices[:k] + ((v, y),) + d.vertices[k + 1:]
                if verify_document(replace(d, vertices=vs)).verdict is not Verdict.FAIL:
                    survivors.append((d.base, str(v), y))
    report(8, not bad_complement and not survivors,
           f"complement checked on {len(docs)} graphs x 1001 labelings ({bad_complement} bad); "
           f"{tried} single-label corruptions, {len(survivors)} not detected")


# 9

def test_end_to_end(tmp_path, capsys):
    out = tmp_path / "corpus"
    code = main(["corpus", "--out", str(out)])
    capsys.readouterr()
    files = sorted(out.glob("*.txt"))
    bad = []
    for path in files:
        doc = read_document(path)
        if parse(serialize(doc)) != doc or serialize(doc) != path.read_text() \
                or not verify_document(doc).ok or main(["verify", str(path)]) != 0:
            bad.append(path.name)
    capsys.readouterr()
    elapsed = time.perf_counter() - _T0
    report(9, code == 0 and files and not bad and elapsed < 120,
           f"corpus exit {code}, {len(files)} documents round-trip and re-verify, "
           f"failures={bad[:5]}; acceptance suite {elapsed:.1f}s")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
