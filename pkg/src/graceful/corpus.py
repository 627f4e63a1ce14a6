"""The default instance grid: every family over every atlas base kind."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .constructions import ConstructionSpec, Family
from .io import (
    LabeledGraphDocument,
    document_from_report,
    parse_base,
    verify_document,
    write_document,
)
from .labelers import LabelingError, label

BASES = ("path:4", "cycle:8", "kmn:2,3", "grid:2,3")

GRID = {
    Family.PATH_UNION: [{"n": n} for n in (1, 2, 3)],
    Family.OPEN_STAR: [{"t": t} for t in (1, 2, 3)],
    Family.ONE_POINT_UNION_PATH: [{"t": t, "n": n} for t in (1, 2, 3) for n in (1, 2)],
    Family.CYCLE_OF: [{"t": t} for t in (2, 4)],
    Family.STAR_OF: [{}],
}

# larger instances and a few extra base and parameter combinations
EXTRA = [
    (Family.PATH_UNION, "path:14", {"n": 5}),
    (Family.PATH_UNION, "cycle:4", {"n": 4}),
    (Family.OPEN_STAR, "kmn:4,3", {"t": 3}),
    (Family.ONE_POINT_UNION_PATH, "kmn:2,2", {"t": 3, "n": 5}),
    (Family.ONE_POINT_UNION_PATH, "kmn:1,3", {"t": 2, "n": 2}),
    (Family.CYCLE_OF, "path:6", {"t": 6}),
    (Family.STAR_OF, "grid:3,3", {}),
    (Family.STAR_OF, "kmn:1,1", {}),
]


@dataclass(frozen=True)
class CorpusEntry:
    family: Family
    base: str
    params: dict

    @property
    def spec(self) -> ConstructionSpec:
        return ConstructionSpec(self.family, **self.params)

    @property
    def slug(self) -> str:
        base = self.base.replace(":", "-").replace(",", "x")
        params = "_".join(f"{k}{v}" for k, v in sorted(self.params.items()))
        return "__".join(x for x in (self.family.value, base, params) if x)


def default_entries() -> list[CorpusEntry]:
    out = [CorpusEntry(fam, b, p) for fam, grid in GRID.items() for b in BASES for p in grid]
    out += [CorpusEntry(fam, b, p) for fam, b, p in EXTRA]
    return out


@dataclass(frozen=True)
class CorpusRow:
    entry: CorpusEntry
    q: int
    verdict: str
    document: LabeledGraphDocument | None
    error: str = ""


def build_entry(entry: CorpusEntry) -> CorpusRow:
    base = parse_base(entry.base)
    try:
        report = label(base, entry.spec)
    except LabelingError as exc:
        q = exc.certificate.q if exc.certificate else -1
        return CorpusRow(entry, q, "FAIL", None, str(exc).splitlines()[0])
    doc = document_from_report(report, entry.base)
    # re-verify through the document, as a reader would
    cert = verify_document(doc)
    return CorpusRow(entry, doc.q, cert.verdict.value, doc)


def run_corpus(out_dir: str | os.PathLike | None = None,
               entries: list[CorpusEntry] | None = None) -> list[CorpusRow]:
    rows = [build_entry(e) for e in (entries or default_entries())]
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        for row in rows:
            if row.document is not None:
                write_document(row.document, os.path.join(out_dir, row.entry.slug + ".txt"))
        with open(os.path.join(out_dir, "summary.tsv"), "w", encoding="utf-8") as fh:
            fh.write(summary_table(rows))
    return rows


def summary_table(rows: list[CorpusRow]) -> str:
    lines = ["family\tbase\tparams\tq\tverdict"]
    for r in rows:
        params = ",".join(f"{k}={v}" for k, v in sorted(r.entry.params.items())) or "-"
        lines.append(f"{r.entry.family.value}\t{r.entry.base}\t{params}\t{r.q}\t{r.verdict}")
    return "\n".join(lines) + "\n"
