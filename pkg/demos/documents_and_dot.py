"""
Documents and DOT
=================

Labeled graphs travel as small versioned text documents.  The stored edge
labels make tampering visible, and DOT gives a picture.
"""
import os
import tempfile
from dataclasses import replace

from graceful import ConstructionSpec, Family, label
from graceful.io import (
    document_from_report,
    export_dot,
    parse_base,
    read_document,
    verify_document,
    write_document,
)

base = parse_base("path:3")
report = label(base, ConstructionSpec(Family.OPEN_STAR, t=2))
doc = document_from_report(report, "path:3")

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "star.txt")
    write_document(doc, path)
    print(open(path).read())
    again = read_document(path)
print("round trip equal:", again == doc)

# %%
# Change one vertex label and re-verify.
(v, x), *rest = doc.vertices
print(verify_document(replace(doc, vertices=((v, x + 1), *rest))).report())

# %%
print(export_dot(doc))
