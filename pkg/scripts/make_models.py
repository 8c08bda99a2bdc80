#!/usr/bin/env python3
"""Regenerate the shipped model files under models/ from the reference
generators, with their named operator sections."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from ttg import chain_model, support_model
from ttg.docio import dump_document, normalize_document


def base_doc(p):
    # normalize_document only needs the original doc to know which optional
    # sections were present; the generators are all K-acting-on-itself.
    return normalize_document({"category": {}}, p)


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "models")
    os.makedirs(out_dir, exist_ok=True)

    support2 = base_doc(support_model(2))
    support2["operators"] = {
        "rad": {"kind": "radical"},
        "div_a": {"kind": "division", "s": ["a"]},
        "fam_min": {"kind": "family", "members": [["z"], ["z", "a", "b", "t"]]},
        "saturate": {"kind": "table",
                     "table": {m: ["z", "a", "b", "t"] for m in "zabt"}},
    }

    support3 = base_doc(support_model(3))

    chain3 = base_doc(chain_model(3))
    chain3["operators"] = {
        "rad": {"kind": "radical"},
        "promote": {"kind": "table",
                    "table": {"z": ["z"],
                              "p": ["z", "p", "q"],
                              "q": ["z", "p", "q", "r"],
                              "r": ["z", "p", "q", "r"]}},
    }

    for name, doc in [("support2", support2), ("support3", support3),
                      ("chain3", chain3)]:
        path = os.path.join(out_dir, name + ".json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump_document(doc))
        print("wrote", path)


if __name__ == "__main__":
    main()
