#!/usr/bin/env python3
"""Run the full verification report over every shipped model."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from ttg.cli import main

MODELS = ("support2", "support3", "chain3")


def run():
    models_dir = os.path.join(os.path.dirname(__file__), "..", "models")
    status = 0
    for name in MODELS:
        path = os.path.join(models_dir, name + ".json")
        print("== %s ==" % name)
        status = max(status, main(["report", "--model", path]))
    return status


if __name__ == "__main__":
    sys.exit(run())
