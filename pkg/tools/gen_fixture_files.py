"""Regenerate the shipped fixture documents from the table definitions.

Run from the repository root:  python3 tools/gen_fixture_files.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from yangbaxter import fixtures
from yangbaxter.documents import qcycle_to_document, save_document, solution_to_document

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "yangbaxter" / "data" / "fixtures"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    docs = {
        "singleton.json": solution_to_document(fixtures.singleton()),
        "projection2.json": solution_to_document(fixtures.projection(2)),
        "left_only3.json": solution_to_document(fixtures.left_only3(), labels=["a", "b", "c"]),
        "lyubashenko3.json": solution_to_document(fixtures.lyubashenko3()),
        "derived2.json": solution_to_document(fixtures.derived2()),
        "z3group.json": solution_to_document(fixtures.z3group()),
        "qcycle_constant.json": qcycle_to_document(fixtures.qcycle_constant()),
    }
    for name, doc in docs.items():
        save_document(OUT / name, doc)
        print("wrote", OUT / name)


if __name__ == "__main__":
    main()
