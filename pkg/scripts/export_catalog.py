#!/usr/bin/env python3
"""
Export every catalog entry as a YAML algebra document
"""

import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

import re
from dotenv import load_dotenv
from src.catalog import catalog_get, catalog_list
from src.document import print_document

load_dotenv()


def file_name(entry_id):
    """Catalog id as a safe file name, e.g. L(3,2,a) -> L_3_2_a"""
    return re.sub(r"[^A-Za-z0-9.]+", "_", entry_id).strip("_") + ".yaml"


def main():
    print("Catalog Export Utility")
    print("=" * 50)

    target = sys.argv[1] if len(sys.argv) > 1 else os.path.join("data", "catalog")
    os.makedirs(target, exist_ok=True)

    try:
        for entry in catalog_list():
            path = os.path.join(target, file_name(entry.id))
            with open(path, "w", encoding="utf-8") as f:
                f.write(print_document(catalog_get(entry.id)))
            print(f"✓ Exported {entry.id} to {path}")
    except Exception as e:
        print(f"\n✗ Error: {e}")
        return False

    print("\n" + "=" * 50)
    print(f"✓ {len(catalog_list())} documents written to {target}")
    return True


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
