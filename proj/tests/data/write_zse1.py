#!/usr/bin/env python3
"""Writes a ZSE1 file the way an external encoder would (stdlib only).

usage: write_zse1.py <prompts.jsonl> <out.zse>

Each prompt becomes one unit-norm row derived from its bytes; row ids are
`<species_id>#<k>`.
"""
import hashlib
import json
import math
import struct
import sys

DIM = 16


def embed(text):
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    v = [(b - 127.5) for b in digest[:DIM]]
    n = math.sqrt(sum(x * x for x in v))
    return [x / n for x in v]


def main():
    prompts_path, out_path = sys.argv[1], sys.argv[2]
    ids, rows = [], []
    with open(prompts_path, encoding="utf-8") as f:
        for line in f:
            if not line.strip():
                continue
            obj = json.loads(line)
            for k, p in enumerate(obj["prompts"]):
                ids.append(f"{obj['species_id']}#{k}")
                rows.append(embed(p))
    with open(out_path, "wb") as f:
        f.write(b"ZSE1")
        f.write(struct.pack("<HIQ", 1, DIM, len(rows)))
        for r in rows:
            f.write(struct.pack(f"<{DIM}f", *r))
    with open(out_path + ".ids", "w", encoding="utf-8") as f:
        for i in ids:
            f.write(i + "\n")


if __name__ == "__main__":
    main()
