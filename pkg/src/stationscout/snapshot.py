"""Versioned binary snapshot container.

Layout: 8-byte magic "SSNAP01\\n", a kind line (ascii + "\\n"), then a
pickle (protocol 5) of the payload. The kind line guards against
loading one artifact type as another.
"""

import pickle

MAGIC = b"SSNAP01\n"


class SnapshotError(RuntimeError):
    pass


def save_snapshot(obj, path, kind: str):
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(kind.encode("ascii") + b"\n")
        pickle.dump(obj, f, protocol=5)


def load_snapshot(path, kind: str):
    with open(path, "rb") as f:
        magic = f.read(len(MAGIC))
        if magic != MAGIC:
            raise SnapshotError(f"{path}: not a snapshot file")
        got = f.readline().rstrip(b"\n").decode("ascii")
        if got != kind:
            raise SnapshotError(f"{path}: snapshot kind {got!r}, expected {kind!r}")
        return pickle.load(f)
