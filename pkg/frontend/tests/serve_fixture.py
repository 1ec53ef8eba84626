"""Start the HTTP API over the bundled fixture towns for UI tests.

Prints "READY <port>" on stdout once snapshots are prepared and the
server is about to listen; the vitest global setup waits for that line.
"""

import json
import shutil
import socket
import sys
import tempfile
from pathlib import Path

import uvicorn

from stationscout.pipeline import config_from_doc, create_app
from stationscout.pipeline.run import prepare_cities

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"


def town_spec(manifest, name):
    south, west, north, east = manifest["towns"][name]["bbox"]
    return {
        "name": name,
        "boundary": {
            "kind": "bbox", "south": south, "west": west, "north": north, "east": east,
        },
        "stations": {
            "source": "csv_file",
            "path": str(DATA / f"stations_{name.lower()}.csv"),
        },
    }


def free_port():
    with socket.socket() as sock:
        sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def main():
    root = Path(tempfile.mkdtemp(prefix="planner-ui-backend-"))
    shutil.copytree(DATA / "fixture_cache", root / "cache")
    manifest = json.loads((DATA / "fixture_manifest.json").read_text())
    config = config_from_doc({
        "cities": [town_spec(manifest, "Greenfield"), town_spec(manifest, "Harborview")],
        "train_cities": ["Greenfield"],
        "eval_city": "Harborview",
        "cache_root": str(root / "cache"),
        "output_dir": str(root / "out"),
        "iterations": 2,
    })
    prepare_cities(config, ["Greenfield", "Harborview"])
    app = create_app(config)
    port = free_port()
    print(f"READY {port}", flush=True)
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    sys.exit(main())
