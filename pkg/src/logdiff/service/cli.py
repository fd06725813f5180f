"""Command line entry point: `logdiff --root ./logs --port 8000 --demo`."""
from __future__ import annotations

import argparse
import logging
from pathlib import Path

from .app import DEFAULT_MAX_UPLOAD_BYTES, create_app


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logdiff",
        description="Comparative process mining service: slice an event log, "
                    "compare two DFG models, export the diff.")
    parser.add_argument("--root", type=Path, default=Path("./logs"),
                        help="root directory of event logs (default: ./logs)")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--max-upload-bytes", type=int, default=DEFAULT_MAX_UPLOAD_BYTES,
                        help="reject uploads larger than this (default: 256 MiB)")
    parser.add_argument("--demo", action="store_true",
                        help="pre-generate the seed-7 demo log at startup")
    parser.add_argument("--ui-dir", type=Path, default=None,
                        help="serve a built UI bundle from this directory at /")
    return parser


def main(argv: list[str] | None = None) -> None:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")

    import uvicorn

    app = create_app(root=args.root, max_upload_bytes=args.max_upload_bytes,
                     demo=args.demo, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    main()
