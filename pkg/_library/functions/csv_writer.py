import csv
import hashlib
import json
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path

from config.settings import CSV_SCHEMA_VERSION, TOOL_NAME

logger = logging.getLogger(__name__)


def canonical_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False, default=str)


def config_hash(payload: dict) -> str:
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def format_cell(value) -> str:
    """
    Render one CSV cell. Floats use repr so values round-trip exactly.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if hasattr(value, "item") and not isinstance(value, str):
        # numpy scalar
        return format_cell(value.item())
    return str(value)


def write_table(
    path: Path,
    columns: Sequence[str],
    rows: Iterable[Sequence],
    config: dict | None = None,
    schema_version: int = CSV_SCHEMA_VERSION,
) -> Path:
    """
    Write a result table.

    Layout: `#` comment header (tool, config hash, canonical config), header
    row starting with `schema_version`, then one line per row. No timestamps,
    so repeated runs are byte-identical.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0

    with path.open("w", encoding="utf-8", newline="") as handle:
        if config is not None:
            handle.write(f"# tool: {TOOL_NAME}\n")
            handle.write(f"# config-hash: {config_hash(config)}\n")
            handle.write(f"# config: {canonical_json(config)}\n")

        writer = csv.writer(handle, delimiter=",", lineterminator="\n")
        writer.writerow(["schema_version", *columns])
        for row in rows:
            writer.writerow([str(schema_version), *(format_cell(value) for value in row)])
            count += 1

    logger.info(f"INFO:-------->> Wrote {count} rows to {path}")
    return path


def read_table(path: Path) -> tuple[list[str], list[list[str]]]:
    """
    Read back a table written by write_table, skipping the comment header.
    """
    with Path(path).open(encoding="utf-8", newline="") as handle:
        lines = [line for line in handle if not line.startswith("#")]
    reader = csv.reader(lines)
    header, *rows = list(reader)
    return header, rows
