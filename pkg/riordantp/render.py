"""Plain, CSV and JSON renderings of an OutputDocument.

Every rendering is a pure function of the document, so identical inputs
give byte-identical output.
"""

import csv
import io
import json
from typing import Any, Iterator, List, Tuple

from .schemas import OutputDocument, OutputFormat


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, list):
        return " ".join(_text(v) for v in value)
    return str(value)


def _flatten(result: dict, prefix: str = "") -> Iterator[Tuple[str, Any]]:
    for key, value in result.items():
        if isinstance(value, dict):
            yield from _flatten(value, f"{prefix}{key}.")
        else:
            yield f"{prefix}{key}", value


def _table(document: OutputDocument) -> List[list]:
    """Gen rows or the single line of numbers; checks have no table form."""
    if document.command == "gen":
        return document.result["rows"]
    if document.command == "catalan-like":
        return [document.result["numbers"]]
    return []


def render_plain(document: OutputDocument) -> str:
    table = _table(document)
    if table:
        return "".join(" ".join(_text(v) for v in row) + "\n" for row in table)
    lines = [f"{document.command}: {document.parameters.get('subject', '')}"]
    lines += [f"{key}: {_text(value)}" for key, value in _flatten(document.result)]
    return "\n".join(lines) + "\n"


def render_csv(document: OutputDocument) -> str:
    buffer = io.StringIO()
    table = _table(document)
    if table:
        # ints stay bare, "p/q" strings get quoted
        writer = csv.writer(buffer, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        writer.writerows(table)
    else:
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows((key, _text(value)) for key, value in _flatten(document.result))
    return buffer.getvalue()


def render_json(document: OutputDocument) -> str:
    return json.dumps(document.model_dump(mode="json", by_alias=True), indent=2) + "\n"


_RENDERERS = {
    OutputFormat.PLAIN: render_plain,
    OutputFormat.CSV: render_csv,
    OutputFormat.JSON: render_json,
}


def render_document(document: OutputDocument, fmt: OutputFormat = OutputFormat.PLAIN) -> str:
    return _RENDERERS[OutputFormat(fmt)](document)
