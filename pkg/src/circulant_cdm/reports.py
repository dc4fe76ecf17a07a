"""
Record serialisation for the CLI: JSON lines, CSV and DOT.

Records are flat dicts; list-valued fields are written as space separated
strings in CSV so both formats carry the same content.
"""
import csv
import json
from typing import Iterable, TextIO

from .circulant import CirculantSpec, edge_list
from .labeler import Labeling

FORMATS = ("jsonl", "csv", "dot")

CROSSCHECK_COLUMNS = ("n", "S", "classifier_verdict", "oracle_status", "agree", "nodes", "millis")


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    if value is None:
        return ""
    return value


def write_jsonl(records: Iterable[dict], stream: TextIO) -> int:
    count = 0
    for record in records:
        stream.write(json.dumps(record) + "\n")
        count += 1
    return count


def write_csv(records: Iterable[dict], stream: TextIO, columns: Iterable[str] | None = None) -> int:
    """Columns default to the keys of the first record."""
    writer = None
    count = 0
    for record in records:
        if writer is None:
            writer = csv.DictWriter(stream, fieldnames=list(columns or record.keys()), lineterminator="\n")
            writer.writeheader()
        writer.writerow({key: _csv_cell(value) for key, value in record.items()})
        count += 1
    return count


def write_records(records: Iterable[dict], stream: TextIO, output_format: str,
                  columns: Iterable[str] | None = None) -> int:
    if output_format == "jsonl":
        return write_jsonl(records, stream)
    if output_format == "csv":
        return write_csv(records, stream, columns)
    raise ValueError(f"records cannot be written as {output_format!r}")


def labeling_record(spec: CirculantSpec, labeling: Labeling) -> dict:
    return {"n": spec.n, "S": list(spec.S), "values": list(labeling.values), "r": labeling.magic_constant}


def write_labeling_csv(labeling: Labeling, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(("vertex", "label"))
    writer.writerows(enumerate(labeling.values))


def read_labeling(text: str, n: int | None = None) -> Labeling:
    """
    Parse a labeling written by the `label` command, as JSON or as vertex,label CSV.

    Raises:
        ValueError: If the text is neither format or vertices are missing.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        record = json.loads(stripped.splitlines()[0])
        values = record["values"]
        return Labeling(record.get("n", len(values)), values)
    rows = [row for row in csv.reader(stripped.splitlines()) if row]
    if rows and rows[0][0].strip().lower() == "vertex":
        rows = rows[1:]
    by_vertex = {int(vertex): int(value) for vertex, value in rows}
    order = n if n is not None else len(by_vertex)
    if sorted(by_vertex) != list(range(order)):
        raise ValueError(f"labeling CSV must list each vertex 0..{order - 1} once")
    return Labeling(order, [by_vertex[x] for x in range(order)])


def dot_graph(spec: CirculantSpec, labeling: Labeling | None = None) -> str:
    """Undirected DOT graph; node label attributes carry the labeling when given."""
    name = f"C{spec.n}_" + "_".join(str(s) for s in spec.S)
    lines = [f"graph {name} {{"]
    for x in range(spec.n):
        if labeling is not None:
            lines.append(f'  {x} [label="{labeling.values[x]}"];')
        else:
            lines.append(f"  {x};")
    lines.extend(f"  {x} -- {y};" for x, y in edge_list(spec))
    lines.append("}")
    return "\n".join(lines) + "\n"
