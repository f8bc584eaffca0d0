# Copyright 2026 The anomalab Authors.

"""
Deterministic, atomic output of experiment results.

Every file is written to a temporary file in the target directory and moved
into place with os.replace, so readers never see a partial file.  CSV floats
use %.17g; JSON uses sorted keys, two-space indentation and the shortest
round-trip repr of each float, with non-finite values written as null.
Golden comparison checks a run against stored outputs byte for byte.
"""

import csv
import io
import json
import logging
import math
import numbers
import os
import tempfile

import numpy as np

logger = logging.getLogger(__name__)


def _csv_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return "%.17g" % float(value)
    return str(value)


def to_jsonable(value):
    """Convert numpy scalars and arrays, tuples and complex numbers to JSON types."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, numbers.Complex):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if value is None or isinstance(value, str):
        return value
    return str(value)


def write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.debug("wrote %s", path)


def csv_text(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buffer.getvalue()


def json_text(document):
    return json.dumps(to_jsonable(document), sort_keys=True, indent=2, allow_nan=False) + "\n"


def result_document(result, config=None):
    """The <name>.json document: summary, checks and the run configuration."""
    document = {
        "experiment": result.name,
        "passed": result.passed,
        "summary": result.summary,
        "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail, "exact": c.exact}
                   for c in result.checks],
    }
    if config is not None:
        document["config"] = {k: v for k, v in config.as_dict().items() if k not in ("out", "golden")}
    return document


def write_result(result, out_dir, config=None):
    """
    Write one CSV per table, <name>.json with the summary and checks, and
    one JSON file per document.

    Returns
        list of str - the paths written, in a fixed order.
    """
    paths = []
    for name, (header, rows) in sorted(result.tables.items()):
        path = os.path.join(out_dir, name + ".csv")
        write_atomic(path, csv_text(header, rows))
        paths.append(path)
    for name, document in sorted(result.documents.items()):
        path = os.path.join(out_dir, name + ".json")
        write_atomic(path, json_text(document))
        paths.append(path)
    path = os.path.join(out_dir, result.name + ".json")
    write_atomic(path, json_text(result_document(result, config)))
    paths.append(path)
    return paths


def compare_golden(paths, golden_dir):
    """
    Compare written files byte for byte with the files of the same name in
    golden_dir.  A missing golden file is recorded from the new output.

    Returns
        list of str - names of the files that differ.
    """
    differ = []
    for path in paths:
        name = os.path.basename(path)
        golden = os.path.join(golden_dir, name)
        with open(path, "rb") as f:
            produced = f.read()
        if not os.path.exists(golden):
            write_atomic(golden, produced.decode("utf-8"))
            logger.info("recorded golden file %s", golden)
            continue
        with open(golden, "rb") as f:
            if f.read() != produced:
                differ.append(name)
    if differ:
        logger.warning("%d file(s) differ from %s", len(differ), golden_dir)
    return differ
