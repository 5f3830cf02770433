# -*- coding: utf-8 -*-
"""Table writers with a run manifest
"""

import io
import json
import sys
from dataclasses import dataclass, field, asdict
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from maglap.utils.utility import FLOAT_FORMAT
from maglap.version import __version__


@dataclass(frozen=True)
class RunManifest:
    """Provenance of one output table; the timestamp is the only field that changes between reruns."""
    command: str
    parameters: dict
    tolerances: dict
    tool_version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def to_dict(self):
        return _plain(asdict(self))


def _plain(obj):
    """Convert numpy scalars and arrays for json."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def render_csv(frame):
    """RFC-4180 CSV with a header row and 17 significant digits."""
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator='\r\n')
    return buffer.getvalue()


def render_json(frame, manifest):
    """Rows as objects in column order, preceded by the manifest."""
    rows = [{c: _plain(v) for c, v in zip(frame.columns, row)}
            for row in frame.itertuples(index=False, name=None)]
    payload = {'manifest': manifest.to_dict(), 'columns': list(frame.columns), 'rows': rows}
    return json.dumps(payload, indent=2) + '\n'


def write_table(frame, manifest, fmt='csv', out=None):
    """
    Write a table to ``out`` or stdout.

    Parameters
    ----------
    frame: pandas.DataFrame
        Table in its final column order.

    manifest: RunManifest

    fmt: str, optional (default='csv')
        'csv' or 'json'. CSV output to a file gets a sidecar ``<out>.manifest.json``.

    out: str or Path, optional (default=None)
        Destination file; stdout when None.

    Returns
    -------
    path: Path or None
    """
    if fmt == 'json':
        text = render_json(frame, manifest)
    elif fmt == 'csv':
        text = render_csv(frame)
    else:
        raise ValueError(f'unknown output format {fmt!r}')

    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None

    path = Path(out)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    if fmt == 'csv':
        sidecar = path.with_name(path.name + '.manifest.json')
        sidecar.write_text(json.dumps(manifest.to_dict(), indent=2) + '\n', encoding='utf-8')
    return path
