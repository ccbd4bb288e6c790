# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

import datetime
import json
import os
import pathlib
from dataclasses import dataclass, field
from typing import List

import jsonschema
import pandas

from .settings import get_logger, OUTPUT_FORMAT_VERSION
from .utils import NpEncoder

logger = get_logger(__file__)

SCHEMA_FILE = pathlib.Path(__file__).parent / "schema" / "output_record.schema.json"


def load_schema() -> dict:
    with open(SCHEMA_FILE, 'r') as f:
        return json.load(f)


def utc_timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec='seconds')


@dataclass
class OutputRecord:
    """
    Machine-readable result of one CLI command.

    The timestamp is the only field that varies between identical runs.
    """
    command: str
    arguments: dict
    results: List[dict]
    timestamp: str = field(default_factory=utc_timestamp)
    format_version: str = OUTPUT_FORMAT_VERSION

    def to_dict(self):
        # Round trip through the encoder so numpy scalars become plain JSON values
        return json.loads(json.dumps({
            'command': {'name': self.command, 'arguments': self.arguments},
            'timestamp': self.timestamp,
            'results': self.results,
            'format_version': self.format_version,
        }, cls=NpEncoder))

    def validate(self) -> dict:
        content = self.to_dict()
        jsonschema.validate(content, load_schema())
        return content

    def to_json(self) -> str:
        return json.dumps(self.validate(), indent=2, sort_keys=True)

    def write(self, path):
        text = self.to_json()
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, 'w') as f:
            f.write(text)
            f.write("\n")
        logger.info(f"Wrote {self.command} record to {path}")

    def frame(self) -> pandas.DataFrame:
        return pandas.DataFrame(self.results)

    def to_csv(self, columns: List[str] = None) -> str:
        frame = self.frame()
        if columns is not None:
            frame = frame.reindex(columns=columns)
        return frame.to_csv(index=False, lineterminator="\n")
