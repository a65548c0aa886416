"""
Loader for region prevalence files.

Format: UTF-8 CSV with a header naming at least the ``region`` and
``prevalence`` columns; other columns are ignored.
"""
import csv
import logging
from pathlib import Path
from typing import List, Union

from .constants import PREVALENCE_COLUMN, REGION_COLUMN
from .domain import RegionRecord
from .exceptions import RegionDomainError, RegionParseError
from .validators import RegionValidator

logger = logging.getLogger(__name__)


def load_regions(path: Union[str, Path]) -> List[RegionRecord]:
    """Read region records in file order."""
    try:
        handle = open(path, newline='', encoding='utf-8-sig')
    except OSError as e:
        raise RegionParseError(0, f'cannot open {path}: {e.strerror}')

    with handle:
        reader = csv.DictReader(handle)
        try:
            header = reader.fieldnames
        except (csv.Error, UnicodeDecodeError) as e:
            raise RegionParseError(1, str(e))

        if header is None:
            raise RegionParseError(1, 'missing header line')
        missing = [column for column in (REGION_COLUMN, PREVALENCE_COLUMN) if column not in header]
        if missing:
            raise RegionParseError(1, f"header lacks column(s) {', '.join(missing)}")

        records: List[RegionRecord] = []
        seen = set()
        while True:
            try:
                row = next(reader)
            except StopIteration:
                break
            except (csv.Error, UnicodeDecodeError) as e:
                raise RegionParseError(reader.line_num, str(e))

            line = reader.line_num
            region = (row.get(REGION_COLUMN) or '').strip()
            raw = (row.get(PREVALENCE_COLUMN) or '').strip()

            try:
                prevalence = float(raw)
            except ValueError:
                raise RegionParseError(line, f'prevalence {raw!r} is not a decimal number')

            RegionValidator.validate_name(region, line)
            RegionValidator.validate_prevalence(prevalence, line)
            if region in seen:
                raise RegionDomainError(f'duplicate region {region!r}', line)
            seen.add(region)
            records.append(RegionRecord(region=region, prevalence=prevalence))

    logger.debug(f"Loaded {len(records)} region(s) from {path}")
    return records
