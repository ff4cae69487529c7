"""Line-oriented cache of rank computations.

Each line reads `d rank_lo rank_hi height box [x y]`; `#` starts a comment
and a later line for the same d supersedes earlier ones.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from django.core.exceptions import ValidationError

from .curves import CurvePoint

logger = logging.getLogger(__name__)

HEADER = '# d rank_lo rank_hi height box [x y]\n'


@dataclass(frozen=True)
class CacheRecord:
    d: int
    rank_lo: int
    rank_hi: int
    height: int
    box: int
    witness: CurvePoint = None

    @property
    def is_final(self):
        return self.witness is not None or self.rank_hi == 0

    def covers(self, height, box):
        return self.is_final or (self.height >= height and self.box >= box)

    def to_line(self):
        fields = [self.d, self.rank_lo, self.rank_hi, self.height, self.box]
        if self.witness is not None:
            fields += [self.witness.x, self.witness.y]
        return ' '.join(str(f) for f in fields)

    @classmethod
    def from_line(cls, line):
        fields = line.split()
        if len(fields) not in (5, 7):
            raise ValueError(line)
        d, rank_lo, rank_hi, height, box = (int(f) for f in fields[:5])
        witness = None
        if len(fields) == 7:
            witness = CurvePoint(Fraction(fields[5]), Fraction(fields[6]))
        return cls(d, rank_lo, rank_hi, height, box, witness)


class RankCache:
    """Records keyed by d, read once and appended to as results arrive."""

    def __init__(self, path):
        self.path = Path(path)
        self.records = {}
        self.hits = 0
        self.misses = 0
        if self.path.exists():
            self._load()

    def _load(self):
        with self.path.open() as handle:
            for number, raw in enumerate(handle, start=1):
                line = raw.split('#', 1)[0].strip()
                if not line:
                    continue
                try:
                    record = CacheRecord.from_line(line)
                except (ValueError, ZeroDivisionError):
                    raise ValidationError(f'{self.path}:{number}: malformed cache record {raw.strip()!r}.')
                self.records[record.d] = record
        logger.debug('loaded %d cache records from %s', len(self.records), self.path)

    def lookup(self, d, height, box):
        record = self.records.get(d)
        if record is not None and record.covers(height, box):
            self.hits += 1
            return record
        self.misses += 1
        return None

    def store(self, record):
        self.records[record.d] = record
        new_file = not self.path.exists()
        with self.path.open('a') as handle:
            if new_file:
                handle.write(HEADER)
            handle.write(record.to_line() + '\n')
