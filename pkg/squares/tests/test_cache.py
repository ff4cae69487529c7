import tempfile
from fractions import Fraction
from pathlib import Path

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from squares.cache import HEADER, CacheRecord, RankCache
from squares.curves import CurvePoint


class CacheRecordTests(SimpleTestCase):

    def test_line_format(self):
        record = CacheRecord(6, 1, 1, 100, 10, CurvePoint(Fraction(-2), Fraction(16)))
        self.assertEqual(record.to_line(), '6 1 1 100 10 -2 16')
        self.assertEqual(CacheRecord.from_line('6 1 1 100 10 -2 16'), record)
        self.assertEqual(CacheRecord.from_line('-13 0 0 50 5'), CacheRecord(-13, 0, 0, 50, 5))

    def test_covers(self):
        open_record = CacheRecord(10, 0, 2, 100, 10)
        self.assertTrue(open_record.covers(50, 10))
        self.assertFalse(open_record.covers(200, 10))
        self.assertFalse(open_record.covers(100, 20))
        self.assertTrue(CacheRecord(5, 0, 0, 1, 1).covers(10 ** 6, 10 ** 3))


class RankCacheTests(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = Path(self.tmp.name) / 'ranks.txt'

    def tearDown(self):
        self.tmp.cleanup()

    def test_store_and_reload(self):
        cache = RankCache(self.path)
        cache.store(CacheRecord(5, 0, 0, 100, 10))
        cache.store(CacheRecord(10, 0, 2, 100, 10))
        cache.store(CacheRecord(10, 1, 2, 400, 10, CurvePoint(Fraction(-5, 4), Fraction(45, 8))))
        self.assertTrue(self.path.read_text().startswith(HEADER))

        reloaded = RankCache(self.path)
        self.assertEqual(set(reloaded.records), {5, 10})
        self.assertEqual(reloaded.records[10].rank_lo, 1)
        self.assertIsNotNone(reloaded.lookup(10, 10 ** 6, 10 ** 3))
        self.assertIsNone(reloaded.lookup(7, 100, 10))
        self.assertEqual((reloaded.hits, reloaded.misses), (1, 1))

    def test_comments_and_blank_lines(self):
        self.path.write_text('# header\n\n5 0 0 100 10  # rank zero\n')
        self.assertEqual(RankCache(self.path).records[5], CacheRecord(5, 0, 0, 100, 10))

    def test_malformed_line(self):
        self.path.write_text('5 0 0 100\n')
        with self.assertRaisesMessage(ValidationError, 'ranks.txt:1'):
            RankCache(self.path)
