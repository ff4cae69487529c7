import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

QUICK = ['--descent', 'off', '--height', '10']


class CommandTestCase(SimpleTestCase):

    def run_command(self, *args):
        out = StringIO()
        call_command(*args, stdout=out)
        return out.getvalue()

    def assertExitCode(self, code, *args):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command(*args, stdout=out)
        self.assertEqual(ctx.exception.returncode, code)
        return out.getvalue()


class ClassifyCommandTests(CommandTestCase):

    def test_point_found(self):
        out = self.run_command('classify', '6', '--height', '100', '--box', '10')
        self.assertEqual(
            out.strip(),
            'd=6 verdict=YES evidence=point-found a=(1-2*sqrt(6))/2 r=60-25*sqrt(6)',
        )

    def test_reduces_to_squarefree_part(self):
        lines = self.run_command('classify', '24', *QUICK, '--height', '100').splitlines()
        self.assertEqual(lines[0], 'warning: d=24 reduced to its squarefree part 6')
        self.assertTrue(lines[1].startswith('d=6 verdict=YES'))

    def test_rational_field(self):
        out = self.assertExitCode(1, 'classify', '4')
        self.assertIn('d=1 verdict=NO evidence=fermat', out)

    def test_form_criterion(self):
        out = self.run_command('classify', '-13', *QUICK)
        self.assertEqual(out.strip(), 'd=-13 verdict=NO evidence=yoshida-forms')

    def test_unknown_exits_with_two(self):
        out = self.assertExitCode(2, 'classify', '47', *QUICK)
        self.assertEqual(out.strip(), 'd=47 verdict=UNKNOWN evidence=kan-23')

    def test_invalid_options(self):
        self.assertExitCode(1, 'classify', '0')
        self.assertExitCode(1, 'classify', '6', '--descent', 'off', '--cache', 'ranks.txt')
        self.assertExitCode(1, 'classify', '6', '--height', '0')

    def test_cache_statistics(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = str(Path(tmp) / 'ranks.txt')
            args = ['classify', '6', '--height', '100', '--box', '10', '--cache', path, '--stats']
            first = self.run_command(*args).splitlines()
            second = self.run_command(*args).splitlines()
        self.assertEqual(first[-1], 'stats cache_hits=0 cache_misses=1')
        self.assertEqual(second[-1], 'stats cache_hits=1 cache_misses=0')
        self.assertEqual(first[0], second[0])

    def test_malformed_cache(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'ranks.txt'
            path.write_text('6 1\n')
            self.assertExitCode(1, 'classify', '6', '--cache', str(path))


class FindApCommandTests(CommandTestCase):

    def test_progression(self):
        out = self.run_command('find_ap', '6', '--height', '100')
        self.assertEqual(out.strip(), 'd=6 point=(-2,16) a=(1-2*sqrt(6))/2 r=60-25*sqrt(6)')

    def test_no_point(self):
        out = self.assertExitCode(2, 'find_ap', '47', *QUICK)
        self.assertEqual(out.strip(), 'd=47 point=none')

    def test_rejects_non_squarefree(self):
        self.assertExitCode(1, 'find_ap', '12')


class MapCommandTests(CommandTestCase):

    def test_to_ap(self):
        self.assertEqual(self.run_command('map', 'to-ap', '3', '-6').strip(), 'ap=[1,1,1,1] constant=yes')
        self.assertEqual(self.run_command('map', 'to-ap', 'inf').strip(), 'ap=[1,-1,-1,-1] constant=yes')

    def test_to_point(self):
        self.assertEqual(self.run_command('map', 'to-point', '1', '1', '1', '1').strip(), 'point=(3,-6)')
        self.assertEqual(self.run_command('map', 'to-point', '-1', '-1', '1', '1').strip(), 'point=(-1,2)')

    def test_rejects_bad_input(self):
        self.assertExitCode(1, 'map', 'to-ap', '0', '1')
        self.assertExitCode(1, 'map', 'to-point', '1', '2', '3', '4')
        self.assertExitCode(1, 'map', 'to-point', '1', '1', '1')


class FormsCommandTests(CommandTestCase):

    def test_count(self):
        self.assertEqual(self.run_command('forms', 'count', 'yoshida-2pi3-a', '7').strip(), '4')
        self.assertEqual(self.run_command('forms', 'count', 'ono-a', '1').strip(), '2')

    def test_list(self):
        lines = self.run_command('forms', 'list').splitlines()
        self.assertEqual(len(lines), 6)
        self.assertIn('yoshida-pi3-b 3X^2+4Y^2+13Z^2+4YZ', lines)

    def test_rejects_unknown_form(self):
        self.assertExitCode(1, 'forms', 'count', 'tunnell', '7')
        self.assertExitCode(1, 'forms', 'count', 'ono-a')


class ThetaCommandTests(CommandTestCase):

    def test_torsion(self):
        self.assertEqual(self.run_command('theta', '1').strip(), 'n=1 angle=pi/3 verdict=yes evidence=torsion')

    def test_form_criterion(self):
        out = self.run_command('theta', '7', '--angle', '2pi/3', *QUICK)
        self.assertEqual(out.strip(), 'n=7 angle=2pi/3 verdict=no evidence=yoshida-forms')

    def test_unknown_and_invalid(self):
        self.assertExitCode(2, 'theta', '47', *QUICK)
        self.assertExitCode(1, 'theta', '4')
        self.assertExitCode(1, 'theta', '7', '--angle', 'pi/4')


class ThueCommandTests(CommandTestCase):

    def test_fields(self):
        out = self.run_command('thue', '--dmax', '100', '--box', '50')
        lines = out.splitlines()
        self.assertEqual(len(lines), 4)
        self.assertEqual([line.split()[0] for line in lines], ['d=-71', 'd=-47', 'd=-23', 'd=73'])
        self.assertRegex(out, r'd=-71 x=2 y=3 solutions=\d+ ap=\[sqrt\(-71\),7,13,17\] diff=120')
        self.assertRegex(out, r'd=-23 x=1 y=2 solutions=\d+ ap=\[sqrt\(-23\),1,5,7\] diff=24')
        self.assertRegex(out, r'd=73 x=1 y=-2 solutions=\d+ ap=\[1,5,7,sqrt\(73\)\] diff=24')
        self.assertNotIn('d=1 ', out)

    def test_rejects_bad_bounds(self):
        self.assertExitCode(1, 'thue', '--box', '0')


class TableCommandTests(CommandTestCase):

    def test_rows(self):
        lines = self.run_command('table', '--pmax', '7', *QUICK).splitlines()
        self.assertEqual(lines[0], 'p p%24 p 2p 3p 6p -p -2p -3p -6p')
        rows = {int(line.split()[0]): line.split()[2:] for line in lines[1:]}
        self.assertEqual(set(rows), {5, 7})
        self.assertEqual(rows[5][7], 'no')
        self.assertEqual([rows[7][i] for i in (0, 4, 7)], ['no', 'no', 'no'])

    def test_export(self):
        from openpyxl import load_workbook

        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'table.xlsx'
            out = self.run_command('table', '--pmax', '7', *QUICK, '--export', str(path))
            self.assertIn('Table exported to', out)
            ws = load_workbook(path).active
            self.assertEqual(ws['A3'].value, 'p')
            self.assertEqual(ws['J3'].value, '-6p')
            self.assertEqual(ws['A5'].value, 7)

    def test_rejects_bad_export_path(self):
        self.assertExitCode(1, 'table', '--pmax', '7', *QUICK, '--export', 'table.csv')
