import random
from itertools import product

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase, tag

from squares.criteria import (
    FORMS,
    TABLE_COLUMNS,
    CriterionVerdict,
    TernaryForm,
    column_label,
    concordant_witness_search,
    conjecture1_class,
    count_representations,
    forms_bsd,
    forms_no,
    kan_test,
    ono_6n_discordant,
    table_entry,
    theta_status,
    yoshida_2pi3,
    yoshida_pi3,
)
from squares.curves import PI_3, TWO_PI_3
from squares.descent import VerdictKind

QUICK = {'height': 10, 'descent_on': False}


def brute_force_counts(form, limit, box=23):
    counts = {}
    for x, y, z in product(range(-box, box + 1), repeat=3):
        value = form(x, y, z)
        if value <= limit:
            counts[value] = counts.get(value, 0) + 1
    return counts


class TernaryFormTests(SimpleTestCase):

    def test_str(self):
        self.assertEqual(str(FORMS['yoshida-2pi3-a']), 'X^2+3Y^2+144Z^2')
        self.assertEqual(str(FORMS['yoshida-pi3-a']), 'X^2+12Y^2+15Z^2+12YZ')
        self.assertEqual(str(FORMS['ono-b']), '2X^2+3Y^2+4Z^2')

    def test_rejects_indefinite(self):
        with self.assertRaises(ValidationError):
            TernaryForm(1, 1, 1, xy=3)
        with self.assertRaises(ValidationError):
            TernaryForm(1, -1, 1)

    def test_small_counts(self):
        self.assertEqual(count_representations(FORMS['yoshida-2pi3-a'], 1), 2)
        self.assertEqual(count_representations(FORMS['yoshida-2pi3-a'], 7), 4)
        self.assertEqual(count_representations(FORMS['yoshida-2pi3-b'], 7), 0)
        self.assertEqual(count_representations(FORMS['yoshida-pi3-b'], 7), 4)
        with self.assertRaises(ValidationError):
            count_representations(FORMS['ono-a'], 0)

    def test_matches_brute_force(self):
        tallies = {key: brute_force_counts(form, 500) for key, form in FORMS.items()}
        rng = random.Random(11)
        keys = sorted(FORMS)
        for _ in range(50):
            key, n = rng.choice(keys), rng.randint(1, 500)
            with self.subTest(form=key, n=n):
                self.assertEqual(count_representations(FORMS[key], n), tallies[key].get(n, 0))

    def test_counts_are_even(self):
        for form in FORMS.values():
            for n in range(1, 101):
                self.assertEqual(count_representations(form, n) % 2, 0)


class CriterionTests(SimpleTestCase):

    def test_yoshida_2pi3(self):
        outcome = yoshida_2pi3(7)
        self.assertEqual((outcome.applicable, outcome.counts), (True, (4, 0)))
        self.assertEqual(outcome.verdict, CriterionVerdict.UNCONDITIONAL_NO)
        self.assertFalse(yoshida_2pi3(5).applicable)
        self.assertTrue(yoshida_2pi3(13).fired_no)

    def test_yoshida_pi3(self):
        self.assertEqual(yoshida_pi3(7).counts, (0, 4))
        self.assertTrue(yoshida_pi3(7).fired_no)
        self.assertEqual(yoshida_pi3(19).counts, (8, 4))
        self.assertTrue(yoshida_pi3(19).fired_no)
        self.assertFalse(yoshida_pi3(11).applicable)
        self.assertFalse(yoshida_pi3(1).applicable)

    def test_ono(self):
        outcome = ono_6n_discordant(1)
        self.assertEqual(outcome.counts, (2, 0))
        self.assertTrue(outcome.fired_no)
        for n in (2, 9):
            with self.subTest(n=n), self.assertRaises(ValidationError):
                ono_6n_discordant(n)

    def test_kan(self):
        self.assertTrue(kan_test(23))
        self.assertTrue(kan_test(47))
        self.assertTrue(kan_test(71))
        self.assertFalse(kan_test(25))
        self.assertFalse(kan_test(19))

    def test_conjecture_classes(self):
        self.assertTrue(conjecture1_class(11, PI_3))
        self.assertFalse(conjecture1_class(11, TWO_PI_3))
        self.assertTrue(conjecture1_class(23, PI_3))
        self.assertTrue(conjecture1_class(23, TWO_PI_3))

    def test_forms_tags(self):
        self.assertEqual(forms_no(7), 'yoshida-forms')
        self.assertEqual(forms_no(-7), 'yoshida-forms')
        self.assertEqual(forms_no(-30), 'ono-forms')
        self.assertIsNone(forms_no(6))
        self.assertEqual(forms_bsd(11), 'conjecture-1')
        self.assertEqual(forms_bsd(-5), 'conjecture-1')
        self.assertIsNone(forms_bsd(7))


class ConcordantTests(SimpleTestCase):

    def test_congruent_five(self):
        self.assertEqual(concordant_witness_search(5, -5, 50), (41, 12, 31, 49))

    def test_rank_zero_pairs(self):
        self.assertIsNone(concordant_witness_search(1, -3, 50))
        self.assertIsNone(concordant_witness_search(3, -1, 50))

    def test_rejects_degenerate_pairs(self):
        with self.assertRaises(ValidationError):
            concordant_witness_search(2, 2, 10)
        with self.assertRaises(ValidationError):
            concordant_witness_search(0, 3, 10)


class ThetaTests(SimpleTestCase):

    def test_torsion(self):
        status = theta_status(1, PI_3)
        self.assertEqual((status.label, status.evidence), ('yes', 'torsion'))
        self.assertEqual(str(status), 'n=1 angle=pi/3 verdict=yes evidence=torsion')

    def test_form_criterion(self):
        status = theta_status(7, PI_3, **QUICK)
        self.assertEqual((status.label, status.evidence), ('no', 'yoshida-forms'))
        status = theta_status(7, TWO_PI_3, **QUICK)
        self.assertEqual((status.label, status.evidence), ('no', 'yoshida-forms'))

    def test_kan(self):
        status = theta_status(47, PI_3, **QUICK)
        self.assertEqual((status.label, status.evidence), ('?', 'kan-23'))

    def test_rejects_non_squarefree(self):
        with self.assertRaises(ValidationError):
            theta_status(12, PI_3)


class TableEntryTests(SimpleTestCase):

    def test_columns(self):
        self.assertEqual([column_label(m, s) for m, s in TABLE_COLUMNS],
                         ['p', '2p', '3p', '6p', '-p', '-2p', '-3p', '-6p'])

    def test_form_cells(self):
        for p, multiplier, sign, evidence in ((7, 1, 1, 'yoshida-forms'),
                                              (7, 1, -1, 'yoshida-forms'),
                                              (5, 6, -1, 'ono-forms'),
                                              (7, 6, -1, 'ono-forms'),
                                              (13, 1, -1, 'yoshida-forms')):
            with self.subTest(p=p, multiplier=multiplier, sign=sign):
                verdict = table_entry(p, multiplier, sign, **QUICK)
                self.assertEqual(verdict.kind, VerdictKind.NO)
                self.assertEqual(verdict.evidence, evidence)

    def test_rejects_bad_cells(self):
        with self.assertRaises(ValidationError):
            table_entry(9, 1, 1)
        with self.assertRaises(ValidationError):
            table_entry(7, 5, 1)


# Cells of the published table, columns p, 2p, 3p, 6p, -p, -2p, -3p, -6p.
PUBLISHED = {
    5: ['no', '?', 'no', '?', '?', '?', '?', 'no'],
    7: ['no', 'no', '?', '?', 'no', '?', '?', 'no'],
    11: ['?', '?', 'no', '?', 'no', '?', '?', '?'],
    13: ['?', 'no', '?', '?', 'no', 'no', '?', 'no'],
    17: ['?', '?', 'no', '?', '?', '?', 'no', 'no'],
    19: ['no', '?', 'no', '?', '?', 'no', '?', '?'],
    23: ['yes', 'yes', '?', 'yes', 'yes', 'yes', 'yes', '?'],
}
PUBLISHED.update({29: PUBLISHED[5], 31: PUBLISHED[7], 37: PUBLISHED[13],
                  41: PUBLISHED[17], 43: PUBLISHED[19], 47: PUBLISHED[23]})


@tag('slow')
class PublishedTableTests(SimpleTestCase):

    def test_primes_to_47(self):
        self.assertEqual(sorted(PUBLISHED), [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
        for p, cells in PUBLISHED.items():
            self.assertEqual(cells, PUBLISHED[p % 24])

    def test_cells(self):
        options = {'height': 10 ** 4, 'box': 10 ** 3}
        for p, cells in PUBLISHED.items():
            for (multiplier, sign), expected in zip(TABLE_COLUMNS, cells):
                if expected == '?':
                    continue
                with self.subTest(p=p, cell=column_label(multiplier, sign)):
                    verdict = table_entry(p, multiplier, sign, **options)
                    self.assertEqual(verdict.kind.label, expected)
                    if expected == 'yes':
                        self.assertTrue(verdict.ap.verify())
                        self.assertFalse(verdict.ap.is_constant)
