# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

import doctest
import io
import itertools
import logging
import math
import random
import unittest

import lexsimp.wordfreq
from lexsimp import util
from lexsimp.errors import FormatError
from lexsimp.wordfreq import (EPSILON, FrequencyTable, build_table, load_table,
                              save_table, wf)


class LoadTableTestCase(unittest.TestCase):
    def test_load(self):
        table = load_table(io.StringIO(u'of\t0.03\n'))
        self.assertEqual(table.prob(u'of'), 0.03)

    def test_keys_lowercased(self):
        table = load_table(io.StringIO(u'Ear\t0.001\n'))
        self.assertEqual(table.prob(u'EAR'), 0.001)
        self.assertIn(u'ear', table)

    def test_out_of_range(self):
        with self.assertRaises(FormatError) as ctx:
            load_table(io.StringIO(u'of\t0.03\near\t1.5\n'))
        self.assertEqual(ctx.exception.lineno, 2)
        self.assertRaises(FormatError, load_table, io.StringIO(u'ear\t0\n'))

    def test_malformed_probability(self):
        with self.assertRaises(FormatError) as ctx:
            load_table(io.StringIO(u'ear\tlots\n'))
        self.assertEqual(ctx.exception.lineno, 1)

    def test_empty_file(self):
        table = load_table(io.StringIO(u''))
        self.assertEqual(len(table), 0)
        self.assertEqual(table.logprob(u'anything'), math.log(EPSILON))

    def test_duplicate_last_wins(self):
        with self.assertLogs('lexsimp.wordfreq', logging.WARNING):
            table = load_table(io.StringIO(u'ear\t0.1\nEAR\t0.2\n'))
        self.assertEqual(table.prob(u'ear'), 0.2)

    def test_save_round_trip(self):
        table = FrequencyTable({u'of': 0.03, u'ear': 1e-4, u'earache': 1e-6})
        out = io.StringIO()
        save_table(table, out)
        self.assertEqual(out.getvalue().splitlines()[0], u'ear\t0.0001')
        self.assertEqual(load_table(io.StringIO(out.getvalue())).probs, table.probs)


class BuildTableTestCase(unittest.TestCase):
    def test_counts(self):
        table = build_table([u'a a b'])
        self.assertAlmostEqual(table.prob(u'a'), 2.0 / 3)
        self.assertAlmostEqual(table.prob(u'b'), 1.0 / 3)

    def test_single_word(self):
        self.assertEqual(build_table([u'a']).prob(u'a'), 1.0)

    def test_token_lists_and_case(self):
        table = build_table([[u'Ear', u'pain'], u'EAR'])
        self.assertAlmostEqual(table.prob(u'ear'), 2.0 / 3)

    def test_sums_to_one(self):
        rng = random.Random(1)
        words = [u'w%d' % rng.randint(0, 99) for _ in range(1000)]
        table = build_table([u' '.join(words)])
        self.assertAlmostEqual(math.fsum(table.probs.values()), 1.0, delta=1e-9)

    def test_empty_corpus(self):
        self.assertRaises(ValueError, build_table, [])
        self.assertRaises(ValueError, build_table, [u''])


class WFTestCase(unittest.TestCase):
    def setUp(self):
        self.table = FrequencyTable({u'of': 0.03, u'ear': 1e-4, u'earache': 1e-6})

    def test_rarest_word_drives_score(self):
        self.assertAlmostEqual(wf([u'otalgia', u'of', u'ear'], self.table),
                               math.log(1e-10), places=9)
        self.assertAlmostEqual(wf([u'otalgia', u'of', u'ear'], self.table),
                               -23.02585093, places=6)

    def test_single_word(self):
        self.assertAlmostEqual(wf([u'earache'], self.table),
                               math.log(1e-6 + 1e-10), places=12)
        self.assertAlmostEqual(wf([u'earache'], self.table), -13.8155, places=3)

    def test_min_beats_average(self):
        self.assertGreater(wf([u'earache'], self.table),
                           wf([u'otalgia', u'of', u'ear'], self.table))

    def test_empty_term(self):
        self.assertRaises(ValueError, wf, [], self.table)

    def test_permutation_invariant(self):
        term = [u'of', u'ear', u'earache', u'zzz']
        expected = wf(term, self.table)
        for perm in itertools.permutations(term):
            self.assertEqual(wf(perm, self.table), expected)

    def test_adding_words_never_increases(self):
        rng = random.Random(9)
        words = [u'of', u'ear', u'earache', u'pain', u'the']
        for _ in range(100):
            term = [rng.choice(words) for _ in range(rng.randint(1, 4))]
            longer = term + [rng.choice(words)]
            self.assertLessEqual(wf(longer, self.table), wf(term, self.table))

    def test_bounds(self):
        table = FrequencyTable({u'the': 1.0, u'of': 0.5})
        for term in ([u'the'], [u'of'], [u'nope'], [u'the', u'nope']):
            value = wf(term, table)
            self.assertLessEqual(value, math.log(1.0 + EPSILON))
            self.assertGreaterEqual(value, math.log(EPSILON))

    def test_case_insensitive(self):
        self.assertEqual(wf([u'EAR'], self.table), wf([u'ear'], self.table))


class FrequencyTableTestCase(unittest.TestCase):
    def test_invalid(self):
        self.assertRaises(ValueError, FrequencyTable, {u'a': 0.0})
        self.assertRaises(ValueError, FrequencyTable, {u'a': 1.5})
        self.assertRaises(ValueError, FrequencyTable, {}, epsilon=0)

    @unittest.skipUnless(util.is_installed('wordfreq'), 'wordfreq not installed')
    def test_from_wordfreq(self):
        table = FrequencyTable.from_wordfreq([u'the', u'otalgia', u'xqzvvk'])
        self.assertIn(u'the', table)
        self.assertNotIn(u'xqzvvk', table)
        self.assertGreater(wf([u'the'], table), wf([u'otalgia'], table))


def suite():
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTest(loader.loadTestsFromTestCase(LoadTableTestCase))
    suite.addTest(loader.loadTestsFromTestCase(BuildTableTestCase))
    suite.addTest(loader.loadTestsFromTestCase(WFTestCase))
    suite.addTest(loader.loadTestsFromTestCase(FrequencyTableTestCase))
    suite.addTest(doctest.DocTestSuite(lexsimp.wordfreq))
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
