# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

import doctest
import io
import logging
import math
import random
import unittest

import lexsimp.evaluation
from lexsimp import _samples
from lexsimp.errors import FormatError
from lexsimp.evaluation import (EvalCounts, JudgmentRecord, _sari_ngram,
                                aggregate_judgments, bleu, corpus_sari,
                                default_grid, format_report,
                                grid_search_alpha, load_judgments,
                                load_parallel, load_unchanged, sari,
                                sg_significance, simplification_gain)
from lexsimp.simplifier import SimplifierConfig

import reference_metrics

COUNTS = dict(_samples.JUDGMENT_COUNTS)


class SimplificationGainTestCase(unittest.TestCase):
    def test_reported_values(self):
        self.assertEqual(round(simplification_gain(COUNTS['human']), 2), 0.21)
        self.assertEqual(round(simplification_gain(COUNTS['ngram']), 2), 0.06)
        self.assertEqual(round(simplification_gain(COUNTS['gpt1']), 2), 0.09)

    def test_exact(self):
        self.assertEqual(simplification_gain(EvalCounts(S=3, F=1, E=0, N=0, U=0)), 0.5)

    def test_no_judgments(self):
        self.assertRaises(ValueError, simplification_gain, EvalCounts())

    def test_antisymmetric(self):
        c = COUNTS['gpt1']
        swapped = EvalCounts(S=c.F, F=c.S, E=c.E, N=c.N, U=c.U)
        self.assertAlmostEqual(simplification_gain(swapped), -simplification_gain(c))

    def test_scale_invariant(self):
        c = COUNTS['ngram']
        scaled = EvalCounts(*[3 * v for v in c.as_tuple()])
        self.assertAlmostEqual(simplification_gain(scaled), simplification_gain(c))

    def test_bounds(self):
        rng = random.Random(4)
        for _ in range(200):
            c = EvalCounts(*[rng.randint(0, 20) for _ in range(5)])
            if c.T:
                self.assertTrue(-1.0 <= simplification_gain(c) <= 1.0)

    def test_counts(self):
        c = EvalCounts(1, 2, 3, 4, 5)
        self.assertEqual(c.T, 15)
        c.add('S')
        c.add('U', 7)
        self.assertEqual(c, EvalCounts(2, 2, 3, 4, 12))
        self.assertRaises(ValueError, EvalCounts, S=-1)


class AggregateTestCase(unittest.TestCase):
    def test_unchanged_replicated(self):
        flags = [(str(i), u'human') for i in range(579)]
        counts = aggregate_judgments([], flags)
        self.assertEqual(counts[u'human'].U, 4053)

    def test_repeated_flags_count_once(self):
        counts = aggregate_judgments([], [(u'1', u'human'), (u'1', u'human')])
        self.assertEqual(counts[u'human'].U, 7)

    def test_flagged_judgments_skipped(self):
        records = [JudgmentRecord(u'1', u'human', u'S', 2),
                   JudgmentRecord(u'2', u'human', u'F', 3)]
        with self.assertLogs('lexsimp.evaluation', logging.WARNING):
            counts = aggregate_judgments(records, [(u'1', u'human')])
        self.assertEqual(counts[u'human'], EvalCounts(F=1, U=7))

    def test_systems_sorted(self):
        records = [JudgmentRecord(u'1', u'ngram', u'S', 1),
                   JudgmentRecord(u'1', u'gpt1', u'2', 2),
                   JudgmentRecord(u'2', u'gpt1', u'E', 3)]
        counts = aggregate_judgments(records)
        self.assertEqual(list(counts), [u'gpt1', u'ngram'])
        self.assertEqual(counts[u'gpt1'], EvalCounts(S=1, E=1))

    def test_empty(self):
        self.assertEqual(aggregate_judgments([]), {})

    def test_replications(self):
        counts = aggregate_judgments([], [(u'1', u'x')], replications=3)
        self.assertEqual(counts[u'x'].U, 3)
        self.assertRaises(ValueError, aggregate_judgments, [], (), 0)


class LoadersTestCase(unittest.TestCase):
    def test_judgments_with_header(self):
        records = load_judgments(io.StringIO(
            u'sentence_id,system_id,category\n1,human,S\n2,human,2\n'))
        self.assertEqual([r.category for r in records], [u'S', u'S'])
        self.assertEqual([r.lineno for r in records], [2, 3])

    def test_judgment_options(self):
        records = load_judgments(io.StringIO(u'1,a,1\n2,a,2\n3,a,3\n4,a,4\n'))
        self.assertEqual([r.category for r in records], [u'F', u'S', u'E', u'N'])

    def test_unknown_category(self):
        with self.assertRaises(FormatError) as ctx:
            load_judgments(io.StringIO(u'1,human,S\n2,human,X\n'))
        self.assertEqual(ctx.exception.lineno, 2)

    def test_wrong_columns(self):
        self.assertRaises(FormatError, load_judgments, io.StringIO(u'1,human\n'))

    def test_unchanged(self):
        flags = load_unchanged(io.StringIO(u'sentence_id,system_id\n7,ngram\n'))
        self.assertEqual(flags, [(u'7', u'ngram')])

    def test_parallel(self):
        pairs = load_parallel(io.StringIO(u'patient has otalgia .\tpatient has ear pain .\n'))
        self.assertEqual(pairs, [(u'patient has otalgia .', u'patient has ear pain .')])


class SignificanceTestCase(unittest.TestCase):
    def test_human_beats_ngram(self):
        p = sg_significance(COUNTS['human'], COUNTS['ngram'], iterations=1000)
        self.assertLess(p, 0.05)
        self.assertGreater(p, 0.0)

    def test_identical_systems(self):
        p = sg_significance(COUNTS['gpt1'], COUNTS['gpt1'], iterations=1000)
        self.assertGreater(p, 0.9)

    def test_deterministic(self):
        a = sg_significance(COUNTS['gpt1'], COUNTS['ngram'], iterations=1000, seed=1)
        b = sg_significance(COUNTS['gpt1'], COUNTS['ngram'], iterations=1000, seed=1)
        self.assertEqual(a, b)

    def test_tiny_counts(self):
        p = sg_significance(EvalCounts(S=2, F=1), EvalCounts(S=1, F=1, E=1),
                            iterations=1000)
        self.assertTrue(0.0 < p <= 1.0)

    def test_invalid(self):
        self.assertRaises(ValueError, sg_significance, COUNTS['human'],
                          COUNTS['ngram'], iterations=999)
        self.assertRaises(ValueError, sg_significance, EvalCounts(),
                          COUNTS['ngram'])


class SariTestCase(unittest.TestCase):
    def test_unchanged_matching_reference(self):
        self.assertAlmostEqual(sari(u'a b c d', u'a b c d', [u'a b c d']),
                               100.0 / 3)

    def test_perfect_edit(self):
        self.assertAlmostEqual(sari(u'a b c d', u'a b x d', [u'a b x d']),
                               250.0 / 3)

    def test_unchanged_output(self):
        expected = 100.0 * (2.0 / 7 + 1.0 / 6) / 4
        self.assertAlmostEqual(sari(u'a b c d', u'a b c d', u'a b x d'), expected)

    def test_edit_beats_copy(self):
        self.assertGreater(sari(u'patient has otalgia .', u'patient has ear pain .',
                                u'patient has ear pain .'),
                           sari(u'patient has otalgia .', u'patient has otalgia .',
                                u'patient has ear pain .'))

    def test_disjoint(self):
        self.assertEqual(sari(u'a b', u'c d', [u'a b']), 0.0)

    def test_multiple_references(self):
        expected = 100.0 * (2.0 / 7 + 2.0 / 9) / 4
        self.assertAlmostEqual(sari(u'a b', u'a b', [u'a b', u'a c']), expected)

    def test_case_insensitive(self):
        self.assertEqual(sari(u'A B c', u'a B C', [u'A b C']),
                         sari(u'a b c', u'a b c', [u'a b c']))

    def test_keep_component(self):
        grams = [(u'a',), (u'b',)]
        keep, delete, add = _sari_ngram(grams, grams, [grams], 1)
        self.assertEqual((keep, delete, add), (1.0, 0.0, 0.0))

    def test_bounds(self):
        rng = random.Random(8)
        vocab = [u'a', u'b', u'c', u'd']

        def sentence():
            return u' '.join(rng.choice(vocab) for _ in range(rng.randint(1, 8)))
        for _ in range(200):
            refs = [sentence() for _ in range(rng.randint(1, 3))]
            score = sari(sentence(), sentence(), refs)
            self.assertTrue(0.0 <= score <= 100.0)

    def test_errors(self):
        self.assertRaises(ValueError, sari, u'', u'', [u'a'])
        self.assertRaises(ValueError, sari, u'a', u'a', [])

    def test_corpus(self):
        score = corpus_sari([u'a b c d', u'a b c d'], [u'a b c d', u'a b x d'],
                            [u'a b c d', [u'a b x d']])
        self.assertAlmostEqual(score, (100.0 / 3 + 250.0 / 3) / 2)
        self.assertRaises(ValueError, corpus_sari, [u'a'], [], [])
        self.assertRaises(ValueError, corpus_sari, [], [], [])


class BleuTestCase(unittest.TestCase):
    def test_identity(self):
        outputs = [u'patient has ear pain .', u'the heart attack was mild']
        self.assertAlmostEqual(bleu(outputs, outputs), 100.0)

    def test_partial_match(self):
        self.assertAlmostEqual(bleu([u'a b c d e'], [u'a b c d f']),
                               100.0 * 0.2 ** 0.25)

    def test_brevity_penalty(self):
        self.assertAlmostEqual(bleu([u'a b c d'], [u'a b c d e f g h']),
                               100.0 * math.exp(-1))

    def test_closest_reference_shorter_on_tie(self):
        self.assertAlmostEqual(bleu([u'a b c d'], [[u'a b c d e', u'a b c']]), 100.0)

    def test_uneven_reference_counts(self):
        score = bleu([u'a b c d e', u'a b c d'],
                     [[u'a b c d f', u'x b c d e'], u'a b c d'])
        self.assertAlmostEqual(score, bleu([u'a b c d e', u'a b c d'],
                                           [[u'a b c d f', u'x b c d e'],
                                            [u'a b c d', u'a b c d']]))

    def test_case_sensitive(self):
        self.assertLess(bleu([u'A b c d'], [u'a b c d']), 100.0)

    def test_no_four_grams(self):
        self.assertEqual(bleu([u'a b c'], [u'a b c']), 0.0)

    def test_errors(self):
        self.assertRaises(ValueError, bleu, [u'a'], [])
        self.assertRaises(ValueError, bleu, [], [])
        self.assertRaises(ValueError, bleu, [u'a b c d'], [[u'', u' ']])


VOCAB = [u'ear', u'pain', u'otalgia', u'of', u'the', u'heart', u'.']


class ReferenceMetricsTestCase(unittest.TestCase):
    """SARI and BLEU against plain implementations of both metrics on
    random sentences."""

    CASES = 200

    def setUp(self):
        self.rng = random.Random(2024)

    def sentence(self):
        return u' '.join(self.rng.choice(VOCAB)
                         for _ in range(self.rng.randint(1, 12)))

    def edit(self, sentence):
        words = sentence.split(u' ')
        for _ in range(self.rng.randint(0, 3)):
            words[self.rng.randrange(len(words))] = self.rng.choice(VOCAB)
        return u' '.join(words)

    def test_sari(self):
        for _ in range(self.CASES):
            source = self.sentence()
            output = self.edit(source) if self.rng.random() < 0.8 else self.sentence()
            refs = [self.edit(source) for _ in range(self.rng.randint(1, 4))]
            self.assertAlmostEqual(sari(source, output, refs),
                                   100.0 * reference_metrics.sari_sent(source, output, refs),
                                   delta=1e-6)

    def test_bleu(self):
        nonzero = 0
        for _ in range(self.CASES):
            outputs, references = [], []
            for _ in range(self.rng.randint(1, 5)):
                base = self.sentence()
                outputs.append(self.edit(base))
                references.append([self.edit(base)
                                   for _ in range(self.rng.randint(1, 3))])
            expected = reference_metrics.corpus_bleu(outputs, references)
            self.assertAlmostEqual(bleu(outputs, references), expected, delta=1e-6)
            nonzero += expected > 0
        self.assertGreater(nonzero, 20)


class GridSearchTestCase(unittest.TestCase):
    def setUp(self):
        self.table, self.lm, self.ft = _samples.step()

    def test_step_function(self):
        best, curve = grid_search_alpha(_samples.STEP_PAIRS, self.table,
                                        self.lm, self.ft)
        self.assertEqual(best, 0.5)
        self.assertEqual([a for a, _ in curve], default_grid())
        low = set(round(s, 9) for a, s in curve if a < 0.5)
        high = set(round(s, 9) for a, s in curve if a >= 0.5)
        self.assertEqual(len(low), 1)
        self.assertEqual(len(high), 1)
        self.assertGreater(high.pop(), low.pop())

    def test_custom_grid(self):
        best, curve = grid_search_alpha(_samples.STEP_PAIRS, self.table, self.lm,
                                        self.ft, grid=[1, 0.5, 0.5, 0.2])
        self.assertEqual([a for a, _ in curve], [0.2, 0.5, 1.0])
        self.assertEqual(best, 0.5)

    def test_single_value(self):
        best, curve = grid_search_alpha(_samples.STEP_PAIRS, self.table, self.lm,
                                        self.ft, grid=[0.3])
        self.assertEqual(best, 0.3)
        self.assertEqual(len(curve), 1)

    def test_workers(self):
        serial = grid_search_alpha(_samples.STEP_PAIRS, self.table, self.lm,
                                   self.ft, grid=[0.0, 0.4, 0.6, 1.0])
        parallel = grid_search_alpha(_samples.STEP_PAIRS, self.table, self.lm,
                                     self.ft, grid=[0.0, 0.4, 0.6, 1.0],
                                     config=SimplifierConfig(), workers=3)
        self.assertEqual(parallel, serial)

    def test_errors(self):
        self.assertRaises(ValueError, grid_search_alpha, [], self.table,
                          self.lm, self.ft)
        self.assertRaises(ValueError, grid_search_alpha, _samples.STEP_PAIRS,
                          self.table, self.lm, self.ft, grid=[])

    def test_default_grid(self):
        grid = default_grid()
        self.assertEqual(len(grid), 29)
        self.assertEqual((grid[0], grid[-1]), (0.0, 1.0))
        self.assertIn(0.05, grid)
        self.assertIn(0.93, grid)
        self.assertNotIn(0.06, grid)
        self.assertEqual(grid, sorted(set(grid)))


class ReportTestCase(unittest.TestCase):
    def test_tsv(self):
        text = format_report(dict(_samples.JUDGMENT_COUNTS[:1]), fmt='tsv')
        self.assertEqual(text, u'system\tS\tF\tE\tN\tU\tSG\n'
                               u'human\t1730\t273\t904\t40\t4053\t0.21\n')

    def test_pvalues(self):
        counts = aggregate_judgments([JudgmentRecord(u'1', u'a', u'S', 1),
                                      JudgmentRecord(u'1', u'b', u'F', 2)])
        lines = format_report(counts, {u'b': 0.00012}, fmt='tsv').splitlines()
        self.assertEqual(lines[0].split(u'\t')[-1], u'p')
        self.assertEqual(lines[1], u'a\t1\t0\t0\t0\t0\t1.00\t-')
        self.assertEqual(lines[2], u'b\t0\t1\t0\t0\t0\t-1.00\t0.0001')

    def test_empty_system(self):
        text = format_report({u'x': EvalCounts()}, fmt='tsv')
        self.assertTrue(text.splitlines()[1].endswith(u'\t-'))

    def test_table(self):
        lines = format_report(aggregate_judgments([], [(u'1', u'human')])).splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[0].startswith(u'system'))
        self.assertTrue(lines[1].startswith(u'human'))
        self.assertTrue(lines[1].endswith(u'0.00'))

    def test_unknown_format(self):
        self.assertRaises(ValueError, format_report, {}, None, 'xml')


def suite():
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTest(loader.loadTestsFromTestCase(SimplificationGainTestCase))
    suite.addTest(loader.loadTestsFromTestCase(AggregateTestCase))
    suite.addTest(loader.loadTestsFromTestCase(LoadersTestCase))
    suite.addTest(loader.loadTestsFromTestCase(SignificanceTestCase))
    suite.addTest(loader.loadTestsFromTestCase(SariTestCase))
    suite.addTest(loader.loadTestsFromTestCase(BleuTestCase))
    suite.addTest(loader.loadTestsFromTestCase(ReferenceMetricsTestCase))
    suite.addTest(loader.loadTestsFromTestCase(GridSearchTestCase))
    suite.addTest(loader.loadTestsFromTestCase(ReportTestCase))
    suite.addTest(doctest.DocTestSuite(lexsimp.evaluation))
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
