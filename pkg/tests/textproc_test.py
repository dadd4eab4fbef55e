# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

import doctest
import random
import unittest

import lexsimp.textproc
from lexsimp import _samples
from lexsimp.ontology import AlternativeGroup, PhraseTable
from lexsimp.textproc import (Span, detokenize, extract_spans, is_punctuation,
                              normalize, tokenize)


def texts(tokens):
    return [t.text for t in tokens]


def oracle_spans(norms, labels):
    """Every matching span, then left to right, longest first, skipping
    any span that overlaps one already taken."""
    matches = []
    for i in range(len(norms)):
        for j in range(i + 1, len(norms) + 1):
            if tuple(norms[i:j]) in labels:
                matches.append((i, j))
    matches.sort(key=lambda m: (m[0], -(m[1] - m[0])))
    taken = []
    for i, j in matches:
        if all(j <= a or i >= b for a, b in taken):
            taken.append((i, j))
    return taken


def random_table(rng, vocab):
    size = rng.randint(2, 20)
    labels = set()
    while len(labels) < size:
        labels.add(tuple(rng.choice(vocab) for _ in range(rng.randint(1, 3))))
    labels = sorted(labels)
    rng.shuffle(labels)
    if len(labels) % 2:
        labels.pop()
    groups = [AlternativeGroup(gid, {labels[2 * gid]: (), labels[2 * gid + 1]: ()})
              for gid in range(len(labels) // 2)]
    return PhraseTable(groups)


class TokenizeTestCase(unittest.TestCase):
    def test_punctuation_detached(self):
        self.assertEqual(texts(tokenize(u'Patient has otalgia.')),
                         [u'Patient', u'has', u'otalgia', u'.'])

    def test_pretokenized(self):
        tokens = tokenize(u'hyperlipidemia with elevated triglycerides .')
        self.assertEqual(len(tokens), 5)

    def test_empty(self):
        self.assertEqual(tokenize(u''), [])
        self.assertEqual(tokenize(u'   '), [])

    def test_norm_and_offsets(self):
        tokens = tokenize(u'Ear  (pain)')
        self.assertEqual([t.norm for t in tokens], [u'ear', u'(', u'pain', u')'])
        self.assertEqual([t.char_offset for t in tokens], [0, 5, 6, 10])

    def test_offsets_count_code_points(self):
        tokens = tokenize(u'Otalgie récidivante.')
        self.assertEqual([t.char_offset for t in tokens], [0, 8, 19])

    def test_inner_punctuation_kept(self):
        self.assertEqual(texts(tokenize(u'ear-pain, e.g.')),
                         [u'ear-pain', u',', u'e.g', u'.'])

    def test_offsets_increase(self):
        tokens = tokenize(u'"Lower (abdominal) pain", she said...')
        offsets = [t.char_offset for t in tokens]
        self.assertEqual(offsets, sorted(set(offsets)))

    def test_retokenize_space_joined(self):
        rng = random.Random(5)
        pieces = [u'ear', u'pain', u'.', u',', u'(', u')', u'otalgia', u'"', u'x-ray']
        for _ in range(200):
            sentence = u''.join(rng.choice(pieces + [u' ', u' ']) for _ in range(12))
            tokens = tokenize(sentence)
            self.assertEqual(texts(tokenize(u' '.join(texts(tokens)))), texts(tokens))


class DetokenizeTestCase(unittest.TestCase):
    def test_attachment_preserved(self):
        self.assertEqual(detokenize(tokenize(u'Patient  has (otalgia).')),
                         u'Patient has (otalgia).')

    def test_pretokenized_keeps_space(self):
        sentence = u'hyperlipidemia with elevated triglycerides .'
        self.assertEqual(detokenize(tokenize(sentence)), sentence)

    def test_empty(self):
        self.assertEqual(detokenize([]), u'')


class NormalizeTestCase(unittest.TestCase):
    def test_normalize(self):
        self.assertEqual(normalize(u' Pain\tin  EAR '), (u'pain', u'in', u'ear'))

    def test_is_punctuation(self):
        self.assertTrue(is_punctuation(u'...'))
        self.assertFalse(is_punctuation(u''))
        self.assertFalse(is_punctuation(u'a.'))


class ExtractSpansTestCase(unittest.TestCase):
    def test_longest_wins(self):
        table = _samples.make_table([u'lower', u'abdominal'],
                                    [u'abdominal pain', u'pain'],
                                    [u'lower abdominal pain', u'stomach ache'])
        spans = extract_spans(tokenize(u'Patient has lower abdominal pain'), table)
        self.assertEqual(spans, [Span(2, 5, 2, (u'lower', u'abdominal', u'pain'))])

    def test_repeated_match(self):
        table = _samples.make_table([u'pain', u'ache'])
        spans = extract_spans(tokenize(u'pain and pain'), table)
        self.assertEqual([(s.start, s.end) for s in spans], [(0, 1), (2, 3)])

    def test_no_match(self):
        table = _samples.make_table([u'pain', u'ache'])
        self.assertEqual(extract_spans(tokenize(u'no match here'), table), [])

    def test_empty_table(self):
        self.assertEqual(extract_spans(tokenize(u'pain'), PhraseTable()), [])

    def test_case_insensitive(self):
        table = _samples.make_table([u'ear pain', u'otalgia'])
        lower = extract_spans(tokenize(u'the ear pain.'), table)
        upper = extract_spans(tokenize(u'THE Ear PAIN.'), table)
        self.assertEqual(lower, upper)
        self.assertEqual(len(lower), 1)

    def test_max_len(self):
        table = _samples.make_table([u'lower abdominal pain', u'pain'])
        tokens = tokenize(u'lower abdominal pain')
        self.assertEqual([(s.start, s.end) for s in extract_spans(tokens, table, 1)],
                         [(2, 3)])
        self.assertRaises(ValueError, extract_spans, tokens, table, 0)

    def test_matches_oracle(self):
        rng = random.Random(2024)
        vocab = [u'a', u'b', u'c', u'd', u'e']
        for _ in range(500):
            table = random_table(rng, vocab)
            sentence = u' '.join(rng.choice(vocab) for _ in range(rng.randint(0, 12)))
            tokens = tokenize(sentence)
            spans = extract_spans(tokens, table)
            expected = oracle_spans([t.norm for t in tokens], table.labels())
            self.assertEqual([(s.start, s.end) for s in spans], expected)
            for span in spans:
                self.assertIn(span.matched, table.group(span.group_id))


def suite():
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTest(loader.loadTestsFromTestCase(TokenizeTestCase))
    suite.addTest(loader.loadTestsFromTestCase(DetokenizeTestCase))
    suite.addTest(loader.loadTestsFromTestCase(NormalizeTestCase))
    suite.addTest(loader.loadTestsFromTestCase(ExtractSpansTestCase))
    suite.addTest(doctest.DocTestSuite(lexsimp.textproc))
    return suite

if __name__ == '__main__':
    unittest.main(defaultTest='suite')
