# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Word frequencies and the WF term score.

WF is the smallest ``ln(P(w) + epsilon)`` over the words of a term: a
term is only as easy as its rarest word.

    >>> table = FrequencyTable({u'of': 0.03, u'ear': 1e-4, u'earache': 1e-6})
    >>> round(wf([u'otalgia', u'of', u'ear'], table), 3)
    -23.026
    >>> wf([u'earache'], table) > wf([u'otalgia', u'of', u'ear'], table)
    True
"""
import collections
import importlib
import logging
import math

import six

from lexsimp import textproc
from lexsimp import util
from lexsimp.errors import FormatError

log = logging.getLogger(__name__)

EPSILON = 1e-10


class FrequencyTable(object):
    """Word -> probability with an additive smoothing constant.

    Keys are lowercased.  Unknown words have probability 0, so their WF
    contribution is ``ln(epsilon)``.
    """

    def __init__(self, probs=None, epsilon=EPSILON):
        if epsilon <= 0:
            raise ValueError('epsilon must be positive')
        self.epsilon = epsilon
        self.probs = {}
        for word, p in six.iteritems(probs or {}):
            if not 0.0 < p <= 1.0:
                raise ValueError('probability of %r must be in (0, 1], got %r'
                                 % (word, p))
            self.probs[word.lower()] = float(p)

    def prob(self, word):
        return self.probs.get(word.lower(), 0.0)

    def logprob(self, word):
        """ln(P(word) + epsilon)."""
        return math.log(self.prob(word) + self.epsilon)

    def wf(self, term):
        """Minimum log-frequency over the words of ``term``."""
        term = list(term)
        if not term:
            raise ValueError('cannot score an empty term')
        return min(self.logprob(word) for word in term)

    def __len__(self):
        return len(self.probs)

    def __contains__(self, word):
        return word.lower() in self.probs

    @classmethod
    def from_wordfreq(cls, words, lang='en', epsilon=EPSILON):
        """Probabilities of ``words`` from the ``wordfreq`` package, which
        must be installed.  Words it has never seen are left out."""
        if not util.is_installed('wordfreq'):
            raise ImportError('the wordfreq package is not installed')
        word_frequency = importlib.import_module('wordfreq').word_frequency
        probs = {}
        for word in words:
            p = word_frequency(word.lower(), lang)
            if p > 0:
                probs[word.lower()] = p
        return cls(probs, epsilon=epsilon)


def wf(term, table):
    """Module level alias of FrequencyTable.wf."""
    return table.wf(term)


def load_table(stream, epsilon=EPSILON):
    """Read ``word<TAB>probability`` lines.

    A repeated word keeps its last probability and logs a warning.
    """
    source = util.source_name(stream)
    probs = {}
    for lineno, (word, value) in util.iter_rows(stream, 2, comments=False):
        try:
            p = float(value)
        except ValueError:
            raise FormatError('malformed probability %r' % value,
                              lineno=lineno, source=source)
        if not 0.0 < p <= 1.0:
            raise FormatError('probability must be in (0, 1], got %r' % value,
                              lineno=lineno, source=source)
        word = word.strip().lower()
        if word in probs:
            log.warning('line %d: duplicate word %r, keeping the last value',
                        lineno, word)
        probs[word] = p
    return FrequencyTable(probs, epsilon=epsilon)


def build_table(corpus, epsilon=EPSILON):
    """P(w) = count(w) / total tokens over a corpus of sentences."""
    counts = collections.Counter()
    for sentence in corpus:
        if isinstance(sentence, six.string_types):
            counts.update(textproc.normalize(sentence))
        else:
            counts.update(w.lower() for w in sentence)
    total = float(sum(counts.values()))
    if not total:
        raise ValueError('no training data')
    return FrequencyTable(dict((w, c / total) for w, c in six.iteritems(counts)),
                          epsilon=epsilon)


def save_table(table, stream):
    """Write ``word<TAB>probability`` lines, sorted by word."""
    for word in sorted(table.probs):
        stream.write(u'%s\t%r\n' % (word, table.probs[word]))
