# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Small fixtures shared by the doctests, the tests and the benchmark.

Scores are served by stubs: a :class:`~lexsimp.ngram_lm.TableScorer` keyed
by candidate sentence and a :class:`StubFrequencyTable` keyed by term.
"""
import io

import six

from lexsimp import ontology
from lexsimp.evaluation import EvalCounts
from lexsimp.ngram_lm import TableScorer
from lexsimp.wordfreq import FrequencyTable


class StubFrequencyTable(FrequencyTable):
    """A FrequencyTable whose WF scores are given per term."""

    def __init__(self, scores, probs=None):
        super(StubFrequencyTable, self).__init__(probs)
        self.scores = dict((tuple(term.split()), float(v))
                           for term, v in six.iteritems(scores))

    def wf(self, term):
        term = tuple(term)
        if term in self.scores:
            return self.scores[term]
        return super(StubFrequencyTable, self).wf(term)


def make_table(*groups):
    """PhraseTable with one group per argument, ids in argument order."""
    return ontology.PhraseTable(
        ontology.AlternativeGroup(gid, dict((tuple(l.split()), ()) for l in labels))
        for gid, labels in enumerate(groups))


## Alternatives of "myocardial infarctions" with their sentence LM and
## term WF scores.
TABLE1_SENTENCE = u'Patient had multiple myocardial infarctions .'
TABLE1_SCORES = (
    (u'myocardial infarctions', -5.45, -14.32),
    (u'heart attack', -4.38, -9.05),
    (u'heart attacks', -3.91, -9.05),
    (u'mies', -6.09, -14.34),
    (u'myocardial necrosis', -6.13, -14.23),
)


def table1():
    """(table, lm, ft) ranking the alternatives of "myocardial infarctions".

    >>> from lexsimp.simplifier import simplify
    >>> simplify(TABLE1_SENTENCE, *table1()).final
    'Patient had multiple heart attacks .'
    """
    table = make_table([term for term, _, _ in TABLE1_SCORES])
    lm = TableScorer(dict((u'patient had multiple %s .' % term, lm_score)
                          for term, lm_score, _ in TABLE1_SCORES))
    ft = StubFrequencyTable(dict((term, wf) for term, _, wf in TABLE1_SCORES))
    return table, lm, ft


## The pass 1 replacement of "hyperlipidemia" joins the preceding "with"
## into a new match that pass 2 rewrites.
TWO_STAGE_SENTENCE = u'patient with hyperlipidemia .'
TWO_STAGE_PASSES = (u'patient with elevated blood lipids .',
                    u'patient with high blood lipids .')


def two_stage():
    """(table, lm, ft) for a sentence that needs two passes; use alpha=0."""
    table = make_table([u'hyperlipidemia', u'elevated blood lipids'],
                       [u'with elevated', u'with high'])
    ft = StubFrequencyTable({u'hyperlipidemia': -20.0,
                             u'elevated blood lipids': -10.0,
                             u'with elevated': -12.0,
                             u'with high': -5.0})
    return table, TableScorer({}, default=0.0), ft


def oscillator():
    """(table, lm, ft) where a and b always replace each other; use
    include_original=False."""
    table = make_table([u'a', u'b'])
    ft = StubFrequencyTable({u'a': -1.0, u'b': -1.0})
    return table, TableScorer({}, default=0.0), ft


## "ear pain" wins exactly when alpha >= 0.5: its sentence scores better
## under the LM, "otalgia" is the more frequent term.
STEP_PAIRS = (
    (u'patient has otalgia .', u'patient has ear pain .'),
    (u'otalgia since monday .', u'ear pain since monday .'),
)


def step():
    """(table, lm, ft) for the alpha tuning fixture."""
    table = make_table([u'otalgia', u'ear pain'])
    scores = {}
    for source, reference in STEP_PAIRS:
        scores[source] = -3.0
        scores[reference] = -2.0
    ft = StubFrequencyTable({u'otalgia': -2.0, u'ear pain': -3.0})
    return table, TableScorer(scores), ft


OTALGIA_TSV = (u'# concept_id\tlabel\tsource\tflag\n'
               u'C1\tOtalgia\tsnomed\tP\n'
               u'C1\tPain in ear\tsnomed\tA\n'
               u'C2\tOtalgia\tchv\tP\n'
               u'C2\tEarache\tchv\tA\n'
               u'C3\tEar pain\thpo\tP\n'
               u'C3\tOtalgia\thpo\tA\n')


def otalgia_records():
    return ontology.parse_records(io.StringIO(OTALGIA_TSV))


## Pairwise judgment counts of a human reference and two systems.
JUDGMENT_COUNTS = (
    (u'human', EvalCounts(S=1730, F=273, E=904, N=40, U=4053)),
    (u'ngram', EvalCounts(S=1452, F=1004, E=1732, N=110, U=2702)),
    (u'gpt1', EvalCounts(S=1404, F=747, E=1736, N=117, U=2996)),
)
