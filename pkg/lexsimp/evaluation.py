# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Evaluation: reference metrics, pairwise human judgments and alpha
tuning.

Human judgments compare an original sentence A with a simplified
sentence B.  Each judgment falls in one category:

    S  B (the system output) was simpler
    F  A (the original) was simpler
    E  both equally easy
    N  neither understood
    U  the system left the sentence unchanged (synthesized, see
       :func:`aggregate_judgments`)

Simplification Gain is (S - F) / T over all T judgments:

    >>> round(simplification_gain(EvalCounts(1730, 273, 904, 40, 4053)), 2)
    0.21
"""
import collections
import csv
import logging
import math

from concurrent import futures

import numpy as np
import six
from sacrebleu.metrics import BLEU

from lexsimp import util
from lexsimp.errors import FormatError
from lexsimp.simplifier import SimplifierConfig, simplify

log = logging.getLogger(__name__)

CATEGORIES = ('S', 'F', 'E', 'N')
UNCHANGED = 'U'
## annotation options as shown to annotators; A is always the original
OPTION_CATEGORIES = {'1': 'F', '2': 'S', '3': 'E', '4': 'N'}
DEFAULT_REPLICATIONS = 7
DEFAULT_SEED = 42
MAX_ORDER = 4
MIN_ITERATIONS = 1000

JUDGMENT_HEADER = ['sentence_id', 'system_id', 'category']
UNCHANGED_HEADER = ['sentence_id', 'system_id']


class EvalCounts(object):
    """Judgment tallies of one system."""

    def __init__(self, S=0, F=0, E=0, N=0, U=0):
        counts = (S, F, E, N, U)
        if any(c < 0 for c in counts):
            raise ValueError('counts must be non-negative')
        self.S, self.F, self.E, self.N, self.U = counts

    @property
    def T(self):
        return self.S + self.F + self.E + self.N + self.U

    def as_tuple(self):
        return (self.S, self.F, self.E, self.N, self.U)

    def add(self, category, amount=1):
        setattr(self, category, getattr(self, category) + amount)

    def __eq__(self, other):
        return isinstance(other, EvalCounts) and self.as_tuple() == other.as_tuple()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'EvalCounts(S=%d, F=%d, E=%d, N=%d, U=%d)' % self.as_tuple()


JudgmentRecord = collections.namedtuple(
    'JudgmentRecord', 'sentence_id system_id category lineno')


def simplification_gain(counts):
    """(S - F) / T."""
    if counts.T <= 0:
        raise ValueError('no judgments')
    return (counts.S - counts.F) / float(counts.T)


def _category(token):
    token = token.strip().upper()
    return OPTION_CATEGORIES.get(token, token)


def _csv_rows(stream, header):
    source = util.source_name(stream)
    reader = csv.reader(stream)
    first = True
    for row in reader:
        lineno = reader.line_num
        if not row or not any(field.strip() for field in row):
            continue
        if first:
            first = False
            if [field.strip().lower() for field in row] == header:
                continue
        if len(row) != len(header):
            raise FormatError('expected %d columns' % len(header),
                              lineno=lineno, source=source)
        yield lineno, [field.strip() for field in row]


def load_judgments(stream):
    """Read ``sentence_id,system_id,category`` rows (header optional).

    Categories are S, F, E, N, or the annotation options 1-4.
    """
    source = util.source_name(stream)
    records = []
    for lineno, (sentence_id, system_id, token) in _csv_rows(stream, JUDGMENT_HEADER):
        category = _category(token)
        if category not in CATEGORIES:
            raise FormatError('unknown category %r' % token,
                              lineno=lineno, source=source)
        records.append(JudgmentRecord(sentence_id, system_id, category, lineno))
    return records


def load_unchanged(stream):
    """Read ``sentence_id,system_id`` rows flagging unchanged pairs."""
    return [tuple(row) for _, row in _csv_rows(stream, UNCHANGED_HEADER)]


def aggregate_judgments(records, unchanged_flags=(),
                        replications=DEFAULT_REPLICATIONS):
    """Tally judgments per system.

    Unchanged pairs were annotated once and are extrapolated: every
    distinct flagged ``(sentence_id, system_id)`` pair adds
    ``replications`` U judgments to its system.  Judgment rows for a
    flagged pair are skipped with a warning.
    """
    if replications < 1:
        raise ValueError('replications must be at least 1')
    flagged = set((str(s), str(system)) for s, system in unchanged_flags)
    counts = {}
    skipped = 0
    for record in records:
        category = _category(record.category)
        if category not in CATEGORIES:
            raise FormatError('unknown category %r' % record.category,
                              lineno=getattr(record, 'lineno', None))
        if (record.sentence_id, record.system_id) in flagged:
            skipped += 1
            continue
        counts.setdefault(record.system_id, EvalCounts()).add(category)
    if skipped:
        log.warning('skipped %d judgments of pairs flagged unchanged', skipped)
    for _, system_id in flagged:
        counts.setdefault(system_id, EvalCounts()).add(UNCHANGED, replications)
    return collections.OrderedDict(sorted(counts.items()))


def sg_significance(a, b, iterations=10000, seed=DEFAULT_SEED):
    """Two-sided bootstrap p-value for SG(a) - SG(b).

    Each system's T judgments are resampled with replacement
    ``iterations`` times.  The p-value is the share of resampled
    differences at least as far from the observed difference as the
    observed difference is from zero, with the usual +1 correction.
    """
    if a.T <= 0 or b.T <= 0:
        raise ValueError('no judgments')
    if iterations < MIN_ITERATIONS:
        raise ValueError('at least %d bootstrap iterations are required'
                         % MIN_ITERATIONS)
    rng = np.random.default_rng(seed)
    observed = simplification_gain(a) - simplification_gain(b)

    def resample(counts):
        pvals = np.array(counts.as_tuple(), dtype=float) / counts.T
        draws = rng.multinomial(counts.T, pvals, size=iterations)
        return (draws[:, 0] - draws[:, 1]) / float(counts.T)

    diffs = resample(a) - resample(b)
    extreme = int(np.sum(np.abs(diffs - observed) >= abs(observed)))
    return (extreme + 1.0) / (iterations + 1.0)


def _tokens(sentence):
    return sentence.split()


def _ngrams(tokens, n):
    return [tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1)]


def _f1(precision, recall):
    if precision > 0 or recall > 0:
        return 2 * precision * recall / (precision + recall)
    return 0.0


def _sari_ngram(sgrams, cgrams, rgramslist, numref):
    rgramcounter = collections.Counter(g for rgrams in rgramslist for g in rgrams)
    sgramcounter_rep = collections.Counter(
        dict((g, c * numref) for g, c in six.iteritems(collections.Counter(sgrams))))
    cgramcounter_rep = collections.Counter(
        dict((g, c * numref) for g, c in six.iteritems(collections.Counter(cgrams))))

    # KEEP
    keep_rep = sgramcounter_rep & cgramcounter_rep
    keep_good = keep_rep & rgramcounter
    keep_all = sgramcounter_rep & rgramcounter
    keep_precision = 0.0
    keep_recall = 0.0
    if keep_rep:
        keep_precision = sum(keep_good[g] / float(keep_rep[g])
                             for g in keep_good) / len(keep_rep)
    if keep_all:
        keep_recall = sum(keep_good[g] / float(keep_all[g])
                          for g in keep_good) / len(keep_all)
    keep = _f1(keep_precision, keep_recall)

    # DELETION, precision only
    del_rep = sgramcounter_rep - cgramcounter_rep
    del_good = del_rep - rgramcounter
    delete = 0.0
    if del_rep:
        delete = sum(del_good[g] / float(del_rep[g])
                     for g in del_good) / len(del_rep)

    # ADDITION
    added = set(cgrams) - set(sgrams)
    add_good = added & set(rgramcounter)
    add_all = set(rgramcounter) - set(sgrams)
    add_precision = len(add_good) / float(len(added)) if added else 0.0
    add_recall = len(add_good) / float(len(add_all)) if add_all else 0.0
    add = _f1(add_precision, add_recall)

    return keep, delete, add


def sari(source, output, references):
    """Sentence SARI in [0, 100].

    Sentences are lowercased and split on whitespace.  For n = 1..4 the
    keep F1, deletion precision and addition F1 are computed on n-gram
    multisets; a component whose n-gram set is empty counts as 0.  The
    score is the mean of the three components averaged over n.
    """
    if isinstance(references, six.string_types):
        references = [references]
    references = list(references)
    if not references:
        raise ValueError('sari needs at least one reference')
    stokens = _tokens(source.lower())
    ctokens = _tokens(output.lower())
    if not stokens and not ctokens:
        raise ValueError('cannot score an empty output against an empty source')
    rtokens = [_tokens(r.lower()) for r in references]

    total = 0.0
    for n in range(1, MAX_ORDER + 1):
        keep, delete, add = _sari_ngram(_ngrams(stokens, n), _ngrams(ctokens, n),
                                        [_ngrams(r, n) for r in rtokens],
                                        len(references))
        total += (keep + delete + add) / 3.0
    return 100.0 * total / MAX_ORDER


def corpus_sari(sources, outputs, references):
    """Mean sentence SARI.  ``references`` holds one reference string or
    one list of references per sentence."""
    sources, outputs, references = list(sources), list(outputs), list(references)
    if not len(sources) == len(outputs) == len(references):
        raise ValueError('sources, outputs and references differ in length')
    if not sources:
        raise ValueError('nothing to score')
    return math.fsum(sari(s, o, r) for s, o, r
                     in zip(sources, outputs, references)) / len(sources)


def bleu(outputs, references, max_order=MAX_ORDER):
    """Corpus BLEU in [0, 100]: clipped n-gram precisions up to
    ``max_order`` with uniform weights, brevity penalty, no smoothing.

    Sentences are split on whitespace and compared case sensitively.
    Each reference entry is a string or a list of strings.  With several
    references the counts are clipped by the maximum reference count and
    the closest reference length is used (shorter on ties).
    """
    outputs, references = list(outputs), list(references)
    if len(outputs) != len(references):
        raise ValueError('length mismatch: %d outputs, %d references'
                         % (len(outputs), len(references)))
    if not outputs:
        raise ValueError('nothing to score')

    per_sentence = []
    for i, refs in enumerate(references):
        if isinstance(refs, six.string_types):
            refs = [refs]
        refs = [r for r in refs if r.strip()]
        if not refs:
            raise ValueError('sentence %d has no reference' % (i + 1))
        per_sentence.append(refs)
    ## sacrebleu wants one stream per reference slot; repeating a
    ## sentence's first reference changes neither clipping nor length
    width = max(len(refs) for refs in per_sentence)
    streams = [[refs[k] if k < len(refs) else refs[0] for refs in per_sentence]
               for k in range(width)]
    metric = BLEU(smooth_method='none', tokenize='none', force=True,
                  max_ngram_order=max_order)
    return metric.corpus_score(outputs, streams).score


def load_parallel(stream):
    """Read ``source<TAB>reference`` pairs."""
    return [tuple(fields) for _, fields in util.iter_rows(stream, 2, comments=False)]


def default_grid():
    """0.00 to 1.00 in steps of 0.05, refined to steps of 0.01 from 0.90."""
    coarse = set(round(0.05 * i, 2) for i in range(21))
    fine = set(round(0.90 + 0.01 * i, 2) for i in range(11))
    return sorted(coarse | fine)


def grid_search_alpha(dev_pairs, table, lm, ft, grid=None, config=None,
                      workers=1):
    """Pick alpha by mean single-reference SARI on a development set.

    Returns ``(best_alpha, curve)`` where curve lists ``(alpha, sari)``
    for every distinct grid value in ascending order.  Ties go to the
    smallest alpha.
    """
    pairs = list(dev_pairs)
    if not pairs:
        raise ValueError('empty development set')
    grid = default_grid() if grid is None else sorted(set(float(a) for a in grid))
    if not grid:
        raise ValueError('empty alpha grid')
    base = config or SimplifierConfig()
    sources = [source for source, _ in pairs]
    references = [reference for _, reference in pairs]

    def evaluate(alpha):
        cfg = base.replace(alpha=alpha)
        outputs = [simplify(s, table, lm, ft, cfg).final for s in sources]
        score = corpus_sari(sources, outputs, references)
        log.debug('alpha=%.2f sari=%.4f', alpha, score)
        return score

    if workers > 1:
        with futures.ThreadPoolExecutor(max_workers=workers) as pool:
            scores = list(pool.map(evaluate, grid))
    else:
        scores = [evaluate(alpha) for alpha in grid]
    curve = list(zip(grid, scores))
    best_alpha, best_score = curve[0]
    for alpha, score in curve[1:]:
        if score > best_score:
            best_alpha, best_score = alpha, score
    log.info('best alpha %.2f (SARI %.2f)', best_alpha, best_score)
    return best_alpha, curve


def format_report(counts, pvalues=None, fmt='table'):
    """Render per-system judgment counts and SG.

    ``counts`` maps system -> EvalCounts; ``pvalues`` optionally maps
    system -> p-value against a baseline.  ``fmt`` is 'table' or 'tsv'.
    """
    header = ['system', 'S', 'F', 'E', 'N', 'U', 'SG']
    if pvalues is not None:
        header.append('p')
    rows = []
    for system, c in six.iteritems(counts):
        sg = '%.2f' % simplification_gain(c) if c.T else '-'
        row = [system] + [str(v) for v in c.as_tuple()] + [sg]
        if pvalues is not None:
            p = pvalues.get(system)
            row.append('-' if p is None else '%.4f' % p)
        rows.append(row)
    if fmt == 'tsv':
        return u''.join(u'\t'.join(r) + u'\n' for r in [header] + rows)
    if fmt != 'table':
        raise ValueError('unknown report format %r' % fmt)
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = []
    for r in [header] + rows:
        cells = [r[0].ljust(widths[0])] + [v.rjust(w) for v, w in zip(r[1:], widths[1:])]
        lines.append(u'  '.join(cells).rstrip())
    return u'\n'.join(lines) + u'\n'
