# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""The simplification engine.

Every matched term is scored against each alternative of its group:

    Score(T) = alpha * LM(S') + (1 - alpha) * WF(T)

where S' is the sentence with T substituted in place.  The best scoring
term wins.  Passes are repeated on their own output until nothing changes,
a sentence comes back a second time, or ``max_iterations`` passes have
rewritten the sentence.
"""
import collections
import logging

from concurrent import futures

import numpy as np

from lexsimp import textproc

log = logging.getLogger(__name__)

DEFAULT_ALPHA = 0.7
DEFAULT_MAX_ITERATIONS = 5


class SimplifierConfig(object):
    """Engine settings.

    :Parameters:
      - `alpha`: weight of the LM score, in [0, 1]; 1 - alpha weighs WF
      - `max_iterations`: cap on rewriting passes, at least 1
      - `include_original`: whether the matched term competes with its
        alternatives.  With ``include_original=False`` and ``alpha=0``
        every match is replaced by its most frequent alternative.
    """

    def __init__(self, alpha=DEFAULT_ALPHA,
                 max_iterations=DEFAULT_MAX_ITERATIONS,
                 include_original=True):
        if not 0.0 <= alpha <= 1.0:
            raise ValueError('alpha must be in [0, 1], got %r' % alpha)
        if max_iterations < 1:
            raise ValueError('max_iterations must be at least 1')
        self.alpha = float(alpha)
        self.max_iterations = int(max_iterations)
        self.include_original = bool(include_original)

    def replace(self, **changes):
        """Copy of this config with some fields changed."""
        fields = dict(alpha=self.alpha, max_iterations=self.max_iterations,
                      include_original=self.include_original)
        fields.update(changes)
        return SimplifierConfig(**fields)

    def __repr__(self):
        return 'SimplifierConfig(alpha=%r, max_iterations=%d, include_original=%r)' % (
            self.alpha, self.max_iterations, self.include_original)


class Candidate(object):
    """One scored replacement for a span."""

    def __init__(self, term, sentence, lm_score, wf_score, combined):
        self.term = tuple(term)
        self.sentence = tuple(sentence)
        self.lm_score = lm_score
        self.wf_score = wf_score
        self.combined = combined

    def __eq__(self, other):
        return isinstance(other, Candidate) and self.__dict__ == other.__dict__

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'Candidate(%r, lm=%r, wf=%r, score=%r)' % (
            u' '.join(self.term), self.lm_score, self.wf_score, self.combined)


class TraceStep(object):
    """A replacement made in one pass: the span, the winning term and
    every candidate that was scored."""

    def __init__(self, span, chosen, candidates):
        self.span = span
        self.chosen = tuple(chosen)
        self.candidates = list(candidates)

    def __eq__(self, other):
        return isinstance(other, TraceStep) and self.__dict__ == other.__dict__

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'TraceStep(%d:%d %r -> %r)' % (
            self.span.start, self.span.end, u' '.join(self.span.matched),
            u' '.join(self.chosen))


class SimplificationResult(object):
    """Outcome of :func:`simplify`.

    ``iterations`` counts the passes that rewrote the sentence.  ``trace``
    has one list of TraceSteps per pass that ran, so when the sentence
    converged its last entry is the empty confirming pass.
    """

    def __init__(self, original, final, iterations, trace, converged):
        self.original = original
        self.final = final
        self.iterations = iterations
        self.trace = [list(steps) for steps in trace]
        self.converged = converged

    @property
    def changed(self):
        return self.final != self.original

    def replacements(self):
        return [step for steps in self.trace for step in steps]

    def __eq__(self, other):
        return (isinstance(other, SimplificationResult) and
                self.__dict__ == other.__dict__)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'SimplificationResult(%r -> %r, iterations=%d)' % (
            self.original, self.final, self.iterations)


def _norms(tokens):
    return tuple(t.norm for t in tokens)


def rank_span(tokens, span, group, lm, ft, alpha, include_original=True):
    """Score every candidate term for ``span`` and pick the best.

    Candidates are the group's labels, plus the matched text itself when
    ``include_original`` (or minus it otherwise).  Ties on the combined
    score go to the higher LM score, then to the smallest term.

    Returns ``(chosen_term, candidates)``.
    """
    norms = _norms(tokens)
    original = norms[span.start:span.end]
    terms = set(group.labels)
    if include_original:
        terms.add(original)
    else:
        terms.discard(original)

    candidates = []
    for term in sorted(terms):
        sentence = norms[:span.start] + term + norms[span.end:]
        lm_score = lm.score(sentence)
        wf_score = ft.wf(term)
        combined = alpha * lm_score + (1.0 - alpha) * wf_score
        candidates.append(Candidate(term, sentence, lm_score, wf_score, combined))
    best = min(candidates, key=lambda c: (-c.combined, -c.lm_score, c.term))
    return best.term, candidates


def _render(tokens, steps):
    by_start = dict((step.span.start, step) for step in steps)
    parts = []
    i = 0
    while i < len(tokens):
        if i and not textproc.is_attached(tokens, i):
            parts.append(u' ')
        step = by_start.get(i)
        if step is None:
            parts.append(tokens[i].text)
            i += 1
            continue
        text = u' '.join(step.chosen)
        if i == 0:
            text = text[:1].upper() + text[1:]
        parts.append(text)
        i = step.span.end
    return u''.join(parts)


def simplify_once(tokens, table, lm, ft, config):
    """One pass: match spans, rank each against the pass input, apply all
    replacements at once.

    Returns ``(new_tokens, steps)`` where steps holds one TraceStep per
    replacement made.
    """
    steps = []
    for span in textproc.extract_spans(tokens, table):
        chosen, candidates = rank_span(tokens, span, table.group(span.group_id),
                                       lm, ft, config.alpha,
                                       config.include_original)
        if chosen != span.matched:
            steps.append(TraceStep(span, chosen, candidates))
    if not steps:
        return list(tokens), steps
    return textproc.tokenize(_render(tokens, steps)), steps


def simplify(sentence, table, lm, ft, config=None):
    """Simplify ``sentence`` until it converges or the pass cap is hit."""
    config = config or SimplifierConfig()
    tokens = textproc.tokenize(sentence)
    seen = set([_norms(tokens)])
    trace = []
    iterations = 0
    converged = False
    for _ in range(config.max_iterations):
        new_tokens, steps = simplify_once(tokens, table, lm, ft, config)
        trace.append(steps)
        if not steps:
            converged = True
            break
        iterations += 1
        tokens = new_tokens
        key = _norms(tokens)
        if key in seen:
            log.debug('cycle after %d passes: %r', iterations, sentence)
            break
        seen.add(key)
    final = textproc.detokenize(tokens) if iterations else sentence
    return SimplificationResult(sentence, final, iterations, trace, converged)


def simplify_batch(sentences, table, lm, ft, config=None, workers=1):
    """Simplify many sentences; results come back in input order whatever
    the number of workers."""
    config = config or SimplifierConfig()
    run = lambda s: simplify(s, table, lm, ft, config)
    if workers <= 1:
        return [run(s) for s in sentences]
    with futures.ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, sentences))


IterationStats = collections.namedtuple(
    'IterationStats', 'count changed mean median histogram unconverged')


def iteration_stats(results):
    """Summary of iteration counts over a batch.

    ``histogram`` maps iteration count -> number of sentences and
    ``unconverged`` counts results stopped by the cap or a cycle.  Mean
    and median are None for an empty batch.
    """
    results = list(results)
    counts = np.array([r.iterations for r in results], dtype=float)
    mean = float(np.mean(counts)) if len(counts) else None
    median = float(np.median(counts)) if len(counts) else None
    histogram = collections.Counter(r.iterations for r in results)
    return IterationStats(count=len(results),
                          changed=sum(1 for r in results if r.changed),
                          mean=mean, median=median,
                          histogram=dict(histogram),
                          unconverged=sum(1 for r in results if not r.converged))
