# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Backoff n-gram language models.

Models are trained with interpolated absolute discounting and stored as
backoff tables, the representation used by the ARPA file format.  All
probabilities are natural logs in memory; ARPA files keep log10.

The simplifier only needs an :class:`LmScorer`: something that maps a
token sequence to its mean log-probability.  :class:`NgramModel` is the
real one; :class:`TableScorer` serves fixed scores from a file and is used
to replay scores computed elsewhere.
"""
import collections
import logging
import math
import os

import regex
import six

from lexsimp import textproc
from lexsimp import util
from lexsimp.errors import FormatError

log = logging.getLogger(__name__)

START = '<s>'
END = '</s>'
UNK = '<unk>'

LOG10 = math.log(10.0)
## log10 value ARPA writers use for "impossible" entries such as <s>
ARPA_ZERO = -99.0
LOG_ZERO = ARPA_ZERO * LOG10

_NGRAM_COUNT = regex.compile(r'^ngram\s+(\d+)\s*=\s*(\d+)$')
_SECTION = regex.compile(r'^\\(\d+)-grams:$')


class LmScorer(object):
    """Abstract scorer: token sequence -> mean natural log-probability.

    Implementations must be deterministic and safe to call from several
    threads at once.
    """

    def score(self, tokens):
        raise NotImplementedError("Abstract method.")


def score(scorer, tokens):
    """Mean log-probability of ``tokens`` under ``scorer``."""
    tokens = list(tokens)
    if not tokens:
        raise ValueError('cannot score empty sequence')
    return scorer.score(tokens)


class NgramModel(LmScorer):
    """A backoff n-gram model.

    :Parameters:
      - `order`: the n of the model
      - `probs`: n-gram tuple -> natural log-probability
      - `backoffs`: context tuple -> natural log backoff weight
      - `vocab`: word types, including <s>, </s> and <unk>

    Words are looked up lowercased, the way :func:`train` stores them.
    """

    def __init__(self, order, probs, backoffs, vocab=None):
        if order < 1:
            raise ValueError('order must be at least 1')
        self.order = order
        self.probs = dict(probs)
        self.backoffs = dict(backoffs)
        if vocab is None:
            vocab = [ngram[0] for ngram in self.probs if len(ngram) == 1]
        self.vocab = frozenset(vocab) | frozenset([START, END, UNK])

    def _word(self, word):
        ## training lowercases, so queries do too
        word = word.lower()
        return word if word in self.vocab else UNK

    def logprob(self, word, context=()):
        """ln P(word | context), using the last order-1 context words."""
        context = tuple(self._word(w) for w in context)
        if self.order > 1:
            context = context[-(self.order - 1):]
        else:
            context = ()
        return _backoff_logprob(self.probs, self.backoffs,
                                context + (self._word(word),))

    def score(self, tokens):
        """Mean of ln P(w_i | history) over the tokens.

        The history starts with order-1 <s> symbols.  The </s> term is
        not part of the mean.
        """
        tokens = list(tokens)
        if not tokens:
            raise ValueError('cannot score empty sequence')
        history = [START] * (self.order - 1)
        logps = []
        for token in tokens:
            word = self._word(token)
            if self.order > 1:
                context = tuple(history[len(history) - self.order + 1:])
            else:
                context = ()
            logps.append(_backoff_logprob(self.probs, self.backoffs,
                                          context + (word,)))
            history.append(word)
        return math.fsum(logps) / len(logps)

    def predictable_words(self):
        """Every word the model can predict: the vocabulary minus <s>."""
        return sorted(self.vocab - frozenset([START]))

    def contexts(self):
        return sorted(self.backoffs)

    def __eq__(self, other):
        return (isinstance(other, NgramModel) and
                self.order == other.order and
                self.vocab == other.vocab and
                self.probs == other.probs and
                self.backoffs == other.backoffs)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'NgramModel(order=%d, %d n-grams, %d words)' % (
            self.order, len(self.probs), len(self.vocab))


def _backoff_logprob(probs, backoffs, ngram):
    total = 0.0
    while True:
        logp = probs.get(ngram)
        if logp is not None:
            return total + logp
        if len(ngram) == 1:
            return total + LOG_ZERO
        total += backoffs.get(ngram[:-1], 0.0)
        ngram = ngram[1:]


def _sentences(corpus):
    for sentence in corpus:
        if isinstance(sentence, six.string_types):
            tokens = textproc.normalize(sentence)
        else:
            tokens = tuple(w.lower() for w in sentence)
        if tokens:
            yield tokens


def train(corpus, order=3, discount=0.75, min_count=2):
    """Train an interpolated absolute discounting model.

    ``corpus`` yields sentences, either as text (tokenized and lowercased
    here) or as token sequences.  Each sentence is padded with order-1 <s>
    symbols and one </s>.  Words seen fewer than ``min_count`` times
    become <unk>.

    At order k, a seen n-gram gets

        P(w | h) = (c(h w) - D) / c(h) + D * N(h) / c(h) * P(w | h')

    where N(h) is the number of word types seen after h and h' drops the
    first word of h.  Unseen words back off with weight D * N(h) / c(h).
    The unigram level interpolates with the uniform distribution over the
    predictable vocabulary, so <unk> always keeps some mass.
    """
    if order < 1:
        raise ValueError('order must be at least 1')
    if not 0.0 < discount < 1.0:
        raise ValueError('discount must be in (0, 1)')
    sentences = list(_sentences(corpus))
    if not sentences:
        raise ValueError('no training data')

    word_counts = collections.Counter(w for s in sentences for w in s)
    vocab = set(w for w, c in six.iteritems(word_counts) if c >= min_count)
    vocab.update([START, END, UNK])

    counts = [None] + [collections.Counter() for _ in range(order)]
    for sentence in sentences:
        words = ([START] * (order - 1) +
                 [w if w in vocab else UNK for w in sentence] + [END])
        for i in range(order - 1, len(words)):
            for k in range(1, order + 1):
                counts[k][tuple(words[i - k + 1:i + 1])] += 1

    probs = {}
    backoffs = {}

    predictable = sorted(vocab - set([START]))
    total = float(sum(counts[1].values()))
    spread = discount * len(counts[1]) / total / len(predictable)
    for word in predictable:
        seen = max(counts[1].get((word,), 0) - discount, 0.0) / total
        probs[(word,)] = math.log(seen + spread)

    for k in range(2, order + 1):
        context_total = collections.Counter()
        context_types = collections.Counter()
        for ngram, c in six.iteritems(counts[k]):
            context_total[ngram[:-1]] += c
            context_types[ngram[:-1]] += 1
        weights = dict((h, discount * context_types[h] / float(context_total[h]))
                       for h in context_total)
        level = {}
        for ngram, c in six.iteritems(counts[k]):
            h = ngram[:-1]
            lower = math.exp(_backoff_logprob(probs, backoffs, ngram[1:]))
            level[ngram] = math.log((c - discount) / float(context_total[h]) +
                                    weights[h] * lower)
        ## lower orders are complete before this level is added
        probs.update(level)
        for h, weight in six.iteritems(weights):
            backoffs[h] = math.log(weight)

    model = NgramModel(order, probs, backoffs, vocab)
    log.info('trained %d-gram model: %d sentences, %d words, %d n-grams',
             order, len(sentences), len(vocab), len(probs))
    return model


def _fmt(value):
    return repr(float(value))


def save_arpa(model, stream=None):
    """Write ``model`` in ARPA format; returns the text when ``stream`` is
    None."""
    entries = dict((k, set()) for k in range(1, model.order + 1))
    for ngram in model.probs:
        entries[len(ngram)].add(ngram)
    for context in model.backoffs:
        entries[len(context)].add(context)
    ## <s> has no probability of its own but carries backoff weights
    if model.order > 1:
        entries[1].add((START,))

    lines = [u'\\data\\']
    for k in range(1, model.order + 1):
        lines.append(u'ngram %d=%d' % (k, len(entries[k])))
    lines.append(u'')
    for k in range(1, model.order + 1):
        lines.append(u'\\%d-grams:' % k)
        for ngram in sorted(entries[k]):
            logp = model.probs.get(ngram)
            fields = [_fmt(ARPA_ZERO if logp is None else logp / LOG10),
                      u' '.join(ngram)]
            if ngram in model.backoffs:
                fields.append(_fmt(model.backoffs[ngram] / LOG10))
            lines.append(u'\t'.join(fields))
        lines.append(u'')
    lines.append(u'\\end\\')
    text = u'\n'.join(lines) + u'\n'
    if stream is None:
        return text
    stream.write(text)


def load_arpa(text, source=None):
    """Read an ARPA model from text (or a text stream)."""
    if not isinstance(text, six.string_types):
        source = source or util.source_name(text)
        text = text.read()

    def fail(message, lineno=None):
        raise FormatError(message, lineno=lineno, source=source)

    declared = {}
    probs = {}
    backoffs = {}
    vocab = set()
    found = collections.Counter()
    state = 'start'
    section = None
    section_line = None

    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if state == 'start':
            if not line:
                continue
            if line != '\\data\\':
                fail('missing \\data\\ header', lineno)
            state = 'counts'
            continue
        if not line:
            continue
        if line == '\\end\\':
            if section is not None and found[section] != declared[section]:
                fail('expected %d %d-grams, found %d' % (
                    declared[section], section, found[section]), section_line)
            state = 'end'
            break
        if line.startswith('\\'):
            match = _SECTION.match(line)
            if not match:
                fail('unknown section header %r' % line, lineno)
            if section is not None and found[section] != declared[section]:
                fail('expected %d %d-grams, found %d' % (
                    declared[section], section, found[section]), section_line)
            section = int(match.group(1))
            section_line = lineno
            if section not in declared:
                fail('section %d-grams not declared in \\data\\' % section, lineno)
            state = 'ngrams'
            continue
        if state == 'counts':
            match = _NGRAM_COUNT.match(line)
            if not match:
                fail('malformed count line %r' % line, lineno)
            declared[int(match.group(1))] = int(match.group(2))
            continue

        fields = line.split()
        if len(fields) not in (section + 1, section + 2):
            fail('expected %d words in a %d-gram entry' % (section, section), lineno)
        try:
            logp = float(fields[0])
            bow = float(fields[section + 1]) if len(fields) == section + 2 else None
        except ValueError:
            fail('malformed number in %r' % line, lineno)
        ngram = tuple(fields[1:section + 1])
        found[section] += 1
        if section == 1:
            vocab.add(ngram[0])
        if logp > ARPA_ZERO:
            probs[ngram] = logp * LOG10
        if bow is not None:
            backoffs[ngram] = bow * LOG10

    if state != 'end':
        fail('missing \\end\\ marker')
    if not declared:
        fail('no n-gram counts declared')
    for k in declared:
        if found[k] != declared[k]:
            fail('expected %d %d-grams, found %d' % (declared[k], k, found[k]))
    return NgramModel(max(declared), probs, backoffs, vocab)


class TableScorer(LmScorer):
    """Fixed sentence scores, keyed by normalized sentence.

    The file format is ``score<TAB>sentence``.  Sentences missing from the
    table score ``default``; with no default they raise KeyError.
    """

    def __init__(self, scores, default=None):
        self.scores = dict((textproc.normalize(s) if isinstance(s, six.string_types)
                            else tuple(w.lower() for w in s), float(v))
                           for s, v in six.iteritems(scores))
        self.default = default

    def score(self, tokens):
        key = tuple(w.lower() for w in tokens)
        if not key:
            raise ValueError('cannot score empty sequence')
        try:
            return self.scores[key]
        except KeyError:
            if self.default is None:
                raise KeyError('no score for sentence %r' % u' '.join(key))
            return self.default

    @classmethod
    def load(cls, stream, default=None):
        source = util.source_name(stream)
        scores = {}
        for lineno, (value, sentence) in util.iter_rows(stream, 2):
            try:
                scores[sentence] = float(value)
            except ValueError:
                raise FormatError('malformed score %r' % value,
                                  lineno=lineno, source=source)
        return cls(scores, default=default)


def load_scorer(path):
    """Load an LmScorer from ``path``: ARPA for ``.arpa`` files, a score
    table for anything else."""
    with util.open_text(path) as stream:
        if os.path.splitext(path)[1].lower() == '.arpa':
            return load_arpa(stream)
        return TableScorer.load(stream)
