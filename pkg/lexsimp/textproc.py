# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Tokenization and phrase matching.

Sentences are split on whitespace, then leading and trailing punctuation
characters are detached as tokens of their own.  Nothing else is split:
hyphens, slashes and inner periods stay inside their word.

    >>> [t.text for t in tokenize(u'Patient has otalgia.')]
    ['Patient', 'has', 'otalgia', '.']
    >>> detokenize(tokenize(u'Patient  has (otalgia).'))
    'Patient has (otalgia).'
"""
import collections

import regex


## A token keeps its surface form, its lowercased form, and the offset
## (in code points) of its first character in the tokenized sentence.
Token = collections.namedtuple('Token', 'text norm char_offset')

## Tokens [start, end) matched the label ``matched`` of group ``group_id``.
Span = collections.namedtuple('Span', 'start end group_id matched')

_CHUNK = regex.compile(r'\S+')
_PUNCT = regex.compile(r'\p{P}')
_SPLIT = regex.compile(r'^(\p{P}*)(.*?)(\p{P}*)$', regex.DOTALL)


def tokenize(sentence):
    """Split ``sentence`` into a list of Tokens.

    >>> tokenize(u'')
    []
    >>> [t.text for t in tokenize(u'(ear-pain)...')]
    ['(', 'ear-pain', ')', '.', '.', '.']
    """
    tokens = []
    for chunk in _CHUNK.finditer(sentence):
        offset = chunk.start()
        lead, word, trail = _SPLIT.match(chunk.group()).groups()
        for ch in lead:
            tokens.append(Token(ch, ch.lower(), offset))
            offset += len(ch)
        if word:
            tokens.append(Token(word, word.lower(), offset))
            offset += len(word)
        for ch in trail:
            tokens.append(Token(ch, ch.lower(), offset))
            offset += len(ch)
    return tokens


def is_attached(tokens, i):
    """True when token ``i`` had no whitespace before it in the source."""
    if i == 0:
        return False
    prev = tokens[i - 1]
    return tokens[i].char_offset == prev.char_offset + len(prev.text)


def detokenize(tokens):
    """Join tokens back into text.

    Tokens that were separated by whitespace get exactly one space;
    tokens that were attached (detached punctuation) stay attached.
    """
    parts = []
    for i, token in enumerate(tokens):
        if i and not is_attached(tokens, i):
            parts.append(u' ')
        parts.append(token.text)
    return u''.join(parts)


def normalize(text):
    """Normalized token tuple of a label or phrase: lowercased, trimmed,
    whitespace collapsed, punctuation detached.

    >>> normalize(u'  Pain   in EAR ')
    ('pain', 'in', 'ear')
    """
    return tuple(t.norm for t in tokenize(text))


def is_punctuation(word):
    """True if every character of ``word`` is punctuation.

    >>> is_punctuation(u'.')
    True
    >>> is_punctuation(u'e.g')
    False
    """
    return bool(word) and all(_PUNCT.match(ch) for ch in word)


def extract_spans(tokens, table, max_len=None):
    """Greedy leftmost-longest matching of ``tokens`` against ``table``.

    Scans left to right.  At each position the longest phrase of at most
    ``max_len`` tokens found in the table is taken and the scan resumes
    after it, so the returned spans never overlap and come sorted by
    start.  ``max_len`` defaults to the longest label in the table.
    """
    if max_len is None:
        max_len = table.max_label_length
    elif max_len < 1:
        raise ValueError('max_len must be at least 1')

    norms = tuple(t.norm for t in tokens)
    spans = []
    i = 0
    n = len(norms)
    while i < n:
        for length in range(min(max_len, n - i), 0, -1):
            phrase = norms[i:i + length]
            group_id = table.lookup(phrase)
            if group_id is not None:
                spans.append(Span(i, i + length, group_id, phrase))
                i += length
                break
        else:
            i += 1
    return spans
