# -*- coding: utf-8 -*-
#
# Copyright (C) 2008 John Paulett (john -at- paulett.org)
# Copyright (C) 2013 Xingchen Yu (initialxy -at- gmail.com)
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Lexical simplification of medical text.

lexsimp replaces medical terms with layman alternatives taken from
aligned ontologies.  Candidates are ranked by a mix of a language model
score of the rewritten sentence and the word frequency of the term, and
the rewriting is repeated until the sentence stops changing.

    >>> import lexsimp
    >>> from lexsimp import _samples
    >>> table, lm, ft = _samples.table1()
    >>> result = lexsimp.simplify(_samples.TABLE1_SENTENCE, table, lm, ft)
    >>> result.final
    'Patient had multiple heart attacks .'
    >>> result.iterations, result.converged
    (1, True)

Results turn into JSON traces and back:

    >>> text = lexsimp.encode(result)
    >>> lexsimp.decode(text, lexsimp.SimplificationResult) == result
    True

Without a type, decode returns plain JSON data:

    >>> lexsimp.decode(text)['final']
    'Patient had multiple heart attacks .'
"""

from lexsimp.backend import JSONBackend
from lexsimp.ngram_lm import load_arpa, train
from lexsimp.ontology import align, load_table
from lexsimp.simplifier import SimplificationResult, SimplifierConfig, simplify
from lexsimp.trace import Flattener, Restorer
from lexsimp.version import VERSION

# ensure built-in handlers are loaded
__import__('lexsimp._handlers')

__all__ = ('encode', 'decode', 'simplify', 'align', 'train', 'load_arpa',
           'load_table', 'SimplificationResult', 'SimplifierConfig')
__version__ = VERSION

json = JSONBackend()

# Export specific JSONBackend methods into the lexsimp namespace
set_preferred_backend = json.set_preferred_backend
set_encoder_options = json.set_encoder_options
load_backend = json.load_backend
remove_backend = json.remove_backend


def encode(value, is_filter_none_attr=True):
    """Return the JSON text of ``value``: a result, a list of results or
    any other trace object.

    >>> encode({'alpha': 0.7})
    '{"alpha": 0.7}'
    """
    return json.encode(Flattener(is_filter_none_attr=is_filter_none_attr).flatten(value))


def decode(string, cls=None):
    """Convert JSON text back into objects of type ``cls``.

    ``cls`` may be a trace type, ``[type]`` for a list of them, or None
    for plain JSON data.

    >>> decode('36')
    36
    """
    return Restorer().restore(json.decode(string), cls)
