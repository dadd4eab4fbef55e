# -*- coding: utf-8 -*-
#
# Copyright (C) 2008 John Paulett (john -at- paulett.org)
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Helper functions shared by the readers, the trace flattener and the
command line.  Most functions either classify a value or iterate over the
lines of a tab separated file.
"""
import importlib
import io
import inspect

import six

from lexsimp.errors import FormatError


PRIMITIVES = set((six.text_type, bytes, bool, float) + six.integer_types)


def is_primitive(obj):
    """True for values JSON stores as they are: text, numbers, booleans
    and None.

    >>> is_primitive(0.25)
    True
    >>> is_primitive([u'ear', u'pain'])
    False
    """
    return obj is None or type(obj) in PRIMITIVES


def is_dictionary(obj):
    """
    >>> is_dictionary({u'otalgia': 3})
    True
    """
    return type(obj) is dict


def is_sequence(obj):
    """Returns True for lists and tuples.

    >>> is_sequence((1, 2))
    True
    >>> is_sequence('ab')
    False
    """
    return type(obj) in (list, tuple)


def is_type(obj):
    """
    >>> is_type(1), is_type(float)
    (False, True)
    """
    return inspect.isclass(obj)


def is_installed(module):
    """Whether ``module`` can be imported.

    >>> is_installed('sys')
    True
    >>> is_installed('no_such_module_for_lexsimp')
    False
    """
    try:
        importlib.import_module(module)
    except ImportError:
        return False
    return True


def source_name(stream):
    """Name used in error messages for ``stream``; None for anonymous
    streams.

    >>> source_name(io.StringIO(u'x')) is None
    True
    """
    name = getattr(stream, 'name', None)
    if isinstance(name, six.string_types):
        return name
    return None


def open_text(path, mode='r'):
    """Open ``path`` as UTF-8 text with LF line endings."""
    return io.open(path, mode, encoding='utf-8', newline='\n' if 'w' in mode else None)


def iter_rows(stream, columns, sep='\t', comments=True, source=None):
    """Yield ``(lineno, fields)`` for every data line of ``stream``.

    Blank lines are skipped, and so are ``#`` comment lines unless
    ``comments`` is False.  A line with a column count other than
    ``columns`` raises FormatError.

    >>> rows = iter_rows(io.StringIO(u'# c\\na\\t1\\n\\nb\\t2\\n'), 2)
    >>> [(n, f) for n, f in rows]
    [(2, ['a', '1']), (4, ['b', '2'])]
    """
    source = source or source_name(stream)
    for lineno, line in enumerate(stream, 1):
        line = line.rstrip('\r\n')
        if not line.strip():
            continue
        if comments and line.startswith('#'):
            continue
        fields = line.split(sep)
        if len(fields) != columns:
            raise FormatError('expected %d columns' % columns,
                              lineno=lineno, source=source)
        yield lineno, fields


def get_public_variables(obj):
    """Returns the names of the public, non-callable attributes of an
    instance, sorted.

    >>> class Point(object):
    ...     def __init__(self):
    ...         self.x = 1
    ...         self._hidden = 2
    >>> get_public_variables(Point())
    ['x']
    """
    return sorted(k for k, v in six.iteritems(vars(obj))
                  if not k.startswith('_') and not callable(v))
