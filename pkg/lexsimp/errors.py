# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Exceptions raised by the lexsimp file readers."""


class FormatError(ValueError):
    """A data file does not follow its documented format.

    ``lineno`` is the 1-based line number of the offending line (or None
    when the problem is not tied to one line), ``source`` the name of the
    file or stream when known.

    >>> str(FormatError('expected 4 columns', lineno=1))
    'line 1: expected 4 columns'
    >>> str(FormatError('bad header', lineno=3, source='lm.arpa'))
    'lm.arpa:line 3: bad header'
    """

    def __init__(self, message, lineno=None, source=None):
        self.message = message
        self.lineno = lineno
        self.source = source
        super(FormatError, self).__init__(self._render())

    def _render(self):
        where = ''
        if self.lineno is not None:
            where = 'line %d: ' % self.lineno
        if self.source:
            where = '%s:%s' % (self.source, where or ' ')
        return where + self.message

    def __str__(self):
        return self._render()
