# -*- coding: utf-8 -*-
#
# Copyright (C) 2008 John Paulett (john -at- paulett.org)
# Copyright (C) 2009-2013 David Aguilar (davvid -at- gmail.com)
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Pluggable JSON libraries for trace files."""
import collections
import importlib
import logging

import six

log = logging.getLogger(__name__)

Backend = collections.namedtuple('Backend', 'name dumps loads decode_error')

## name, encode function, decode function, decode exception (or its name
## inside the module), in order of preference
BUILTIN_BACKENDS = (
    ('simplejson', 'dumps', 'loads', ValueError),
    ('json', 'dumps', 'loads', ValueError),
    ## ujson formats floats its own way, so its traces are not
    ## byte-identical to the other two
    ('ujson', 'dumps', 'loads', ValueError),
)

## Sorted keys keep trace files reproducible
TRACE_OPTIONS = {'sort_keys': True, 'ensure_ascii': False}


class JSONBackend(object):
    """Encodes and decodes trace data with the first JSON library that
    works, simplejson first, then the standard library's json, then
    ujson when it is installed.
    """

    def __init__(self):
        self._backends = collections.OrderedDict()
        self._options = {}
        for args in BUILTIN_BACKENDS:
            self.load_backend(*args)

    def load_backend(self, name, encode_name, decode_name, decode_exc):
        """Load the JSON module ``name`` (dotted names work) and add it at
        the end of the preference list.

        ``decode_exc`` is the exception class raised on malformed input,
        or the name of that class inside the module.  Returns False when
        the module or any of the names cannot be found.
        """
        try:
            mod = importlib.import_module(name)
            dumps = getattr(mod, encode_name)
            loads = getattr(mod, decode_name)
            if isinstance(decode_exc, six.string_types):
                decode_exc = getattr(mod, decode_exc)
        except (ImportError, AttributeError) as e:
            log.debug('JSON backend %s not available: %s', name, e)
            self.remove_backend(name)
            return False
        self._backends[name] = Backend(name, dumps, loads, decode_exc)
        self._options.setdefault(name, ((), dict(TRACE_OPTIONS)))
        log.debug('loaded JSON backend %s', name)
        return True

    def remove_backend(self, name):
        """Forget backend ``name`` and its encoder options."""
        self._backends.pop(name, None)
        self._options.pop(name, None)

    def backend_names(self):
        """Loaded backends, preferred first."""
        return list(self._backends)

    def _loaded(self):
        if not self._backends:
            raise AssertionError('lexsimp requires at least one of the '
                                 'following:\n'
                                 '    json, simplejson, or ujson')
        return list(self._backends.values())

    def encode(self, obj):
        """JSON text of ``obj``.

        Backends are tried in order of preference; when all of them fail
        the last error propagates.
        """
        error = None
        for backend in self._loaded():
            args, kwargs = self._options[backend.name]
            try:
                return backend.dumps(obj, *args, **kwargs)
            except Exception as e:
                error = e
        raise error

    def decode(self, string):
        """Python data of the JSON text ``string``, from the first backend
        that accepts it."""
        error = None
        for backend in self._loaded():
            try:
                return backend.loads(string)
            except backend.decode_error as e:
                error = e
        raise error

    def set_preferred_backend(self, name):
        """Move backend ``name`` to the front of the preference list.

        For example::

            set_preferred_backend('json')

        Backends other than the built-in ones must be loaded with
        :meth:`load_backend` first.  AssertionError is raised if ``name``
        has not been loaded.
        """
        if name not in self._backends:
            raise AssertionError('The "%s" backend has not been loaded.' % name)
        self._backends.move_to_end(name, last=False)

    def set_encoder_options(self, name, *args, **kwargs):
        """Replace the arguments passed to backend ``name``'s encode
        function.

        For example::

            set_encoder_options('simplejson', sort_keys=True, indent=4)

        The defaults are sorted keys and unescaped non-ASCII text.
        """
        self._options[name] = (args, kwargs)
