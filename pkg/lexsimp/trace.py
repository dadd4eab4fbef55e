# -*- coding: utf-8 -*-
#
# Copyright (C) 2008 John Paulett (john -at- paulett.org)
# Copyright (C) 2013 Xingchen Yu (initialxy -at- gmail.com)
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Conversion between result objects and JSON-friendly data.

The JSON carries no Python type information.  Instead, the reader names
the type it expects, the way a typed JSON mapper would::

    >>> from lexsimp.textproc import Span
    >>> f = Flattener()
    >>> f.flatten(Span(0, 1, 3, (u'otalgia',))) == {
    ...     'start': 0, 'end': 1, 'group_id': 3, 'matched': u'otalgia'}
    True
    >>> Restorer().restore(f.flatten(Span(0, 1, 3, (u'otalgia',))), Span)
    Span(start=0, end=1, group_id=3, matched=('otalgia',))

A one-element list stands for "a list of": ``restore(data, [Span])``
restores a list of Spans.
"""
import six

from lexsimp import handlers
from lexsimp import util


class Flattener(object):
    """Converts result objects to a JSON representation.

    Objects without a registered handler are flattened into a dict of
    their public attributes.  Setting is_filter_none_attr to False keeps
    attributes whose value is None.

    >>> Flattener().flatten([1, (u'a', 2.5), {u'k': None}])
    [1, ['a', 2.5], {'k': None}]
    """

    def __init__(self, is_filter_none_attr=True):
        ## When attributes are None, whether or not they should be filtered out.
        self._is_filter_none_attr = is_filter_none_attr

    def flatten(self, obj):
        """Takes an object and returns a JSON-safe representation of it."""
        if util.is_primitive(obj):
            return obj
        HandlerClass = handlers.get(type(obj))
        if HandlerClass:
            return HandlerClass(self).flatten(obj, {})
        if util.is_sequence(obj) or isinstance(obj, (set, frozenset)):
            values = [self.flatten(v) for v in obj]
            if not util.is_sequence(obj):
                values.sort()
            return values
        if util.is_dictionary(obj):
            return self._flatten_dict(obj)
        if hasattr(obj, '__dict__'):
            return self._flatten_dict(
                dict((k, getattr(obj, k)) for k in util.get_public_variables(obj)),
                self._is_filter_none_attr)
        return repr(obj)

    def _flatten_dict(self, obj, is_filter_none=False):
        data = {}
        for k, v in six.iteritems(obj):
            # If it was requested that we filter out None values.
            if is_filter_none and v is None:
                continue
            data[six.text_type(k)] = self.flatten(v)
        return data


class Restorer(object):
    """Rebuilds typed objects from data produced by a Flattener."""

    def restore(self, obj, cls_def=None):
        """Restores ``obj`` as an instance of ``cls_def``.

        ``cls_def`` is a type with a registered handler, a one-element list
        ``[type]`` for a list of that type, a one-item dict ``{key_type:
        value_type}``, or None for plain JSON data.
        """
        if cls_def is None or util.is_primitive(obj) and not util.is_type(cls_def):
            return obj
        if util.is_sequence(cls_def):
            item_type = cls_def[0] if cls_def else None
            return [self.restore(v, item_type) for v in obj]
        if util.is_dictionary(cls_def):
            k_type, v_type = next(six.iteritems(cls_def))
            return dict((self.restore(k, k_type), self.restore(v, v_type))
                        for k, v in six.iteritems(obj))
        HandlerClass = handlers.get(cls_def)
        if HandlerClass:
            return HandlerClass(self).restore(obj)
        if obj is None:
            return None
        return cls_def(obj)
