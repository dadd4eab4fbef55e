"""
Registry of custom (de)serializers for trace types.

A handler subclasses :class:`BaseHandler`, implements ``flatten`` and
``restore``, and names the classes it serializes in ``_handles``::

    class StepHandler(BaseHandler):
        _handles = TraceStep,

Classes defined later, or in another module, can be attached to an
existing handler with the ``handles`` decorator::

    @StepHandler.handles
    class AnnotatedStep(TraceStep):
        ...

The handlers for spans, candidates, steps and results live in
:mod:`lexsimp._handlers`.
"""
import six


class TypeRegistered(type):
    """Metaclass that records every handler class under the types listed
    in its ``_handles`` attribute.  The mapping is shared by the whole
    hierarchy and stored on the first class created."""

    def __init__(cls, name, bases, namespace):
        super(TypeRegistered, cls).__init__(name, bases, namespace)
        if not hasattr(cls, '_registry'):
            cls._registry = {}
        for handled in getattr(cls, '_handles', ()):
            cls.handles(handled)

    def handles(handler, handled):
        """Route ``handled`` through ``handler``; usable as a decorator."""
        handler._registry[handled] = handler
        return handled


class BaseHandler(six.with_metaclass(TypeRegistered, object)):
    """A handler is built with the Flattener or Restorer that called it,
    so nested values can be sent back through ``self._base``."""

    def __init__(self, base):
        self._base = base

    def flatten(self, obj, data):
        """Fill the empty dict ``data`` with the JSON fields of ``obj``
        and return it."""
        raise NotImplementedError('%s cannot flatten' % type(self).__name__)

    def restore(self, obj):
        """Rebuild an instance from the decoded dict ``obj``."""
        raise NotImplementedError('%s cannot restore' % type(self).__name__)


def get(cls):
    """Handler class registered for exactly ``cls``, or None."""
    return BaseHandler._registry.get(cls)
