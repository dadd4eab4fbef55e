"""Built-in handlers for the types that make up a simplification trace.

Terms and sentences are token tuples in memory and space-joined strings
in JSON.  Key names come from :mod:`lexsimp.tags`.
"""
from lexsimp import handlers
from lexsimp import tags
from lexsimp.simplifier import Candidate, SimplificationResult, TraceStep
from lexsimp.textproc import Span


def _join(tokens):
    return u' '.join(tokens)


def _split(text):
    return tuple(text.split(u' ')) if text else ()


class SpanHandler(handlers.BaseHandler):
    _handles = Span,

    def flatten(self, obj, data):
        data[tags.START] = obj.start
        data[tags.END] = obj.end
        data[tags.GROUP_ID] = obj.group_id
        data[tags.MATCHED] = _join(obj.matched)
        return data

    def restore(self, obj):
        return Span(obj[tags.START], obj[tags.END], obj[tags.GROUP_ID],
                    _split(obj[tags.MATCHED]))


class CandidateHandler(handlers.BaseHandler):
    _handles = Candidate,

    def flatten(self, obj, data):
        data[tags.TERM] = _join(obj.term)
        data[tags.SENTENCE] = _join(obj.sentence)
        data[tags.LM] = obj.lm_score
        data[tags.WF] = obj.wf_score
        data[tags.SCORE] = obj.combined
        return data

    def restore(self, obj):
        return Candidate(_split(obj[tags.TERM]), _split(obj[tags.SENTENCE]),
                         obj[tags.LM], obj[tags.WF], obj[tags.SCORE])


class TraceStepHandler(handlers.BaseHandler):
    _handles = TraceStep,

    def flatten(self, obj, data):
        flatten = self._base.flatten
        data[tags.SPAN] = flatten(obj.span)
        data[tags.CHOSEN] = _join(obj.chosen)
        data[tags.CANDIDATES] = [flatten(c) for c in obj.candidates]
        return data

    def restore(self, obj):
        restore = self._base.restore
        return TraceStep(restore(obj[tags.SPAN], Span),
                         _split(obj[tags.CHOSEN]),
                         restore(obj[tags.CANDIDATES], [Candidate]))


class SimplificationResultHandler(handlers.BaseHandler):
    """``changed`` is written for readers of the file but derived again on
    restore."""
    _handles = SimplificationResult,

    def flatten(self, obj, data):
        flatten = self._base.flatten
        data[tags.ORIGINAL] = obj.original
        data[tags.FINAL] = obj.final
        data[tags.ITERATIONS] = obj.iterations
        data[tags.CHANGED] = obj.changed
        data[tags.CONVERGED] = obj.converged
        data[tags.TRACE] = [[flatten(step) for step in steps]
                            for steps in obj.trace]
        return data

    def restore(self, obj):
        restore = self._base.restore
        return SimplificationResult(obj[tags.ORIGINAL], obj[tags.FINAL],
                                    obj[tags.ITERATIONS],
                                    restore(obj[tags.TRACE], [[TraceStep]]),
                                    obj[tags.CONVERGED])
