"""The lexsimp.tags module provides the key names used in the JSON trace
files written by ``lexsimp simplify --trace``.

These names are part of the file format: readers of old trace files rely
on them, so they only ever get added to, never renamed.  The layout is
documented in docs/source/formats.rst.
"""

## SimplificationResult
ORIGINAL = 'original'
FINAL = 'final'
ITERATIONS = 'iterations'
CHANGED = 'changed'
CONVERGED = 'converged'
TRACE = 'trace'

## TraceStep
SPAN = 'span'
CHOSEN = 'chosen'
CANDIDATES = 'candidates'

## Span
START = 'start'
END = 'end'
GROUP_ID = 'group_id'
MATCHED = 'matched'

## Candidate
TERM = 'term'
SENTENCE = 'sentence'
LM = 'lm'
WF = 'wf'
SCORE = 'score'

RESULT_KEYS = frozenset([ORIGINAL, FINAL, ITERATIONS, CHANGED, CONVERGED, TRACE])
STEP_KEYS = frozenset([SPAN, CHOSEN, CANDIDATES])
SPAN_KEYS = frozenset([START, END, GROUP_ID, MATCHED])
CANDIDATE_KEYS = frozenset([TERM, SENTENCE, LM, WF, SCORE])
