# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""Ontology label dumps and the phrase table built from them.

Label dumps are tab separated, one label per line::

    concept_id <TAB> label <TAB> source <TAB> P|A

Concepts that share a label (after normalization) are merged with a
union-find structure, so the alternative labels of the same medical
concept coming from different ontologies end up in a single group of
interchangeable terms.

    >>> import io
    >>> records = parse_records(io.StringIO(
    ...     u'C1\\tOtalgia\\tsnomed\\tP\\n'
    ...     u'C1\\tPain in ear\\tsnomed\\tA\\n'
    ...     u'C2\\totalgia\\tchv\\tP\\n'
    ...     u'C2\\tEarache\\tchv\\tA\\n'))
    >>> table = align(records, plurals=False)
    >>> [u' '.join(l) for l in table.group(0).sorted_labels()]
    ['earache', 'otalgia', 'pain in ear']
"""
import logging

import six

from lexsimp import textproc
from lexsimp import util
from lexsimp.errors import FormatError

log = logging.getLogger(__name__)

PRIMARY = 'P'
ALTERNATIVE = 'A'

## Provenance tag of generated plural labels
PLURAL_SOURCE = 'plural'


class ConceptRecord(object):
    """One label of one concept, as read from an ontology dump."""

    def __init__(self, concept_id, label, source, is_primary, lineno=None):
        concept_id = concept_id.strip()
        label = u' '.join(label.split())
        if not concept_id:
            raise ValueError('concept_id must not be empty')
        if not label:
            raise ValueError('label must not be empty')
        self.concept_id = concept_id
        self.label = label
        self.source = source.strip()
        self.is_primary = bool(is_primary)
        self.lineno = lineno

    def __eq__(self, other):
        return (isinstance(other, ConceptRecord) and
                self._key() == other._key())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.concept_id, self.label, self.source, self.is_primary)

    def __repr__(self):
        return 'ConceptRecord(%r, %r, %r, %s)' % (
            self.concept_id, self.label, self.source,
            PRIMARY if self.is_primary else ALTERNATIVE)


class AlternativeGroup(object):
    """Interchangeable labels: normalized token tuples with the source tags
    they were seen under."""

    def __init__(self, group_id, provenance):
        if len(provenance) < 2:
            raise ValueError('group %d needs at least 2 labels' % group_id)
        self.group_id = group_id
        ## label -> frozenset of source tags
        self.provenance = dict((label, frozenset(sources))
                               for label, sources in six.iteritems(provenance))
        self.labels = frozenset(self.provenance)

    def sorted_labels(self):
        return sorted(self.labels)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, label):
        return tuple(label) in self.labels

    def __eq__(self, other):
        return (isinstance(other, AlternativeGroup) and
                self.group_id == other.group_id and
                self.labels == other.labels)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.group_id, self.labels))

    def __repr__(self):
        return 'AlternativeGroup(%d, %r)' % (
            self.group_id, [u' '.join(l) for l in self.sorted_labels()])


class PhraseTable(object):
    """The substitution vocabulary: groups plus a label index.

    A PhraseTable is not modified after construction, so it can be shared
    between threads.  Equality compares group ids and labels; provenance
    is not part of the file format and is ignored.
    """

    def __init__(self, groups=()):
        self.groups = tuple(sorted(groups, key=lambda g: g.group_id))
        self._by_id = {}
        self._index = {}
        for group in self.groups:
            if group.group_id in self._by_id:
                raise ValueError('duplicate group id %d' % group.group_id)
            self._by_id[group.group_id] = group
            for label in group.labels:
                if label in self._index:
                    raise ValueError('label %r appears in groups %d and %d' % (
                        u' '.join(label), self._index[label], group.group_id))
                self._index[label] = group.group_id
        self.max_label_length = max([len(l) for l in self._index] or [0])

    def lookup(self, phrase):
        """Group id of ``phrase`` (a normalized token sequence), or None."""
        return self._index.get(tuple(phrase))

    def group(self, group_id):
        return self._by_id[group_id]

    def labels(self):
        return frozenset(self._index)

    def __len__(self):
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)

    def __eq__(self, other):
        return isinstance(other, PhraseTable) and self.groups == other.groups

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'PhraseTable(%d groups, %d labels)' % (
            len(self.groups), len(self._index))


def lookup(table, phrase):
    """Module level alias of PhraseTable.lookup."""
    return table.lookup(phrase)


class DisjointSet(object):
    """Union-find over hashable keys with path compression and union by
    rank."""

    def __init__(self):
        self._parent = {}
        self._rank = {}

    def find(self, key):
        parent = self._parent.setdefault(key, key)
        if parent == key:
            self._rank.setdefault(key, 0)
            return key
        root = self.find(parent)
        self._parent[key] = root
        return root

    def union(self, a, b):
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return ra
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        return ra

    def components(self):
        """Mapping root -> set of members."""
        out = {}
        for key in list(self._parent):
            out.setdefault(self.find(key), set()).add(key)
        return out


def parse_records(stream, source=None):
    """Read ConceptRecords from an ontology dump.

    ``#`` comment lines and blank lines are skipped.  Raises FormatError
    naming the line on a wrong column count, an unknown P|A flag or an
    empty label or concept id.  ``source`` overrides the stream's name in
    error messages.
    """
    source = source or util.source_name(stream)
    records = []
    rows = util.iter_rows(stream, 4, source=source)
    for lineno, (concept_id, label, tag, flag) in rows:
        flag = flag.strip().upper()
        if flag not in (PRIMARY, ALTERNATIVE):
            raise FormatError('label type must be P or A, got %r' % flag,
                              lineno=lineno, source=source)
        try:
            records.append(ConceptRecord(concept_id, label, tag,
                                         flag == PRIMARY, lineno=lineno))
        except ValueError as e:
            raise FormatError(str(e), lineno=lineno, source=source)
    return records


def pluralize(word):
    """Naive English plural of ``word``, or None when ``word`` should be
    left alone (it looks plural already or is not alphabetic).

    >>> [pluralize(w) for w in (u'attack', u'artery', u'day', u'abscess',
    ...                         u'rash', u'attacks', u'5')]
    ['attacks', 'arteries', 'days', 'abscesses', 'rashes', None, None]
    """
    if not word.isalpha():
        return None
    if word.endswith('s') and not word.endswith(('ss', 'us', 'is')):
        return None
    if word.endswith('y') and len(word) > 1 and word[-2] not in 'aeiou':
        return word[:-1] + 'ies'
    if word.endswith(('s', 'x', 'z', 'ch', 'sh')):
        return word + 'es'
    return word + 's'


def _plural_label(label):
    head = pluralize(label[-1])
    if head is None:
        return None
    return label[:-1] + (head,)


def align(records, plurals=True):
    """Build a PhraseTable from ConceptRecords.

    Concepts sharing a normalized label are merged.  Duplicate labels
    collapse, and groups left with fewer than two distinct labels are
    dropped.  With ``plurals``, the naive plural of each label's last
    word joins the group afterwards, unless that form is already a label
    somewhere or is generated by more than one group.  Group ids are
    assigned in ascending order of each group's smallest concept id, so
    the result does not depend on record order.
    """
    uf = DisjointSet()
    owner = {}
    sources = {}
    for record in records:
        label = textproc.normalize(record.label)
        uf.find(record.concept_id)
        if label in owner:
            uf.union(owner[label], record.concept_id)
        else:
            owner[label] = record.concept_id
        sources.setdefault(label, set()).add(record.source)

    members = {}
    for label, concept_id in six.iteritems(owner):
        members.setdefault(uf.find(concept_id), {})[label] = sources[label]
    components = uf.components()

    kept = []
    for root, provenance in six.iteritems(members):
        if len(provenance) < 2:
            continue
        kept.append((min(components[root]), provenance))
    kept.sort(key=lambda item: item[0])

    if plurals:
        _add_plurals([provenance for _, provenance in kept], set(owner))

    groups = [AlternativeGroup(group_id, provenance)
              for group_id, (_, provenance) in enumerate(kept)]
    log.debug('aligned %d records into %d groups', len(records), len(groups))
    return PhraseTable(groups)


def _add_plurals(provenances, taken):
    claims = {}
    for idx, provenance in enumerate(provenances):
        for label in provenance:
            plural = _plural_label(label)
            if plural is not None and plural not in taken:
                claims.setdefault(plural, set()).add(idx)
    for plural, owners in six.iteritems(claims):
        if len(owners) > 1:
            log.warning('plural %r claimed by %d groups; dropped',
                        u' '.join(plural), len(owners))
            continue
        provenances[owners.pop()][plural] = set([PLURAL_SOURCE])


def save_table(table, stream):
    """Write ``table`` as ``group_id<TAB>label`` lines, sorted by group id
    then label."""
    for group in table.groups:
        for label in group.sorted_labels():
            stream.write(u'%d\t%s\n' % (group.group_id, u' '.join(label)))


def load_table(stream):
    """Read a phrase table written by save_table."""
    source = util.source_name(stream)
    provenance = {}
    for lineno, (group_id, label) in util.iter_rows(stream, 2):
        try:
            group_id = int(group_id)
        except ValueError:
            raise FormatError('group id must be an integer, got %r' % group_id,
                              lineno=lineno, source=source)
        tokens = tuple(label.split(u' '))
        if not label or u'' in tokens:
            raise FormatError('malformed label %r' % label,
                              lineno=lineno, source=source)
        provenance.setdefault(group_id, {})[tokens] = ()
    try:
        return PhraseTable(AlternativeGroup(group_id, labels)
                           for group_id, labels in six.iteritems(provenance))
    except ValueError as e:
        raise FormatError(str(e), source=source)
