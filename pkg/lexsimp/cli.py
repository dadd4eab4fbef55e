# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The lexsimp developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.

"""The ``lexsimp`` command.

Subcommands::

    build-table  align ontology label dumps into a phrase table
    train-lm     train a backoff n-gram model and write it as ARPA
    simplify     simplify a file of sentences
    evaluate     BLEU, SARI and Simplification Gain reports
    tune         grid search for alpha on a development set

Exit codes are 0 on success, 1 on runtime or data errors and 2 on usage
errors.  Logs go to standard error; data goes to ``--output`` or standard
output.
"""
import argparse
import contextlib
import logging
import math
import os
import sys

import lexsimp
from lexsimp import evaluation
from lexsimp import ngram_lm
from lexsimp import ontology
from lexsimp import simplifier
from lexsimp import util
from lexsimp import wordfreq
from lexsimp.version import VERSION

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

FORMATS_HELP = """\
file formats (UTF-8, LF line endings):
  ontology dump    concept_id<TAB>label<TAB>source<TAB>P|A, '#' comments
  phrase table     group_id<TAB>label
  frequency table  word<TAB>probability
  LM               ARPA (.arpa) or a score table score<TAB>sentence
  sentences        one per line
  simplify output  original<TAB>simplified<TAB>iterations
  parallel corpus  source<TAB>reference
  judgments        CSV sentence_id,system_id,category (S/F/E/N or 1-4)
  unchanged flags  CSV sentence_id,system_id
"""


class UsageError(Exception):
    """Bad combination of command line options."""


def unit_interval(arg):
    """A float in [0, 1], for argparse."""
    try:
        value = float(arg)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid number: %r' % arg)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError('%r is not in [0, 1]' % arg)
    return value


def open_unit_interval(arg):
    """A float strictly between 0 and 1, for argparse."""
    try:
        value = float(arg)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid number: %r' % arg)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError('%r is not in (0, 1)' % arg)
    return value


def bootstrap_iterations(arg):
    try:
        value = int(arg)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid int value: %r' % arg)
    if value < evaluation.MIN_ITERATIONS:
        raise argparse.ArgumentTypeError(
            'at least %d bootstrap iterations are required' % evaluation.MIN_ITERATIONS)
    return value


def pos_int(arg):
    """Positive integer type for argparse"""
    try:
        value = int(arg)
        if value < 1:
            raise ValueError()
    except ValueError:
        raise argparse.ArgumentTypeError('invalid positive int value: %r' % arg)
    return value


def parse_grid(arg):
    """Alpha grid from ``start:stop:step`` (stop included) or a comma list.

    >>> parse_grid('0.5:0.7:0.1')
    [0.5, 0.6, 0.7]
    >>> parse_grid('0.7, 0.2')
    [0.2, 0.7]
    """
    try:
        if ':' in arg:
            start, stop, step = [float(f) for f in arg.split(':')]
            if step <= 0 or stop < start:
                raise ValueError()
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            values = [round(start + i * step, 10) for i in range(count)]
        else:
            values = [float(f) for f in arg.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('invalid grid %r: use start:stop:step '
                                         'or a comma separated list' % arg)
    if not values or any(not 0.0 <= v <= 1.0 for v in values):
        raise argparse.ArgumentTypeError('grid values must be in [0, 1]: %r' % arg)
    return sorted(set(values))


class RunConfig(object):
    """Settings of one command line run, taken from the parsed arguments.

    Every input path is checked by :meth:`validate` before any work
    starts.
    """

    INPUT_FIELDS = ('input', 'lm_path', 'freq_path', 'table_path',
                    'sources', 'references', 'judgments', 'unchanged')

    def __init__(self, subcommand, input=None, output=None,
                 alpha=simplifier.DEFAULT_ALPHA,
                 max_iterations=simplifier.DEFAULT_MAX_ITERATIONS,
                 lm_path=None, freq_path=None, table_path=None,
                 seed=evaluation.DEFAULT_SEED,
                 replications=evaluation.DEFAULT_REPLICATIONS, **options):
        if not 0.0 <= alpha <= 1.0:
            raise ValueError('alpha must be in [0, 1], got %r' % alpha)
        self.subcommand = subcommand
        self.input = input
        self.output = output
        self.alpha = alpha
        self.max_iterations = max_iterations
        self.lm_path = lm_path
        self.freq_path = freq_path
        self.table_path = table_path
        self.seed = seed
        self.replications = replications
        self.options = options

    @classmethod
    def from_args(cls, args):
        fields = dict(vars(args))
        fields.pop('func', None)
        fields.pop('verbose', None)
        fields.pop('quiet', None)
        return cls(**fields)

    def __getattr__(self, name):
        ## subcommand specific options
        try:
            return self.__dict__['options'][name]
        except KeyError:
            raise AttributeError(name)

    def input_paths(self):
        paths = []
        for name in self.INPUT_FIELDS:
            value = getattr(self, name, None)
            if value is None:
                continue
            paths.extend(value if isinstance(value, list) else [value])
        return paths

    def validate(self):
        for path in self.input_paths():
            if not os.path.isfile(path):
                raise IOError('%s: no such file' % path)

    def simplifier_config(self):
        return simplifier.SimplifierConfig(
            alpha=self.alpha, max_iterations=self.max_iterations,
            include_original=not self.options.get('exclude_original', False))


@contextlib.contextmanager
def _open_output(path):
    if path is None or path == '-':
        yield sys.stdout
        sys.stdout.flush()
    else:
        with util.open_text(path, 'w') as stream:
            yield stream


def _read_lines(path):
    with util.open_text(path) as stream:
        return [line.rstrip('\r\n') for line in stream]


def _load_resources(cfg):
    with util.open_text(cfg.table_path) as stream:
        table = ontology.load_table(stream)
    lm = ngram_lm.load_scorer(cfg.lm_path)
    with util.open_text(cfg.freq_path) as stream:
        ft = wordfreq.load_table(stream)
    log.info('loaded %d groups, %s scorer, %d word frequencies',
             len(table), type(lm).__name__, len(ft))
    return table, lm, ft


def cmd_build_table(cfg):
    records = []
    for path in cfg.input:
        with util.open_text(path) as stream:
            records.extend(ontology.parse_records(stream, source=path))
    table = ontology.align(records, plurals=not cfg.no_plurals)
    with _open_output(cfg.output) as out:
        ontology.save_table(table, out)
    log.info('%d records -> %d groups', len(records), len(table))


def cmd_train_lm(cfg):
    model = ngram_lm.train(_read_lines(cfg.input), order=cfg.order,
                           discount=cfg.discount, min_count=cfg.min_count)
    with _open_output(cfg.output) as out:
        ngram_lm.save_arpa(model, out)


def cmd_simplify(cfg):
    table, lm, ft = _load_resources(cfg)
    sentences = _read_lines(cfg.input)
    results = simplifier.simplify_batch(sentences, table, lm, ft,
                                        cfg.simplifier_config(),
                                        workers=cfg.jobs)
    with _open_output(cfg.output) as out:
        for result in results:
            out.write(u'%s\t%s\t%d\n' % (result.original, result.final,
                                         result.iterations))
    if cfg.trace:
        with util.open_text(cfg.trace, 'w') as stream:
            stream.write(lexsimp.encode(results))
            stream.write(u'\n')

    stats = simplifier.iteration_stats(results)
    if not stats.count:
        log.info('0 sentences')
        return
    log.info('%d sentences, %d changed, iterations mean %.2f median %.1f, '
             '%d hit the cap or a cycle', stats.count, stats.changed,
             stats.mean, stats.median, stats.unconverged)


def _read_outputs(path):
    """System outputs, one per line, or the TSV written by ``simplify``
    (then the sources come from its first column)."""
    outputs = []
    sources = []
    for line in _read_lines(path):
        fields = line.split('\t')
        if len(fields) == 3:
            sources.append(fields[0])
            outputs.append(fields[1])
        else:
            outputs.append(line)
    return outputs, (sources if len(sources) == len(outputs) else None)


def cmd_evaluate(cfg):
    lines = []
    if cfg.bleu or cfg.sari:
        outputs, embedded_sources = _read_outputs(cfg.input)
        references = [_read_lines(path) for path in cfg.references]
        for ref in references:
            if len(ref) != len(outputs):
                raise ValueError('%d outputs but %d references'
                                 % (len(outputs), len(ref)))
        per_sentence = [list(refs) for refs in zip(*references)]
        if cfg.bleu:
            lines.append(u'BLEU\t%.2f\n' % evaluation.bleu(outputs, per_sentence))
        if cfg.sari:
            sources = _read_lines(cfg.sources) if cfg.sources else embedded_sources
            if sources is None:
                raise ValueError('SARI needs --sources or simplify output as --input')
            lines.append(u'SARI\t%.2f\n' % evaluation.corpus_sari(
                sources, outputs, per_sentence))

    report = None
    if cfg.judgments:
        with util.open_text(cfg.judgments) as stream:
            records = evaluation.load_judgments(stream)
        flags = []
        if cfg.unchanged:
            with util.open_text(cfg.unchanged) as stream:
                flags = evaluation.load_unchanged(stream)
        counts = evaluation.aggregate_judgments(records, flags, cfg.replications)
        pvalues = None
        if cfg.baseline is not None:
            if cfg.baseline not in counts:
                raise LookupError('baseline system %r has no judgments' % cfg.baseline)
            pvalues = dict(
                (system, evaluation.sg_significance(c, counts[cfg.baseline],
                                                    cfg.iterations, cfg.seed))
                for system, c in counts.items() if system != cfg.baseline)
        report = evaluation.format_report(counts, pvalues, cfg.format)

    with _open_output(cfg.output) as out:
        for line in lines:
            out.write(line)
        if report is not None:
            if lines:
                out.write(u'\n')
            out.write(report)


def cmd_tune(cfg):
    table, lm, ft = _load_resources(cfg)
    with util.open_text(cfg.input) as stream:
        pairs = evaluation.load_parallel(stream)
    best, curve = evaluation.grid_search_alpha(pairs, table, lm, ft,
                                               grid=cfg.grid,
                                               config=cfg.simplifier_config(),
                                               workers=cfg.jobs)
    with _open_output(cfg.output) as out:
        out.write(u'alpha\tsari\n')
        for alpha, score in curve:
            out.write(u'%.2f\t%.4f\n' % (alpha, score))
    log.info('best alpha: %.2f', best)


def _add_resource_options(parser):
    parser.add_argument('--table-path', required=True, metavar='TSV',
                        help='phrase table written by build-table')
    parser.add_argument('--lm-path', required=True, metavar='PATH',
                        help='ARPA model, or a score table for other extensions')
    parser.add_argument('--freq-path', required=True, metavar='TSV',
                        help='word frequency table')
    parser.add_argument('--max-iterations', type=pos_int,
                        default=simplifier.DEFAULT_MAX_ITERATIONS,
                        help='cap on rewriting passes (default: %(default)s)')
    parser.add_argument('--exclude-original', action='store_true',
                        help='never keep the matched term itself')
    parser.add_argument('--jobs', type=pos_int, default=1,
                        help='worker threads (default: %(default)s)')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='lexsimp', description='Lexical simplification of medical text.',
        epilog=FORMATS_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version', version=VERSION)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true',
                           help='log debug messages')
    verbosity.add_argument('-q', '--quiet', action='store_true',
                           help='log warnings and errors only')
    subparsers = parser.add_subparsers(dest='subcommand', metavar='COMMAND')
    subparsers.required = True

    p = subparsers.add_parser('build-table', help='align ontology dumps',
                              epilog=FORMATS_HELP,
                              formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument('input', nargs='+', metavar='TSV', help='ontology label dumps')
    p.add_argument('--output', metavar='TSV', help='phrase table (default: stdout)')
    p.add_argument('--no-plurals', action='store_true',
                   help='do not add generated plural labels')
    p.set_defaults(func=cmd_build_table)

    p = subparsers.add_parser('train-lm', help='train an n-gram model')
    p.add_argument('--input', required=True, metavar='TXT',
                   help='training corpus, one sentence per line')
    p.add_argument('--output', metavar='ARPA', help='model file (default: stdout)')
    p.add_argument('--order', type=pos_int, default=3)
    p.add_argument('--discount', type=open_unit_interval, default=0.75,
                   help='absolute discount in (0, 1) (default: %(default)s)')
    p.add_argument('--min-count', type=pos_int, default=2,
                   help='words seen fewer times become <unk> (default: %(default)s)')
    p.set_defaults(func=cmd_train_lm)

    p = subparsers.add_parser('simplify', help='simplify sentences',
                              epilog=FORMATS_HELP,
                              formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument('--input', required=True, metavar='TXT',
                   help='sentences, one per line')
    p.add_argument('--output', metavar='TSV',
                   help='original<TAB>simplified<TAB>iterations (default: stdout)')
    p.add_argument('--alpha', type=unit_interval, default=simplifier.DEFAULT_ALPHA,
                   help='LM weight (default: %(default)s)')
    p.add_argument('--trace', metavar='JSON', help='write the full trace here')
    _add_resource_options(p)
    p.set_defaults(func=cmd_simplify)

    p = subparsers.add_parser('evaluate', help='score outputs and judgments',
                              epilog=FORMATS_HELP,
                              formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument('--input', metavar='FILE',
                   help='system outputs, one per line, or simplify output')
    p.add_argument('--sources', metavar='TXT', help='source sentences')
    p.add_argument('--references', action='append', default=[], metavar='TXT',
                   help='reference sentences; repeat for more references')
    p.add_argument('--bleu', action='store_true', help='report corpus BLEU')
    p.add_argument('--sari', action='store_true', help='report mean SARI')
    p.add_argument('--judgments', metavar='CSV', help='pairwise human judgments')
    p.add_argument('--unchanged', metavar='CSV', help='pairs left unchanged')
    p.add_argument('--replications', type=pos_int,
                   default=evaluation.DEFAULT_REPLICATIONS,
                   help='judgments per unchanged pair (default: %(default)s)')
    p.add_argument('--baseline', metavar='SYSTEM',
                   help='report bootstrap p-values against this system')
    p.add_argument('--iterations', type=bootstrap_iterations, default=10000,
                   help='bootstrap iterations (default: %(default)s)')
    p.add_argument('--seed', type=int, default=evaluation.DEFAULT_SEED)
    p.add_argument('--format', choices=('table', 'tsv'), default='table')
    p.add_argument('--output', metavar='FILE', help='report (default: stdout)')
    p.set_defaults(func=cmd_evaluate)

    p = subparsers.add_parser('tune', help='grid search for alpha')
    p.add_argument('--input', required=True, metavar='TSV',
                   help='development pairs source<TAB>reference')
    p.add_argument('--grid', type=parse_grid, default=None,
                   help='start:stop:step or a comma list (default: 0-1 by 0.05, '
                        '0.90-1 by 0.01)')
    p.add_argument('--output', metavar='TSV', help='alpha<TAB>sari curve')
    _add_resource_options(p)
    p.set_defaults(func=cmd_tune)
    return parser


def _check_usage(cfg):
    if cfg.subcommand != 'evaluate':
        return
    if not (cfg.bleu or cfg.sari or cfg.judgments):
        raise UsageError('nothing to evaluate: give --bleu, --sari or --judgments')
    if (cfg.bleu or cfg.sari) and (not cfg.input or not cfg.references):
        raise UsageError('--bleu and --sari need --input and --references')
    if cfg.baseline and not cfg.judgments:
        raise UsageError('--baseline needs --judgments')


def _configure_logging(args):
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT)
    logging.getLogger('lexsimp').setLevel(level)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    _configure_logging(args)
    try:
        cfg = RunConfig.from_args(args)
        _check_usage(cfg)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        log.error('%s', e)
        return EXIT_USAGE
    try:
        cfg.validate()
        args.func(cfg)
    except (EnvironmentError, ValueError, LookupError) as e:
        log.error('%s', e)
        return EXIT_ERROR
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
