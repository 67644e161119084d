"""
The ``qflag`` command line::

    qflag suite flag_bundle --format json --jobs 4
    qflag nf "u12.u11" --algebra SUq3 --trace
    qflag check "alpha.alpha* == 1 - q^2*gamma.gamma* mod Uq2"
    qflag idempotent V1 --base CP2q
    qflag parse my_suite.qfa

Exit codes: 0 all checks pass, 1 a check fails, 2 a check is undecided,
3 usage or parse errors.
"""

import argparse
import json
import logging
import sys

from qflag.dsl import (
    USAGE_ERROR, Evaluator, Options, Writer, format_expression, parse, parse_expression, run_suite, suite_source,
)
from qflag.dsl.reader import CatalogBuilder
from qflag.dsl.runner import CheckRunner, limit_steps
from qflag.errors import QFlagError, ReductionError
from qflag.freealg.element import Element, TensorElement, normalize
from qflag.normalform.ideal import MODES, SPECIALIZED, SYMBOLIC
from qflag.presentations import build_standard_catalog
from qflag.scalars import format_rational, parse_rational

log = logging.getLogger(__name__)

VERBOSITY = [logging.WARNING, logging.INFO, logging.DEBUG]


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, '%s: error: %s\n' % (self.prog, message))


def qpoints(text):
    try:
        return [parse_rational(value) for value in text.split(',') if value.strip()]
    except QFlagError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    parser = ArgumentParser(prog='qflag', description='verify identities of quantum flag manifold computations')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--mode', choices=MODES, help='verification mode (suites default to specialized)')
    common.add_argument('--seed', type=int, default=Options.seed, help='seed of the q-points')
    common.add_argument('--qpoints', type=qpoints, help='explicit q-points, e.g. 1/3,2/7')
    common.add_argument('--cap', type=int, default=Options.cap, help='dimension cap of linear algebra blocks')
    common.add_argument('--steps', type=int, default=Options.steps, help='rewriting step cap')
    common.add_argument('--format', choices=('text', 'json'), default=Options.format, help='output format')
    common.add_argument('-v', '--verbose', action='count', default=0, help='log more (-vv for debug output)')

    verbs = parser.add_subparsers(dest='verb', metavar='VERB')
    verbs.required = True

    p = verbs.add_parser('parse', parents=[common], help='parse a script and write it back')
    p.add_argument('script', help='suite file or name of a shipped suite')

    p = verbs.add_parser('nf', parents=[common], help='normal form of an expression')
    p.add_argument('expression')
    p.add_argument('--algebra', help='algebra the letters belong to')
    p.add_argument('--trace', action='store_true', help='print every rewriting step')

    p = verbs.add_parser('check', parents=[common], help='check a single identity')
    p.add_argument('identity', help='LHS == RHS [mod ALGEBRA]')

    p = verbs.add_parser('suite', parents=[common], help='run a check suite')
    p.add_argument('script', help='suite file or name of a shipped suite')
    p.add_argument('--jobs', type=int, default=Options.jobs, help='worker processes')

    p = verbs.add_parser('idempotent', parents=[common], help='build the idempotent of a comodule')
    p.add_argument('comodule')
    p.add_argument('--base', help='subalgebra the entries must belong to')

    return parser


def configure_logging(verbose):
    logging.basicConfig(
        stream=sys.stderr, level=VERBOSITY[min(verbose, len(VERBOSITY) - 1)],
        format='%(levelname)s %(name)s: %(message)s')


def options_from(args):
    kw = dict(seed=args.seed, qpoints=args.qpoints, cap=args.cap, steps=args.steps, format=args.format)
    if args.mode:
        kw['mode'] = args.mode
    if getattr(args, 'jobs', None):
        kw['jobs'] = args.jobs
    if getattr(args, 'trace', False):
        kw['trace'] = True
    return Options(**kw)


def single_catalog(args):
    """
    The shipped catalog used by ``nf`` and ``idempotent``: over ``ℚ(q)``
    unless specialized mode or q-points are asked for, then at the first
    q-point.
    """
    catalog = build_standard_catalog()
    if args.mode == SPECIALIZED or (args.qpoints and args.mode != SYMBOLIC):
        q0 = options_from(args).points()[0]
        log.info('specializing at q=%s', format_rational(q0))
        catalog = catalog.specialize(q0)
    limit_steps(catalog, args.steps)
    return catalog


# Verbs #######################################################################

def run_parse(args, out):
    script = parse(suite_source(args.script))
    Writer(out).write_script(script)
    return 0


def run_nf(args, out):
    catalog = single_catalog(args)
    algebra = catalog.presentation(args.algebra) if args.algebra else None
    node = parse_expression(args.expression, CatalogBuilder(catalog).letters())
    evaluator = Evaluator(catalog, free=True)

    if algebra is not None:
        x = evaluator.element(node, algebra)
    else:
        x = evaluator.evaluate(node)
        if not isinstance(x, (Element, TensorElement)):
            out.write('%s\n' % catalog.field.format(x))
            return 0

    if not args.trace or isinstance(x, TensorElement):
        out.write('%s\n' % format_expression(normalize(x)))
        return 0

    try:
        trace = x.algebra.rewriter.reduce_with_trace(x)
    except ReductionError as e:
        trace = e.trace
        log.warning('%s', e)

    if args.format == 'json':
        out.write(json.dumps(trace.as_dict(), sort_keys=True, ensure_ascii=False) + '\n')
    else:
        for step in trace.as_dict()['steps']:
            position = 'central' if step['position'] is None else 'at %d' % step['position']
            out.write('%-24s %s (%s)\n' % (step['rule'], step['word'], position))
        out.write('%s\n' % trace.output)
    return 0 if trace.fixpoint else 2


def run_check(args, out):
    script = parse('use standard\ncheck identity %s\n' % args.identity)
    report = run_suite(script, options_from(args))
    report.write(out, args.format)
    return report.exit_code


def run_suite_verb(args, out):
    script = parse(suite_source(args.script))
    if script.is_empty():
        log.warning('%s declares nothing and checks nothing', args.script)
    report = run_suite(script, options_from(args))
    report.write(out, args.format)
    return report.exit_code


def run_idempotent(args, out):
    catalog = single_catalog(args)
    comodule = catalog.comodule(args.comodule)
    base = catalog.subalgebra(args.base) if args.base else None
    matrix = CheckRunner(catalog, args.cap).idempotent(comodule, base)

    if args.format == 'json':
        out.write(json.dumps(matrix.as_dict(), sort_keys=True, ensure_ascii=False) + '\n')
        return 0

    for i, row in enumerate(matrix.entries):
        for j, entry in enumerate(row):
            out.write('[%d,%d] %s\n' % (i + 1, j + 1, entry))
    return 0


VERBS = {
    'parse': run_parse,
    'nf': run_nf,
    'check': run_check,
    'suite': run_suite_verb,
    'idempotent': run_idempotent,
}


def main(argv=None, out=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    out = out or sys.stdout

    try:
        return VERBS[args.verb](args, out)
    except (QFlagError, OSError) as e:
        sys.stderr.write('qflag %s: %s\n' % (args.verb, e))
        return USAGE_ERROR


if __name__ == '__main__':
    sys.exit(main())
