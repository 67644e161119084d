"""
Running check suites.

In specialized mode every check is evaluated over catalogs specialized at
the q-points of the run and the outcomes are merged; in symbolic mode it is
evaluated once over ``ℚ(q)``. Resource caps lead to ``undecided``, never to
``pass``.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor

from qflag.connection import (
    ConnectionEll, Splitting, build_idempotent, check_cotensor_theorem, check_idempotent,
    check_idempotent_sum, closed_form_matrix, coideal_expansions, connection_sample,
)
from qflag.connection.section import DEFAULT_EXPONENT_CAP
from qflag.connection.splitting import DEFAULT_DIMENSION_LENGTH, DEFAULT_FLAG_LENGTH
from qflag.errors import ParserError, PresentationError, ReductionError, ScalarError, UndecidedError
from qflag.freealg.element import Element, TensorElement
from qflag.hopf.checks import (
    check_coideal, check_epimorphism, check_gauge, check_haar, check_hopf_axioms,
    check_presentation, check_star_structure, generators,
)
from qflag.normalform.ideal import DEFAULT_CAP, SPECIALIZED, SYMBOLIC, decide_zero
from qflag.normalform.rewriter import DEFAULT_MAX_STEPS
from qflag.results import CheckResult
from qflag.scalars import random_qpoints
from qflag.scalars.field import format_rational

from .expressions import Evaluator
from .report import Report, ReportEntry

log = logging.getLogger(__name__)


class Options:

    """
    Settings of a run; keyword arguments override the class defaults::

        Options(mode='symbolic', cap=2000)
    """

    mode = SPECIALIZED
    seed = 0
    qpoints = None
    cap = DEFAULT_CAP
    steps = DEFAULT_MAX_STEPS
    trace = False
    format = 'text'
    jobs = 1

    FIELDS = ('mode', 'seed', 'qpoints', 'cap', 'steps', 'trace', 'format', 'jobs')

    def __init__(self, **kw):
        for key, value in kw.items():
            if key not in self.FIELDS:
                raise TypeError('unknown option: %s' % key)
            setattr(self, key, value)

    def __repr__(self):
        return '<Options %s>' % ', '.join('%s=%r' % (k, getattr(self, k)) for k in self.FIELDS)

    def points(self):
        if self.qpoints:
            return list(self.qpoints)
        return random_qpoints(self.seed)

    def as_dict(self):
        return {key: getattr(self, key) for key in self.FIELDS}


def limit_steps(catalog, steps):
    for presentation in catalog.presentations.values():
        presentation.rewriter.max_steps = steps


class CheckRunner:

    """
    Evaluates checks against one catalog. Each check kind is handled by a
    ``run_<kind>`` method returning a :class:`~qflag.results.CheckResult`.
    """

    def __init__(self, catalog, cap=DEFAULT_CAP):
        self.catalog = catalog
        self.cap = cap
        self._ells = {}
        self._matrices = {}

    def run(self, check):
        handler = getattr(self, 'run_%s' % check.kind.replace('-', '_'))
        return handler(check)

    # Helpers #################################################################

    def hopf(self, name):
        return self.catalog.hopf_structure(name)

    def ell(self, section):
        if section.name not in self._ells:
            self._ells[section.name] = ConnectionEll(section)
        return self._ells[section.name]

    def section_for(self, comodule):
        for section in self.catalog.sections.values():
            if (section.H.name, section.A.name) == (comodule.hopf.algebra.name, comodule.algebra.name):
                return section
        raise PresentationError('no section of %s into %s for comodule %s' % (
            comodule.hopf.algebra.name, comodule.algebra.name, comodule.name))

    def idempotent(self, comodule, base=None):
        key = (comodule.name, base.name if base else None)
        if key not in self._matrices:
            section = self.section_for(comodule)
            haar = self.catalog.haar_functional(section.H.name)
            self._matrices[key] = build_idempotent(comodule, self.ell(section), haar, base=base)
        return self._matrices[key]

    def matrix(self, name):
        if name in self.catalog.comodules:
            return self.idempotent(self.catalog.comodule(name))

        sections = list(self.catalog.sections.values())
        if not sections:
            raise PresentationError('closed form %s needs a declared section' % name)
        return closed_form_matrix(name, sections[0].A)

    # Presentations and Hopf structures #######################################

    def run_identity(self, check):
        context = [self.catalog.presentation(name) for name in check.context or ()]
        algebra = context[0] if len(context) == 1 else None
        legs = tuple(context) if len(context) > 1 else None

        evaluator = Evaluator(self.catalog)
        lhs, rhs = [evaluator.evaluate(node, algebra, legs) for node in check.expressions]

        result = CheckResult(check.label, self.cap)
        difference = evaluator.subtract(lhs, rhs)
        if isinstance(difference, (Element, TensorElement)):
            result.expect_zero('identity', difference)
        else:
            result.expect('identity', not difference, self.catalog.field.format(difference))
        return result

    def run_presentation(self, check):
        return check_presentation(self.catalog.presentation(check.arguments[0]), cap=self.cap)

    def run_star(self, check):
        name = check.arguments[0]
        hopf = self.catalog.hopf.get(name)
        return check_star_structure(self.catalog.presentation(name), hopf, cap=self.cap)

    def run_hopf_axioms(self, check):
        return check_hopf_axioms(self.hopf(check.arguments[0]), cap=self.cap)

    def run_epimorphism(self, check):
        epi = self.catalog.map(check.arguments[0])
        triangle = check.flag('triangle')
        if triangle:
            triangle = tuple(self.catalog.map(name) for name in triangle)
        return check_epimorphism(epi, self.hopf(epi.source.name), self.hopf(epi.target.name),
                                 triangle=triangle, graded=bool(check.flag('graded')), cap=self.cap)

    def run_gauge(self, check):
        gauge = self.catalog.map(check.arguments[0])
        return check_gauge(self.hopf(gauge.source.name), gauge, length=check.flag('length', 3), cap=self.cap)

    def run_haar(self, check):
        name = check.arguments[0]
        return check_haar(self.hopf(name), self.catalog.haar_functional(name),
                          length=check.flag('length', 2), cap=self.cap)

    def run_coideal(self, check):
        coideal = self.catalog.subalgebra(check.arguments[0])
        H = coideal.algebra
        expansions = coideal_expansions(H)
        elements = [element for element, _ in expansions]
        expected = [closed for _, closed in expansions] if check.flag('closed-form') else None

        result = check_coideal(self.hopf(H.name), coideal, elements, expected, cap=self.cap)
        if expected:
            for (element, closed), (_, variant) in zip(expansions, coideal_expansions(H, variant=True)):
                if not decide_zero(closed - variant, cap=self.cap):
                    result.note('the variant expansion of Delta(%s) differs from the derived one' % element)
        return result

    def _member(self, check, expected):
        subalgebra = self.catalog.subalgebra(check.arguments[0])
        x = Evaluator(self.catalog).element(check.expressions[0], subalgebra.algebra)
        result = CheckResult(check.label, self.cap)
        try:
            result.expect('membership', subalgebra.contains(x, cap=self.cap) == expected, str(x))
        except UndecidedError as e:
            result.undecide('membership', e)
        return result

    def run_member(self, check):
        return self._member(check, True)

    def run_not_member(self, check):
        return self._member(check, False)

    # Connections #############################################################

    def run_bicolinearity(self, check):
        section = self.catalog.section(check.arguments[0])
        return section.check_bicolinearity(cap=check.flag('exponents', DEFAULT_EXPONENT_CAP), check_cap=self.cap)

    def run_strong_connection(self, check):
        section = self.catalog.section(check.arguments[0])
        base = self.catalog.subalgebra(check.arguments[1])
        ell = self.ell(section)

        if check.flag('products'):
            sample = connection_sample(section.H)
        else:
            sample = [x for _, x in generators(section.H)]

        result = ell.check_strong_connection(sample, base, cap=self.cap)
        if check.flag('products'):
            result.merge(ell.check_sandwich(sample, cap=self.cap))
        return result

    def run_ell(self, check):
        return self.ell(self.catalog.section(check.arguments[0])).check_closed_forms(cap=self.cap)

    def run_sigma_nabla(self, check):
        section_name, base, flag = check.arguments
        splitting = Splitting(self.ell(self.catalog.section(section_name)),
                              self.catalog.subalgebra(base), self.catalog.subalgebra(flag))
        return splitting.check_splitting(cap=self.cap)

    def run_cotensor(self, check):
        section = self.catalog.section(check.arguments[0])
        coideal = self.catalog.subalgebra(check.arguments[1])
        return check_cotensor_theorem(section.source, section.target, section.epi, coideal,
                                      length=check.flag('length', DEFAULT_FLAG_LENGTH),
                                      dimension_length=check.flag('dimension', DEFAULT_DIMENSION_LENGTH),
                                      cap=self.cap)

    def run_idempotent(self, check):
        comodule = self.catalog.comodule(check.arguments[0])
        base = self.catalog.subalgebra(check.arguments[1]) if len(check.arguments) > 1 else None
        matrix = self.idempotent(comodule, base)

        closed_form = variant = None
        if comodule.closed_form:
            closed_form = closed_form_matrix(comodule.closed_form, comodule.algebra).entries
            if comodule.closed_form == 'q2':
                variant = closed_form_matrix('q2', comodule.algebra, variant=True).entries

        result = check_idempotent(matrix, closed_form=closed_form, variant=variant, cap=self.cap)
        return result.merge(comodule.check_coidempotent(cap=self.cap))

    def run_idempotent_sum(self, check):
        first, second = [self.matrix(name) for name in check.arguments]
        return check_idempotent_sum(first, second, cap=self.cap)


def evaluate_check(script, check, options):
    """
    Run ``check`` of ``script`` in the mode of the check (or of ``options``)
    and return a :class:`~qflag.dsl.report.ReportEntry`.
    """
    mode = check.mode or options.mode
    cap = check.cap or options.cap
    started = time.time()

    if mode == SYMBOLIC:
        catalogs = [(None, script.catalog)]
    else:
        catalogs = [(format_rational(q0), script.catalog.specialize(q0)) for q0 in options.points()]

    result = CheckResult(check.label, cap)
    for key, catalog in catalogs:
        limit_steps(catalog, options.steps)
        prefix = 'q=%s' % key if key else None
        try:
            result.merge(CheckRunner(catalog, cap).run(check), prefix=prefix)
        except (UndecidedError, ReductionError, ScalarError) as e:
            result.undecide('%s/%s' % (prefix, check.kind) if prefix else check.kind, e)
        except (ParserError, PresentationError) as e:
            result.expect('%s/%s' % (prefix, check.kind) if prefix else check.kind, False, str(e))

    qpoints = [key for key, _ in catalogs if key]
    entry = ReportEntry.from_result(check, mode, result, qpoints=qpoints, wall_time=time.time() - started)
    log.info('%s: %s', entry.name, entry.verdict)
    return entry


_scripts = {}


def _evaluate_in_worker(source, index, options):
    from .reader import parse

    if source not in _scripts:
        _scripts[source] = parse(source)
    script = _scripts[source]
    return evaluate_check(script, script.checks[index], Options(**options))


def run_suite(script, options=None):
    """
    Run every check of ``script``. With ``options.jobs > 1`` the checks are
    spread over worker processes; entries keep the order of the script.
    """
    options = options or Options()
    checks = script.checks

    if options.jobs > 1 and len(checks) > 1:
        count = len(checks)
        with ProcessPoolExecutor(max_workers=options.jobs) as executor:
            entries = list(executor.map(_evaluate_in_worker, [script.source] * count, range(count),
                                        [options.as_dict()] * count))
    else:
        entries = [evaluate_check(script, check, options) for check in checks]

    return Report(entries)
