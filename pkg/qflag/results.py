"""
Outcomes of verification checks.

Every check function of :mod:`qflag.hopf` and :mod:`qflag.connection`
returns a :class:`CheckResult`. Individual assertions are recorded with
:meth:`CheckResult.expect_zero` and friends; an assertion that hits a
resource cap is recorded as undecided and never counts as passed.
"""

from qflag.errors import UndecidedError
from qflag.freealg.element import normalize
from qflag.normalform.ideal import DEFAULT_CAP, decide_zero

PASS = 'pass'
FAIL = 'fail'
UNDECIDED = 'undecided'

VERDICTS = (PASS, FAIL, UNDECIDED)


class CheckResult:

    def __init__(self, name, cap=DEFAULT_CAP):
        self.name = name
        self.cap = cap
        self.assertions = 0
        self.failures = []
        self.undecided = []
        self.notes = []

    def __repr__(self):
        return '<CheckResult %s: %s (%d assertions)>' % (self.name, self.verdict, self.assertions)

    @property
    def verdict(self):
        if self.failures:
            return FAIL
        if self.undecided:
            return UNDECIDED
        return PASS

    @property
    def passed(self):
        return self.verdict == PASS

    @property
    def residue(self):
        if self.failures:
            label, residue = self.failures[0]
            return '%s: %s' % (label, residue)
        if self.undecided:
            label, message = self.undecided[0]
            return '%s: %s' % (label, message)
        return None

    def expect(self, label, condition, detail=''):
        self.assertions += 1
        if not condition:
            self.failures.append((label, detail or 'assertion failed'))
        return bool(condition)

    def expect_zero(self, label, x):
        """
        Record that ``x`` must vanish modulo the relations of its legs.
        """
        self.assertions += 1
        try:
            zero = decide_zero(x, cap=self.cap)
        except UndecidedError as e:
            self.undecided.append((label, str(e)))
            return None

        if not zero:
            self.failures.append((label, str(normalize(x))))
        return zero

    def expect_equal(self, label, x, y):
        return self.expect_zero(label, x - y)

    def undecide(self, label, error):
        self.assertions += 1
        self.undecided.append((label, str(error)))

    def note(self, text):
        self.notes.append(text)

    def merge(self, other, prefix=None):
        self.assertions += other.assertions
        for target, source in ((self.failures, other.failures), (self.undecided, other.undecided)):
            for label, text in source:
                target.append(('%s/%s' % (prefix, label) if prefix else label, text))
        self.notes.extend(other.notes)
        return self
