import os

from qflag.errors import ParserError

DATA = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'data')

#: suites shipped in ``data/``
SUITES = ('flag_bundle',)


def suite_path(name):
    if name not in SUITES:
        raise ParserError('unknown suite %s' % name)
    return os.path.join(DATA, '%s.qfa' % name)


def suite_source(name_or_path):
    """
    The text of a shipped suite (by name) or of a suite file.
    """
    path = suite_path(name_or_path) if name_or_path in SUITES else name_or_path
    with open(path, encoding='utf-8') as fp:
        return fp.read()
