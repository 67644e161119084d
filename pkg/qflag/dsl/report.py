"""
Verification reports, written as text for people or as JSON lines (one
object per check) for machines.
"""

import datetime
import json

from qflag.results import FAIL, PASS, UNDECIDED

EXIT_CODES = {PASS: 0, FAIL: 1, UNDECIDED: 2}

#: exit code of command line usage errors
USAGE_ERROR = 3


class ReportEntry:

    """
    The outcome of one check. Entries hold plain values only so that they
    can travel between worker processes.
    """

    def __init__(self, name, kind, lineno, anchor, mode, verdict, assertions,
                 residue=None, notes=(), qpoints=(), wall_time=0.0):
        self.name = name
        self.kind = kind
        self.lineno = lineno
        self.anchor = anchor
        self.mode = mode
        self.verdict = verdict
        self.assertions = assertions
        self.residue = residue
        self.notes = list(notes)
        self.qpoints = list(qpoints)
        self.wall_time = wall_time

    def __repr__(self):
        return '<ReportEntry %s: %s>' % (self.name, self.verdict)

    @classmethod
    def from_result(cls, check, mode, result, qpoints=(), wall_time=0.0):
        notes = []
        for note in result.notes:
            if note not in notes:
                notes.append(note)

        return cls(check.label, check.kind, check.lineno, check.anchor, mode, result.verdict,
                   result.assertions, residue=result.residue, notes=notes, qpoints=qpoints,
                   wall_time=wall_time)

    def as_dict(self):
        return {
            'name': self.name,
            'kind': self.kind,
            'line': self.lineno,
            'anchor': self.anchor,
            'mode': self.mode,
            'qpoints': self.qpoints,
            'verdict': self.verdict,
            'assertions': self.assertions,
            'residue': self.residue,
            'notes': self.notes,
            'wall_time': round(self.wall_time, 3),
        }


class Report:

    """
    The entries of a suite run in script order::

        report = run_suite(parse(text))
        report.verdict
        # -> 'pass'
        report.exit_code
        # -> 0
    """

    def __init__(self, entries=(), created=None):
        self.entries = list(entries)
        self.created = created or datetime.datetime.now(datetime.timezone.utc)

    def __repr__(self):
        return '<Report: %d checks, %s>' % (len(self.entries), self.verdict)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def count(self, verdict):
        return sum(1 for entry in self.entries if entry.verdict == verdict)

    @property
    def verdict(self):
        if self.count(FAIL):
            return FAIL
        if self.count(UNDECIDED):
            return UNDECIDED
        return PASS

    @property
    def exit_code(self):
        return EXIT_CODES[self.verdict]

    def summary(self):
        return '%d checks: %d passed, %d failed, %d undecided' % (
            len(self.entries), self.count(PASS), self.count(FAIL), self.count(UNDECIDED))

    def write(self, fp, format='text'):
        if format == 'json':
            self.write_json(fp)
        else:
            self.write_text(fp)

    def write_text(self, fp):
        fp.write('qflag report %s\n' % self.created.strftime('%Y-%m-%dT%H:%M:%SZ'))
        for entry in self.entries:
            anchor = '  [%s]' % entry.anchor if entry.anchor else ''
            fp.write('%-9s  %s%s  (%s, %d assertions, %.2fs)\n' % (
                entry.verdict.upper(), entry.name, anchor, entry.mode, entry.assertions, entry.wall_time))
            if entry.residue:
                fp.write('           residue: %s\n' % entry.residue)
            for note in entry.notes:
                fp.write('           note: %s\n' % note)
        fp.write('%s\n' % self.summary())

    def write_json(self, fp):
        for entry in self.entries:
            fp.write(json.dumps(entry.as_dict(), sort_keys=True, ensure_ascii=False) + '\n')
