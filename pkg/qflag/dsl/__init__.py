# flake8: noqa

from .expressions import Evaluator, Parser, parse_expression, tokenize
from .reader import CatalogBuilder, LowLevelReader, Reader, parse, read_catalog
from .script import CHECK_KINDS, Check, SuiteScript
from .writer import Writer, format_expression
from .report import EXIT_CODES, USAGE_ERROR, Report, ReportEntry
from .runner import CheckRunner, Options, evaluate_check, run_suite
from .suites import SUITES, suite_path, suite_source
