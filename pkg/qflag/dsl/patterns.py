import re

_NAME = r'[A-Za-z_][A-Za-z0-9_]*\*?'
_LABEL = r'[A-Za-z0-9_][\w.*-]*'
_INT = r'-?\d+'
_DEGREE = r'\(\s*(%s)\s*,\s*(%s)\s*\)' % (_INT, _INT)

# block headers

ALGEBRA = re.compile(r'^algebra\s+(\w+)$')
HOPF = re.compile(r'^hopf\s+(\w+)$')
MAP = re.compile(r'^map\s+(\w+)\s*:\s*(\w+)\s*->\s*(\w+)(?:\s+(hom|anti))?$')
HAAR = re.compile(r'^haar\s+(\w+)$')
SUBALGEBRA = re.compile(r'^subalgebra\s+(\w+)\s+in\s+(\w+)$')
COMODULE = re.compile(r'^comodule\s+(\w+)\s+over\s+(\w+)\s+in\s+(\w+)$')

# single-line declarations

SECTION = re.compile(r'^section\s+(\w+)\s*:\s*(\w+)\s*->\s*(\w+)\s+via\s+(\w+)$')
USE = re.compile(r'^use\s+(\w+)$')

# algebra blocks

GEN = re.compile(r'^gen\s+(%s)\s*:\s*%s$' % (_NAME, _DEGREE))
PRIORITY = re.compile(r'^priority\s+(.+)$')
STAR = re.compile(r'^star\s+(%s)\s*=\s*(.+)$' % _NAME)
RULE = re.compile(r'^rule\s+(%s)\s*:\s*(\S+)\s*->\s*(.+)$' % _LABEL)
REL = re.compile(r'^rel\s+(?:(%s)\s*:\s*)?([^:]+)$' % _LABEL)
CENTRAL = re.compile(r'^central\s+(%s)\s*:\s*(.+)$' % _LABEL)

# hopf blocks

STRUCTURE = re.compile(r'^(coproduct|counit|antipode)\s+(%s)\s*=\s*(.+)$' % _NAME)

# map blocks

IMAGE = re.compile(r'^(%s)\s*=\s*(.+)$' % _NAME)

# haar blocks

VALUE = re.compile(r'^value\s+(\S+)\s*=\s*(.+)$')
HAAR_FACTOR = re.compile(r'^(%s)\^n$' % _NAME)

# subalgebra blocks

DEGREE = re.compile(r'^degree\s*%s$' % _DEGREE)
GENERATED = re.compile(r'^generated\s+(.+?)(\s+ordered)?$')
COINVARIANT = re.compile(r'^coinvariant\s+(\w+)$')
SPAN_LENGTH = re.compile(r'^span-length\s+(\d+)$')

# comodule blocks

ROW = re.compile(r'^row\s+(.+)$')
BASIS = re.compile(r'^basis\s+(.+)$')
CLOSED_FORM = re.compile(r'^closed-form\s+(\w+)$')

# checks

CHECK = re.compile(r'^check\s+([a-z][a-z-]*)(?:\s+(.*))?$')
CHECK_OPTION = re.compile(r'\s+(as|anchor|mode|cap)\s+("[^"]*"|\S+)\s*$')
IDENTITY = re.compile(r'^(.+?)\s*==\s*(.+?)(?:\s+mod\s+([\w@]+))?$')
