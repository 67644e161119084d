# -*- coding: utf-8 -*-
#
# qflag documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import sys
import os

# The package is documented with autodoc, so it has to be importable from
# the repository root.
sys.path.insert(0, os.path.abspath('..'))

import qflag  # noqa

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

# General information about the project.
project = u'qflag'
copyright = u'2026, the qflag developers'

# The short X.Y version.
version = qflag.__version__
# The full version, including alpha/beta/rc tags.
release = qflag.__version__

exclude_patterns = ['_build']

autodoc_member_order = 'bysource'

pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

html_theme_options = {
    'description': 'Hopf *-algebras over Q(q) and the quantum flag manifold',
}

html_sidebars = {
    '**': [
        'about.html',
        'localtoc.html',
        'relations.html',
        'searchbox.html',
    ],
}

htmlhelp_basename = 'qflagdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
    ('latexindex', 'qflag.tex', u'qflag Documentation',
     u'the qflag developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'qflag', u'qflag Documentation',
     [u'the qflag developers'], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    ('index', 'qflag', u'qflag Documentation',
     u'the qflag developers', 'qflag',
     'Symbolic verification of Hopf *-algebra computations.',
     'Miscellaneous'),
]
