#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# twisted_cohomology documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import twisted_cohomology  # noqa: E402

# -- General configuration ---------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx.ext.todo',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'Twisted Cohomology'
copyright = u"2026, The twisted_cohomology developers"

version = twisted_cohomology.__version__
release = twisted_cohomology.__version__

exclude_patterns = ['_build']
pygments_style = 'default'

# -- Options for HTML output -------------------------------------------

html_theme = "alabaster"
html_show_sphinx = False
htmlhelp_basename = 'twisted_cohomologydoc'

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'twisted-cohomology',
     u'Twisted Cohomology Documentation',
     [u'The twisted_cohomology developers'], 1)
]
