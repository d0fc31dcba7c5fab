# -*- coding: utf-8 -*-
#
# iterexpand documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing
# dir.
import os
import sys

sys.path.insert(0, os.path.abspath(".."))
from build_scripts.version import get_git_version

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.todo',
              'sphinx.ext.viewcode',
              'sphinx.ext.autosummary', ]

templates_path = ['_templates']
source_suffix = '.rst'
todo_include_todos = True
master_doc = 'index'

project = u'iterexpand'
copyright = u'2016-2026, The iterexpand authors'

version = get_git_version(filename="../iterexpand/RELEASE-VERSION") or \
    "0.0.0"
release = version

exclude_patterns = ['_build']
add_function_parentheses = True
add_module_names = True
pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'iterexpanddoc'

# -- Options for LaTeX output -------------------------------------------------

latex_elements = {
}
latex_documents = [
    ('index', 'iterexpand.tex', u'iterexpand Documentation',
     u'The iterexpand authors', 'manual'),
]

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'iterexpand', u'iterexpand Documentation',
     [u'The iterexpand authors'], 1)
]

texinfo_documents = [
    ('index', 'iterexpand', u'iterexpand Documentation',
     u'The iterexpand authors', 'iterexpand',
     'Asymptotic expansions of iterated maps.', 'Miscellaneous'),
]
