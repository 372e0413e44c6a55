# -*- coding: utf-8 -*-
#
# ldgplates documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import os
import sys

SPHINX_DIR = os.path.dirname(os.path.realpath(__file__))
sys.path.insert(0, os.path.abspath(os.path.join(SPHINX_DIR, '..', 'main', 'python')))

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.doctest',
              'sphinx.ext.coverage',
              'sphinx.ext.mathjax',
              'sphinx.ext.autosummary',
              ]

source_suffix = '.rst'
master_doc = 'index'

project = u'ldgplates'
copyright = u'2013 The ldgplates Authors'
version = '1.0'
release = '1.0.0'

exclude_trees = ['build']
add_function_parentheses = True
add_module_names = True
pygments_style = 'sphinx'

html_theme = 'default'
html_theme_options = {'collapsiblesidebar': True}
html_use_smartypants = True
html_split_index = True
htmlhelp_basename = 'ldgplatesdoc'
