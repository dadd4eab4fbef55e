# -*- coding: utf-8 -*-
#
# lexsimp documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

# The lexsimp package lives two directories up.
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))
import lexsimp

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest',
              'sphinx.ext.intersphinx', 'sphinx.ext.todo',
              'sphinx.ext.coverage']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'lexsimp'
copyright = u'2024, The lexsimp developers'

version = lexsimp.__version__
release = version

exclude_trees = []
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = [p for p in ['_static'] if os.path.exists(p)]
htmlhelp_basename = 'lexsimpdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'lexsimp.tex', u'lexsimp Documentation',
   u'The lexsimp developers', 'manual'),
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
