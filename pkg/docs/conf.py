# Sphinx configuration of the cylnet documentation

import os
import sys

here = os.path.dirname(__file__)
sys.path.insert(0, os.path.abspath(os.path.join(here, '..')))

vers = {}
with open(os.path.join(here, '..', '__version__.py')) as f:
    exec(f.read(), vers)

project = 'cylnet'
copyright = '2026, the cylnet developers'
author = 'the cylnet developers'
version = vers["__version__"]
release = vers["__version__"]

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx_autodoc_typehints',
]

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'cylnet'

latex_documents = [
    (master_doc, 'cylnet.tex', 'cylnet Documentation', author, 'manual'),
]
man_pages = [(master_doc, 'cylnet', 'cylnet Documentation', [author], 1)]

autodoc_member_order = 'bysource'
intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable', None)}
