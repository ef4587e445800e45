# Configuration file for the Sphinx documentation builder.
#
# Options not set here use the Sphinx defaults:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

# autodoc imports mbg from the source tree
_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
sys.path.insert(0, _root)


def _version():
    scope = {}
    with open(os.path.join(_root, 'mbg', '_version.py')) as INPUT:
        exec(INPUT.read(), scope)
    return scope['__version__']


# -- Project information -----------------------------------------------------

project = 'MBG'
copyright = '2026, MBG Developers'
author = 'MBG Developers'

release = _version()
version = '.'.join(release.split('.')[:2])


# -- General configuration ---------------------------------------------------

master_doc = 'index'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.doctest',
    'sphinx.ext.viewcode',
    ]

# Docstrings use the numpy section layout
napoleon_google_docstring = False
napoleon_numpy_docstring = True

autodoc_member_order = 'bysource'
autodoc_default_options = {
    'members': True,
    'show-inheritance': True,
    }

doctest_global_setup = '''
import mbg
'''

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_title = 'MBG %s' % release
html_show_sourcelink = False

pygments_style = 'sphinx'
highlight_language = 'none'

default_domain = 'py'
add_module_names = False
