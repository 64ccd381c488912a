# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

import peerswarm


# -- Project information -----------------------------------------------------

project = "peerswarm"

version = peerswarm.__version__
release = peerswarm.__version__


# -- General configuration ---------------------------------------------------

extensions = ["sphinx.ext.napoleon",
              "sphinx.ext.autodoc",
              "sphinx.ext.viewcode",
              "sphinx.ext.autosummary",
              "sphinxcontrib.apidoc",
              "sphinxarg.ext",
              "sphinx.ext.autosectionlabel"]

napoleon_google_docstring = True
napoleon_numpy_docstring = False

apidoc_module_dir = "../../peerswarm"
apidoc_output_dir = "."
apidoc_extra_args = ["-f", "-e", "-T",
                     "-d 4",
                     "--module-first"]

autosummary_generate = True

autodoc_default_options = {
    'members': True,
    'show-inheritance': True,
    'no-special-members': True,
}

root_doc = "contents"

exclude_patterns = []

add_module_names = False
modindex_common_prefix = ["peerswarm."]

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"

html_theme_options = {
    "navigation_depth": 4
}

html_show_sourcelink = False
