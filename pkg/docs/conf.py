# Sphinx configuration for the pairing_functions documentation.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import pairing_functions  # noqa: E402

# -- Project information -----------------------------------------------------

project = "Pairing Functions"
copyright = "2026, Pairing Functions Contributors"
author = "Pairing Functions Contributors"
release = pairing_functions.__version__
version = release

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx_autodoc_typehints",
]

exclude_patterns = ["_build"]
master_doc = "index"

# -- HTML output -------------------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_options = {
    "collapse_navigation": False,
    "navigation_depth": 3,
}

# -- Extensions --------------------------------------------------------------

# Docstrings use Google style with Args/Returns/Raises sections
napoleon_google_docstring = True
napoleon_numpy_docstring = False

autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
    "undoc-members": True,
    "show-inheritance": True,
}
autodoc_preserve_defaults = True
autosummary_generate = True

typehints_fully_qualified = False
always_document_param_types = True

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
}
