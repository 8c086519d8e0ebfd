# -*- coding: utf-8 -*-
"""
Sphinx configuration for the moodal documentation.

The CLI reference is generated from the click commands with sphinx-click and
the API reference from the docstrings with autodoc.
"""
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

import moodal  # noqa: E402

project = "Moodal"
author = moodal.__author__
copyright = "2024, Moodal Developers"
version = release = moodal.__version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx_autodoc_typehints",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    "sphinx.ext.githubpages",
    "sphinx_click.ext",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = "en"
exclude_patterns = []

autodoc_member_order = "bysource"
autodoc_default_options = {"members": True, "show-inheritance": True}
set_type_checking_flag = True

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "Moodaldoc"

man_pages = [
    (
        master_doc,
        "moodal",
        "Model checker for epistemic logic with happiness and sadness",
        [author],
        1,
    )
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "lark": ("https://lark-parser.readthedocs.io/en/latest/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}

# type hint names without a documented target
nitpicky = True
nitpick_ignore = [
    ("py:class", "json.encoder.JSONEncoder"),
    ("py:class", "yaml.loader.SafeLoader"),
    ("py:class", "yaml.dumper.SafeDumper"),
    ("py:class", "lark.visitors.Transformer"),
    ("py:class", "Formula"),
    ("py:class", "Worlds"),
    ("py:class", "T"),
    ("py:class", "R"),
]
