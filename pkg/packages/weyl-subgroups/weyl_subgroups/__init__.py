"""
Root systems, affine Weyl groups and their reflection subgroups, in exact arithmetic.
"""

from .version import __version__  # noqa: F401
