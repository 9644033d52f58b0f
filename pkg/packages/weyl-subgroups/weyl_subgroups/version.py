"""
Version information for weyl-subgroups package.
"""

import logging
from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("weyl-subgroups")
except PackageNotFoundError:
    logging.getLogger(__name__).warning("Could not determine package version")
    __version__ = "0.0.0+unknown"
