"""ANN pipeline for RDC-column product flow rate prediction."""

from ._rdcann import *  # noqa: F401,F403
from ._rdcann import __doc__  # noqa: F401
