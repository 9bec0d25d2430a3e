"""Exact computations with finite-dimensional Leibniz algebras."""

from .algebra import *  # noqa: F401,F403
from .bialgebra import *  # noqa: F401,F403
from .cochain import *  # noqa: F401,F403
from .dendriform import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .fields import *  # noqa: F401,F403
from .report import CheckReport, Witness  # noqa: F401
from .rota_baxter import *  # noqa: F401,F403
from .tensors import mat_inverse, rank, tensor_contract  # noqa: F401
from .twilled import *  # noqa: F401,F403
from .yang_baxter import *  # noqa: F401,F403

__version__ = "0.1.0"
