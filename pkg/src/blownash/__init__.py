"""Real motivic zeta functions and blow-Nash invariants of polynomial germs."""

__version__ = "0.1.0"

from .io_adapters.germ_parser import parse  # noqa: E402
from .model.germ import Germ, render_germ  # noqa: E402
from .pipeline.run import ZetaRequest, ZetaResult, compute_zeta  # noqa: E402

__all__ = ["Germ", "ZetaRequest", "ZetaResult", "__version__", "compute_zeta", "parse", "render_germ"]
