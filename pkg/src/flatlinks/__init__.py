"""flatlinks: invariants of flat virtual links given as signed Gauss codes."""

from .codes import GaussCode, canonical_form, parse_code, smooth_at

__all__ = ["GaussCode", "canonical_form", "parse_code", "smooth_at"]
__version__ = "0.1.0"
