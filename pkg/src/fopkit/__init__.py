"""First-occurrence sweeps over polynomial families of quadratic radicals."""

__version__ = "0.1.0"
