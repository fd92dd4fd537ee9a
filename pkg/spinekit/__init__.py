"""spinekit: special spines from decorated o-graphs, poorness, the epsilon invariant and volumes."""

__version__ = "1.0.0"
