"""Online proper-interval coloring game: engine, strategy, verifier."""

__version__ = "0.1.0"
