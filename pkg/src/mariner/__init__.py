"""Knowledge-graph engine for maritime-history archival records."""

__version__ = "0.1.0"
