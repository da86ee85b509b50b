"""Display and environment helpers."""
