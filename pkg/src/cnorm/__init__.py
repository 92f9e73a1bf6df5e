"""cnorm package (init trimmed during bootstrap)."""
