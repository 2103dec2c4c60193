"""Text and linear-algebra helpers for the kernel."""
