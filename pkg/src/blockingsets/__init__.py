"""Minimal blocking sets in finite projective spaces via field reduction and cones."""

from __future__ import annotations

__version__ = "0.1.0"
