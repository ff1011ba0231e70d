"""Executable inequality catalog."""
